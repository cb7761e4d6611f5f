//! Building a `1 × w` row mosaic that realizes a Gauss code.
//!
//! The code is read from the start of a maximal nonrepeating run. The first
//! pass through each crossing runs horizontally, left to right, so
//! consecutive first passes become a block of adjacent crossing tiles. A
//! routing tile (T7) separates one block from the next: the horizontal strand
//! leaves through its bottom edge and the next block is entered through its
//! top edge. Second passes run vertically through their crossing's column;
//! the vertical direction is chosen to give the crossing its sign. Boundary
//! edges are then paired so that every exit leads to the next entry.

use crate::error::{Error, Result};
use crate::gauss::{GaussCode, Pass, Sign, Symbol};
use crate::mosaic::{Cell, Mosaic};
use crate::tiles::{Axis, Side, Tile};

/// Column layout chosen for a code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BuildPlan {
    /// The code as read by the builder (rotated, ids renumbered).
    pub code: GaussCode,
    /// Column of each crossing, indexed by `id - 1`.
    pub columns: Vec<usize>,
    /// Columns holding routing tiles.
    pub routing: Vec<usize>,
    pub width: usize,
}

/// Splits a code that starts with a first pass into alternating runs of
/// first passes and second passes.
fn blocks(code: &GaussCode) -> Vec<(Vec<Symbol>, Vec<Symbol>)> {
    let mut seen = vec![false; code.crossings() + 1];
    let mut out: Vec<(Vec<Symbol>, Vec<Symbol>)> = Vec::new();
    for &s in code.symbols() {
        let first = !seen[s.id];
        seen[s.id] = true;
        match out.last_mut() {
            Some((_, seconds)) if !first => seconds.push(s),
            Some((firsts, seconds)) if seconds.is_empty() => firsts.push(s),
            _ => out.push((vec![s], Vec::new())),
        }
    }
    out
}

pub fn plan(code: &GaussCode) -> Result<BuildPlan> {
    if code.is_empty() {
        return Err(Error::EmptyCode);
    }
    let m = code.max_nonrepeating();
    // Among the starts of maximal runs, take the one needing fewest blocks.
    let start = (0..code.len())
        .filter(|&k| code.nonrepeating_run_at(k) == m)
        .min_by_key(|&k| (blocks(&code.rotated(k)).len(), k))
        .expect("some rotation starts a maximal run");
    let code = code.rotated(start);
    let mut columns = vec![0; code.crossings()];
    let mut routing = Vec::new();
    let mut col = 0;
    for (i, (firsts, _)) in blocks(&code).iter().enumerate() {
        if i > 0 {
            routing.push(col);
            col += 1;
        }
        for s in firsts {
            columns[s.id - 1] = col;
            col += 1;
        }
    }
    Ok(BuildPlan { code, columns, routing, width: col })
}

pub fn build_row(code: &GaussCode) -> Result<Mosaic> {
    let plan = plan(code)?;
    let w = plan.width;
    let mut tiles = vec![Tile::T7; w];
    // the over axis of each crossing: horizontal when its first pass is over
    let mut over_axis = vec![Axis::Horizontal; plan.code.crossings()];
    let shell = Mosaic::from_partner(1, w, vec![Tile::T0; w], vec![0; 2 * (1 + w)]);
    let edge = |col: usize, side: Side| shell.edge_at(Cell::new(0, col), side).expect("row boundary");

    let mut pairs = Vec::new();
    // The strand enters the first block through the left boundary; `pending`
    // is the boundary edge the strand last left through.
    let mut pending: Option<usize> = None;
    let left_entry = edge(0, Side::West);
    let parts = blocks(&plan.code);
    for (i, (firsts, seconds)) in parts.iter().enumerate() {
        let entry = if i == 0 { left_entry } else { edge(plan.routing[i - 1], Side::North) };
        if let Some(exit) = pending.take() {
            pairs.push((exit, entry));
        }
        for s in firsts {
            let axis = if s.pass == Pass::Over { Axis::Horizontal } else { Axis::Vertical };
            over_axis[s.id - 1] = axis;
            tiles[plan.columns[s.id - 1]] = Tile::crossing_with_over(axis);
        }
        let last = plan.columns[firsts.last().expect("nonempty block").id - 1];
        let mut exit = if i + 1 < parts.len() {
            edge(plan.routing[i], Side::South)
        } else {
            edge(last, Side::East)
        };
        for s in seconds {
            let col = plan.columns[s.id - 1];
            let heading = vertical_heading(over_axis[s.id - 1], s.sign);
            pairs.push((exit, edge(col, heading.opposite())));
            exit = edge(col, heading);
        }
        pending = Some(exit);
    }
    pairs.push((pending.expect("at least one block"), left_entry));
    let mosaic = Mosaic::new(1, w, tiles, &pairs)?;
    debug_assert!(mosaic.validate().is_valid());
    Ok(mosaic)
}

/// Direction of the vertical pass through a crossing whose horizontal pass
/// heads East, given which axis is over and the wanted sign.
fn vertical_heading(over: Axis, sign: Sign) -> Side {
    match (over, sign) {
        // over heading East: + when the under strand heads North
        (Axis::Horizontal, Sign::Plus) | (Axis::Vertical, Sign::Minus) => Side::North,
        (Axis::Horizontal, Sign::Minus) | (Axis::Vertical, Sign::Plus) => Side::South,
    }
}

pub fn row_number_upper_bound(code: &GaussCode) -> Result<usize> {
    Ok(plan(code)?.width)
}
