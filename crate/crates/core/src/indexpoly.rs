//! Smoothing crossings and the intersection index polynomial
//! `p_t(K) = Σ_d s(d) (t^|i(d)| − 1)`.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gauss::{Pass, Sign};
use crate::mosaic::{Cell, Mosaic};
use crate::tiles::{Side, Tile};
use crate::trace::{self, TraceResult};

/// A pass of one smoothed component through a crossing tile.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StrandPass {
    pub cell: Cell,
    pub heading: Side,
}

/// A knot mosaic with one crossing replaced by its oriented smoothing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmoothedDiagram {
    pub mosaic: Mosaic,
    pub cell: Cell,
    /// The double-arc tile now at `cell`.
    pub tile: Tile,
    /// Crossing passes of component 1 and component 2, in traversal order.
    pub components: [Vec<StrandPass>; 2],
}

impl SmoothedDiagram {
    /// Which component (1 or 2) passes through `cell` heading along `heading`'s axis.
    pub fn component_at(&self, cell: Cell, heading: Side) -> Option<u8> {
        (1..=2u8).find(|&c| {
            self.components[usize::from(c - 1)]
                .iter()
                .any(|p| p.cell == cell && p.heading.axis() == heading.axis())
        })
    }

    /// The crossings involving both components, with the heading of
    /// component 1 and of component 2 at each.
    pub fn shared_crossings(&self) -> Vec<(Cell, Side, Side)> {
        let [one, two] = &self.components;
        let mut out: Vec<(Cell, Side, Side)> = one
            .iter()
            .filter_map(|p| {
                let mut others = two.iter().filter(|q| q.cell == p.cell);
                let q = others.next()?;
                Some((p.cell, p.heading, q.heading))
            })
            .collect();
        out.sort_by_key(|&(c, _, _)| c);
        out
    }
}

/// Headings of the over and under strand at a crossing cell.
fn crossing_headings(t: &TraceResult, cell: Cell) -> Option<(Side, Side)> {
    let visits = t.visits.iter().flatten().filter(|v| v.cell == cell);
    let mut over = None;
    let mut under = None;
    for v in visits {
        match v.pass {
            Pass::Over => over = Some(v.heading),
            Pass::Under => under = Some(v.heading),
        }
    }
    Some((over?, under?))
}

fn knot_trace(mosaic: &Mosaic) -> Result<TraceResult> {
    let t = trace::trace(mosaic)?;
    if t.components() != 1 {
        return Err(Error::NotAKnot(t.components()));
    }
    Ok(t)
}

pub fn smooth(mosaic: &Mosaic, cell: Cell) -> Result<SmoothedDiagram> {
    let t = knot_trace(mosaic)?;
    smooth_traced(mosaic, &t, cell)
}

fn smooth_traced(mosaic: &Mosaic, t: &TraceResult, cell: Cell) -> Result<SmoothedDiagram> {
    if cell.row >= mosaic.rows() || cell.col >= mosaic.cols() || !mosaic.tile(cell).is_crossing() {
        return Err(Error::NotACrossingCell { row: cell.row, col: cell.col });
    }
    let (over, under) = crossing_headings(t, cell).expect("knot trace visits every crossing twice");
    // Component 1 leaves the smoothed site along whichever outgoing
    // direction lies counterclockwise of the other.
    let (left, right) = if over.rotate_ccw() == under { (under, over) } else { (over, under) };
    let tile = Tile::double_arc_joining(right.opposite(), left).expect("perpendicular strands");
    let mut smoothed = mosaic.clone();
    smoothed.set_tile(cell, tile);
    let components = [
        follow(&smoothed, cell, right.opposite()),
        follow(&smoothed, cell, left.opposite()),
    ];
    Ok(SmoothedDiagram { mosaic: smoothed, cell, tile, components })
}

/// Walks the strand entering `cell` through `entry` until it closes up,
/// recording its crossing passes.
fn follow(mosaic: &Mosaic, cell: Cell, entry: Side) -> Vec<StrandPass> {
    let start = (cell, entry);
    let (mut cell, mut entry) = start;
    let mut out = Vec::new();
    loop {
        let tile = mosaic.tile(cell);
        let exit = tile.transit(entry).expect("valid mosaic");
        if tile.is_crossing() {
            out.push(StrandPass { cell, heading: exit });
        }
        (cell, entry) = match mosaic.neighbor(cell, exit) {
            Some(next) => (next, exit.opposite()),
            None => {
                let k = mosaic.edge_at(cell, exit).expect("boundary side");
                let e = mosaic.edge(mosaic.partner(k));
                (e.cell, e.side)
            }
        };
        if (cell, entry) == start {
            return out;
        }
    }
}

/// `α(x)`: +1 when component 1 crosses component 2 from left to right with
/// both oriented upward, −1 otherwise.
pub fn alpha(heading_one: Side, heading_two: Side) -> i64 {
    if heading_one == heading_two.rotate_cw() {
        1
    } else {
        -1
    }
}

pub fn intersection_index(mosaic: &Mosaic, cell: Cell) -> Result<i64> {
    Ok(index_of(&smooth(mosaic, cell)?))
}

fn index_of(s: &SmoothedDiagram) -> i64 {
    s.shared_crossings().iter().map(|&(_, h1, h2)| alpha(h1, h2)).sum()
}

/// Integer polynomial in `t` with nonnegative exponents.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct IndexPolynomial {
    coefficients: BTreeMap<u32, i64>,
}

impl IndexPolynomial {
    pub fn zero() -> Self {
        IndexPolynomial::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (u32, i64)>) -> Self {
        let mut p = IndexPolynomial::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exponent: u32, coefficient: i64) {
        let c = self.coefficients.entry(exponent).or_insert(0);
        *c += coefficient;
        if *c == 0 {
            self.coefficients.remove(&exponent);
        }
    }

    pub fn coefficient(&self, exponent: u32) -> i64 {
        self.coefficients.get(&exponent).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, i64)> + '_ {
        self.coefficients.iter().map(|(&e, &c)| (e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn eval(&self, t: i64) -> i64 {
        self.terms().map(|(e, c)| c * t.pow(e)).sum()
    }
}

impl fmt::Display for IndexPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.coefficients.iter().rev().enumerate() {
            let (e, c) = (*e, *c);
            if c < 0 {
                f.write_str("-")?;
            } else if i > 0 {
                f.write_str("+")?;
            }
            let a = c.unsigned_abs();
            match e {
                0 => write!(f, "{a}")?,
                _ if a != 1 => write!(f, "{a}")?,
                _ => {}
            }
            match e {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{e}")?,
            }
        }
        Ok(())
    }
}

/// Sign and intersection index of one crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CrossingIndex {
    pub cell: Cell,
    pub sign: i64,
    pub index: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndexReport {
    /// Crossings in row-major order of their cells.
    pub crossings: Vec<CrossingIndex>,
    pub polynomial: IndexPolynomial,
}

impl IndexReport {
    pub fn indices(&self) -> Vec<i64> {
        self.crossings.iter().map(|c| c.index).collect()
    }
}

pub fn index_report(mosaic: &Mosaic) -> Result<IndexReport> {
    let t = knot_trace(mosaic)?;
    let mut cells = t.crossings.clone();
    cells.sort();
    let crossings: Vec<CrossingIndex> = cells
        .par_iter()
        .map(|&cell| {
            let s = smooth_traced(mosaic, &t, cell).expect("crossing cell");
            let id = t.crossings.iter().position(|&c| c == cell).expect("traced crossing");
            CrossingIndex { cell, sign: t.signs[id].value(), index: index_of(&s) }
        })
        .collect();
    let mut polynomial = IndexPolynomial::zero();
    for c in &crossings {
        let e = u32::try_from(c.index.unsigned_abs()).expect("index fits in u32");
        polynomial.add_term(e, c.sign);
        polynomial.add_term(0, -c.sign);
    }
    Ok(IndexReport { crossings, polynomial })
}

pub fn index_polynomial(mosaic: &Mosaic) -> Result<IndexPolynomial> {
    Ok(index_report(mosaic)?.polynomial)
}

/// The smoothing tile listed for a crossing tile of the given sign.
pub fn smoothing_table(tile: Tile, sign: Sign) -> Option<Tile> {
    match (tile, sign) {
        (Tile::T9, Sign::Minus) | (Tile::T10, Sign::Plus) => Some(Tile::T7),
        (Tile::T9, Sign::Plus) | (Tile::T10, Sign::Minus) => Some(Tile::T8),
        _ => None,
    }
}
