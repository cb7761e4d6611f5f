//! Following the strands of a mosaic's closure.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gauss::{GaussCode, Pass, Sign, Symbol};
use crate::mosaic::{Cell, Mosaic};
use crate::tiles::{Axis, Side};

/// One pass through a crossing tile.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CrossingVisit {
    pub cell: Cell,
    /// Crossing id, numbered by first encounter starting at 1.
    pub id: usize,
    pub axis: Axis,
    /// Direction of travel through the tile.
    pub heading: Side,
    pub pass: Pass,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceResult {
    /// Crossing visits of each component, in traversal order.
    pub visits: Vec<Vec<CrossingVisit>>,
    /// Crossing cells indexed by `id - 1`.
    pub crossings: Vec<Cell>,
    /// Crossing signs indexed by `id - 1`.
    pub signs: Vec<Sign>,
    /// The Gauss code when the diagram is a knot.
    pub gauss: Option<GaussCode>,
}

impl TraceResult {
    pub fn components(&self) -> usize {
        self.visits.len()
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// Component index of each crossing's over and under pass, by `id - 1`.
    pub fn passes_by_component(&self) -> Vec<(usize, usize)> {
        let mut out = vec![(0, 0); self.crossings.len()];
        for (c, comp) in self.visits.iter().enumerate() {
            for v in comp {
                match v.pass {
                    Pass::Over => out[v.id - 1].0 = c,
                    Pass::Under => out[v.id - 1].1 = c,
                }
            }
        }
        out
    }
}

#[derive(Serialize)]
struct TraceJson<'a> {
    components: usize,
    crossings: usize,
    signs: Vec<i64>,
    gauss: Option<String>,
    cells: &'a [Cell],
}

impl Serialize for TraceResult {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TraceJson {
            components: self.components(),
            crossings: self.crossing_count(),
            signs: self.signs.iter().map(|x| x.value()).collect(),
            gauss: self.gauss.as_ref().map(|g| g.to_string()),
            cells: &self.crossings,
        }
        .serialize(s)
    }
}

/// Where a strand is: inside `cell`, having entered through `entry`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Position {
    cell: Cell,
    entry: Side,
}

/// Sign of a crossing from the directions of travel of its two strands.
pub fn crossing_sign(over_heading: Side, under_heading: Side) -> Sign {
    if over_heading.rotate_ccw() == under_heading {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

pub fn trace(mosaic: &Mosaic) -> Result<TraceResult> {
    mosaic.ensure_valid()?;
    if !mosaic.has_arcs() {
        return Err(Error::NoDiagram);
    }
    Ok(trace_valid(mosaic))
}

/// Traces a mosaic already known to be valid and non-empty.
pub(crate) fn trace_valid(mosaic: &Mosaic) -> TraceResult {
    let cols = mosaic.cols();
    let slot = |cell: Cell, arc: usize| (cell.row * cols + cell.col) * 2 + arc;
    let mut used = vec![false; mosaic.area() * 2];
    let mut id_of: Vec<usize> = vec![0; mosaic.area()];
    let mut crossings = Vec::new();
    let mut headings: Vec<[Option<Side>; 2]> = Vec::new();
    let mut visits = Vec::new();

    while let Some(start) = next_start(mosaic, &used, slot) {
        let mut comp = Vec::new();
        let mut pos = start;
        loop {
            let tile = mosaic.tile(pos.cell);
            let arc = tile.arc_of(pos.entry).expect("valid mosaic has matching connection");
            used[slot(pos.cell, arc)] = true;
            let exit = tile.transit(pos.entry).expect("valid mosaic has matching connection");
            if tile.is_crossing() {
                let index = pos.cell.row * cols + pos.cell.col;
                if id_of[index] == 0 {
                    crossings.push(pos.cell);
                    headings.push([None, None]);
                    id_of[index] = crossings.len();
                }
                let id = id_of[index];
                let axis = exit.axis();
                let over = tile.is_over(axis).expect("crossing tile");
                headings[id - 1][usize::from(!over)] = Some(exit);
                comp.push(CrossingVisit {
                    cell: pos.cell,
                    id,
                    axis,
                    heading: exit,
                    pass: if over { Pass::Over } else { Pass::Under },
                });
            }
            pos = step(mosaic, pos.cell, exit);
            if pos == start {
                break;
            }
        }
        visits.push(comp);
    }

    let signs: Vec<Sign> = headings
        .iter()
        .map(|h| crossing_sign(h[0].expect("over pass seen"), h[1].expect("under pass seen")))
        .collect();
    let gauss = (visits.len() == 1).then(|| {
        let word = visits[0]
            .iter()
            .map(|v| Symbol::new(v.pass, v.id, signs[v.id - 1]))
            .collect();
        GaussCode::new(word).expect("traced code is well formed")
    });
    TraceResult { visits, crossings, signs, gauss }
}

/// Moves out of `cell` through `exit`, across a gluing if needed.
fn step(mosaic: &Mosaic, cell: Cell, exit: Side) -> Position {
    match mosaic.neighbor(cell, exit) {
        Some(next) => Position { cell: next, entry: exit.opposite() },
        None => {
            let k = mosaic.edge_at(cell, exit).expect("side on the boundary");
            let e = mosaic.edge(mosaic.partner(k));
            Position { cell: e.cell, entry: e.side }
        }
    }
}

fn next_start(mosaic: &Mosaic, used: &[bool], slot: impl Fn(Cell, usize) -> usize) -> Option<Position> {
    for k in 0..mosaic.boundary_len() {
        let e = mosaic.edge(k);
        let tile = mosaic.tile(e.cell);
        if let Some(arc) = tile.arc_of(e.side) {
            if !used[slot(e.cell, arc)] {
                return Some(Position { cell: e.cell, entry: e.side });
            }
        }
    }
    for cell in mosaic.cells() {
        for (arc, &(a, _)) in mosaic.tile(cell).connections().iter().enumerate() {
            if !used[slot(cell, arc)] {
                return Some(Position { cell, entry: a });
            }
        }
    }
    None
}

pub fn crossing_count(mosaic: &Mosaic) -> Result<usize> {
    mosaic.ensure_valid()?;
    Ok(mosaic.crossing_count())
}
