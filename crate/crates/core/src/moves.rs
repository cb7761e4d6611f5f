//! Row, column and square injections and their inverse ejections.
//!
//! An injection cuts the mosaic between two rows (or columns) and inserts a
//! band of two new rows (or columns). Each new cell continues whatever strand
//! crosses the cut: T6 carries a vertical strand across a row band, T5 a
//! horizontal strand across a column band, and every other new cell is
//! blank. The two new boundary edges on each end of the band are glued to
//! each other.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::mosaic::{Cell, Mosaic};
use crate::tiles::{Side, Tile};

/// Where to inject. `Row(i)` cuts below the first `i` rows and `Col(j)` to
/// the right of the first `j` columns; `Square(i, j)` does both.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum InjectionSite {
    Row(usize),
    Col(usize),
    Square(usize, usize),
}

impl fmt::Display for InjectionSite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InjectionSite::Row(i) => write!(f, "row {i}"),
            InjectionSite::Col(j) => write!(f, "col {j}"),
            InjectionSite::Square(i, j) => write!(f, "square {i} {j}"),
        }
    }
}

impl FromStr for InjectionSite {
    type Err = Error;

    /// Parses `row I`, `col J` or `square I J`.
    fn from_str(s: &str) -> Result<Self> {
        let words: Vec<&str> = s.split_whitespace().collect();
        let num = |w: &str| w.parse::<usize>().map_err(|_| Error::SiteOutOfRange(s.to_string()));
        match words.as_slice() {
            ["row", i] => Ok(InjectionSite::Row(num(i)?)),
            ["col" | "column", j] => Ok(InjectionSite::Col(num(j)?)),
            ["square", i, j] => Ok(InjectionSite::Square(num(i)?, num(j)?)),
            _ => Err(Error::SiteOutOfRange(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Band {
    Rows,
    Cols,
}

impl Band {
    /// Side of a cell facing across the cut, toward higher indices.
    fn forward(self) -> Side {
        match self {
            Band::Rows => Side::South,
            Band::Cols => Side::East,
        }
    }

    fn pass_through(self) -> Tile {
        match self {
            Band::Rows => Tile::T6,
            Band::Cols => Tile::T5,
        }
    }

    /// Sides at the two ends of a band line.
    fn ends(self) -> [Side; 2] {
        match self {
            Band::Rows => [Side::West, Side::East],
            Band::Cols => [Side::North, Side::South],
        }
    }

    fn extent(self, m: &Mosaic) -> usize {
        match self {
            Band::Rows => m.rows(),
            Band::Cols => m.cols(),
        }
    }

    fn span(self, m: &Mosaic) -> usize {
        match self {
            Band::Rows => m.cols(),
            Band::Cols => m.rows(),
        }
    }

    /// The cell at position `p` across the band direction and `q` along it.
    fn cell(self, p: usize, q: usize) -> Cell {
        match self {
            Band::Rows => Cell::new(p, q),
            Band::Cols => Cell::new(q, p),
        }
    }

    fn position(self, c: Cell) -> usize {
        match self {
            Band::Rows => c.row,
            Band::Cols => c.col,
        }
    }

    fn shifted(self, c: Cell, by: isize) -> Cell {
        let move_by = |x: usize| x.checked_add_signed(by).expect("cell stays in grid");
        match self {
            Band::Rows => Cell::new(move_by(c.row), c.col),
            Band::Cols => Cell::new(c.row, move_by(c.col)),
        }
    }

    fn dims(self, m: &Mosaic, extent: usize) -> (usize, usize) {
        match self {
            Band::Rows => (extent, m.cols()),
            Band::Cols => (m.rows(), extent),
        }
    }
}

/// Position of a cell along the band direction.
fn along(band: Band, c: Cell) -> usize {
    match band {
        Band::Rows => c.col,
        Band::Cols => c.row,
    }
}

/// An empty mosaic of the given shape, used for boundary index arithmetic.
fn shell(rows: usize, cols: usize) -> Mosaic {
    Mosaic::from_partner(rows, cols, vec![Tile::T0; rows * cols], vec![0; 2 * (rows + cols)])
}

fn insert(mosaic: &Mosaic, band: Band, p: usize) -> Result<Mosaic> {
    let extent = band.extent(mosaic);
    if p > extent {
        return Err(Error::SiteOutOfRange(format!("cut {p} exceeds {extent}")));
    }
    let (rows, cols) = band.dims(mosaic, extent + 2);
    let fwd = band.forward();
    let mut tiles = vec![Tile::T0; rows * cols];
    for cell in mosaic.cells() {
        let to = if band.position(cell) >= p { band.shifted(cell, 2) } else { cell };
        tiles[to.row * cols + to.col] = mosaic.tile(cell);
    }
    for q in 0..band.span(mosaic) {
        let crosses = (p > 0 && mosaic.tile(band.cell(p - 1, q)).has_connection(fwd))
            || (p < extent && mosaic.tile(band.cell(p, q)).has_connection(fwd.opposite()));
        if crosses {
            for k in [p, p + 1] {
                let c = band.cell(k, q);
                tiles[c.row * cols + c.col] = band.pass_through();
            }
        }
    }

    let target = shell(rows, cols);
    let map = |k: usize| {
        let e = mosaic.edge(k);
        let pos = band.position(e.cell);
        // an edge on the cut itself (p = 0 or p = extent) ends up on the band
        let shift = if pos > p || (pos == p && e.side != fwd.opposite()) || (pos + 1 == p && e.side == fwd) {
            2
        } else {
            0
        };
        target.edge_at(band.shifted(e.cell, shift), e.side).expect("boundary stays on boundary")
    };
    let mut pairs: Vec<(usize, usize)> = mosaic.pairs().into_iter().map(|(a, b)| (map(a), map(b))).collect();
    let last = band.span(mosaic) - 1;
    for (side, q) in band.ends().into_iter().zip([0, last]) {
        let a = target.edge_at(band.cell(p, q), side).expect("band end");
        let b = target.edge_at(band.cell(p + 1, q), side).expect("band end");
        pairs.push((a, b));
    }
    Mosaic::new(rows, cols, tiles, &pairs)
}

fn remove(mosaic: &Mosaic, band: Band, p: usize) -> Result<Mosaic> {
    let extent = band.extent(mosaic);
    if extent < 3 || p + 2 > extent {
        return Err(Error::SiteOutOfRange(format!("no band of two at {p} in extent {extent}")));
    }
    let mut offending = Vec::new();
    for q in 0..band.span(mosaic) {
        let (a, b) = (band.cell(p, q), band.cell(p + 1, q));
        let (ta, tb) = (mosaic.tile(a), mosaic.tile(b));
        if ta != tb || !(ta == Tile::T0 || ta == band.pass_through()) {
            offending.push(a);
            offending.push(b);
        }
    }
    let last = band.span(mosaic) - 1;
    for (side, q) in band.ends().into_iter().zip([0, last]) {
        let (a, b) = (band.cell(p, q), band.cell(p + 1, q));
        let ka = mosaic.edge_at(a, side).expect("band end");
        let kb = mosaic.edge_at(b, side).expect("band end");
        if mosaic.partner(ka) != kb {
            offending.push(a);
            offending.push(b);
        }
    }
    if !offending.is_empty() {
        offending.sort();
        offending.dedup();
        let cells: Vec<String> = offending.iter().map(|c| c.to_string()).collect();
        return Err(Error::NotEjectable(cells.join(" ")));
    }

    let (rows, cols) = band.dims(mosaic, extent - 2);
    let fwd = band.forward();
    let kept = |c: Cell| band.position(c) < p || band.position(c) >= p + 2;
    let tiles: Vec<Tile> = mosaic.cells().filter(|&c| kept(c)).map(|c| mosaic.tile(c)).collect();
    let target = shell(rows, cols);
    // Edges at the band's ends disappear; edges on its outer faces move to
    // the nearest kept line.
    let map = |k: usize| {
        let e = mosaic.edge(k);
        let pos = band.position(e.cell);
        let cell = if pos < p {
            e.cell
        } else if pos >= p + 2 || e.side == fwd.opposite() {
            band.cell(pos.max(p + 2) - 2, along(band, e.cell))
        } else if e.side == fwd {
            band.cell(p.checked_sub(1)?, along(band, e.cell))
        } else {
            return None;
        };
        target.edge_at(cell, e.side)
    };
    let pairs: Vec<(usize, usize)> = mosaic
        .pairs()
        .into_iter()
        .filter_map(|(a, b)| Some((map(a)?, map(b)?)))
        .collect();
    Mosaic::new(rows, cols, tiles, &pairs)
}

/// Injects a band at `site`. The input must be valid.
pub fn inject(mosaic: &Mosaic, site: InjectionSite) -> Result<Mosaic> {
    mosaic.ensure_valid()?;
    match site {
        InjectionSite::Row(i) => insert(mosaic, Band::Rows, i),
        InjectionSite::Col(j) => insert(mosaic, Band::Cols, j),
        InjectionSite::Square(i, j) => {
            if j > mosaic.cols() {
                return Err(Error::SiteOutOfRange(format!("cut {j} exceeds {}", mosaic.cols())));
            }
            insert(&insert(mosaic, Band::Rows, i)?, Band::Cols, j)
        }
    }
}

/// Removes the band an injection at `site` would have inserted.
pub fn eject(mosaic: &Mosaic, site: InjectionSite) -> Result<Mosaic> {
    mosaic.ensure_valid()?;
    match site {
        InjectionSite::Row(i) => remove(mosaic, Band::Rows, i),
        InjectionSite::Col(j) => remove(mosaic, Band::Cols, j),
        InjectionSite::Square(i, j) => {
            if i + 2 > mosaic.rows() {
                return Err(Error::SiteOutOfRange(format!("no band of two at {i} in extent {}", mosaic.rows())));
            }
            remove(&remove(mosaic, Band::Cols, j)?, Band::Rows, i)
        }
    }
}
