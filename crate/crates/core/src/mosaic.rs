//! Rectangular mosaics: an `m × n` grid of tiles plus a perfect pairing of the
//! `2(m + n)` boundary edges.
//!
//! Boundary edges are indexed counterclockwise starting at the top of the left
//! side:
//!
//! * left side, top to bottom: `0 .. m`
//! * bottom row, left to right: `m .. m + n`
//! * right side, bottom to top: `m + n .. 2m + n`
//! * top row, right to left: `2m + n .. 2(m + n)`
//!
//! Corner `k` is the start of edge `k` along this walk, so corner 0 is the
//! northwest corner of the grid.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tiles::{Side, Tile};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.row, self.col)
    }
}

/// Where a boundary edge sits: the adjacent cell and the cell side it lies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BoundaryEdge {
    pub index: usize,
    pub cell: Cell,
    pub side: Side,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mosaic {
    rows: usize,
    cols: usize,
    tiles: Vec<Tile>,
    partner: Vec<usize>,
}

impl Mosaic {
    /// Builds a mosaic from a row-major tile list and the boundary pairing,
    /// given as pairs of counterclockwise edge indices.
    pub fn new(rows: usize, cols: usize, tiles: Vec<Tile>, pairs: &[(usize, usize)]) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::BadDimensions(format!("{rows}x{cols} has no cells")));
        }
        if tiles.len() != rows * cols {
            return Err(Error::BadDimensions(format!(
                "{rows}x{cols} needs {} tiles, got {}",
                rows * cols,
                tiles.len()
            )));
        }
        let len = 2 * (rows + cols);
        let mut partner = vec![usize::MAX; len];
        for &(a, b) in pairs {
            if a >= len || b >= len {
                return Err(Error::BadPairing(format!("edge index out of range in ({a}, {b})")));
            }
            if a == b {
                return Err(Error::BadPairing(format!("edge {a} paired with itself")));
            }
            if partner[a] != usize::MAX || partner[b] != usize::MAX {
                return Err(Error::BadPairing(format!("edge in ({a}, {b}) paired twice")));
            }
            partner[a] = b;
            partner[b] = a;
        }
        if let Some(k) = partner.iter().position(|&p| p == usize::MAX) {
            return Err(Error::BadPairing(format!("edge {k} is unpaired")));
        }
        Ok(Mosaic { rows, cols, tiles, partner })
    }

    pub(crate) fn from_partner(rows: usize, cols: usize, tiles: Vec<Tile>, partner: Vec<usize>) -> Self {
        debug_assert_eq!(tiles.len(), rows * cols);
        debug_assert_eq!(partner.len(), 2 * (rows + cols));
        Mosaic { rows, cols, tiles, partner }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn area(&self) -> usize {
        self.rows * self.cols
    }

    pub fn tiles(&self) -> &[Tile] {
        &self.tiles
    }

    pub fn tile(&self, cell: Cell) -> Tile {
        self.tiles[cell.row * self.cols + cell.col]
    }

    pub fn set_tile(&mut self, cell: Cell, tile: Tile) {
        self.tiles[cell.row * self.cols + cell.col] = tile;
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        (0..self.rows).flat_map(move |r| (0..self.cols).map(move |c| Cell::new(r, c)))
    }

    pub fn boundary_len(&self) -> usize {
        2 * (self.rows + self.cols)
    }

    pub fn partner(&self, edge: usize) -> usize {
        self.partner[edge]
    }

    pub fn partners(&self) -> &[usize] {
        &self.partner
    }

    /// Pairs `(a, b)` with `a < b`, sorted by `a`.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.partner
            .iter()
            .enumerate()
            .filter(|&(a, &b)| a < b)
            .map(|(a, &b)| (a, b))
            .collect()
    }

    pub fn edge(&self, index: usize) -> BoundaryEdge {
        let (m, n) = (self.rows, self.cols);
        let (cell, side) = if index < m {
            (Cell::new(index, 0), Side::West)
        } else if index < m + n {
            (Cell::new(m - 1, index - m), Side::South)
        } else if index < 2 * m + n {
            (Cell::new(m - 1 - (index - m - n), n - 1), Side::East)
        } else {
            (Cell::new(0, n - 1 - (index - 2 * m - n)), Side::North)
        };
        BoundaryEdge { index, cell, side }
    }

    /// Boundary edge index on `side` of `cell`, if that side is on the boundary.
    pub fn edge_at(&self, cell: Cell, side: Side) -> Option<usize> {
        let (m, n) = (self.rows, self.cols);
        match side {
            Side::West if cell.col == 0 => Some(cell.row),
            Side::South if cell.row == m - 1 => Some(m + cell.col),
            Side::East if cell.col == n - 1 => Some(m + n + (m - 1 - cell.row)),
            Side::North if cell.row == 0 => Some(2 * m + n + (n - 1 - cell.col)),
            _ => None,
        }
    }

    /// Cell adjacent to `cell` across `side`, if inside the grid.
    pub fn neighbor(&self, cell: Cell, side: Side) -> Option<Cell> {
        let (dr, dc) = side.delta();
        let r = cell.row as isize + dr;
        let c = cell.col as isize + dc;
        (r >= 0 && c >= 0 && (r as usize) < self.rows && (c as usize) < self.cols)
            .then(|| Cell::new(r as usize, c as usize))
    }

    /// Whether the tile next to boundary edge `index` has a connection on it.
    pub fn edge_carries_arc(&self, index: usize) -> bool {
        let e = self.edge(index);
        self.tile(e.cell).has_connection(e.side)
    }

    pub fn crossing_cells(&self) -> Vec<Cell> {
        self.cells().filter(|&c| self.tile(c).is_crossing()).collect()
    }

    pub fn crossing_count(&self) -> usize {
        self.tiles.iter().filter(|t| t.is_crossing()).count()
    }

    pub fn has_arcs(&self) -> bool {
        self.tiles.iter().any(|t| !t.is_blank())
    }

    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        for cell in self.cells() {
            let tile = self.tile(cell);
            for side in [Side::East, Side::South] {
                if let Some(other) = self.neighbor(cell, side) {
                    let here = tile.has_connection(side);
                    let there = self.tile(other).has_connection(side.opposite());
                    if here != there {
                        violations.push(Violation::InteriorMismatch {
                            cell,
                            side,
                            neighbor: other,
                        });
                    }
                }
            }
        }
        for (a, b) in self.pairs() {
            if self.edge_carries_arc(a) != self.edge_carries_arc(b) {
                violations.push(Violation::BoundaryMismatch { edge: a, partner: b });
            }
        }
        ValidationReport { violations }
    }

    /// Fails with [`Error::InvalidMosaic`] unless the mosaic is suitably connected.
    pub fn ensure_valid(&self) -> Result<()> {
        let report = self.validate();
        if report.is_valid() {
            Ok(())
        } else {
            Err(Error::InvalidMosaic(report.to_string()))
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        parse_vmos(text)
    }

    pub fn serialize(&self) -> String {
        let labels = self.labels();
        let side = |idx: Vec<usize>| {
            idx.into_iter()
                .map(|k| labels[k].as_str())
                .collect::<Vec<_>>()
                .join(" ")
        };
        let (m, n) = (self.rows, self.cols);
        let mut out = format!("{m} {n}\n");
        for r in 0..m {
            let row: Vec<String> = (0..n).map(|c| self.tile(Cell::new(r, c)).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        let top = (0..n).map(|c| self.edge_at(Cell::new(0, c), Side::North).unwrap()).collect();
        let right = (0..m).map(|r| self.edge_at(Cell::new(r, n - 1), Side::East).unwrap()).collect();
        let bottom = (0..n).map(|c| self.edge_at(Cell::new(m - 1, c), Side::South).unwrap()).collect();
        let left = (0..m).map(|r| self.edge_at(Cell::new(r, 0), Side::West).unwrap()).collect();
        out.push_str(&format!("top: {}\n", side(top)));
        out.push_str(&format!("right: {}\n", side(right)));
        out.push_str(&format!("bottom: {}\n", side(bottom)));
        out.push_str(&format!("left: {}\n", side(left)));
        out
    }

    /// Canonical label of every boundary edge: `a, b, c, …` by first
    /// appearance along the counterclockwise walk.
    pub fn labels(&self) -> Vec<String> {
        let mut labels = vec![String::new(); self.boundary_len()];
        let mut next = 0;
        for k in 0..self.boundary_len() {
            if labels[k].is_empty() {
                let l = label_name(next);
                next += 1;
                labels[self.partner[k]] = l.clone();
                labels[k] = l;
            }
        }
        labels
    }

    /// The boundary word read counterclockwise from the northwest corner.
    pub fn boundary_word(&self) -> Vec<String> {
        self.labels()
    }
}

/// `a..z`, then `aa, ab, …` (bijective base 26).
pub fn label_name(mut i: usize) -> String {
    let mut s = Vec::new();
    loop {
        s.push(b'a' + (i % 26) as u8);
        if i < 26 {
            break;
        }
        i = i / 26 - 1;
    }
    s.reverse();
    String::from_utf8(s).unwrap()
}

impl fmt::Display for Mosaic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.serialize())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Violation {
    /// `cell` and `neighbor` disagree about a connection on their shared edge.
    InteriorMismatch { cell: Cell, side: Side, neighbor: Cell },
    /// A boundary pair joins an arc-carrying edge with a blank one.
    BoundaryMismatch { edge: usize, partner: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::InteriorMismatch { cell, side, neighbor } => write!(
                f,
                "interior edge mismatch between cell {cell} ({} side) and cell {neighbor}",
                side.letter()
            ),
            Violation::BoundaryMismatch { edge, partner } => {
                write!(f, "boundary edge {edge} paired with {partner}: arc edge paired with blank edge")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return f.write_str("VALID");
        }
        let lines: Vec<String> = self.violations.iter().map(|v| v.to_string()).collect();
        write!(f, "INVALID: {}", lines.join("; "))
    }
}

fn syntax(line: usize, message: impl Into<String>) -> Error {
    Error::Syntax { line, message: message.into() }
}

fn parse_vmos(text: &str) -> Result<Mosaic> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    let Some(&(first_no, first)) = lines.first() else {
        return Err(Error::EmptyInput);
    };
    let dims: Vec<&str> = first.split_whitespace().collect();
    let parse_dim = |s: &str| s.parse::<usize>().map_err(|_| syntax(first_no, format!("bad dimension {s:?}")));
    if dims.len() != 2 {
        return Err(syntax(first_no, "expected \"m n\""));
    }
    let (m, n) = (parse_dim(dims[0])?, parse_dim(dims[1])?);
    if m == 0 || n == 0 {
        return Err(Error::BadDimensions(format!("{m}x{n} has no cells")));
    }
    if lines.len() != 1 + m + 4 {
        return Err(Error::BadDimensions(format!(
            "expected {} tile rows and 4 side lines, found {} lines after the header",
            m,
            lines.len() - 1
        )));
    }

    let mut tiles = Vec::with_capacity(m * n);
    for &(no, line) in &lines[1..=m] {
        let row: Vec<&str> = line.split_whitespace().collect();
        if row.len() != n {
            return Err(Error::BadDimensions(format!("line {no}: expected {n} tiles, found {}", row.len())));
        }
        for tok in row {
            tiles.push(tok.parse::<Tile>().map_err(|e| syntax(no, e))?);
        }
    }

    let mut sides: HashMap<&str, (usize, Vec<&str>)> = HashMap::new();
    for &(no, line) in &lines[m + 1..] {
        let (key, rest) = line
            .split_once(':')
            .ok_or_else(|| syntax(no, "expected \"<side>: labels\""))?;
        let key = key.trim();
        if !["top", "right", "bottom", "left"].contains(&key) {
            return Err(syntax(no, format!("unknown side {key:?}")));
        }
        let labels: Vec<&str> = rest.split_whitespace().collect();
        for l in &labels {
            if !l.chars().all(|c| c.is_ascii_alphanumeric()) {
                return Err(syntax(no, format!("label {l:?} is not alphanumeric")));
            }
        }
        if sides.insert(key, (no, labels)).is_some() {
            return Err(syntax(no, format!("side {key:?} given twice")));
        }
    }

    let shell = Mosaic::from_partner(m, n, tiles, vec![0; 2 * (m + n)]);
    let mut slots: Vec<(usize, &str)> = Vec::with_capacity(2 * (m + n));
    for (key, len, side) in [
        ("top", n, Side::North),
        ("right", m, Side::East),
        ("bottom", n, Side::South),
        ("left", m, Side::West),
    ] {
        let (no, labels) = &sides[key];
        if labels.len() != len {
            return Err(Error::BadDimensions(format!(
                "line {no}: {key} side needs {len} labels, found {}",
                labels.len()
            )));
        }
        for (i, l) in labels.iter().enumerate() {
            let cell = match side {
                Side::North => Cell::new(0, i),
                Side::South => Cell::new(m - 1, i),
                Side::East => Cell::new(i, n - 1),
                Side::West => Cell::new(i, 0),
            };
            slots.push((shell.edge_at(cell, side).unwrap(), l));
        }
    }

    let mut by_label: HashMap<String, Vec<usize>> = HashMap::new();
    for (k, l) in slots {
        by_label.entry(l.to_ascii_lowercase()).or_default().push(k);
    }
    let mut pairs = Vec::new();
    let mut names: Vec<_> = by_label.into_iter().collect();
    names.sort();
    for (l, ks) in names {
        if ks.len() != 2 {
            return Err(Error::BadPairing(format!("label {l:?} appears {} times", ks.len())));
        }
        pairs.push((ks[0], ks[1]));
    }
    Mosaic::new(m, n, shell.tiles, &pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    const SEVEN_ONE: &str = "\
# 7_1 as a 1x7 row mosaic
1 7
T9 T10 T9 T10 T9 T10 T9
top: d c c b b a a
right: d
bottom: f f g g h h e
left: e
";

    #[test]
    fn edge_indexing_round_trips() {
        let m = Mosaic::new(2, 3, vec![Tile::T0; 6], &[(0, 1), (2, 3), (4, 5), (6, 7), (8, 9)]).unwrap();
        for k in 0..m.boundary_len() {
            let e = m.edge(k);
            assert_eq!(m.edge_at(e.cell, e.side), Some(k));
        }
        assert_eq!(m.edge(0).side, Side::West);
        assert_eq!(m.edge(2), BoundaryEdge { index: 2, cell: Cell::new(1, 0), side: Side::South });
        assert_eq!(m.edge(5).cell, Cell::new(1, 2));
        assert_eq!(m.edge(7).side, Side::North);
        assert_eq!(m.edge(7).cell, Cell::new(0, 2));
    }

    #[test]
    fn parses_row_mosaic() {
        let m = Mosaic::parse(SEVEN_ONE).unwrap();
        assert_eq!((m.rows(), m.cols()), (1, 7));
        assert_eq!(m.pairs().len(), 8);
        assert!(m.validate().is_valid());
        assert_eq!(m.crossing_count(), 7);
    }

    #[test]
    fn blank_single_tile() {
        let m = Mosaic::parse("1 1\nT0\ntop: a\nright: b\nbottom: b\nleft: a\n").unwrap();
        assert!(m.validate().is_valid());
        assert!(!m.has_arcs());
    }

    #[test]
    fn label_used_three_times() {
        let err = Mosaic::parse("1 1\nT0\ntop: a\nright: a\nbottom: a\nleft: b\n").unwrap_err();
        assert!(matches!(err, Error::BadPairing(_)), "{err}");
    }

    #[test]
    fn malformed_inputs() {
        assert_eq!(Mosaic::parse("  # nothing\n"), Err(Error::EmptyInput));
        assert!(matches!(Mosaic::parse("1\nT0\n"), Err(Error::Syntax { .. })));
        assert!(matches!(
            Mosaic::parse("1 2\nT0\ntop: a b\nright: c\nbottom: a b\nleft: c\n"),
            Err(Error::BadDimensions(_))
        ));
        assert!(matches!(
            Mosaic::parse("1 1\nT11\ntop: a\nright: a\nbottom: b\nleft: b\n"),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            Mosaic::parse("1 1\nT0\ntop: a\nright: a\nbottom: b b\nleft: b\n"),
            Err(Error::BadDimensions(_))
        ));
    }

    #[test]
    fn serialize_is_canonical() {
        let m = Mosaic::parse(SEVEN_ONE).unwrap();
        let text = m.serialize();
        assert_eq!(Mosaic::parse(&text).unwrap(), m);
        assert_eq!(Mosaic::parse(&text).unwrap().serialize(), text);
        assert_eq!(
            text,
            "1 7\nT9 T10 T9 T10 T9 T10 T9\ntop: e h h g g f f\nright: e\nbottom: b b c c d d a\nleft: a\n"
        );
    }

    #[test]
    fn interlocking_word_pattern() {
        // d c d c a b b a read counterclockwise from the northwest corner
        let m = Mosaic::new(2, 2, vec![Tile::T0; 4], &[(0, 2), (1, 3), (4, 7), (5, 6)]).unwrap();
        assert_eq!(m.boundary_word(), ["a", "b", "a", "b", "c", "d", "d", "c"]);
    }

    #[test]
    fn arc_paired_with_blank() {
        // T5 with its East edge (index 2) paired to the blank North edge (index 3)
        let m = Mosaic::new(1, 1, vec![Tile::T5], &[(2, 3), (0, 1)]).unwrap();
        let report = m.validate();
        assert_eq!(report.violations.len(), 2);
        assert!(report
            .violations
            .iter()
            .all(|v| matches!(v, Violation::BoundaryMismatch { .. })));
    }

    #[test]
    fn interior_mismatch() {
        let m = Mosaic::new(1, 2, vec![Tile::T5, Tile::T6], &[(0, 1), (2, 3), (4, 5)]).unwrap();
        let report = m.validate();
        assert!(report.violations.contains(&Violation::InteriorMismatch {
            cell: Cell::new(0, 0),
            side: Side::East,
            neighbor: Cell::new(0, 1),
        }));
    }

    #[test]
    fn label_names() {
        assert_eq!(label_name(0), "a");
        assert_eq!(label_name(25), "z");
        assert_eq!(label_name(26), "aa");
        assert_eq!(label_name(27), "ab");
        assert_eq!(label_name(26 + 26 * 26), "aaa");
    }
}
