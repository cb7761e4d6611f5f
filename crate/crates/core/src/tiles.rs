//! The eleven mosaic tiles and the grid geometry they live on.
//!
//! A [`Side`] doubles as a unit heading: a strand that leaves a cell through
//! its East side is heading East. Rotations are taken with North pointing up,
//! so `East.rotate_ccw() == North`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    North,
    East,
    South,
    West,
}

impl Side {
    pub const ALL: [Side; 4] = [Side::North, Side::East, Side::South, Side::West];

    pub fn opposite(self) -> Side {
        match self {
            Side::North => Side::South,
            Side::East => Side::West,
            Side::South => Side::North,
            Side::West => Side::East,
        }
    }

    pub fn rotate_ccw(self) -> Side {
        match self {
            Side::North => Side::West,
            Side::West => Side::South,
            Side::South => Side::East,
            Side::East => Side::North,
        }
    }

    pub fn rotate_cw(self) -> Side {
        self.rotate_ccw().opposite()
    }

    pub fn axis(self) -> Axis {
        match self {
            Side::North | Side::South => Axis::Vertical,
            Side::East | Side::West => Axis::Horizontal,
        }
    }

    /// (row, col) step of moving one cell in this direction; rows grow southward.
    pub fn delta(self) -> (isize, isize) {
        match self {
            Side::North => (-1, 0),
            Side::East => (0, 1),
            Side::South => (1, 0),
            Side::West => (0, -1),
        }
    }

    fn bit(self) -> u8 {
        match self {
            Side::North => 1,
            Side::East => 2,
            Side::South => 4,
            Side::West => 8,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Side::North => 'N',
            Side::East => 'E',
            Side::South => 'S',
            Side::West => 'W',
        }
    }
}

/// The two strand directions through a crossing tile.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Axis {
    /// North–South.
    Vertical,
    /// East–West.
    Horizontal,
}

impl Axis {
    pub fn other(self) -> Axis {
        match self {
            Axis::Vertical => Axis::Horizontal,
            Axis::Horizontal => Axis::Vertical,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Tile {
    T0,
    T1,
    T2,
    T3,
    T4,
    T5,
    T6,
    T7,
    T8,
    T9,
    T10,
}

use Side::{East as E, North as N, South as S, West as W};

const ARCS: [&[(Side, Side)]; 11] = [
    &[],
    &[(S, W)],
    &[(S, E)],
    &[(N, E)],
    &[(N, W)],
    &[(E, W)],
    &[(N, S)],
    &[(N, E), (S, W)],
    &[(N, W), (S, E)],
    &[(N, S), (E, W)],
    &[(N, S), (E, W)],
];

/// Axis that carries the over-strand on T9; T10 is the other one.
///
/// The smoothing table (T9 with negative sign smooths to T7, T10 positive to
/// T7) only agrees with the right-handed sign rule when T9's horizontal strand
/// is the over-strand.
const T9_OVER_AXIS: Axis = Axis::Horizontal;

impl Tile {
    pub const ALL: [Tile; 11] = [
        Tile::T0,
        Tile::T1,
        Tile::T2,
        Tile::T3,
        Tile::T4,
        Tile::T5,
        Tile::T6,
        Tile::T7,
        Tile::T8,
        Tile::T9,
        Tile::T10,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Option<Tile> {
        Tile::ALL.get(i).copied()
    }

    /// Arcs of the tile as pairs of sides. For T9/T10 the first arc is the
    /// vertical strand, the second the horizontal one.
    pub fn connections(self) -> &'static [(Side, Side)] {
        ARCS[self.index()]
    }

    /// Bit set of connection points (N=1, E=2, S=4, W=8).
    pub fn mask(self) -> u8 {
        self.connections()
            .iter()
            .fold(0, |m, &(a, b)| m | a.bit() | b.bit())
    }

    pub fn has_connection(self, side: Side) -> bool {
        self.mask() & side.bit() != 0
    }

    pub fn connection_points(self) -> Vec<Side> {
        Side::ALL
            .into_iter()
            .filter(|&s| self.has_connection(s))
            .collect()
    }

    pub fn is_crossing(self) -> bool {
        matches!(self, Tile::T9 | Tile::T10)
    }

    pub fn is_blank(self) -> bool {
        self == Tile::T0
    }

    /// Index of the arc that touches `side`, if any.
    pub fn arc_of(self, side: Side) -> Option<usize> {
        self.connections()
            .iter()
            .position(|&(a, b)| a == side || b == side)
    }

    pub fn transit(self, entry: Side) -> Result<Side> {
        for &(a, b) in self.connections() {
            if a == entry {
                return Ok(b);
            }
            if b == entry {
                return Ok(a);
            }
        }
        Err(Error::NotAConnectionPoint {
            tile: self,
            side: entry,
        })
    }

    pub fn is_over(self, axis: Axis) -> Result<bool> {
        match self {
            Tile::T9 => Ok(axis == T9_OVER_AXIS),
            Tile::T10 => Ok(axis != T9_OVER_AXIS),
            other => Err(Error::NotACrossingTile(other)),
        }
    }

    /// The crossing tile whose over-strand runs along `axis`.
    pub fn crossing_with_over(axis: Axis) -> Tile {
        if axis == T9_OVER_AXIS {
            Tile::T9
        } else {
            Tile::T10
        }
    }

    /// The double-arc tile joining `a` with `b` (and the remaining two sides
    /// with each other), if one exists.
    pub fn double_arc_joining(a: Side, b: Side) -> Option<Tile> {
        [Tile::T7, Tile::T8].into_iter().find(|t| {
            t.connections()
                .iter()
                .any(|&(x, y)| (x, y) == (a, b) || (y, x) == (a, b))
        })
    }
}

impl fmt::Display for Tile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T{}", self.index())
    }
}

impl FromStr for Tile {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Tile::ALL
            .into_iter()
            .find(|t| t.to_string() == s)
            .ok_or_else(|| format!("unknown tile token {s:?}"))
    }
}
