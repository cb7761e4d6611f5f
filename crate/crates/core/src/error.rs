use thiserror::Error;

use crate::tiles::{Side, Tile};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{side:?} is not a connection point of {tile}")]
    NotAConnectionPoint { tile: Tile, side: Side },

    #[error("{0} is not a crossing tile")]
    NotACrossingTile(Tile),

    #[error("syntax error on line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("empty input")]
    EmptyInput,

    #[error("bad dimensions: {0}")]
    BadDimensions(String),

    #[error("bad pairing: {0}")]
    BadPairing(String),

    #[error("invalid mosaic: {0}")]
    InvalidMosaic(String),

    #[error("mosaic contains no arcs")]
    NoDiagram,

    #[error("diagram has {0} components, expected a knot")]
    NotAKnot(usize),

    #[error("cell ({row}, {col}) does not hold a crossing tile")]
    NotACrossingCell { row: usize, col: usize },

    #[error("bad Gauss code: {0}")]
    BadCode(String),

    #[error("empty Gauss code")]
    EmptyCode,

    #[error("injection site out of range: {0}")]
    SiteOutOfRange(String),

    #[error("band is not ejectable: {0}")]
    NotEjectable(String),

    #[error("search space too large: {cells} cells exceeds the guard of {guard}")]
    SearchSpaceTooLarge { cells: usize, guard: usize },

    #[error("no mosaic found within bound {0}")]
    NotFoundWithinBound(usize),

    #[error("fixture missing: {0}")]
    FixtureMissing(String),

    #[error("fixture mismatch: {0}")]
    FixtureMismatch(String),

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
