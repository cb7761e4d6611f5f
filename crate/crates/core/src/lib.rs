//! Rectangular virtual knot mosaics.
//!
//! A mosaic is an `m × n` grid of the eleven standard tiles together with a
//! pairing of its `2(m + n)` boundary edges. Gluing the paired edges yields a
//! knot diagram on a closed orientable surface. This crate validates mosaics,
//! computes the genus of that surface, traces signed Gauss codes, builds row
//! mosaics from Gauss codes, applies injection and ejection moves, computes
//! the intersection index polynomial and enumerates small mosaics.

mod dsu;
pub mod error;
pub mod fixtures;
pub mod gauss;
pub mod indexpoly;
pub mod mosaic;
pub mod moves;
#[cfg(test)]
mod proptests;
pub mod render;
pub mod rowbuild;
pub mod search;
pub mod surface;
pub mod tiles;
pub mod trace;

pub use error::{Error, Result};
pub use indexpoly::{IndexPolynomial, IndexReport, SmoothedDiagram};
pub use gauss::{parse_code, GaussCode, Pass, Sign, Symbol};
pub use mosaic::{BoundaryEdge, Cell, Mosaic, ValidationReport, Violation};
pub use moves::{eject, inject, InjectionSite};
pub use rowbuild::{build_row, row_number_upper_bound, BuildPlan};
pub use search::{census, enumerate_mosaics, row_number_bound, tile_number_bound, CensusEntry, SearchOptions};
pub use surface::SurfaceReport;
pub use tiles::{Axis, Side, Tile};
pub use trace::{CrossingVisit, TraceResult};
