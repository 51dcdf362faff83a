pub mod aztec;
pub mod boxplus;
pub mod error;
pub mod region;
pub mod render;
pub mod sample;
pub mod shape;
pub mod solver;
pub mod transform;
pub mod tromino180;

pub use error::{Error, Result};
pub use region::{Cell, Region};
pub use shape::{enumerate_placements, PieceSet, Placement, ShapeKind, Tiling, Violation};
