//! Maximal parallelograms, rectangles and squares enclosed in a triangle,
//! the equal-squares triangle, and brute-force oracles for all of them.

pub mod calabi;
pub mod construction;
pub mod error;
pub mod geom;
pub mod inscribed;
pub mod oracle;
pub mod solution;
pub mod wedged;

pub use construction::{Construction, ConstructionRegistry, Figure, Guide};
pub use error::{GeomError, Result};
pub use geom::{Point, SideId, Triangle, TriangleClass, Vertex};
pub use solution::{PolygonKind, PolygonSolution, SquareKind, SquareTriple};
