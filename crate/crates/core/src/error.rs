use thiserror::Error;

use crate::geom::{SideId, Vertex};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeomError {
    #[error("point coordinates must be finite")]
    NonFinite,
    #[error("degenerate triangle: twice-area {twice_area:e} is below {threshold:e}")]
    DegenerateTriangle { twice_area: f64, threshold: f64 },
    #[error("invalid angles {alpha} and {beta} rad: both must be positive with a sum below π")]
    InvalidAngles { alpha: f64, beta: f64 },
    #[error("{what} = {value} is outside the admissible range {range}")]
    OutOfRange {
        what: &'static str,
        value: f64,
        range: &'static str,
    },
    #[error("{what} must be positive, got {value}")]
    NonPositiveInput { what: &'static str, value: f64 },
    #[error("side {side} has an obtuse base angle at {vertex}")]
    ObtuseBaseAngle { side: SideId, vertex: Vertex },
    #[error("triangle is not acute")]
    NotAcute,
    #[error("angle at {0} is acute; a wedged construction needs a non-acute vertex")]
    NotObtuseAtVertex(Vertex),
    #[error("side {side} does not meet vertex {vertex}")]
    BaseNotAdjacent { side: SideId, vertex: Vertex },
    #[error("neither base angle of side {0} is obtuse")]
    NotObtuseOnBase(SideId),
    #[error("triangle is not obtuse at A")]
    NotObtuse,
    #[error("sides are not ordered a ≥ b ≥ c")]
    SidesNotSorted,
    #[error("apex ({x}, {y}) lies outside the normalized domain")]
    OutsideDomain { x: f64, y: f64 },
    #[error("invalid sweep range: {0}")]
    InvalidRange(String),
    #[error("no sign change on [{lo}, {hi}]")]
    NoBracket { lo: f64, hi: f64 },
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("unknown construction `{0}`")]
    UnknownConstruction(String),
}

pub type Result<T, E = GeomError> = std::result::Result<T, E>;
