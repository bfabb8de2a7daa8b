use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid field `{field}`: {message}")]
    Field { field: String, message: String },

    #[error("edge label {label} appears {count} times (expected exactly 2)")]
    EdgeLabel { label: u32, count: usize },

    #[error("rotation data is not planar: V - E + F = {euler}, expected {expected}")]
    NonPlanar { euler: i64, expected: i64 },

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("creases {0} and {1} intersect away from a shared vertex")]
    UnsubdividedCrossing(usize, usize),

    #[error("vertex {vertex} lies outside the unit square")]
    OutsideSheet { vertex: usize },

    #[error("no proper two-coloring of the regions exists")]
    NotTwoColorable,

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    Dimension { expected: usize, actual: usize },

    #[error("forced-one and forced-zero sets overlap at column {0}")]
    OverlappingConstraints(usize),

    #[error("unknown region {0}")]
    UnknownRegion(usize),

    #[error("unknown lamp site {0}")]
    UnknownSite(usize),

    #[error("interior vertex {vertex} has degree {degree}; tanglize needs degree 4")]
    NotFourValent { vertex: usize, degree: usize },

    #[error("component {0} is open; lamp-linking needs a closed component")]
    OpenComponent(usize),

    #[error("crossing {0} is not changeable by region crossing changes")]
    Unchangeable(usize),

    #[error("hypothesis not met: {0}")]
    Hypothesis(String),

    #[error("invalid circle: {0}")]
    InvalidCircle(String),

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("diagram is not oriented: {0}")]
    Unoriented(String),
}

pub type Result<T> = std::result::Result<T, Error>;
