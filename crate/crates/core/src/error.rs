use alloc::string::String;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ground set size {0} out of range (1..=63)")]
    GroundSetSize(usize),
    #[error("vertex {vertex} outside 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("ground sets overlap")]
    OverlappingGroundSets,
    #[error("complexes live on different ambient sets ({0} vs {1})")]
    AmbientMismatch(usize, usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("{0} vertices is too many for exhaustive subset enumeration (limit {1})")]
    TooManyVertices(usize, usize),
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("entry ({row}, {col}) outside a {rows}x{cols} matrix")]
    IndexOutOfBounds { row: usize, col: usize, rows: usize, cols: usize },
    #[error("matrix dimensions do not compose")]
    DimensionMismatch,
    #[error("composite of the two maps is not zero")]
    NonzeroComposite,
    #[error("not a subcomplex")]
    NotSubcomplex,
    #[error("I and J must be disjoint and non-empty")]
    InvalidPair,
    #[error("degree {0} out of range")]
    DegreeOutOfRange(i64),
    #[error("malformed cohomology class: {0}")]
    MalformedClass(String),
    #[error("truncation degree {given} below required {needed}")]
    TruncationTooSmall { given: usize, needed: usize },
    #[error("point is not in the open cube")]
    OutsideOpenCube,
    #[error("point is not in the required region: {0}")]
    NotInRegion(String),
    #[error("smash coordinates must lie in [-1, 1] with matching length")]
    MalformedSmashPoint,
    #[error("point is not in the polyhedral product")]
    NotInPolyhedralProduct,
    #[error("tolerance must be positive")]
    NonPositiveTolerance,
    #[error("spread is zero; the cluster weight is undefined")]
    ZeroSpread,
    #[error("postcondition violated: {0}")]
    Postcondition(String),
}
