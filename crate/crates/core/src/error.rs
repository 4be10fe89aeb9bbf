use thiserror::Error;

/// Errors raised by the library.
///
/// Variants split into input errors (malformed or inconsistent arguments)
/// and resource errors (a desk-scale guard would be exceeded).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} has a loop")]
    Loop { vertex: usize },
    #[error("duplicate edge {{{i},{j}}}")]
    DuplicateEdge { i: usize, j: usize },
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge {{{i},{j}}} is not in the graph")]
    EdgeNotInGraph { i: usize, j: usize },
    #[error("{family} requires a parameter of at least {min}, got {value}")]
    FamilyParameter {
        family: &'static str,
        value: usize,
        min: usize,
    },
    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("grid size mismatch: {left} vs {right}")]
    GridMismatch { left: u32, right: u32 },
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,
    #[error("monomial {0} is not squarefree")]
    NotSquarefree(String),
    #[error("monomial {0} is divisible by another generator")]
    NotMinimal(String),
    #[error("the monomial ideal contains 1")]
    UnitIdeal,
    #[error("malformed witness: {0}")]
    MalformedWitness(String),
    #[error("no assignment for variable x[{row},{col}]")]
    MissingAssignment { row: u32, col: u32 },
    #[error("field size {0} is not supported (expected 2, 3 or 5)")]
    UnsupportedField(u64),
    #[error("{0} overflows a 64-bit integer")]
    Overflow(&'static str),
    #[error("rank must be at least 1")]
    NonPositiveRank,
    #[error("{what} = {value} exceeds the limit {limit}; pass the override to force")]
    Guard {
        what: &'static str,
        value: u64,
        limit: u64,
    },
}

impl Error {
    /// True for errors raised by a size guard rather than bad input.
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::Guard { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
