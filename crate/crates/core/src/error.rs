use thiserror::Error;

/// Errors raised by ideal arithmetic, graph construction and the closed forms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("exponent vector has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("ideals live in different rings ({left} vs {right} variables)")]
    RingMismatch { left: usize, right: usize },

    #[error("variable index {index} out of range for {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },

    #[error("vertex {vertex} out of range for a graph on {nvertices} vertices")]
    VertexOutOfRange { vertex: usize, nvertices: usize },

    #[error("loop at vertex {0}")]
    Loop(usize),

    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),

    #[error("graph has no edges")]
    NoEdges,

    #[error("graph has isolated vertices")]
    IsolatedVertices,

    #[error("graph must have at least 3 vertices, got {0}")]
    TooFewVertices(usize),

    #[error("too many variables: {0} (at most {max})", max = crate::varset::MAX_VARS)]
    TooManyVariables(usize),

    #[error("power must be positive")]
    ZeroPower,

    #[error("method requires diameter at most 2")]
    DiameterTooLarge,

    #[error("no closed form for a_0")]
    UnsupportedIndex,

    #[error("the a_1 recursion needs sqrt(I) != (x_1, ..., x_r)")]
    FullRadical,

    #[error("table is missing the value for n = {0}")]
    MissingTableEntry(usize),

    #[error("local cohomology piece at the degree cap {0:?} is nonzero")]
    CapViolation(Vec<i32>),

    #[error("{0}")]
    Parse(String),

    #[error("{0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
