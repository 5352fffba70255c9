use thiserror::Error;

/// Errors produced by graph construction, spectral routines, and formats.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid order for {what}: got {got}, minimum is {min}")]
    InvalidOrder {
        what: &'static str,
        got: usize,
        min: usize,
    },

    #[error("superpath spec must contain at least one block")]
    EmptySuperpath,

    #[error("requested order {requested} exceeds the configured maximum {max} (set GEL_MAX_ORDER to raise it)")]
    Capacity { requested: usize, max: usize },

    #[error("exhaustive enumeration is supported up to order {max}, got {requested}; feed larger graphs in as graph6 instead")]
    EnumerationCapacity { requested: usize, max: usize },

    #[error("operand is not regular: {0}")]
    NotRegular(String),

    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal residual {residual:.3e})")]
    NumericFailure { sweeps: usize, residual: f64 },

    #[error("exact characteristic polynomial is supported up to order {max}, got {order}")]
    CharPolyCapacity { order: usize, max: usize },

    #[error("isomorphism search undecidable: {0}")]
    IsomorphismUndecidable(String),

    #[error("invalid graph6 data: {0}")]
    Graph6(String),

    #[error("invalid edge list: {0}")]
    EdgeList(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
