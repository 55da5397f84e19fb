use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("grid dimensions must be at least 1x1, got {rows}x{cols}")]
    EmptyGrid { rows: usize, cols: usize },

    #[error("grid of {rows}x{cols} needs {expected} entries, got {found}")]
    ShapeMismatch {
        rows: usize,
        cols: usize,
        expected: usize,
        found: usize,
    },

    #[error("row {row} has {found} entries, expected {expected}")]
    RaggedRow {
        row: usize,
        expected: usize,
        found: usize,
    },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("expected a square grid, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("not a natural square: {0}")]
    NotNatural(String),

    #[error("{0} is not prime")]
    NotPrime(usize),

    #[error("order {0} is outside the supported range 1..=3000")]
    OrderOutOfRange(usize),

    #[error("square has order {found} but parameters expect {expected}")]
    OrderMismatch { expected: usize, found: usize },

    #[error("{0}")]
    Divisibility(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("digit-linear matrix is not invertible mod {p}")]
    SingularMatrix { p: usize },

    #[error("no most-perfect square found for p={p}, r={r} after {attempts} candidates")]
    NotFound { p: usize, r: u32, attempts: usize },
}
