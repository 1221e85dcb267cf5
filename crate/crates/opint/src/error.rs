use thiserror::Error;

/// Errors raised by the numerical core.
#[derive(Debug, Error)]
pub enum OpintError {
    #[error("dimension mismatch: {context} (expected {expected}, got {got})")]
    Dimension {
        context: &'static str,
        expected: usize,
        got: usize,
    },

    #[error(
        "matrix is not Hermitian: anti-Hermitian part has Frobenius norm {correction:.3e}, \
         above the accepted bound {bound:.3e}"
    )]
    NotHermitian { correction: f64, bound: f64 },

    #[error("matrix entries must be finite")]
    NonFiniteEntries,

    #[error(
        "eigensolver failed to converge on a {dim}x{dim} Hermitian matrix \
         (Frobenius norm {norm:.3e}) after {iterations} implicit QL sweeps"
    )]
    EigenNoConvergence {
        dim: usize,
        norm: f64,
        iterations: usize,
    },

    #[error("symbol `{symbol}` is undefined (non-finite) at eigenvalue {eigenvalue}")]
    SymbolDomain { symbol: String, eigenvalue: f64 },

    #[error(
        "symbol `{symbol}` cannot supply derivative order {needed}: \
         its exact derivatives stop at order {max_order}"
    )]
    SymbolCapability {
        symbol: String,
        needed: usize,
        max_order: usize,
    },

    #[error("Schatten exponent must satisfy p >= 1, got {p}")]
    InvalidExponent { p: f64 },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("malformed matrix file: {0}")]
    MatrixFormat(String),
}

pub type Result<T> = std::result::Result<T, OpintError>;
