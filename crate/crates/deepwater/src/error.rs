use thiserror::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, SolverError>;

/// Error type shared by all solver operations.
#[derive(Debug, Error)]
pub enum SolverError {
    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    #[error("grid mismatch: {0}")]
    GridMismatch(String),

    /// The inverse transform produced an imaginary residue above its bound,
    /// which means some multiplier broke the realness of the field.
    #[error("imaginary residue {residue:.3e} exceeds bound {bound:.3e}")]
    SymmetryViolation { residue: f64, bound: f64 },

    /// Blow-up detection: a step produced NaN or infinite values.
    #[error("non-finite values in {context} at t = {time}")]
    NonFinite { context: &'static str, time: f64 },

    #[error("CFL violation: lambda = {lambda:.4} (must be < 1)")]
    CflViolation { lambda: f64 },

    #[error("fixed-point iteration did not converge within {0} iterations")]
    NoConvergence(usize),

    #[error("unknown kind `{0}`")]
    UnknownKind(String),

    #[error("insufficient points: {0}")]
    InsufficientPoints(String),
}
