use thiserror::Error;

/// Errors produced by the library.
///
/// The variants map onto the CLI exit codes: invalid input is a validation
/// failure (exit 1), instability and non-convergence are numerical failures
/// (exit 2), and I/O errors are exit 3.
#[derive(Debug, Error)]
pub enum Error {
    /// A precondition on an argument was violated.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A self-check detected that a computed value cannot be trusted
    /// (truncation drift, node-doubling disagreement, imaginary residue).
    #[error("numerical instability: {0}")]
    Instability(String),

    /// An iteration failed to converge. This signals a defect in the
    /// algorithm or its tuning, not a bad input.
    #[error("iteration failed to converge: {0}")]
    Convergence(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code for the CLI front-end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidInput(_) => 1,
            Error::Instability(_) | Error::Convergence(_) => 2,
            Error::Io(_) => 3,
        }
    }
}
