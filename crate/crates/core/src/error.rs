use crate::radial::RadialReport;
use crate::scalar::Scalar;

/// Errors from the numerical operations.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("multi-index degree {degree} exceeds bound {bound}")]
    DegreeExceedsBound { degree: u32, bound: u32 },
    #[error("empty point set")]
    EmptyPointSet,
    #[error("non-finite sample value at grid index {index}")]
    NonFiniteSample { index: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),
    #[error("matrix is not orthogonal: {0}")]
    NotOrthogonal(&'static str),
}

/// Rejection raised when a radial-only operation receives a non-radial
/// input. Carries the full report so callers can surface the diagnosis.
#[derive(Debug)]
pub struct NotRadial<R: Scalar>(pub RadialReport<R>);

impl<R: Scalar> std::fmt::Display for NotRadial<R> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let worst_shell = self
            .0
            .shell_deviations
            .iter()
            .cloned()
            .fold(R::zero(), R::max);
        write!(
            f,
            "input is not radial (odd mass {:.3e}, worst shell deviation {:.3e}, tol {:.3e})",
            self.0.odd_mass, worst_shell, self.0.tol
        )
    }
}

impl<R: Scalar> std::error::Error for NotRadial<R> {}
