use thiserror::Error;

/// Errors shared across the library.
///
/// `DivergentIntegral` is not a failure of the caller: it marks the
/// anti-Kahler region where no normalizable polarized sections exist, and
/// callers are expected to branch on it.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("Hamiltonian is not hyperbolic: det Hess = {disc} >= 0")]
    NonHyperbolic { disc: f64 },
    #[error("h11 = 0: the flow preserves the vertical polarization and the transform is the identity")]
    ZeroH11,
    #[error("time {t} outside the admissible range [0, {limit})")]
    OutOfRange { t: f64, limit: f64 },
    #[error("Gaussian integral diverges (non-normalizable section)")]
    DivergentIntegral,
    #[error("semigroup ansatz degenerates at this time (sin(theta + alpha t) ~ 0)")]
    SingularTime,
    #[error("quadrature refinement stalled: estimated error {estimate} > rel_tol {rel_tol}")]
    ToleranceNotMet { estimate: f64, rel_tol: f64 },
    #[error("width parameter blew up along the trajectory (|b| > {bound})")]
    BlowUp { bound: f64 },
    #[error("half-form frames are not proportional; no constant Jacobian exists")]
    NonProportionalFrames,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
