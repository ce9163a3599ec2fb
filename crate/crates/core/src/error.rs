//! Error type shared across the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A numeric argument is outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The API was called with inconsistent inputs (wrong quantum-number
    /// convention, mismatched grids, ...).
    #[error("usage error: {0}")]
    Usage(String),

    /// The requested bound state does not exist in the search window.
    #[error("no such bound state: {0}")]
    NoBoundState(String),

    /// An iterative procedure ran out of iterations. The message carries
    /// diagnostics (iteration count, last bracket/residual).
    #[error("did not converge: {0}")]
    Convergence(String),

    /// The integrand is too singular at the origin for the state's
    /// centrifugal suppression.
    #[error("not integrable: {0}")]
    Integrability(String),

    /// Both levels of a transition carry the same deformation coefficient,
    /// so no finite bound on the minimal length follows from it.
    #[error("transition insensitive to deformation: {0}")]
    InsensitiveTransition(String),

    /// A tabulated-potential file failed to parse or violates the format
    /// contract (strictly increasing radii, two columns).
    #[error("invalid potential table: {0}")]
    PotentialTable(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
