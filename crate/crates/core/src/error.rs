use num_complex::Complex64;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("range error: {0}")]
    Range(String),

    #[error("at pole: matching Wronskian vanishes at k = {k}")]
    AtPole { k: Complex64 },

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("no resonance regime: eta = a sqrt(v0) = {eta} <= pi/2")]
    NoResonanceRegime { eta: f64 },

    #[error("parity error: m = {m} has the wrong parity for n_inf = {n_inf} (n = n_inf + m must be odd)")]
    Parity { m: u32, n_inf: u32 },

    #[error("outside approximation domain: {0}")]
    ApproximationDomain(String),

    #[error("Newton iteration did not converge after {iterations} steps: {reason}")]
    NonConvergence {
        iterations: usize,
        reason: String,
        trace: Vec<Complex64>,
    },

    #[error("transformation function has nodes at r = {radii:?}")]
    Node { radii: Vec<f64> },

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("ambiguous asymptotic tail: {0}")]
    Classification(String),

    #[error("invalid input: {0}")]
    Input(String),
}

impl Error {
    /// Errors caused by the request itself rather than by a numerical failure.
    pub fn is_domain(&self) -> bool {
        !matches!(
            self,
            Error::NonConvergence { .. } | Error::Classification(_)
        )
    }
}
