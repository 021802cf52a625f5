use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("number of sites must be even and at least 2, got {0}")]
    InvalidSystemSize(usize),

    #[error("transverse field must be finite and non-negative, got {0}")]
    InvalidField(f64),

    #[error("coupling must be finite and positive, got {0}")]
    InvalidCoupling(f64),

    #[error("momentum {0} is outside the open interval (0, pi)")]
    MomentumOutOfRange(f64),

    #[error("{what} needs N <= {cap}, got N = {n_sites}")]
    SizeGuard {
        what: &'static str,
        n_sites: usize,
        cap: usize,
    },

    #[error("invalid bin parameters: l_max = {l_max}, delta = {delta}")]
    InvalidBins { l_max: f64, delta: f64 },

    #[error("Renyi index must be positive and different from 1, got {0}")]
    InvalidRenyiIndex(f64),

    #[error("not enough data: need {needed} non-empty bins, found {found}")]
    InsufficientData { needed: usize, found: usize },

    #[error("quadrature did not converge: estimate {estimate}, achieved error {achieved_error:e}")]
    QuadratureNotConverged { estimate: f64, achieved_error: f64 },

    #[error("expectation value has imaginary residue {0:e}")]
    ImaginaryResidue(f64),

    #[error("Pauli string has length {found}, state has {expected} qubits")]
    LengthMismatch { expected: usize, found: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
