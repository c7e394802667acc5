use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum FqError {
    #[error("singular matrix (smallest singular value {sigma_min:.3e})")]
    SingularMatrix { sigma_min: f64 },
    #[error("domain violation in {context}: eigenvalue {re:.3e}{im:+.3e}i is within {tol:.1e} of the branch cut")]
    DomainViolation { context: &'static str, re: f64, im: f64, tol: f64 },
    #[error("quadrature did not converge: doubling {nodes} nodes changed the result by {change:.3e}")]
    NonConvergence { nodes: usize, change: f64 },
    #[error("no admissible sample after {0} retries")]
    SamplingExhausted(usize),
    #[error("coefficient {index} does not commute with the Clifford base")]
    CoefficientOutOfSector { index: usize },
    #[error("pair is not monoaxial (|B - I| = {0:.3e})")]
    NotMonoaxial(f64),
    #[error("calibration ambiguous: {0} assignments match the anchors")]
    CalibrationAmbiguous(usize),
    #[error("calibration failed: no assignment matches the anchors")]
    CalibrationFailed,
    #[error("probes are degenerate: {0}")]
    ProbeDegenerate(String),
    #[error("extraction failed: {0}")]
    ExtractionFailure(String),
    #[error("invalid configuration: {0}")]
    ConfigInvalid(String),
    #[error("non-finite matrix entries in {0}")]
    NonFinite(&'static str),
}

pub type Result<T> = std::result::Result<T, FqError>;
