use thiserror::Error;

/// Errors raised by geometric constructions and checks.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("degenerate lune: hemispheres coincide or are opposite")]
    DegenerateLune,
    #[error("bad configuration: {0}")]
    BadConfiguration(String),
    #[error("points do not lie in a common open hemisphere")]
    NoHemisphere,
    #[error("degenerate hull: fewer than 3 vertices")]
    Degenerate,
    #[error("point is not on the body boundary (residual {0:.3e})")]
    NotOnBoundary(f64),
    #[error("hemisphere does not support the body (min x·k = {0:.3e})")]
    NotSupporting(f64),
    #[error("body has empty interior")]
    EmptyInterior,
    #[error("body is not of constant diameter (spread {0:.3e})")]
    NotConstantDiameter(f64),
    #[error("point is not on the polar boundary (residual {0:.3e})")]
    NotOnPolarBoundary(f64),
    #[error("no solution: {0}")]
    NoSolution(String),
    #[error("precondition violated: {0}")]
    PrecondViolation(String),
    #[error("generation failed after {attempts} attempts: {log}")]
    GenerationFailed { attempts: usize, log: String },
    #[error("invalid body: {0}")]
    InvalidBody(String),
}

pub type Result<T> = std::result::Result<T, Error>;
