use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Two segments share more than one point.
    #[error("segments overlap in more than one point")]
    Overlap,
    #[error("point set is not in general position")]
    NotGeneralPosition,
    #[error("expected {expected} points, got {got}")]
    WrongSize { expected: usize, got: usize },
    /// The structural lemma about C_3 did not hold. Always an implementation bug.
    #[error("lemma violation: {0}")]
    LemmaViolation(String),
    #[error("points collinear with the center: {0}")]
    Collinear(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("unexpected structure: {0}")]
    Structure(String),
    #[error("no covering triple of half-planes found around point {0}")]
    NoCover(usize),
    #[error("depth region is not a single input point: {0}")]
    NotCase4(String),
    #[error("partition has the wrong shape: {0}")]
    Shape(String),
    #[error("generator exhausted its retry budget: {0}")]
    Exhaustion(String),
    /// A constructed partition was rejected by the brute-force oracle.
    #[error("oracle rejected constructed partition {0}")]
    Validation(String),
    #[error("parse error at {at}: {msg}")]
    Parse { at: String, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
