use thiserror::Error;

/// Errors raised by section construction, evaluation and the verification harness.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum LejaError {
    #[error("index must be positive, got 0")]
    ZeroIndex,
    #[error("binary expansion of {0} has a single term; at least two are required")]
    SingleTermExpansion(u64),
    #[error("angle {numerator}/2^{log_denominator} exceeds the supported dyadic precision")]
    AngleOutOfRange { numerator: u64, log_denominator: u32 },
    #[error("section is empty")]
    EmptySection,
    #[error("nodes {0} and {1} coincide")]
    DuplicateNode(usize, usize),
    #[error("node {0} is not angle-backed")]
    NotAngleBacked(usize),
    #[error("section length {0} is not even")]
    OddLength(usize),
    #[error("symmetry relation `{relation}` fails at index {index}")]
    SymmetryViolation { relation: &'static str, index: usize },
    #[error("candidate set needs at least two distinct points, got {0}")]
    TooFewCandidates(usize),
    #[error("seed ({re}, {im}) is not one of the candidate points")]
    SeedNotCandidate { re: f64, im: f64 },
    #[error("every candidate coincides with an existing node")]
    CandidatesExhausted,
    #[error("expected {expected} samples, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
}

pub type Result<T, E = LejaError> = std::result::Result<T, E>;
