use thiserror::Error;

/// Errors raised by the library.
///
/// The variants are grouped so that the command line front end can map
/// them onto exit codes: input problems, unmet hypotheses, enumeration caps
/// and internal inconsistencies.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("zero vector has no content")]
    ZeroVector,
    #[error("vectors not independent")]
    Dependent,
    #[error("vector is not primitive: {0}")]
    NotPrimitive(String),
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("unsupported rank {0}")]
    UnsupportedRank(usize),
    #[error("invalid continued fraction data: alpha={alpha}, beta={beta}")]
    InvalidFraction { alpha: String, beta: String },
    #[error("invalid cone: {0}")]
    InvalidCone(String),
    #[error("empty support")]
    EmptySupport,
    #[error("vector {0} does not lie in the cone")]
    NotInCone(String),
    #[error("not a face of the cone: {0}")]
    NotAFace(String),
    #[error("degenerate polygon: {0}")]
    DegeneratePolygon(String),
    #[error("polygon has interior lattice points")]
    InteriorPoints,
    #[error("intersection form is singular")]
    SingularForm,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("input error: {0}")]
    Input(String),
    #[error("hypothesis not met: {0}")]
    Hypothesis(String),
    #[error("enumeration cap exceeded: {0}")]
    EnumerationCap(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    /// Short machine readable code used in reports.
    pub fn code(&self) -> &'static str {
        match self {
            Error::ZeroVector
            | Error::Dependent
            | Error::NotPrimitive(_)
            | Error::RankMismatch { .. }
            | Error::UnsupportedRank(_)
            | Error::InvalidFraction { .. }
            | Error::InvalidCone(_)
            | Error::EmptySupport
            | Error::NotInCone(_)
            | Error::NotAFace(_)
            | Error::DegeneratePolygon(_)
            | Error::InvalidArgument(_)
            | Error::Input(_) => "input",
            Error::InteriorPoints | Error::SingularForm | Error::Hypothesis(_) => "hypothesis",
            Error::EnumerationCap(_) => "enumeration_cap",
            Error::Internal(_) => "internal",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
