use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("relations contain a directed cycle through `{0}`")]
    CycleDetected(String),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("index {index} out of range for poset of size {size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("vector has length {got}, poset has {expected} elements")]
    LengthMismatch { expected: usize, got: usize },
    #[error("brute-force subset enumeration over {size} elements exceeds cap {cap}")]
    BruteSizeExceeded { size: usize, cap: usize },
    #[error("point has zero violation excess, nothing to strip")]
    NoExcess,
    #[error("no unit strip lowers the excess (internal invariant violated)")]
    SearchExhausted,
    #[error("point is not a sum of {0} antichain indicators")]
    NotInSm0(u32),
    #[error("point is not in S({m},{big_m})")]
    NotMember { m: u32, big_m: u32 },
    #[error("|P'| <= m*w(P') + M fails: excess of the all-ones vector is {excess} > {big_m}")]
    HypothesisFails { excess: i64, big_m: u32 },
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("dimension product is not an integer (internal invariant violated)")]
    NonIntegerResult,
    #[error("{what} count {count} exceeds cap {cap}")]
    TooLarge { what: &'static str, count: usize, cap: usize },
    #[error("malformed module vector: {0}")]
    MalformedVector(String),
    #[error("{what} dimension {count} exceeds cap {cap}")]
    CapExceeded { what: &'static str, count: usize, cap: usize },
    #[error("relation violated: {0}")]
    RelationViolated(String),
    #[error("subspace rows are linearly dependent (rank {rank} < {expected})")]
    RankDeficient { rank: usize, expected: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable tag, used by the CLI and the C interface.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::CycleDetected(_) => "CycleDetected",
            Error::UnknownLabel(_) => "UnknownLabel",
            Error::DuplicateLabel(_) => "DuplicateLabel",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::BruteSizeExceeded { .. } => "BruteSizeExceeded",
            Error::NoExcess => "NoExcess",
            Error::SearchExhausted => "SearchExhausted",
            Error::NotInSm0(_) => "NotInSm0",
            Error::NotMember { .. } => "NotMember",
            Error::HypothesisFails { .. } => "HypothesisFails",
            Error::BadParams(_) => "BadParams",
            Error::NonIntegerResult => "NonIntegerResult",
            Error::TooLarge { .. } => "TooLarge",
            Error::MalformedVector(_) => "MalformedVector",
            Error::CapExceeded { .. } => "CapExceeded",
            Error::RelationViolated(_) => "RelationViolated",
            Error::RankDeficient { .. } => "RankDeficient",
            Error::Parse(_) => "Parse",
        }
    }

    /// Malformed input (as opposed to a well-formed query whose answer is an error).
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Parse(_)
                | Error::UnknownLabel(_)
                | Error::DuplicateLabel(_)
                | Error::LengthMismatch { .. }
                | Error::IndexOutOfRange { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
