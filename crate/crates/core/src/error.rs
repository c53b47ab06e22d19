use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ground set must contain at least one element")]
    EmptyGroundSet,
    #[error("ground set has {0} elements; at most {max} are supported", max = crate::MAX_ELEMENTS)]
    TooManyElements(usize),
    #[error("invalid element label {0:?}")]
    InvalidLabel(String),
    #[error("duplicate element label {0:?}")]
    DuplicateLabel(String),
    #[error("unknown element label {0:?}")]
    UnknownLabel(String),
    #[error("relation is empty")]
    EmptyRelation,
    #[error("relations are defined over different ground sets")]
    GroundSetMismatch,
    #[error("not a partial order: {0}")]
    NotPartialOrder(String),
    #[error("not a linear order: {0}")]
    NotLinearOrder(String),
    #[error("partial orders are not conjugate: {0}")]
    NotConjugate(String),
    #[error("expected at least one {0}")]
    EmptyList(&'static str),
    #[error("linear orders do not realize the target: {0}")]
    NotARealizer(String),
    #[error("invalid sequence of recursive partial-conjugates: {0}")]
    InvalidSequence(String),
    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),
    #[error("corpus size {requested} exceeds the cap of {cap}")]
    CapExceeded { requested: usize, cap: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
