use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid edge ({u}, {v}): {reason}")]
    InvalidEdge { u: usize, v: usize, reason: &'static str },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph must have at least one vertex")]
    EmptyGraph,

    #[error("graph has {0} vertices; at most {max} are supported", max = crate::MAX_VERTICES)]
    TooManyVertices(usize),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("profile must be nonempty")]
    EmptyProfile,

    #[error("graph has {n} vertices, above the enumeration cap of {cap}")]
    TooLarge { n: usize, cap: usize },

    #[error("graph is not a unique-eccentric-vertex graph")]
    NotUev,

    #[error("graph is not a block graph")]
    NotBlockGraph,

    #[error("graph is not symmetric even")]
    NotSymmetricEven,

    #[error("set is not dominating")]
    NotDominating,

    #[error("graph does not match class {0}")]
    ClassMismatch(String),

    #[error("bad parameters: {0}")]
    BadParams(String),

    #[error("graph generation failed after {0} attempts")]
    GenerationFailed(usize),

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("counterexample: {0}")]
    Counterexample(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Stable machine-readable name used in CLI error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidEdge { .. } => "InvalidEdge",
            Error::Disconnected => "Disconnected",
            Error::EmptyGraph => "EmptyGraph",
            Error::TooManyVertices(_) => "TooManyVertices",
            Error::InvalidVertex { .. } => "InvalidVertex",
            Error::EmptyProfile => "EmptyProfile",
            Error::TooLarge { .. } => "TooLarge",
            Error::NotUev => "NotUEV",
            Error::NotBlockGraph => "NotBlockGraph",
            Error::NotSymmetricEven => "NotSymmetricEven",
            Error::NotDominating => "NotDominating",
            Error::ClassMismatch(_) => "ClassMismatch",
            Error::BadParams(_) => "BadParams",
            Error::GenerationFailed(_) => "GenerationFailed",
            Error::Overflow(_) => "Overflow",
            Error::Parse { .. } => "Parse",
            Error::Counterexample(_) => "Counterexample",
            Error::Io(_) => "Io",
        }
    }
}
