use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed matrix at row {row}, column {col}: {reason}")]
    MalformedMatrix {
        row: usize,
        col: usize,
        reason: String,
    },

    #[error("birack file line {line}: {reason}")]
    BirackFormat { line: usize, reason: String },

    #[error("structure fails axioms: {}", .failed.join(", "))]
    AxiomFailure { failed: Vec<String> },

    #[error("parameter condition violated: {0}")]
    ParameterCondition(String),

    #[error("seed set is empty")]
    EmptySeed,

    #[error("element {0} is out of range")]
    ElementOutOfRange(usize),

    #[error("subset is not closed under the birack operations")]
    NotClosed,

    #[error("enumeration requires at least one element")]
    EmptyEnumeration,

    #[error("diagram line {line}: {reason}")]
    DiagramParse { line: usize, reason: String },

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("unknown builtin diagram `{0}`")]
    UnknownBuiltin(String),

    #[error("component {index} out of range (diagram has {count})")]
    BadComponent { index: usize, count: usize },

    #[error("move {kind} does not match at semiarc {site}")]
    NoMatch { kind: String, site: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;
