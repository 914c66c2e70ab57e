use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("line {line}: vertex `{label}` appears more than once")]
    DuplicateVertex { line: usize, label: String },

    #[error("input contains no facets")]
    EmptyInput,

    #[error("input is not valid UTF-8")]
    Encoding,

    #[error("{0} is not a simplex of the complex")]
    NotASimplex(String),

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("label `{0}` is already a vertex of the complex")]
    LabelCollision(String),

    #[error("invalid label `{0}`: labels must be non-empty and contain no whitespace")]
    InvalidLabel(String),

    #[error("cannot draw {requested} distinct facets: only {available} exist")]
    Infeasible { requested: u64, available: u64 },

    #[error("unknown corpus complex `{name}` (available: {})", .valid.join(", "))]
    UnknownCorpus {
        name: String,
        valid: Vec<&'static str>,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
