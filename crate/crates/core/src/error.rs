use std::fmt;

use thiserror::Error;

/// Malformed textual input. `position` is a human-readable location such as
/// `line 3, column 2` when one is known.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub message: String,
    pub position: Option<String>,
}

impl ParseError {
    pub fn new(message: impl Into<String>) -> Self {
        ParseError { message: message.into(), position: None }
    }

    pub fn at(mut self, position: impl Into<String>) -> Self {
        self.position = Some(position.into());
        self
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.position {
            Some(pos) => write!(f, "{pos}: {}", self.message),
            None => f.write_str(&self.message),
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Error)]
pub enum TetraError {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("unsupported matrix size {rows}x{cols}; tropical determinants are computed for square sides 2 to 4")]
    UnsupportedSize { rows: usize, cols: usize },

    #[error("matrix is not a Kleene star: {0}")]
    NotKleene(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("points coincide projectively; no line through them")]
    DegenerateLine,

    #[error("index error: {0}")]
    Index(String),

    #[error("tropical Pluecker relation violated: {0}")]
    Pluecker(String),

    #[error("vertex formula inconsistent with the rank-2 membership test: {0}")]
    FormulaInconsistency(String),

    #[error("line {0} is a tetrapod and has no bounded edge")]
    NoEdge(String),

    #[error("span is not maximal: {0}")]
    NonMaximal(String),

    #[error("facet construction failed: {0}")]
    Construction(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),

    #[error("invalid family parameters: {0}")]
    Parameter(String),

    #[error("unknown registry matrix {0:?}")]
    UnknownMatrix(String),
}

pub type Result<T, E = TetraError> = std::result::Result<T, E>;
