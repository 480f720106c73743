use thiserror::Error;

/// Errors produced by the identification library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("cell state {state} is not in the alphabet {alphabet}")]
    AlphabetMismatch { state: i16, alphabet: String },

    #[error("trace must contain at least {required} lattice steps, got {got}")]
    TooFewSteps { required: usize, got: usize },

    #[error("window of radius {radius} does not fit in lattice extent {extent}")]
    WindowTooLarge { radius: u32, extent: usize },

    #[error("unknown attribute: {0}")]
    UnknownAttribute(String),

    #[error("derived attribute requires offsets {0} in the table")]
    MissingOffsets(String),

    #[error("operation requires a binary alphabet, got {0}")]
    NonBinaryAlphabet(String),

    #[error("no reduct found within the size cap")]
    NoReductFound,

    #[error("decision table has conflicting observations (equal conditions, different decisions); {0}")]
    InconsistentInput(String),

    #[error("no rule matches cell {cell} with neighborhood pattern {pattern}")]
    NoMatchingRule { cell: usize, pattern: String },

    #[error("rule premise matches no observation; certainty is undefined")]
    NoMatch,

    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, col: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            col,
            msg: msg.into(),
        }
    }
}
