use thiserror::Error;

/// Errors raised by the conversions and their input checks.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),
    #[error("letter `{0}` is not in the alphabet")]
    UnknownLetter(String),
    #[error("letter index {0} is out of range for an alphabet of size {1}")]
    LetterOutOfRange(usize, usize),
    #[error("state {0} is out of range ({1} states)")]
    StateOutOfRange(usize, usize),
    #[error("alphabets differ")]
    AlphabetMismatch,
    #[error("automaton is not complete; call `complete` first")]
    Incomplete,
    #[error("automaton is not unary: {0}")]
    NotUnary(String),
    #[error("language is not prefix-free: `{0}` is a prefix of `{1}`")]
    NotPrefixFree(String, String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid grammar: {0}")]
    InvalidGrammar(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("limit exceeded: {0}")]
    LimitExceeded(String),
    #[error("internal error: {0}")]
    Internal(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
