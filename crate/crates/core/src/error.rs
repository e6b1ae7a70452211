use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cannot parse token `{0}`")]
    Parse(String),
    #[error("letter {letter} is not in the {alphabet} alphabet")]
    LetterOutsideAlphabet { letter: String, alphabet: String },
    #[error("index out of range: {0}")]
    Index(String),
    #[error("strand count mismatch: {0} vs {1}")]
    StrandMismatch(usize, usize),
    #[error("word length budget of {0} letters exceeded")]
    LengthBudget(usize),
    #[error("braid is not pure")]
    NotPure,
    #[error("transvection exponent sum {0} is neither 0 nor -2")]
    TransvectionSum(i64),
    #[error("invalid parameters: {0}")]
    Params(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
