use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("letters must be positive (found 0)")]
    ZeroLetter,

    #[error("letter {letter} outside alphabet [{alphabet}]")]
    LetterOutOfRange { letter: u32, alphabet: usize },

    #[error("operation requires a nonempty word")]
    EmptyWord,

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("vertex cap exceeded: instance needs {required} vertices, cap is {cap}")]
    VertexCapExceeded { required: usize, cap: usize },

    #[error("member of length {length} exceeds the target length {n}")]
    MemberTooLong { length: usize, n: usize },

    #[error("expected words of length {expected}, found length {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("word {0} is not a pattern")]
    NotAPattern(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("circuit is not Hamiltonian: {0}")]
    NotHamiltonian(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
