use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("letter {position} ({letter}) is out of range for genus {genus}, strands {strands}")]
    IndexOutOfRange {
        position: usize,
        letter: String,
        genus: u32,
        strands: u32,
    },

    #[error("ambient mismatch: {0} vs {1}")]
    AmbientMismatch(String, String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("word is not a monoid word: {0}")]
    NotMonoid(String),

    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("resource bound exceeded: {0}")]
    Resource(String),

    #[error("operator rejected: {0}")]
    Operator(String),

    #[error("io: {0}")]
    Io(String),
}

impl Error {
    /// Whether the error comes from a resource guard rather than bad input.
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::Resource(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
