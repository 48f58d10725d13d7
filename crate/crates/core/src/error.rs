use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input: JSON, polynomial text, matrix dimensions.
    #[error("parse error: {0}")]
    Parse(String),

    /// A well-formed input that lies outside the supported domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// The input is not homogeneous for the multigrading.
    #[error("not homogeneous: {0}")]
    NotHomogeneous(String),

    /// The relevant facets of a complex do not all have the same dimension.
    #[error("complex is not equidimensional: {0}")]
    Equidimensionality(String),

    /// A lemma's hypothesis failed, e.g. the mapping cone cannot shorten.
    #[error("obstruction: {0}")]
    Obstruction(String),

    /// A documented precondition of an operation does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A computed object contradicts a proven statement. Always a bug or bad data.
    #[error("theorem contradiction: {0}")]
    Contradiction(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Exit code used by the command line tool.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Obstruction(_) => 2,
            Error::Precondition(_) | Error::Equidimensionality(_) => 3,
            Error::Contradiction(_) => 4,
            _ => 1,
        }
    }
}
