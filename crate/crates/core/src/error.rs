use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    /// The Dirichlet series does not converge absolutely at the requested point.
    #[error("series diverges: Re(s) = {sigma} must exceed {threshold}")]
    Divergence { sigma: f64, threshold: f64 },

    #[error("no coefficient data for prime ideal above {prime} (index {index})")]
    Coverage { prime: u64, index: u8 },

    #[error("pole: {0}")]
    Pole(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// The case inequality admits no contradiction for the chosen sigma constant.
    #[error("no contradiction: denominator {denominator} is not positive")]
    NoContradiction { denominator: f64 },

    #[error("configuration error: {0}")]
    Config(String),

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
