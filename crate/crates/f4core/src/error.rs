use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("root set is not closed")]
    NotClosed,
    #[error("class matching ambiguous: {0}")]
    ClassMatchAmbiguous(String),
    #[error("non-cyclotomic factor in {0}")]
    NonCyclotomicFactor(String),
    #[error("Molien series did not resolve: {0}")]
    MolienExtractionFailure(String),
    #[error("Jacobi identity fails: {0}")]
    JacobiFailure(String),
    #[error("no twist found for e={0}")]
    NoTwistFound(u32),
    #[error("subsystem not matched: {0}")]
    UnmatchedSubsystem(String),
    #[error("unknown group {0}")]
    UnknownGroup(String),
    #[error("no suitable prime for Dixon's method below {0}")]
    PrimeSearchFailure(u64),
    #[error("unsupported type {0}")]
    UnsupportedType(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{file}:{line}: {msg}")]
    Data { file: String, line: usize, msg: String },
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
