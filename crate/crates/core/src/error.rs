use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("syntax error at slice {slice}, token {token}: {msg}")]
    Syntax { slice: usize, token: usize, msg: String },
    #[error("arity mismatch at slice {slice}: {msg}")]
    Arity { slice: usize, msg: String },
    #[error("orientation mismatch at slice {slice}: {msg}")]
    Orientation { slice: usize, msg: String },
    #[error("boundary mismatch: {0}")]
    Boundary(String),
    #[error("inconsistent coloring: {0}")]
    Coloring(String),
    #[error("inadmissible coloring: {0}")]
    Inadmissible(String),
    #[error("log data: {0}")]
    LogData(String),
    #[error("unreachable log-decoration: {0}")]
    Unreachable(String),
    #[error("special function: {0}")]
    Domain(String),
    #[error("pole of the quantum dilogarithm near {0}")]
    Pole(String),
    #[error("operator is not scalar (residual {residual:e})")]
    NotScalar { residual: f64 },
    #[error("resource limit: {0}")]
    Resource(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
