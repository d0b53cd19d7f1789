use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
    #[error("method `{method}` does not apply: {reason}")]
    MethodMismatch { method: String, reason: String },
    #[error("oracle needs n <= {bound}, instance has n = {n}")]
    BoundExceeded { n: usize, bound: usize },
    #[error("solver error: {0}")]
    Solver(String),
    #[error("self-check failed: {0}")]
    SelfCheck(String),
}

impl CliError {
    /// 1 for usage and input problems, 3 when an exact search is out of range.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::BoundExceeded { .. } => 3,
            _ => 1,
        }
    }
}
