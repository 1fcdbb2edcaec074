use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Bad caller-supplied data: out-of-range vertex, bad family parameter, etc.
    #[error("input error: {0}")]
    Input(String),

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    /// The graph has an isolated vertex, so no double dominating set exists.
    #[error("graph has an isolated vertex ({vertex}); no double dominating set exists")]
    NoDds { vertex: usize },

    #[error("resource limit: {0}")]
    ResourceLimit(String),

    /// A closed form was asked for outside the range it is proven on.
    #[error("closed form not applicable: {0}")]
    NotApplicable(String),

    #[error("structural error: {0}")]
    Structural(String),

    /// An internal invariant failed. Always a bug (or a counterexample).
    #[error("contract violation: {0}")]
    Contract(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
