use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("face has {got} vertices, expected {expected}")]
    Arity { got: usize, expected: usize },

    #[error("{what} out of range: {value} not in {lo}..={hi}")]
    Range {
        what: &'static str,
        value: usize,
        lo: usize,
        hi: usize,
    },

    #[error("vertex labels must be strictly increasing")]
    NotIncreasing,

    #[error("labeling is not a bijection of 1..={n}")]
    NotBijective { n: usize },

    #[error("operation requires a pure complex, but a maximal face of dimension {found} != {expected} exists")]
    NotPure { found: usize, expected: usize },

    #[error("{what} exceeds the configured cap: {value} > {cap} (raise with --cap)")]
    Capacity {
        what: &'static str,
        value: usize,
        cap: usize,
    },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
