use thiserror::Error;

/// Errors raised by the k-tree generator, theory tables and analyses.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("invalid retention fraction b={b}: {reason}")]
    InvalidB { b: f64, reason: String },

    #[error("resource exhausted: need about {required} bytes, budget is {budget} bytes")]
    ResourceExhausted { required: u64, budget: u64 },

    #[error("graph carries no attachment history: {0}")]
    MissingHistory(String),

    #[error("degree {d} is below the minimum degree k={k}")]
    DegreeBelowK { k: usize, d: usize },

    #[error(
        "d_max={d_max} too small: overflow mass {overflow:.6e} exceeds tolerance {tolerance:.6e}"
    )]
    DmaxTooSmall {
        d_max: usize,
        overflow: f64,
        tolerance: f64,
    },

    #[error("graph too large for brute force: n={n} exceeds limit {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("k mismatch: histogram has k={histogram}, theory has k={theory}")]
    KMismatch { histogram: usize, theory: usize },

    #[error(
        "insufficient tail: {distinct} distinct degrees >= d_min={d_min}, need at least {required}"
    )]
    InsufficientTail {
        d_min: usize,
        distinct: usize,
        required: usize,
    },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
