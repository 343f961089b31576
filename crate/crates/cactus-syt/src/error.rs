use num_bigint::BigUint;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    /// The state space of an operation exceeds its configured cap. Callers
    /// that can fall back to counting-only paths should catch this.
    #[error("{what} needs {required} states but the cap is {cap}")]
    CapExceeded {
        what: &'static str,
        required: BigUint,
        cap: u64,
    },

    #[error("tableau index {index} out of range (shape has {len} tableaux)")]
    IndexOutOfRange { index: u64, len: u64 },

    #[error("generator t{index} out of range for n = {n}")]
    GeneratorOutOfRange { index: usize, n: usize },

    #[error("invalid interval [{lo}, {hi}] for n = {n}")]
    InvalidInterval { lo: usize, hi: usize, n: usize },

    #[error("expected hook-shaped partitions, got {0}")]
    NotHookShaped(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("cannot parse {what}: {detail}")]
    Parse { what: &'static str, detail: String },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error(transparent)]
    Io(#[from] IoError),
}

/// `std::io::Error` is neither `Clone` nor `PartialEq`; wrap its display form.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{0}")]
pub struct IoError(pub String);

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(IoError(e.to_string()))
    }
}
