use std::path::PathBuf;

use crate::generator::Codebook;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid edit profile: {0}")]
    InvalidProfile(String),

    #[error("edit quota lattice needs {required} bits, more than the supported {max}")]
    Capacity { required: usize, max: usize },

    #[error("{what} out of range: {detail}")]
    OutOfRange { what: &'static str, detail: String },

    #[error("byte {byte:?} at position {position} is not one of A, C, G, T")]
    Alphabet { byte: char, position: usize },

    #[error("incremental extension must start at {expected}, got {got}")]
    IncrementalContract { expected: usize, got: usize },

    #[error("sequence pair state has unequal consumed lengths ({0} vs {1})")]
    UnequalLength(usize, usize),

    #[error("brute-force enumeration refuses inputs longer than {max} (got {len})")]
    SizeGuard { len: usize, max: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("constraint spec admits no candidate suffix for context {context:?}")]
    InfeasibleConstraints { context: String },

    #[error("no zero-loss codebook after {steps} steps (total loss {loss})")]
    NonConvergence {
        steps: usize,
        loss: u64,
        partial: Box<Codebook>,
    },

    #[error("unsupported codebook format version {found} (expected {expected})")]
    VersionMismatch { found: u32, expected: u32 },

    #[error("malformed codebook file {path}: {reason}")]
    MalformedFile { path: PathBuf, reason: String },

    #[error("codebook invariant violated: {0}")]
    InvariantViolation(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
