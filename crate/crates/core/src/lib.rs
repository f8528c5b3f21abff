//! Construction of DNA codebooks that survive a budget of substitutions,
//! insertions and deletions.
//!
//! Pairs of codewords are checked with a banded dynamic program whose cells
//! are bit sets of feasible edit counts ([`ecg`]); codebooks are grown by
//! Monte-Carlo selection among constrained suffixes ([`generator`]).
//!
//! ```
//! use std::sync::Arc;
//! use ids_codebook::{ecg, EditProfile};
//!
//! let profile = Arc::new(EditProfile::parse("sub,ins,del", "1,1,1").unwrap());
//! let state = ecg::run_pair(profile, b"AGC", b"AGG").unwrap();
//! assert_eq!(state.terminal_fecs().len(), 2);
//! ```

pub mod alphabet;
pub mod cli;
pub mod codebook_io;
pub mod constraints;
pub mod ecg;
pub mod edit_model;
pub mod error;
pub mod fec_bitset;
pub mod generator;
pub mod oracle;

pub use constraints::{generate_candidates, ConstraintSpec};
pub use ecg::EcgPairState;
pub use edit_model::{Edge, EditKind, EditOp, EditProfile, ErrorSpec, FecTuple};
pub use error::{Error, Result};
pub use fec_bitset::FecSet;
pub use generator::{grow_codebook, CheckSpec, Codebook, GenerationConfig};
