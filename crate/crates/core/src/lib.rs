//! Exact t-Plancherel averages of hook-length and content statistics.
//!
//! The crate is organised bottom-up:
//!
//! - [`partition`]: partitions, cells, hook lengths, contents, enumeration
//!   and a brute-force tableau counter.
//! - [`boundary`]: the balanced 01-sequence of a partition boundary.
//! - [`littlewood`]: t-hooks, t-cores, t-quotients and core offsets.
//! - [`stats`]: corner contents, `q_k`, residue power sums and single-box
//!   increment formulas.
//! - [`walks`]: hook-walk counts `F_{λ/μ}`, weights `G_λ` and layer
//!   enumeration.
//! - [`operators`]: the difference operator `D_t`, t-Plancherel averages and
//!   polynomiality certificates.
//! - [`verify`]: named verification suites with deterministic reports.

pub mod boundary;
pub mod error;
pub mod littlewood;
pub mod operators;
pub mod partition;
pub mod rational;
pub mod stats;
pub mod verify;
pub mod walks;

pub use boundary::BoundarySequence;
pub use error::{Error, Result};
pub use littlewood::{CoreOffsets, LittlewoodDecomposition};
pub use partition::{CellStat, Partition};
pub use rational::ExactRational;
pub use stats::{StatKind, StatSpec};
