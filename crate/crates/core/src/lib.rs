//! Exact combinatorics for Littlewood polynomials.
//!
//! A Littlewood polynomial of length `n` is `f(z) = a_0 + a_1 z + ... + a_{n-1} z^{n-1}`
//! with every `a_j` in `{+1, -1}`. This crate computes aperiodic
//! autocorrelations, `||f||_4^4` and merit factors exactly, and checks the
//! closed-form mean and variance of `||f||_4^4` over four classes of such
//! polynomials (all, skew-symmetric, reciprocal, negative reciprocal)
//! against exhaustive enumeration, Monte Carlo sampling and exact rational
//! evaluation.
//!
//! ```
//! use littlewood::{norms, BinarySequence};
//!
//! let seq: BinarySequence = "+++-".parse().unwrap();
//! let report = norms::l4_report(&seq);
//! assert_eq!(report.norm4_fourth, 20);
//! assert_eq!(report.merit_factor.unwrap().to_string(), "4");
//! ```

pub mod cli;
pub mod closedform;
mod error;
pub mod extremal;
pub mod moments;
pub mod norms;
pub mod parallel;
pub mod rational;
pub mod seqcore;

pub use error::{Error, Result};
pub use rational::ExactRational;
pub use seqcore::{BinarySequence, ClassKind, ClassSpec, EnumerationRange};

/// Crate version embedded in every emitted report.
pub const VERSION: &str = concat!("littlewood ", env!("CARGO_PKG_VERSION"));
