//! Exact construction and verification of invariants of the classical Lie
//! superalgebras `gl(m|n)`, `osp(m|2n)`, `q(n)` and `p(n)`.
//!
//! Central elements are built from Schur-Weyl and Brauer data, checked for
//! centrality, and pushed through the Harish-Chandra projection. All
//! arithmetic is exact over the Gaussian rationals.

pub mod error;
pub mod exact;
pub mod signs;
pub mod superlinalg;
pub mod liealg;
pub mod freealg;
pub mod enveloping;
pub mod brauer;
pub mod schurweyl;
pub mod cli;

pub use error::{Error, Result};
pub use exact::{Rational, Scalar};
