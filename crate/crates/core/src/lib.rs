//! Pretentious-distance machinery for automorphic L-function data: truncated
//! Euler sums with tail bounds, the distance D_σ and its D* variant, gamma
//! factors and analytic conductors, the Hadamard-product upper bound, and the
//! constants behind the zero-free regions.

pub mod archimedean;
pub mod arithmetic;
pub mod cli;
pub mod conductor;
pub mod error;
pub mod eulersum;
pub mod hadamard;
pub mod linalg;
pub mod metric;
pub mod repdata;
pub mod summation;
pub mod zfr;

pub use error::{Error, Result};
