//! Numerical verification of closed forms for Euler-type sums built from
//! generalized harmonic numbers and binomial coefficients.

pub mod cli;
pub mod compensated;
pub mod error;
pub mod identities;
pub mod jet;
pub mod series;
pub mod special_fn;

pub use error::{Error, Result};
