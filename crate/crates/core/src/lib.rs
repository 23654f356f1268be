//! Locates imaginary parts of nontrivial Riemann zeta zeros by driving a
//! relaxed tanh-normalized fixed-point iteration on the Hardy Z function,
//! verifies the exact and asymptotic transcendental equations at each
//! computed zero, and validates the results against published zero tables.

// reference constants keep their full published digits, and `!(x > y)`
// comparisons deliberately catch NaN
#![allow(clippy::excessive_precision)]
#![allow(clippy::neg_cmp_op_on_partial_ord)]
#![allow(clippy::manual_is_multiple_of)]

pub mod cli;
pub mod config;
pub mod dynamics;
pub mod error;
pub mod reference;
pub mod special;
pub mod transcendental;

pub use config::{PrecisionConfig, ZetaBackend};
pub use error::{Error, Result};
