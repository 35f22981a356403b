//! Exact arithmetic for binary Krawtchouk polynomials and the binomial,
//! central-binomial and Catalan identities built around their reduction
//! formulas.
//!
//! Every value is an arbitrary-precision integer or reduced rational; there
//! is no floating point anywhere. Most quantities can be computed by two or
//! more independent routes, and the [`verify`] module sweeps those routes
//! against each other.

pub mod arith;
pub mod binomial;
pub mod central;
pub mod dyadic;
pub mod error;
pub mod krawtchouk;
pub mod reduction;
pub mod verify;

pub use arith::{binomial, choose, ExactInteger, ExactRational};
pub use error::{Error, Result};
pub use krawtchouk::{build_table, krawtchouk_direct, KrawtchoukTable};
