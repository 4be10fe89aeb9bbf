//! Binomial ideals generated by the diagonal 2-minors of a square matrix of
//! variables, one minor per edge of a simple graph.
//!
//! The crate builds these ideals, completes them to Gröbner bases in lex
//! and degree reverse lex order, enumerates the minimal primes obtained by
//! adding an anti-diagonal variable, and computes the rank of the divisor
//! class group of the quotient ring. Every computable claim has a
//! brute-force counterpart in [`oracles`].

pub mod algebra;
pub mod error;
pub mod graph;
pub mod ideals;
pub mod oracles;
pub mod par;
pub mod structure;
pub mod suites;

pub use error::{Error, Result};
