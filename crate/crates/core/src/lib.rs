//! (α,β)-harmonic functions on the unit disk.
//!
//! These are solutions of
//! `(1-|z|²)[(1-|z|²)u_{zz̄} + αz u_z + βz̄ u_z̄ - αβ u] = 0`. The crate
//! provides the weighted Poisson kernel, a Dirichlet solver for
//! trigonometric-polynomial boundary data, the hypergeometric power-series
//! expansion of the solution, closed forms for the explicit growth,
//! distortion and coefficient constants, and an audit harness that checks
//! each inequality against computed ground truth.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod audit;
pub mod boundary;
pub mod bounds;
pub mod error;
pub mod exec;
pub mod harmonic;
pub mod json;
pub mod kernel;
pub mod quad;
pub mod specfun;

pub use error::{Error, Result};
pub use exec::Exec;
pub use num_complex::Complex64;
