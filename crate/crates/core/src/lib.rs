//! Singular corner solutions of the Laplace equation and the Stokes system.
//!
//! The crate computes corner exponents, evaluates the corresponding
//! separable solutions, manufactures compactly supported right-hand sides
//! with radial cut-offs, checks the weak and very weak Green identities by
//! quadrature, and runs a small P1 finite-element harness on the L-shape.

// `!(a < b)` is used on purpose so that NaN inputs fail validation
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod angle;
pub mod cli;
pub mod config;
pub mod cutoff;
pub mod error;
pub mod exponents;
pub mod fem;
pub mod geometry;
pub mod laplace;
pub mod pairing;
pub mod quadrature;
pub mod stokes;
pub mod table;
