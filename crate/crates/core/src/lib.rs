//! Exact Heegaard Floer invariants of positive iterated torus knots.
//!
//! The knots handled here are built from torus knots by repeated cabling
//! (see [`knots::KnotExpr`]). For each one the crate computes the Alexander
//! polynomial, genus, `tau`, the invariant `s_K` governing positive L-space
//! surgeries, knot Floer ranks, and ranks of `HF^` for positive rational
//! surgeries. A cable `K_(p,q)` is an L-space knot exactly when `K` is one
//! and `q/p >= 2g(K) - 1`; [`lspace::is_lspace_knot`] decides this
//! recursively, and [`staircase`] recomputes `s_K` from the staircase
//! complex as an independent check.
//!
//! All arithmetic is exact integer arithmetic.

pub mod cli;
pub mod error;
pub mod knots;
pub mod lspace;
pub mod poly;
pub mod staircase;
pub mod surgery;

pub use error::{Error, Result};
pub use knots::KnotExpr;
pub use poly::LaurentPoly;
pub use surgery::Slope;
