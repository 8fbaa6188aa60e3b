//! Kazhdan-Lusztig cells of finite Coxeter groups.
//!
//! The crate enumerates a finite Coxeter group from its Coxeter graph,
//! computes Kazhdan-Lusztig polynomials and μ-coefficients, and derives
//! left, right and two-sided cells together with their invariants: cell
//! characters, a-values, b-invariants, special representations and
//! distinguished involutions. On top of that sit star operations and
//! generalized τ-invariants, parabolic induction of cells, and checkers for
//! several structural conjectures about cells.

pub mod algebra;
pub mod cells;
pub mod characters;
pub mod coxeter;
pub mod error;
pub mod harness;
pub mod induction;
pub mod kl;
pub mod laurent;
pub mod star;

pub use error::{Error, Result};
