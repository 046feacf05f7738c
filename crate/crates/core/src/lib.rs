//! Exact computations over the rationals for one-parameter-subgroup
//! degenerations: weight gradings of vectors and of `gl_n`, stabilizer Lie
//! algebras and their leading-term algebras, alignment certificates,
//! derivation functionals on normal cones, polyhedral strata of character
//! supports, and co-limit tangent spaces.
//!
//! Every scalar is a [`Rational`] (arbitrary-precision `p/q`), every test is
//! an exact equality, and every operation is a pure function of its inputs.

pub mod alignment;
pub mod catalog;
pub mod colimits;
pub mod derivations;
pub mod error;
pub mod forms;
pub mod grading;
pub mod json;
pub mod matrix;
pub mod poly;
pub mod rational;
pub mod rep;
pub mod sample;
pub mod semisimple;
pub mod stabilizers;
pub mod strata;
pub mod subspace;

pub use error::{Error, Result};
pub use rational::Rational;
