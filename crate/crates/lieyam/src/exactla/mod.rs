//! Exact rational scalars, dense matrices and canonical subspaces.

mod matrix;
mod rational;
mod subspace;

pub use matrix::{add_vec, axpy, dot, is_zero_vec, scale_vec, sub_vec, unit_vec, zero_vec, Matrix, Vector};
pub use rational::{q, qi, ParseRationalError, Rational};
pub use subspace::{form_orthocomplement, kernel, solve, BasisSolver, Echelon, Subspace};
