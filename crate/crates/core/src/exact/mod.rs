//! Exact rational scalars and the linear algebra built on them.

pub mod linalg;
pub mod poly;
pub mod rational;

pub use linalg::{
    solve_linear, span_closure, BasisCoords, Matrix, RowReducer, SparseVec, Subspace, Vector,
};
pub use poly::{char_poly, minimal_poly, rational_eigenvalues, Poly};
pub use rational::{q, qi, ParseRationalError, Rational};
