//! Exact scalars, sparse matrices, subspaces and the float mirror.

pub mod float;
pub mod forms;
pub mod matrix;
pub mod rational;
pub mod scalar;
pub mod subspace;

pub use float::{mat_exp_float, FloatMatrix, C64};
pub use forms::{signature, trace_form};
pub use matrix::{Matrix, SparseVec};
pub use rational::Rational;
pub use scalar::Scalar;
pub use subspace::{kernel, rref, solve, Echelon, Subspace};
