//! Exact models of the exceptional Lie algebras 𝔣₄, 𝔢₆, 𝔢₇, 𝔢₈ over the
//! Gaussian rationals, with the involutions σ, σ′ and their fixed subalgebras.

pub mod error;
pub mod linalg;

pub use error::{Error, Result};
pub mod f4;
pub mod jordan;
pub mod octonion;
pub mod e7;
pub mod freudenthal;
pub mod lie;
pub mod e8;
pub mod structure;
