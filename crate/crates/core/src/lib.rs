//! Gröbner bases over super-commutative rings, annihilators of cokernels of
//! Z/2-graded matrices, and the representation-theoretic Fitting ideals
//! attached to generic graded maps.

pub mod error;
pub mod fitting;
pub mod groebner;
pub mod linalg;
pub mod resolution;
pub mod schur;
pub mod supermodule;
pub mod superpoly;

pub use error::{Error, Result};
