//! Gröbner bases and ideal operations in super-commutative rings.

pub mod engine;
pub mod ideal;

pub use engine::{GbOptions, GbOutput, ModuleContext, Term, Vector};
pub use ideal::{buchberger, GroebnerBasis, Ideal};
