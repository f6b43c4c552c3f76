//! Exact scalars and the super-commutative polynomial ring.

pub mod field;
pub mod monomial;
pub mod poly;
pub mod ring;
pub mod text;

pub use field::FieldElem;
pub use monomial::{SuperMonomial, TermOrder};
pub use poly::SuperPoly;
pub use ring::{Ring, RingSpec, Var};
pub use text::TermJson;
