//! Exact trace, colon and isomorphism calculus in two families of rings:
//! finite-dimensional local algebras over prime fields, and numerical
//! semigroup rings through their monomial fractional ideals.

pub mod caps;
pub mod field;
pub mod finalg;
pub mod linalg;
pub mod numsgp;
pub mod polyfp;
pub mod spec;
pub mod verify;

pub use caps::Caps;
