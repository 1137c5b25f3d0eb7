//! Polynomials over prime fields, Buchberger's algorithm and normal forms.
//!
//! Only as much as is needed to turn an artinian presentation
//! `F_p[x_1..x_n]/(f_1..f_m)` into a multiplication table.

mod groebner;
mod monomial;
mod polynomial;

pub use groebner::{
    basis_order, buchberger, divide, is_groebner_basis, normal_form, s_polynomial, standard_monomials,
    Division,
};
pub use monomial::{Monomial, MonomialOrder};
pub use polynomial::Polynomial;

use crate::field::PrimeField;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("polynomials over different fields ({0} vs {1})")]
    FieldMismatch(PrimeField, PrimeField),
    #[error("polynomials over different variables ({0:?} vs {1:?})")]
    VariableMismatch(Vec<String>, Vec<String>),
    #[error("empty generator list")]
    EmptyGenerators,
    #[error("not zero-dimensional: no pure power of `{0}` among the leading monomials")]
    NotZeroDimensional(String),
    #[error("input is not a Gröbner basis")]
    NotGroebner,
    #[error("cannot parse `{input}`: {reason}")]
    Parse { input: String, reason: String },
}
