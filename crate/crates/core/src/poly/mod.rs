//! Sparse multivariate polynomials over an exact field, with monomial orders
//! and the ordinary grading `deg x = deg y = deg z = 1`.

mod monomial;
mod polynomial;

pub use monomial::{compare_monomials, Monomial, MonomialOrder, MAX_VARS};
pub use polynomial::{Polynomial, Ring, Term};
