//! Exact scalar and polynomial arithmetic over Q.

mod gcd;
mod parse;
mod poly;
mod rational;
mod resultant;
mod univariate;

pub use gcd::{content, gcd, gcd_all, is_squarefree, pseudo_remainder, squarefree_part};
pub use parse::parse_poly;
pub use poly::{Monomial, MultiPoly};
pub use rational::Rational;
pub use resultant::{
    bareiss_determinant, discriminant, resultant, resultant_in, sylvester_matrix, UniPolyView,
    SYLVESTER_LIMIT,
};
pub use univariate::UniPoly;

/// Variable names of the primal plane.
pub const PRIMAL_VARS: [&str; 3] = ["x", "y", "z"];
/// Variable names of the dual plane.
pub const DUAL_VARS: [&str; 3] = ["u", "v", "w"];

/// Square-free part of a polynomial viewed in its distinguished variable.
pub fn squarefree_part_view(f: &UniPolyView) -> crate::Result<MultiPoly> {
    squarefree_part(f.poly())
}

/// Converts a polynomial that only uses `var` into dense univariate form.
pub fn to_unipoly(p: &MultiPoly, var: usize) -> Option<UniPoly> {
    p.to_dense(var).map(UniPoly::new)
}
