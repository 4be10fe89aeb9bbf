//! Monomials, the two monomial orders, the two-term polynomial class and
//! Buchberger completion over it.

pub mod groebner;
pub mod height;
pub mod monomial;
pub mod order;
pub mod poly;

pub use groebner::{
    buchberger, buchberger_with_stats, initial_ideal, is_groebner_basis, is_reduced, minimalize,
    reduce_basis, CompletionStats,
};
pub use height::{monomial_ideal_height, pairwise_disjoint, radical_height};
pub use monomial::{Monomial, VariableId};
pub use order::MonomialOrder;
pub use poly::{normal_form, spoly, GeneratorSet, TwoTermPoly};

/// True when every exponent is at most one.
pub fn is_squarefree(m: &Monomial) -> bool {
    m.is_squarefree()
}
