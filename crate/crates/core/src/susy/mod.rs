//! The nonassociative supersymmetry algebra: rewrite rules, associator
//! axioms, the pair-commutator table and the identity verifiers.

mod associators;
mod consistency;
mod relations;
mod rules;

pub use associators::{
    angular_momentum, angular_momentum_operator, associator_axiom, four_associator, special_associator,
    special_associator_expected, special_parameter, structural_triple_vanishes, three_associator, verify_angular_momentum,
};
pub use consistency::{
    alpha_beta_sector, expand_pair_commutator, four_case_sum, pair_commutator_lhs, translation_rhs,
    translation_residual, verify_translation_consistency, CommutatorCase, Orientation,
};
pub use relations::{momentum_from_generators, verify_momentum_inverse, verify_susy_relations};
pub use rules::{is_normal, normalize, normalize_tree, normalize_with, redexes, rewrite, rule_at, Redex, Rule, Side};

use crate::scalar::Scalar;
use crate::term::{Atom, Tree};
use crate::{Coeff, Expr, GaussianRational};

pub(crate) fn atom(a: Atom) -> Expr {
    Expr::atom(a)
}

pub(crate) fn constant(g: &GaussianRational) -> Coeff {
    Coeff::constant(g.clone())
}

pub(crate) fn int(n: i64) -> Coeff {
    Coeff::from_int(n)
}

/// `Σ_μ 2 σ^μ_{aȧ} P_μ`.
pub fn two_sigma_p(a: u8, ad: u8) -> Expr {
    Expr::from_terms(rules::two_sigma_momentum(a, ad))
}

pub(crate) fn node(l: Tree, r: Tree) -> Tree {
    Tree::node(l, r)
}

pub(crate) fn leaf(a: Atom) -> Tree {
    Tree::Leaf(a)
}
