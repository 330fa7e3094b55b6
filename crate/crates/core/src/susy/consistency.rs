//! The commutator of two generator pairs, in four orientations, and the
//! check that contracting their sum reproduces `[P_μ, P_ν]`.
//!
//! The four right-hand sides are stored as given, not derived: the associator
//! axioms do not cover products in the first two slots. Repeated spacetime
//! indices are expanded to explicit sums over `0..=3`.

use std::fmt;

use num_traits::{One, Zero};

use super::{atom, constant, int, leaf, node, normalize};
use crate::print::pretty_print;
use crate::report::CaseRecord;
use crate::scalar::Scalar;
use crate::sigma::{SigmaTable, LORENTZ, SPINOR};
use crate::term::{anticommutator, commutator, Atom};
#[cfg(test)]
use crate::term::Tree;
use crate::coeff::Symbol;
use crate::{Coeff, Expr};

/// Which factor of each pair comes first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    /// `[(Q_a Qd_ȧ), (Q_b Qd_ḃ)]`
    UndottedFirst,
    /// `[(Qd_ȧ Q_a), (Q_b Qd_ḃ)]`
    LeftFlipped,
    /// `[(Q_a Qd_ȧ), (Qd_ḃ Q_b)]`
    RightFlipped,
    /// `[(Qd_ȧ Q_a), (Qd_ḃ Q_b)]`
    BothFlipped,
}

impl Orientation {
    pub const ALL: [Orientation; 4] =
        [Orientation::UndottedFirst, Orientation::LeftFlipped, Orientation::RightFlipped, Orientation::BothFlipped];

    pub fn tag(self) -> &'static str {
        match self {
            Orientation::UndottedFirst => "uu̇-uu̇",
            Orientation::LeftFlipped => "u̇u-uu̇",
            Orientation::RightFlipped => "uu̇-u̇u",
            Orientation::BothFlipped => "u̇u-u̇u",
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CommutatorCase {
    pub orientation: Orientation,
    pub a: u8,
    pub ad: u8,
    pub b: u8,
    pub bd: u8,
}

impl CommutatorCase {
    pub fn new(orientation: Orientation, a: u8, ad: u8, b: u8, bd: u8) -> Self {
        CommutatorCase { orientation, a, ad, b, bd }
    }
}

fn pair(first: Atom, second: Atom) -> Expr {
    Expr::tree(node(leaf(first), leaf(second)))
}

/// The commutator of the two generator pairs, as a structural expression.
pub fn pair_commutator_lhs(case: &CommutatorCase) -> Expr {
    let CommutatorCase { orientation, a, ad, b, bd } = *case;
    let (l, r) = match orientation {
        Orientation::UndottedFirst => (pair(Atom::Q(a), Atom::Qd(ad)), pair(Atom::Q(b), Atom::Qd(bd))),
        Orientation::LeftFlipped => (pair(Atom::Qd(ad), Atom::Q(a)), pair(Atom::Q(b), Atom::Qd(bd))),
        Orientation::RightFlipped => (pair(Atom::Q(a), Atom::Qd(ad)), pair(Atom::Qd(bd), Atom::Q(b))),
        Orientation::BothFlipped => (pair(Atom::Qd(ad), Atom::Q(a)), pair(Atom::Qd(bd), Atom::Q(b))),
    };
    commutator(&l, &r)
}

fn alpha(a: u8, ad: u8) -> Coeff {
    Coeff::symbol(Symbol::Alpha(a, ad))
}

fn beta(a: u8, ad: u8) -> Coeff {
    Coeff::symbol(Symbol::Beta(a, ad))
}

fn sigma(mu: u8, a: u8, ad: u8) -> Coeff {
    constant(SigmaTable::get().lower(mu, a, ad))
}

/// `Q_x (P_μ Qd_y)` summed against `σ^μ_{s t}`.
fn generator_momentum_terms(s: (u8, u8), outer: Atom, inner: Atom) -> Expr {
    let mut out = Expr::zero();
    for mu in LORENTZ {
        let c = sigma(mu, s.0, s.1);
        out.add_term(c, node(leaf(outer), node(leaf(Atom::P(mu)), leaf(inner))));
    }
    out
}

/// The terms common to all four orientations, with the sign of the
/// undotted-first case.
fn common_part(a: u8, ad: u8, b: u8, bd: u8) -> Expr {
    let acomm_a = anticommutator(&atom(Atom::Q(a)), &atom(Atom::Qd(ad)));
    let acomm_b = anticommutator(&atom(Atom::Q(b)), &atom(Atom::Qd(bd)));
    let mut out = Expr::zero();
    out.add_scaled(&(beta(b, bd) - alpha(b, bd)), &acomm_a);
    out.add_scaled(&(alpha(a, ad) - beta(a, ad)), &acomm_b);
    out.add_scaled(&int(-2), &generator_momentum_terms((a, bd), Atom::Q(b), Atom::Qd(ad)));
    out.add_scaled(&int(2), &generator_momentum_terms((b, ad), Atom::Q(a), Atom::Qd(bd)));
    out
}

/// `Σ_μ σ^μ_{st} · f(P_μ)`.
fn contract(s: (u8, u8), f: impl Fn(&Expr) -> Expr) -> Expr {
    let mut out = Expr::zero();
    for mu in LORENTZ {
        let c = sigma(mu, s.0, s.1);
        if !c.is_zero() {
            out.add_scaled(&c, &f(&atom(Atom::P(mu))));
        }
    }
    out
}

/// The stated right-hand side for one orientation and index tuple.
pub fn expand_pair_commutator(case: &CommutatorCase) -> Expr {
    let CommutatorCase { orientation, a, ad, b, bd } = *case;
    let common = common_part(a, ad, b, bd);
    let qa_qad = pair(Atom::Q(a), Atom::Qd(ad));
    let qad_qa = pair(Atom::Qd(ad), Atom::Q(a));
    let qb_qbd = pair(Atom::Q(b), Atom::Qd(bd));
    let qbd_qb = pair(Atom::Qd(bd), Atom::Q(b));
    match orientation {
        Orientation::UndottedFirst => common,
        Orientation::LeftFlipped => {
            // + 2 σ^α_{aȧ} [P_α, Q_b Qd_ḃ]
            let extra = contract((a, ad), |p| commutator(p, &qb_qbd));
            &(-&common) + &extra.scale(&int(2))
        }
        Orientation::RightFlipped => {
            // + 2 σ^α_{bḃ} [Q_a Qd_ȧ, P_α]
            let extra = contract((b, bd), |p| commutator(&qa_qad, p));
            &(-&common) + &extra.scale(&int(2))
        }
        Orientation::BothFlipped => {
            // - 2 σ^α_{aȧ} (P_α (Q_b Qd_ḃ) + (Qd_ḃ Q_b) P_α)
            // - 2 σ^α_{bḃ} ((Q_a Qd_ȧ) P_α + P_α (Qd_ȧ Q_a))
            // + 4 σ^α_{aȧ} σ^β_{bḃ} {P_α, P_β}
            let first = contract((a, ad), |p| &(p * &qb_qbd) + &(&qbd_qb * p));
            let second = contract((b, bd), |p| &(&qa_qad * p) + &(p * &qad_qa));
            let third = contract((a, ad), |pa| contract((b, bd), |pb| anticommutator(pa, pb)));
            let mut out = common;
            out.add_scaled(&int(-2), &first);
            out.add_scaled(&int(-2), &second);
            out.add_scaled(&int(4), &third);
            out
        }
    }
}

/// Sum of the four orientations for one index tuple.
pub fn four_case_sum(a: u8, ad: u8, b: u8, bd: u8) -> Expr {
    let mut out = Expr::zero();
    for o in Orientation::ALL {
        out.add_scaled(&Coeff::one(), &expand_pair_commutator(&CommutatorCase::new(o, a, ad, b, bd)));
    }
    out
}

/// The part of `e` whose coefficients depend on `alpha` or `beta`.
pub fn alpha_beta_sector(e: &Expr) -> Expr {
    e.map_coefficients(|c| c.filter(|m| m.contains(Symbol::is_parameter)))
}

/// `(1/16) Σ σ_μ^{aȧ} σ_ν^{bḃ} (sum of the four orientations)`, unnormalized.
pub fn translation_rhs(mu: u8, nu: u8) -> Expr {
    let table = SigmaTable::get();
    let mut out = Expr::zero();
    for a in SPINOR {
        for ad in SPINOR {
            for b in SPINOR {
                for bd in SPINOR {
                    let c = constant(table.upper(mu, a, ad)) * constant(table.upper(nu, b, bd));
                    if c.is_zero() {
                        continue;
                    }
                    out.add_scaled(&c, &four_case_sum(a, ad, b, bd));
                }
            }
        }
    }
    out.scale(&Coeff::from_ratio(1, 16))
}

/// `normalize(rhs) - [P_μ, P_ν]`. Momentum atoms stay mutually opaque.
pub fn translation_residual(mu: u8, nu: u8) -> Expr {
    let lhs = commutator(&atom(Atom::P(mu)), &atom(Atom::P(nu)));
    &normalize(&translation_rhs(mu, nu)) - &lhs
}

fn residual_case(id: String, residual: &Expr) -> CaseRecord {
    CaseRecord::from_residual(id, residual.is_zero(), pretty_print(residual))
}

/// Parameter-sector cancellation per index tuple (16), the same after
/// contraction per `(μ, ν)` (16), and the full residual per `(μ, ν)` (16).
pub fn verify_translation_consistency() -> Vec<CaseRecord> {
    let mut cases = Vec::new();
    for a in SPINOR {
        for ad in SPINOR {
            for b in SPINOR {
                for bd in SPINOR {
                    let sector = alpha_beta_sector(&four_case_sum(a, ad, b, bd));
                    cases.push(residual_case(format!("parameter-cancellation[a={a},ad={ad},b={b},bd={bd}]"), &sector));
                }
            }
        }
    }
    for mu in LORENTZ {
        for nu in LORENTZ {
            let rhs = translation_rhs(mu, nu);
            cases.push(residual_case(
                format!("parameter-cancellation-contracted[mu={mu},nu={nu}]"),
                &alpha_beta_sector(&rhs),
            ));
            let lhs = commutator(&atom(Atom::P(mu)), &atom(Atom::P(nu)));
            let residual = &normalize(&rhs) - &lhs;
            cases.push(residual_case(format!("translation-residual[mu={mu},nu={nu}]"), &residual));
        }
    }
    cases
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn momentum_pair(mu: u8, nu: u8) -> Tree {
        node(leaf(Atom::P(mu)), leaf(Atom::P(nu)))
    }

    fn case(o: Orientation, a: u8, ad: u8, b: u8, bd: u8) -> Expr {
        expand_pair_commutator(&CommutatorCase::new(o, a, ad, b, bd))
    }

    #[test]
    fn left_flipped_contains_momentum_commutator() {
        // for (a,ȧ) = (1,1): σ^0 = σ^3 = 1, so P_0 (Q_2 Qd_2) appears with +2
        let e = case(Orientation::LeftFlipped, 1, 1, 2, 2);
        let t = node(leaf(Atom::P(0)), node(leaf(Atom::Q(2)), leaf(Atom::Qd(2))));
        assert_eq!(e.coefficient(&t), int(2));
        let t = node(node(leaf(Atom::Q(2)), leaf(Atom::Qd(2))), leaf(Atom::P(3)));
        assert_eq!(e.coefficient(&t), int(-2));
    }

    #[test]
    fn both_flipped_contains_momentum_anticommutator() {
        // σ^μ_{11̇} is 1 at μ = 0, 3 and σ^ν_{22̇} is (1, -1) at ν = (0, 3):
        // the mixed products cancel, the squares survive with 4 · 2 · (±1)
        let e = case(Orientation::BothFlipped, 1, 1, 2, 2);
        assert_eq!(e.coefficient(&momentum_pair(0, 0)), int(8));
        assert_eq!(e.coefficient(&momentum_pair(3, 3)), int(-8));
        assert!(e.coefficient(&momentum_pair(0, 3)).is_zero());
        assert!(e.coefficient(&momentum_pair(3, 0)).is_zero());
    }

    #[test]
    fn undotted_first_is_antisymmetric_under_pair_swap() {
        for a in SPINOR {
            for ad in SPINOR {
                for b in SPINOR {
                    for bd in SPINOR {
                        let lhs = case(Orientation::UndottedFirst, a, ad, b, bd);
                        let swapped = case(Orientation::UndottedFirst, b, bd, a, ad);
                        assert!((&lhs + &swapped).is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn parameter_sector_cancels() {
        for a in SPINOR {
            for ad in SPINOR {
                for b in SPINOR {
                    for bd in SPINOR {
                        assert!(alpha_beta_sector(&four_case_sum(a, ad, b, bd)).is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn each_case_does_carry_parameters() {
        let e = case(Orientation::RightFlipped, 1, 2, 2, 1);
        assert!(!alpha_beta_sector(&e).is_zero());
    }

    #[test]
    fn diagonal_residual_vanishes() {
        assert!(translation_residual(0, 0).is_zero());
        assert!(translation_residual(0, 1).is_zero());
    }

    #[test]
    fn rhs_is_not_trivially_zero() {
        let nf = normalize(&translation_rhs(1, 2));
        assert_eq!(nf.coefficient(&momentum_pair(1, 2)), Coeff::one());
        assert_eq!(nf.coefficient(&momentum_pair(2, 1)), -Coeff::one());
    }
}
