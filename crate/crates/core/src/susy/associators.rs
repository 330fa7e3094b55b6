//! Associator axioms for generator products and the angular-momentum
//! construction obtained from the coordinate-dependent parameter choice.

use num_traits::Zero;

use super::{atom, constant, int, normalize};
use crate::coeff::Symbol;
use crate::error::Error;
use crate::print::pretty_print;
use crate::report::CaseRecord;
use crate::scalar::Scalar;
use crate::sigma::{SigmaTable, LORENTZ, SPINOR};
use crate::term::{anticommutator, associator, Atom};
use crate::{Coeff, Expr};

fn require_generators(atoms: &[Atom]) -> Result<(), Error> {
    match atoms.iter().find(|a| !a.is_generator()) {
        None => Ok(()),
        Some(a) => Err(Error::UnsupportedShape(format!("associator with non-generator argument {a}"))),
    }
}

/// The triple associator of generators, which vanishes.
///
/// Arguments other than `Q`/`Qd` are outside the axiom and rejected.
pub fn three_associator(x: Atom, y: Atom, z: Atom) -> Result<Expr, Error> {
    require_generators(&[x, y, z])?;
    Ok(Expr::zero())
}

/// `α_{aȧ} {Q_b, Q_ḃ} + β_{bḃ} {Q_a, Q_ȧ}` with symbolic parameters.
pub fn four_associator(a: u8, ad: u8, b: u8, bd: u8) -> Expr {
    let alpha = Coeff::symbol(Symbol::Alpha(a, ad));
    let beta = Coeff::symbol(Symbol::Beta(b, bd));
    let mut out = anticommutator(&atom(Atom::Q(b)), &atom(Atom::Qd(bd))).scale(&alpha);
    out.add_scaled(&beta, &anticommutator(&atom(Atom::Q(a)), &atom(Atom::Qd(ad))));
    out
}

/// `[x, y, (z w)]` for generators.
///
/// Vanishes when `x, y` are both undotted or both dotted. For `x = Q_a`,
/// `y = Qd_ȧ` and `(z w) = (Q_b Qd_ḃ)` this is [`four_associator`]. Every
/// other shape has no stated value.
pub fn associator_axiom(x: Atom, y: Atom, pair: (Atom, Atom)) -> Result<Expr, Error> {
    require_generators(&[x, y, pair.0, pair.1])?;
    match (x, y, pair) {
        (Atom::Q(_), Atom::Q(_), _) | (Atom::Qd(_), Atom::Qd(_), _) => Ok(Expr::zero()),
        (Atom::Q(a), Atom::Qd(ad), (Atom::Q(b), Atom::Qd(bd))) => Ok(four_associator(a, ad, b, bd)),
        _ => Err(Error::UnsupportedShape(format!("[{x}, {y}, ({}*{})]", pair.0, pair.1))),
    }
}

/// `Σ_μ σ^μ_{aȧ} x_μ`.
pub fn special_parameter(a: u8, ad: u8) -> Coeff {
    let table = SigmaTable::get();
    LORENTZ.iter().fold(Coeff::zero(), |acc, &mu| acc + constant(table.lower(mu, a, ad)) * Coeff::symbol(Symbol::X(mu)))
}

fn substitute_special(c: &Coeff) -> Coeff {
    c.substitute(&|s| match *s {
        Symbol::Alpha(a, ad) => Some(special_parameter(a, ad)),
        Symbol::Beta(a, ad) => Some(-special_parameter(a, ad)),
        Symbol::X(_) => None,
    })
}

/// `x_μ P_ν - x_ν P_μ`.
pub fn angular_momentum_operator(mu: u8, nu: u8) -> Expr {
    let mut out = atom(Atom::P(nu)).scale(&Coeff::symbol(Symbol::X(mu)));
    out.add_scaled(&-Coeff::symbol(Symbol::X(nu)), &atom(Atom::P(mu)));
    out
}

/// The four-generator associator with `α = σ·x` and `β = -σ·x`, normalized.
pub fn special_associator(a: u8, ad: u8, b: u8, bd: u8) -> Expr {
    normalize(&four_associator(a, ad, b, bd).map_coefficients(substitute_special))
}

/// `2 Σ_{μ,ν} σ^μ_{aȧ} σ^ν_{bḃ} M_{μν}`.
pub fn special_associator_expected(a: u8, ad: u8, b: u8, bd: u8) -> Expr {
    let table = SigmaTable::get();
    let mut out = Expr::zero();
    for mu in LORENTZ {
        for nu in LORENTZ {
            let c = int(2) * constant(table.lower(mu, a, ad)) * constant(table.lower(nu, b, bd));
            out.add_scaled(&c, &angular_momentum_operator(mu, nu));
        }
    }
    out
}

/// `(1/8) Σ σ_μ^{aȧ} σ_ν^{bḃ} [Q_a, Q_ȧ, (Q_b Q_ḃ)]` under the special
/// parameter choice, normalized.
pub fn angular_momentum(mu: u8, nu: u8) -> Expr {
    let table = SigmaTable::get();
    let mut sum = Expr::zero();
    for a in SPINOR {
        for ad in SPINOR {
            for b in SPINOR {
                for bd in SPINOR {
                    let c = constant(table.upper(mu, a, ad)) * constant(table.upper(nu, b, bd));
                    if c.is_zero() {
                        continue;
                    }
                    sum.add_scaled(&c, &special_associator(a, ad, b, bd));
                }
            }
        }
    }
    normalize(&sum.scale(&Coeff::from_ratio(1, 8)))
}

fn residual_case(id: String, residual: Expr) -> CaseRecord {
    CaseRecord::from_residual(id, residual.is_zero(), pretty_print(&residual))
}

/// Special associator against `2σσM` (16 tuples), the inverse contraction
/// against `M_{μν}` (16 pairs), and antisymmetry of the result (16 pairs).
pub fn verify_angular_momentum() -> Vec<CaseRecord> {
    let mut cases = Vec::new();
    for a in SPINOR {
        for ad in SPINOR {
            for b in SPINOR {
                for bd in SPINOR {
                    let residual = &special_associator(a, ad, b, bd) - &special_associator_expected(a, ad, b, bd);
                    cases.push(residual_case(format!("special-associator[a={a},ad={ad},b={b},bd={bd}]"), residual));
                }
            }
        }
    }
    let m: Vec<Vec<Expr>> = LORENTZ.iter().map(|&mu| LORENTZ.iter().map(|&nu| angular_momentum(mu, nu)).collect()).collect();
    for mu in LORENTZ {
        for nu in LORENTZ {
            let got = &m[mu as usize][nu as usize];
            let residual = got - &angular_momentum_operator(mu, nu);
            cases.push(residual_case(format!("angular-momentum[mu={mu},nu={nu}]"), residual));
            let residual = got + &m[nu as usize][mu as usize];
            cases.push(residual_case(format!("angular-momentum-antisymmetry[mu={mu},nu={nu}]"), residual));
        }
    }
    cases
}

/// The structural triple associator normalizes to zero for every generator
/// triple, consistent with the axiom.
pub fn structural_triple_vanishes(x: Atom, y: Atom, z: Atom) -> bool {
    normalize(&associator(&atom(x), &atom(y), &atom(z))).is_zero()
}
