use num_traits::Zero;

use super::{atom, constant, normalize, two_sigma_p};
use crate::print::pretty_print;
use crate::report::CaseRecord;
use crate::scalar::Scalar;
use crate::sigma::{SigmaTable, LORENTZ, SPINOR};
use crate::term::{anticommutator, commutator, Atom};
use crate::{Coeff, Expr};

fn check(id: String, lhs: &Expr, rhs: &Expr) -> CaseRecord {
    let residual = &normalize(lhs) - rhs;
    CaseRecord::from_residual(id, residual.is_zero(), pretty_print(&residual))
}

/// The defining anticommutators and the generator-momentum commutators,
/// each normalized and compared with its stated value. 4 + 8 + 16 cases.
pub fn verify_susy_relations() -> Vec<CaseRecord> {
    let mut cases = Vec::new();
    for a in SPINOR {
        for ad in SPINOR {
            let lhs = anticommutator(&atom(Atom::Q(a)), &atom(Atom::Qd(ad)));
            cases.push(check(format!("acomm-Q-Qd[a={a},ad={ad}]"), &lhs, &two_sigma_p(a, ad)));
        }
    }
    for a in SPINOR {
        for b in SPINOR {
            let lhs = anticommutator(&atom(Atom::Q(a)), &atom(Atom::Q(b)));
            cases.push(check(format!("acomm-Q-Q[a={a},b={b}]"), &lhs, &Expr::zero()));
            let lhs = anticommutator(&atom(Atom::Qd(a)), &atom(Atom::Qd(b)));
            cases.push(check(format!("acomm-Qd-Qd[ad={a},bd={b}]"), &lhs, &Expr::zero()));
        }
    }
    for a in SPINOR {
        for mu in LORENTZ {
            let lhs = commutator(&atom(Atom::Q(a)), &atom(Atom::P(mu)));
            cases.push(check(format!("comm-Q-P[a={a},mu={mu}]"), &lhs, &Expr::zero()));
            let lhs = commutator(&atom(Atom::Qd(a)), &atom(Atom::P(mu)));
            cases.push(check(format!("comm-Qd-P[ad={a},mu={mu}]"), &lhs, &Expr::zero()));
        }
    }
    cases
}

/// `factor · Σ_{a,ȧ} σ_μ^{aȧ} {Q_a, Q_ȧ}`, unnormalized.
pub fn momentum_from_generators(mu: u8, factor: &Coeff) -> Expr {
    let table = SigmaTable::get();
    let mut out = Expr::zero();
    for a in SPINOR {
        for ad in SPINOR {
            let s = table.upper(mu, a, ad);
            if s.is_zero() {
                continue;
            }
            let ac = anticommutator(&atom(Atom::Q(a)), &atom(Atom::Qd(ad)));
            out.add_scaled(&(factor.clone() * constant(s)), &ac);
        }
    }
    out
}

/// Recovers each `P_μ` from a quarter of the sigma-contracted anticommutator.
pub fn verify_momentum_inverse() -> Vec<CaseRecord> {
    LORENTZ
        .iter()
        .map(|&mu| {
            let lhs = momentum_from_generators(mu, &Coeff::from_ratio(1, 4));
            check(format!("momentum-inverse[mu={mu}]"), &lhs, &atom(Atom::P(mu)))
        })
        .collect()
}
