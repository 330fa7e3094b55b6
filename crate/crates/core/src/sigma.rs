//! The 2x2 identity and Pauli matrices with both spinor index placements.
//!
//! Row index is the undotted spinor index `a`, column index the dotted one
//! `ȧ`, both 1-based. `σ^μ_{aȧ}` is [`SigmaTable::lower`] and `σ_μ^{aȧ}` is
//! [`SigmaTable::upper`]; they differ only in the sign of `μ = 2`.

use std::sync::OnceLock;

use num_traits::{One, Zero};

use crate::coeff::{check_lorentz, check_spinor};
use crate::error::Error;
use crate::print::format_gaussian;
use crate::report::CaseRecord;
use crate::scalar::gaussian;
use crate::GaussianRational;

pub const SPINOR: [u8; 2] = [1, 2];
pub const LORENTZ: [u8; 4] = [0, 1, 2, 3];

type Block = [[[GaussianRational; 2]; 2]; 4];

#[derive(Debug, Clone)]
pub struct SigmaTable {
    lower: Block,
    upper: Block,
}

fn build(sign_of_y: i64) -> Block {
    let m = |entries: [(i64, i64); 4]| {
        [
            [gaussian(entries[0].0, entries[0].1), gaussian(entries[1].0, entries[1].1)],
            [gaussian(entries[2].0, entries[2].1), gaussian(entries[3].0, entries[3].1)],
        ]
    };
    [
        m([(1, 0), (0, 0), (0, 0), (1, 0)]),
        m([(0, 0), (1, 0), (1, 0), (0, 0)]),
        m([(0, 0), (0, -sign_of_y), (0, sign_of_y), (0, 0)]),
        m([(1, 0), (0, 0), (0, 0), (-1, 0)]),
    ]
}

impl SigmaTable {
    fn new() -> Self {
        SigmaTable { lower: build(1), upper: build(-1) }
    }

    /// The shared table instance.
    pub fn get() -> &'static SigmaTable {
        static TABLE: OnceLock<SigmaTable> = OnceLock::new();
        TABLE.get_or_init(SigmaTable::new)
    }

    /// `σ^μ_{aȧ}`; indices must already be in range.
    pub fn lower(&self, mu: u8, a: u8, ad: u8) -> &GaussianRational {
        &self.lower[mu as usize][a as usize - 1][ad as usize - 1]
    }

    /// `σ_μ^{aȧ}`; indices must already be in range.
    pub fn upper(&self, mu: u8, a: u8, ad: u8) -> &GaussianRational {
        &self.upper[mu as usize][a as usize - 1][ad as usize - 1]
    }
}

fn check(mu: u8, a: u8, ad: u8) -> Result<(), Error> {
    check_lorentz("sigma", mu)?;
    check_spinor("sigma", a)?;
    check_spinor("sigma", ad)
}

/// Checked access to `σ^μ_{aȧ}`.
pub fn sigma_lower(mu: u8, a: u8, ad: u8) -> Result<GaussianRational, Error> {
    check(mu, a, ad)?;
    Ok(SigmaTable::get().lower(mu, a, ad).clone())
}

/// Checked access to `σ_μ^{aȧ}`.
pub fn sigma_upper(mu: u8, a: u8, ad: u8) -> Result<GaussianRational, Error> {
    check(mu, a, ad)?;
    Ok(SigmaTable::get().upper(mu, a, ad).clone())
}

fn delta(i: u8, j: u8) -> i64 {
    (i == j) as i64
}

/// `Σ_{a,ȧ} σ_μ^{aȧ} σ^ν_{aȧ}`.
pub fn trace_contraction(mu: u8, nu: u8) -> GaussianRational {
    let t = SigmaTable::get();
    let mut sum = GaussianRational::zero();
    for a in SPINOR {
        for ad in SPINOR {
            sum += t.upper(mu, a, ad).clone() * t.lower(nu, a, ad).clone();
        }
    }
    sum
}

/// `Σ_μ σ_μ^{aȧ} σ^μ_{bḃ}`.
pub fn completeness_contraction(a: u8, ad: u8, b: u8, bd: u8) -> GaussianRational {
    let t = SigmaTable::get();
    let mut sum = GaussianRational::zero();
    for mu in LORENTZ {
        sum += t.upper(mu, a, ad).clone() * t.lower(mu, b, bd).clone();
    }
    sum
}

/// Checks both contraction identities: 16 trace cases then 16
/// completeness cases.
pub fn verify_sigma_contractions() -> Vec<CaseRecord> {
    let two = gaussian(2, 0);
    let mut cases = Vec::with_capacity(32);
    for mu in LORENTZ {
        for nu in LORENTZ {
            let residual = trace_contraction(mu, nu) - two.clone() * gaussian(delta(mu, nu), 0);
            cases.push(CaseRecord::from_residual(
                format!("sigma-trace[mu={mu},nu={nu}]"),
                residual.is_zero(),
                format_gaussian(&residual),
            ));
        }
    }
    for a in SPINOR {
        for ad in SPINOR {
            for b in SPINOR {
                for bd in SPINOR {
                    let expected = two.clone() * gaussian(delta(a, b) * delta(ad, bd), 0);
                    let residual = completeness_contraction(a, ad, b, bd) - expected;
                    cases.push(CaseRecord::from_residual(
                        format!("sigma-completeness[a={a},ad={ad},b={b},bd={bd}]"),
                        residual.is_zero(),
                        format_gaussian(&residual),
                    ));
                }
            }
        }
    }
    cases
}

/// True when `σ_μ = σ^μ` for `μ ∈ {0,1,3}` and `σ_2 = -σ^2`, entrywise.
pub fn index_placement_pattern_holds() -> bool {
    let t = SigmaTable::get();
    LORENTZ.iter().all(|&mu| {
        let sign = if mu == 2 { -GaussianRational::one() } else { GaussianRational::one() };
        SPINOR.iter().all(|&a| SPINOR.iter().all(|&ad| *t.upper(mu, a, ad) == sign.clone() * t.lower(mu, a, ad).clone()))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn entries() {
        assert_eq!(sigma_lower(2, 1, 2).unwrap(), gaussian(0, -1));
        assert_eq!(sigma_upper(2, 1, 2).unwrap(), gaussian(0, 1));
        assert_eq!(sigma_lower(0, 1, 1).unwrap(), gaussian(1, 0));
        assert_eq!(sigma_lower(3, 2, 2).unwrap(), gaussian(-1, 0));
        assert_eq!(sigma_lower(1, 2, 1).unwrap(), gaussian(1, 0));
    }

    #[test]
    fn out_of_range() {
        assert!(sigma_lower(4, 1, 1).is_err());
        assert!(sigma_upper(0, 0, 1).is_err());
        assert!(sigma_upper(0, 1, 3).is_err());
    }

    #[test]
    fn contraction_examples() {
        assert_eq!(trace_contraction(0, 0), gaussian(2, 0));
        assert_eq!(trace_contraction(0, 3), gaussian(0, 0));
        assert_eq!(completeness_contraction(1, 1, 2, 2), gaussian(0, 0));
        assert_eq!(completeness_contraction(1, 2, 1, 2), gaussian(2, 0));
    }

    #[test]
    fn all_contractions_hold() {
        let cases = verify_sigma_contractions();
        assert_eq!(cases.len(), 32);
        assert!(cases.iter().all(|c| c.passed()));
    }

    #[test]
    fn placement_pattern() {
        assert!(index_placement_pattern_holds());
    }
}
