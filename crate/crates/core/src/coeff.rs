//! Commutative polynomials over a scalar ring, in the fixed symbol set
//! `alpha[a,ȧ]`, `beta[a,ȧ]` and `x[μ]`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::Error;
use crate::scalar::Scalar;

/// A commuting indeterminate.
///
/// The derived order (kind first, then indices) is the monomial order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    /// `alpha[a, ȧ]`, spinor indices in `1..=2`.
    Alpha(u8, u8),
    /// `beta[a, ȧ]`, spinor indices in `1..=2`.
    Beta(u8, u8),
    /// Position coordinate `x[μ]`, `μ` in `0..=3`.
    X(u8),
}

impl Symbol {
    pub fn alpha(a: u8, ad: u8) -> Result<Self, Error> {
        check_spinor("alpha", a)?;
        check_spinor("alpha", ad)?;
        Ok(Symbol::Alpha(a, ad))
    }

    pub fn beta(a: u8, ad: u8) -> Result<Self, Error> {
        check_spinor("beta", a)?;
        check_spinor("beta", ad)?;
        Ok(Symbol::Beta(a, ad))
    }

    pub fn x(mu: u8) -> Result<Self, Error> {
        check_lorentz("X", mu)?;
        Ok(Symbol::X(mu))
    }

    pub fn is_parameter(&self) -> bool {
        matches!(self, Symbol::Alpha(..) | Symbol::Beta(..))
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::Alpha(a, b) => write!(f, "alpha[{a},{b}]"),
            Symbol::Beta(a, b) => write!(f, "beta[{a},{b}]"),
            Symbol::X(m) => write!(f, "X[{m}]"),
        }
    }
}

pub(crate) fn check_spinor(what: &'static str, index: u8) -> Result<(), Error> {
    if (1..=2).contains(&index) {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange { what, index: index as i64, range: "1..=2" })
    }
}

pub(crate) fn check_lorentz(what: &'static str, index: u8) -> Result<(), Error> {
    if index <= 3 {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange { what, index: index as i64, range: "0..=3" })
    }
}

/// A power product of symbols, sorted by symbol with positive exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<(Symbol, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn symbol(s: Symbol) -> Self {
        Monomial(vec![(s, 1)])
    }

    pub fn from_powers(powers: impl IntoIterator<Item = (Symbol, u32)>) -> Self {
        let mut map = BTreeMap::new();
        for (s, e) in powers {
            *map.entry(s).or_insert(0) += e;
        }
        Monomial(map.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn powers(&self) -> &[(Symbol, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn contains(&self, pred: impl Fn(&Symbol) -> bool) -> bool {
        self.0.iter().any(|(s, _)| pred(s))
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        // merge of two sorted lists
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            let (a, ea) = self.0[i];
            let (b, eb) = other.0[j];
            match a.cmp(&b) {
                std::cmp::Ordering::Less => {
                    out.push((a, ea));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((b, eb));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a, ea + eb));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }
}

/// A polynomial with coefficients in `S`. No zero coefficient is ever stored,
/// so equality is structural.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<S> {
    terms: BTreeMap<Monomial, S>,
}

impl<S: Scalar> Poly<S> {
    pub fn constant(c: S) -> Self {
        Self::from_terms([(Monomial::one(), c)])
    }

    pub fn symbol(s: Symbol) -> Self {
        Self::from_terms([(Monomial::symbol(s), S::one())])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, S)>) -> Self {
        let mut map: BTreeMap<Monomial, S> = BTreeMap::new();
        for (m, c) in terms {
            accumulate(&mut map, m, c);
        }
        Poly { terms: map }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &S)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The constant value, if the polynomial has no symbolic monomials.
    pub fn as_constant(&self) -> Option<S> {
        match self.terms.len() {
            0 => Some(S::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, x)| (m.clone(), x.clone() * c.clone())))
    }

    /// Keeps only the monomials accepted by `keep`.
    pub fn filter(&self, keep: impl Fn(&Monomial) -> bool) -> Self {
        Poly {
            terms: self.terms.iter().filter(|(m, _)| keep(m)).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    pub fn mentions(&self, pred: impl Fn(&Symbol) -> bool + Copy) -> bool {
        self.terms.keys().any(|m| m.contains(pred))
    }

    /// Replaces symbols by polynomials; symbols mapped to `None` are kept.
    pub fn substitute(&self, f: &impl Fn(&Symbol) -> Option<Poly<S>>) -> Self {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut term = Poly::constant(c.clone());
            for &(s, e) in m.powers() {
                let factor = f(&s).unwrap_or_else(|| Poly::symbol(s));
                for _ in 0..e {
                    term = term * factor.clone();
                }
            }
            out = out + term;
        }
        out
    }
}

fn accumulate<S: Scalar>(map: &mut BTreeMap<Monomial, S>, m: Monomial, c: S) {
    if c.is_zero() {
        return;
    }
    match map.remove(&m) {
        Some(prev) => {
            let sum = prev + c;
            if !sum.is_zero() {
                map.insert(m, sum);
            }
        }
        None => {
            map.insert(m, c);
        }
    }
}

impl<S: Scalar> Zero for Poly<S> {
    fn zero() -> Self {
        Poly { terms: BTreeMap::new() }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<S: Scalar> One for Poly<S> {
    fn one() -> Self {
        Poly::constant(S::one())
    }
}

impl<S: Scalar> Add for Poly<S> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        let mut map = self.terms;
        for (m, c) in rhs.terms {
            accumulate(&mut map, m, c);
        }
        Poly { terms: map }
    }
}

impl<S: Scalar> Neg for Poly<S> {
    type Output = Self;

    fn neg(self) -> Self {
        Poly { terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect() }
    }
}

impl<S: Scalar> Sub for Poly<S> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<S: Scalar> Mul for Poly<S> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        let mut map = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                accumulate(&mut map, ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        Poly { terms: map }
    }
}

impl<S: Scalar> Scalar for Poly<S> {
    fn from_ratio(num: i64, den: i64) -> Self {
        Poly::constant(S::from_ratio(num, den))
    }
}

impl<S: Scalar> From<Symbol> for Poly<S> {
    fn from(s: Symbol) -> Self {
        Poly::symbol(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{gaussian, imag_unit};
    use crate::Coeff;

    fn x(mu: u8) -> Coeff {
        Coeff::symbol(Symbol::X(mu))
    }

    fn c(re: i64, im: i64) -> Coeff {
        Coeff::constant(gaussian(re, im))
    }

    #[test]
    fn conjugate_pair_adds_to_two() {
        assert_eq!(c(1, 1) + c(1, -1), c(2, 0));
    }

    #[test]
    fn additive_identity_and_inverse() {
        assert_eq!(x(0) + Coeff::zero(), x(0));
        let a = Coeff::symbol(Symbol::Alpha(1, 1));
        assert!((a.clone() + (-a)).is_zero());
    }

    #[test]
    fn i_squared() {
        let i = Coeff::constant(imag_unit());
        assert_eq!(i.clone() * i, c(-1, 0));
        assert_eq!(c(1, 1) * c(1, -1), c(2, 0));
    }

    #[test]
    fn symbols_commute() {
        let p = x(0) * x(1);
        let q = x(1) * x(0);
        assert_eq!(p, q);
        assert_eq!(p.len(), 1);
        let (m, _) = p.terms().next().unwrap();
        assert_eq!(m.powers(), &[(Symbol::X(0), 1), (Symbol::X(1), 1)]);
    }

    #[test]
    fn zero_tests() {
        assert!(Coeff::zero().is_zero());
        assert!((x(0) - x(0)).is_zero());
        assert!(!(x(0) - x(1)).is_zero());
    }

    #[test]
    fn substitution_expands_products() {
        // alpha[1,1] * x0  with alpha[1,1] -> x0 + x3
        let p = Coeff::symbol(Symbol::Alpha(1, 1)) * x(0);
        let q = p.substitute(&|s| match s {
            Symbol::Alpha(1, 1) => Some(x(0) + x(3)),
            _ => None,
        });
        assert_eq!(q, x(0) * x(0) + x(0) * x(3));
    }

    #[test]
    fn symbol_ranges() {
        assert!(Symbol::alpha(1, 2).is_ok());
        assert!(Symbol::alpha(0, 2).is_err());
        assert!(Symbol::beta(2, 3).is_err());
        assert!(Symbol::x(3).is_ok());
        assert!(Symbol::x(4).is_err());
    }

    #[test]
    fn monomial_order_is_kind_then_index() {
        assert!(Symbol::Alpha(2, 2) < Symbol::Beta(1, 1));
        assert!(Symbol::Beta(2, 2) < Symbol::X(0));
        assert!(Symbol::X(0) < Symbol::X(1));
    }
}
