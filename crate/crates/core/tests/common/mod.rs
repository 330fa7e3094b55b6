//! Seeded random generators shared by the integration tests.

#![allow(dead_code)]

use nasusy_core::scalar::Scalar;
use nasusy_core::{Atom, Coeff, Expr, Monomial, Symbol, Tree};
use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::Rng;

pub const GENERATORS: [Atom; 4] = [Atom::Q(1), Atom::Q(2), Atom::Qd(1), Atom::Qd(2)];

pub fn all_atoms() -> Vec<Atom> {
    let mut v = GENERATORS.to_vec();
    v.extend((0..4).map(Atom::P));
    v.extend((1..8).map(Atom::Oct));
    v
}

pub fn all_symbols() -> Vec<Symbol> {
    let mut v = Vec::new();
    for a in 1..=2 {
        for b in 1..=2 {
            v.push(Symbol::Alpha(a, b));
            v.push(Symbol::Beta(a, b));
        }
    }
    v.extend((0..4).map(Symbol::X));
    v
}

pub fn rational(rng: &mut impl Rng) -> BigRational {
    let n: i64 = rng.gen_range(-9..=9);
    let d: i64 = rng.gen_range(1..=6);
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn gaussian(rng: &mut impl Rng) -> Complex<BigRational> {
    let im = if rng.gen_bool(0.5) { rational(rng) } else { BigRational::from_int(0) };
    Complex::new(rational(rng), im)
}

pub fn monomial(rng: &mut impl Rng) -> Monomial {
    let symbols = all_symbols();
    let k = rng.gen_range(0..=2);
    Monomial::from_powers((0..k).map(|_| (*symbols.choose(rng).unwrap(), rng.gen_range(1..=2))))
}

pub fn coeff(rng: &mut impl Rng) -> Coeff {
    let k = rng.gen_range(0..=3);
    Coeff::from_terms((0..k).map(|_| (monomial(rng), gaussian(rng))))
}

pub fn tree(rng: &mut impl Rng, atoms: &[Atom], leaves: usize) -> Tree {
    if leaves <= 1 {
        return Tree::Leaf(*atoms.choose(rng).unwrap());
    }
    let left = rng.gen_range(1..leaves);
    Tree::node(tree(rng, atoms, left), tree(rng, atoms, leaves - left))
}

pub fn expr(rng: &mut impl Rng, atoms: &[Atom], max_leaves: usize, max_terms: usize) -> Expr {
    let mut e = if rng.gen_bool(0.3) { Expr::scalar(coeff(rng)) } else { Expr::zero() };
    for _ in 0..rng.gen_range(0..=max_terms) {
        let leaves = rng.gen_range(1..=max_leaves);
        let t = tree(rng, atoms, leaves);
        e.add_term(coeff(rng), t);
    }
    e
}

/// Expressions in the supersymmetry generators and momenta, the shapes the
/// rewrite rules act on.
pub fn licensed_expr(rng: &mut impl Rng) -> Expr {
    let mut atoms = GENERATORS.to_vec();
    atoms.extend([Atom::P(0), Atom::P(2)]);
    let mut e = Expr::zero();
    for _ in 0..rng.gen_range(1..=2) {
        let leaves = rng.gen_range(2..=4);
        let t = tree(rng, &atoms, leaves);
        e.add_term(Coeff::from_int(rng.gen_range(-3..=3)), t);
    }
    e
}
