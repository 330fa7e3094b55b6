//! Nonassociative words over generator atoms and their linear combinations.
//!
//! A [`Tree`] is a single parenthesized product; its shape is part of its
//! identity. A [`LinearExpr`] is a finite linear combination of trees plus a
//! scalar (unit) component. Multiplication joins trees and never
//! reassociates.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};


use crate::coeff::{check_lorentz, check_spinor};
use crate::error::Error;
use crate::scalar::Scalar;

/// A generator symbol.
///
/// The derived order is the canonical atom order used by the rewrite rules:
/// undotted generators, then dotted, then momenta, each by index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Atom {
    /// `Q_a`, `a` in `1..=2`.
    Q(u8),
    /// `Q_ȧ`, `ȧ` in `1..=2`.
    Qd(u8),
    /// `P_μ`, `μ` in `0..=3`.
    P(u8),
    /// Split-octonion basis unit `q_i`, `i` in `1..=7`.
    Oct(u8),
}

impl Atom {
    pub fn q(a: u8) -> Result<Self, Error> {
        check_spinor("Q", a)?;
        Ok(Atom::Q(a))
    }

    pub fn qd(a: u8) -> Result<Self, Error> {
        check_spinor("Qd", a)?;
        Ok(Atom::Qd(a))
    }

    pub fn p(mu: u8) -> Result<Self, Error> {
        check_lorentz("P", mu)?;
        Ok(Atom::P(mu))
    }

    pub fn oct(i: u8) -> Result<Self, Error> {
        if (1..=7).contains(&i) {
            Ok(Atom::Oct(i))
        } else {
            Err(Error::IndexOutOfRange { what: "q", index: i as i64, range: "1..=7" })
        }
    }

    /// True for the supersymmetry generators `Q_a` and `Q_ȧ`.
    pub fn is_generator(&self) -> bool {
        matches!(self, Atom::Q(_) | Atom::Qd(_))
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Q(a) => write!(f, "Q[{a}]"),
            Atom::Qd(a) => write!(f, "Qd[{a}]"),
            Atom::P(m) => write!(f, "P[{m}]"),
            Atom::Oct(i) => write!(f, "q[{i}]"),
        }
    }
}

/// A binary product tree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Tree {
    Leaf(Atom),
    Node(Box<Tree>, Box<Tree>),
}

impl Tree {
    pub fn node(left: Tree, right: Tree) -> Tree {
        Tree::Node(Box::new(left), Box::new(right))
    }

    pub fn depth(&self) -> usize {
        match self {
            Tree::Leaf(_) => 0,
            Tree::Node(l, r) => 1 + l.depth().max(r.depth()),
        }
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            Tree::Leaf(_) => 1,
            Tree::Node(l, r) => l.leaf_count() + r.leaf_count(),
        }
    }

    pub fn as_leaf(&self) -> Option<Atom> {
        match self {
            Tree::Leaf(a) => Some(*a),
            Tree::Node(..) => None,
        }
    }

    /// Leaves in left-to-right order.
    pub fn leaves(&self) -> Vec<Atom> {
        let mut out = Vec::new();
        self.push_leaves(&mut out);
        out
    }

    fn push_leaves(&self, out: &mut Vec<Atom>) {
        match self {
            Tree::Leaf(a) => out.push(*a),
            Tree::Node(l, r) => {
                l.push_leaves(out);
                r.push_leaves(out);
            }
        }
    }

    /// Preorder shape code: `true` for an internal node, `false` for a leaf.
    pub fn shape_code(&self) -> Vec<bool> {
        let mut out = Vec::new();
        self.push_shape(&mut out);
        out
    }

    fn push_shape(&self, out: &mut Vec<bool>) {
        match self {
            Tree::Leaf(_) => out.push(false),
            Tree::Node(l, r) => {
                out.push(true);
                l.push_shape(out);
                r.push_shape(out);
            }
        }
    }

    pub fn contains_atom(&self, pred: impl Fn(&Atom) -> bool + Copy) -> bool {
        match self {
            Tree::Leaf(a) => pred(a),
            Tree::Node(l, r) => l.contains_atom(pred) || r.contains_atom(pred),
        }
    }
}

impl From<Atom> for Tree {
    fn from(a: Atom) -> Self {
        Tree::Leaf(a)
    }
}

// Canonical order: depth, then leaf sequence, then shape.
impl Ord for Tree {
    fn cmp(&self, other: &Self) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        self.depth()
            .cmp(&other.depth())
            .then_with(|| self.leaves().cmp(&other.leaves()))
            .then_with(|| self.shape_code().cmp(&other.shape_code()))
    }
}

impl PartialOrd for Tree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tree::Leaf(a) => write!(f, "{a}"),
            Tree::Node(l, r) => write!(f, "({l}*{r})"),
        }
    }
}

/// A linear combination of product trees with a scalar component.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearExpr<S> {
    scalar: S,
    terms: BTreeMap<Tree, S>,
}

impl<S: Scalar> LinearExpr<S> {
    pub fn zero() -> Self {
        LinearExpr { scalar: S::zero(), terms: BTreeMap::new() }
    }

    pub fn scalar(c: S) -> Self {
        LinearExpr { scalar: c, terms: BTreeMap::new() }
    }

    pub fn atom(a: Atom) -> Self {
        Self::tree(Tree::Leaf(a))
    }

    pub fn tree(t: Tree) -> Self {
        Self::term(S::one(), t)
    }

    pub fn term(c: S, t: Tree) -> Self {
        let mut e = Self::zero();
        e.add_term(c, t);
        e
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (S, Tree)>) -> Self {
        let mut e = Self::zero();
        for (c, t) in terms {
            e.add_term(c, t);
        }
        e
    }

    /// Adds `c * t` in place, dropping the entry if it cancels.
    pub fn add_term(&mut self, c: S, t: Tree) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&t) {
            Some(prev) => {
                let sum = prev + c;
                if !sum.is_zero() {
                    self.terms.insert(t, sum);
                }
            }
            None => {
                self.terms.insert(t, c);
            }
        }
    }

    pub fn add_scalar(&mut self, c: S) {
        let s = std::mem::replace(&mut self.scalar, S::zero());
        self.scalar = s + c;
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &S, other: &LinearExpr<S>) {
        if c.is_zero() {
            return;
        }
        self.add_scalar(c.clone() * other.scalar.clone());
        for (t, x) in &other.terms {
            self.add_term(c.clone() * x.clone(), t.clone());
        }
    }

    pub fn scalar_part(&self) -> &S {
        &self.scalar
    }

    /// Tree terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Tree, &S)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, t: &Tree) -> S {
        self.terms.get(t).cloned().unwrap_or_else(S::zero)
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.scalar.is_zero() && self.terms.is_empty()
    }

    /// True when there are no tree terms.
    pub fn is_scalar(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Self::zero();
        out.add_scaled(c, self);
        out
    }

    pub fn map_coefficients(&self, f: impl Fn(&S) -> S) -> Self {
        let mut out = Self::scalar(f(&self.scalar));
        for (t, c) in &self.terms {
            out.add_term(f(c), t.clone());
        }
        out
    }

    /// Bilinear product. Each pair of trees is joined under a new root.
    pub fn product(&self, rhs: &Self) -> Self {
        let mut out = Self::scalar(self.scalar.clone() * rhs.scalar.clone());
        if !self.scalar.is_zero() {
            for (t, c) in &rhs.terms {
                out.add_term(self.scalar.clone() * c.clone(), t.clone());
            }
        }
        for (s, a) in &self.terms {
            if !rhs.scalar.is_zero() {
                out.add_term(a.clone() * rhs.scalar.clone(), s.clone());
            }
            for (t, b) in &rhs.terms {
                out.add_term(a.clone() * b.clone(), Tree::node(s.clone(), t.clone()));
            }
        }
        out
    }
}

impl<S: Scalar> Default for LinearExpr<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Scalar> From<Atom> for LinearExpr<S> {
    fn from(a: Atom) -> Self {
        Self::atom(a)
    }
}

impl<S: Scalar> From<Tree> for LinearExpr<S> {
    fn from(t: Tree) -> Self {
        Self::tree(t)
    }
}

impl<S: Scalar> Add<&LinearExpr<S>> for &LinearExpr<S> {
    type Output = LinearExpr<S>;

    fn add(self, rhs: &LinearExpr<S>) -> LinearExpr<S> {
        let mut out = self.clone();
        out.add_scaled(&S::one(), rhs);
        out
    }
}

impl<S: Scalar> Sub<&LinearExpr<S>> for &LinearExpr<S> {
    type Output = LinearExpr<S>;

    fn sub(self, rhs: &LinearExpr<S>) -> LinearExpr<S> {
        let mut out = self.clone();
        out.add_scaled(&-S::one(), rhs);
        out
    }
}

impl<S: Scalar> Mul<&LinearExpr<S>> for &LinearExpr<S> {
    type Output = LinearExpr<S>;

    fn mul(self, rhs: &LinearExpr<S>) -> LinearExpr<S> {
        self.product(rhs)
    }
}

impl<S: Scalar> Neg for &LinearExpr<S> {
    type Output = LinearExpr<S>;

    fn neg(self) -> LinearExpr<S> {
        self.scale(&-S::one())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl<S: Scalar> $tr for LinearExpr<S> {
            type Output = LinearExpr<S>;
            fn $m(self, rhs: LinearExpr<S>) -> LinearExpr<S> {
                (&self).$m(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl<S: Scalar> Neg for LinearExpr<S> {
    type Output = LinearExpr<S>;

    fn neg(self) -> LinearExpr<S> {
        -&self
    }
}

/// `ab - ba`.
pub fn commutator<S: Scalar>(a: &LinearExpr<S>, b: &LinearExpr<S>) -> LinearExpr<S> {
    &(a * b) - &(b * a)
}

/// `ab + ba`.
pub fn anticommutator<S: Scalar>(a: &LinearExpr<S>, b: &LinearExpr<S>) -> LinearExpr<S> {
    &(a * b) + &(b * a)
}

/// `(xy)z - x(yz)`.
pub fn associator<S: Scalar>(x: &LinearExpr<S>, y: &LinearExpr<S>, z: &LinearExpr<S>) -> LinearExpr<S> {
    &(&(x * y) * z) - &(x * &(y * z))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Coeff, Expr};
    use num_traits::Zero;

    fn leaf(a: Atom) -> Tree {
        Tree::Leaf(a)
    }

    fn e(a: Atom) -> Expr {
        Expr::atom(a)
    }

    fn k(n: i64) -> Coeff {
        Coeff::from_int(n)
    }

    #[test]
    fn product_is_a_single_node() {
        let p = e(Atom::Q(1)) * e(Atom::Qd(1));
        assert_eq!(p, Expr::tree(Tree::node(leaf(Atom::Q(1)), leaf(Atom::Qd(1)))));
    }

    #[test]
    fn product_of_pairs_is_balanced() {
        let left = e(Atom::Q(1)) * e(Atom::Qd(1));
        let right = e(Atom::Q(2)) * e(Atom::Qd(2));
        let p = left * right;
        let (t, _) = p.terms().next().unwrap();
        assert_eq!(t.depth(), 2);
        assert_eq!(t.shape_code(), vec![true, true, false, false, true, false, false]);
    }

    #[test]
    fn bilinear_scaling() {
        let p = e(Atom::Q(1)).scale(&k(2)) * e(Atom::Q(2)).scale(&k(3));
        assert_eq!(p, Expr::term(k(6), Tree::node(leaf(Atom::Q(1)), leaf(Atom::Q(2)))));
    }

    #[test]
    fn addition_cancels() {
        let q = e(Atom::Q(1));
        assert!((&q + &q.scale(&k(-1))).is_zero());
        let z = (e(Atom::Q(1)) * e(Atom::Q(2))).scale(&Coeff::zero());
        assert!(z.is_zero());
        assert_eq!((e(Atom::Q(1)) + e(Atom::Q(2))).term_count(), 2);
    }

    #[test]
    fn brackets() {
        let a = anticommutator(&e(Atom::Q(1)), &e(Atom::Qd(1)));
        let expected = Expr::from_terms([
            (k(1), Tree::node(leaf(Atom::Q(1)), leaf(Atom::Qd(1)))),
            (k(1), Tree::node(leaf(Atom::Qd(1)), leaf(Atom::Q(1)))),
        ]);
        assert_eq!(a, expected);
        assert!(commutator(&e(Atom::Q(1)), &e(Atom::Q(1))).is_zero());
        let c = commutator(&e(Atom::P(0)), &e(Atom::P(1)));
        assert_eq!(c.coefficient(&Tree::node(leaf(Atom::P(0)), leaf(Atom::P(1)))), k(1));
        assert_eq!(c.coefficient(&Tree::node(leaf(Atom::P(1)), leaf(Atom::P(0)))), k(-1));
    }

    #[test]
    fn associator_shapes() {
        let (x, y, z) = (Atom::Q(1), Atom::Q(2), Atom::Qd(1));
        let a = associator(&e(x), &e(y), &e(z));
        let left = Tree::node(Tree::node(leaf(x), leaf(y)), leaf(z));
        let right = Tree::node(leaf(x), Tree::node(leaf(y), leaf(z)));
        assert_ne!(left, right);
        assert_eq!(a, Expr::from_terms([(k(1), left), (k(-1), right)]));
    }

    #[test]
    fn unit_is_associative() {
        let one = Expr::scalar(k(1));
        assert!(associator(&one, &e(Atom::Q(1)), &e(Atom::P(2))).is_zero());
    }

    #[test]
    fn associator_is_trilinear() {
        let (x, y, z) = (e(Atom::Q(1)), e(Atom::Qd(2)), e(Atom::P(3)));
        assert_eq!(associator(&x.scale(&k(2)), &y, &z), associator(&x, &y, &z).scale(&k(2)));
    }

    #[test]
    fn canonical_tree_order() {
        let a = leaf(Atom::P(0));
        let b = Tree::node(leaf(Atom::Q(1)), leaf(Atom::Q(2)));
        assert!(a < b, "depth first");
        let c = Tree::node(leaf(Atom::Q(1)), leaf(Atom::Qd(1)));
        assert!(b < c, "then leaves");
        let l = Tree::node(Tree::node(leaf(Atom::Q(1)), leaf(Atom::Q(2))), leaf(Atom::Q(1)));
        let r = Tree::node(leaf(Atom::Q(1)), Tree::node(leaf(Atom::Q(2)), leaf(Atom::Q(1))));
        assert!(r < l, "then shape");
    }

    #[test]
    fn atom_ranges() {
        assert!(Atom::q(3).is_err());
        assert!(Atom::qd(0).is_err());
        assert!(Atom::p(4).is_err());
        assert!(Atom::oct(8).is_err());
        assert!(Atom::oct(7).is_ok());
    }
}
