//! Oriented rewrite rules for the generator algebra and the normalizer.
//!
//! Rules fire only at their licensed shapes:
//!
//! * leaf pairs of two generators of the same chirality are put in index
//!   order by anticommutation, and a repeated generator squares to zero;
//! * a dotted-undotted leaf pair `Qd Q` becomes `-Q Qd + 2 σ^μ P_μ`;
//! * a momentum leaf followed by a generator leaf commutes past it;
//! * a subtree whose three leaves are all generators is associative, so a
//!   left-nested triple is rewritten right-nested, and a right-nested triple
//!   whose outer pair is out of order is reordered through the associative
//!   form.
//!
//! Momentum atoms never commute with each other. `P` moves only past a single
//! generator leaf, never past a product subtree.

use std::collections::HashMap;

use num_traits::Zero;

use crate::scalar::Scalar;
use crate::sigma::{SigmaTable, LORENTZ};
use crate::term::{Atom, Tree};
use crate::{Coeff, Expr};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    /// `Q_a Q_b` with `a >= b` (or the dotted analogue).
    Anticommute,
    /// `Qd_ȧ Q_a` to `-Q_a Qd_ȧ + 2 σ^μ_{aȧ} P_μ`.
    MixedPair,
    /// `P_μ Q` to `Q P_μ`.
    MomentumPastGenerator,
    /// `(x y) z` to `x (y z)` for generators `x, y, z`.
    ReassociateTriple,
    /// `x (y z)` with `x, y` out of order, via `(x y) z`.
    ExchangeTriple,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// A rule applicable at a position in a tree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Redex {
    pub path: Vec<Side>,
    pub rule: Rule,
}

/// `x` must come after `y` (or equal it) for the pair to be rewritten.
fn out_of_order(x: Atom, y: Atom) -> bool {
    match (x, y) {
        (Atom::Q(_), Atom::Q(_)) | (Atom::Qd(_), Atom::Qd(_)) => x >= y,
        (Atom::Qd(_), Atom::Q(_)) => true,
        _ => false,
    }
}

fn pair_rule(x: Atom, y: Atom) -> Option<Rule> {
    match (x, y) {
        (Atom::Q(_), Atom::Q(_)) | (Atom::Qd(_), Atom::Qd(_)) if x >= y => Some(Rule::Anticommute),
        (Atom::Qd(_), Atom::Q(_)) => Some(Rule::MixedPair),
        (Atom::P(_), Atom::Q(_) | Atom::Qd(_)) => Some(Rule::MomentumPastGenerator),
        _ => None,
    }
}

fn generator_leaf(t: &Tree) -> Option<Atom> {
    t.as_leaf().filter(Atom::is_generator)
}

/// The rule that applies at the root of `t`, if any.
pub fn rule_at(t: &Tree) -> Option<Rule> {
    let Tree::Node(l, r) = t else {
        return None;
    };
    match (l.as_ref(), r.as_ref()) {
        (Tree::Leaf(x), Tree::Leaf(y)) => pair_rule(*x, *y),
        (Tree::Node(x, y), z) => {
            let all = generator_leaf(x).and(generator_leaf(y)).and(generator_leaf(z));
            all.map(|_| Rule::ReassociateTriple)
        }
        (x, Tree::Node(y, z)) => {
            let (x, y) = (generator_leaf(x)?, generator_leaf(y)?);
            generator_leaf(z)?;
            out_of_order(x, y).then_some(Rule::ExchangeTriple)
        }
    }
}

/// All redexes of `t`, innermost first, left before right.
pub fn redexes(t: &Tree) -> Vec<Redex> {
    let mut out = Vec::new();
    let mut path = Vec::new();
    collect(t, &mut path, &mut out);
    out
}

fn collect(t: &Tree, path: &mut Vec<Side>, out: &mut Vec<Redex>) {
    if let Tree::Node(l, r) = t {
        path.push(Side::Left);
        collect(l, path, out);
        path.pop();
        path.push(Side::Right);
        collect(r, path, out);
        path.pop();
    }
    if let Some(rule) = rule_at(t) {
        out.push(Redex { path: path.clone(), rule });
    }
}

pub fn is_normal(t: &Tree) -> bool {
    redexes(t).is_empty()
}

/// `2 σ^μ_{aȧ} P_μ` as coefficient-tree pairs.
pub(crate) fn two_sigma_momentum(a: u8, ad: u8) -> Vec<(Coeff, Tree)> {
    let table = SigmaTable::get();
    LORENTZ
        .iter()
        .filter(|&&mu| !table.lower(mu, a, ad).is_zero())
        .map(|&mu| (Coeff::constant(table.lower(mu, a, ad).clone()) * Coeff::from_int(2), Tree::Leaf(Atom::P(mu))))
        .collect()
}

fn index(a: Atom) -> u8 {
    match a {
        Atom::Q(i) | Atom::Qd(i) | Atom::P(i) | Atom::Oct(i) => i,
    }
}

fn leaf(a: Atom) -> Tree {
    Tree::Leaf(a)
}

fn minus_one() -> Coeff {
    Coeff::from_int(-1)
}

/// Applies `rule` at the root of `t`. The rule must match.
fn apply_root(t: &Tree, rule: Rule) -> Vec<(Coeff, Tree)> {
    let Tree::Node(l, r) = t else {
        unreachable!("rules only match internal nodes");
    };
    match rule {
        Rule::Anticommute => {
            let (x, y) = (l.as_leaf().unwrap(), r.as_leaf().unwrap());
            if x == y {
                Vec::new()
            } else {
                vec![(minus_one(), Tree::node(leaf(y), leaf(x)))]
            }
        }
        Rule::MixedPair => {
            let (x, y) = (l.as_leaf().unwrap(), r.as_leaf().unwrap());
            let mut out = vec![(minus_one(), Tree::node(leaf(y), leaf(x)))];
            out.extend(two_sigma_momentum(index(y), index(x)));
            out
        }
        Rule::MomentumPastGenerator => vec![(Coeff::from_int(1), Tree::node((**r).clone(), (**l).clone()))],
        Rule::ReassociateTriple => {
            let Tree::Node(x, y) = l.as_ref() else { unreachable!() };
            vec![(Coeff::from_int(1), Tree::node((**x).clone(), Tree::node((**y).clone(), (**r).clone())))]
        }
        Rule::ExchangeTriple => {
            let Tree::Node(y, z) = r.as_ref() else { unreachable!() };
            let (x, y) = (l.as_leaf().unwrap(), y.as_leaf().unwrap());
            let z = (**z).clone();
            if x == y {
                return Vec::new();
            }
            let mut out = vec![(minus_one(), Tree::node(leaf(y), Tree::node(leaf(x), z.clone())))];
            if matches!(x, Atom::Qd(_)) && matches!(y, Atom::Q(_)) {
                for (c, p) in two_sigma_momentum(index(y), index(x)) {
                    out.push((c, Tree::node(p, z.clone())));
                }
            }
            out
        }
    }
}

fn rewrite_at(t: &Tree, path: &[Side], rule: Rule) -> Vec<(Coeff, Tree)> {
    match path.split_first() {
        None => apply_root(t, rule),
        Some((side, rest)) => {
            let Tree::Node(l, r) = t else {
                unreachable!("redex path leads through internal nodes");
            };
            match side {
                Side::Left => rewrite_at(l, rest, rule).into_iter().map(|(c, s)| (c, Tree::node(s, (**r).clone()))).collect(),
                Side::Right => rewrite_at(r, rest, rule).into_iter().map(|(c, s)| (c, Tree::node((**l).clone(), s))).collect(),
            }
        }
    }
}

/// One rewrite step of `t` at `redex`.
pub fn rewrite(t: &Tree, redex: &Redex) -> Expr {
    Expr::from_terms(rewrite_at(t, &redex.path, redex.rule))
}

/// Normal form under the rules, using the innermost-leftmost strategy.
pub fn normalize(e: &Expr) -> Expr {
    let mut memo = HashMap::new();
    let mut out = Expr::scalar(e.scalar_part().clone());
    for (t, c) in e.terms() {
        let nf = normal_form(t, &mut memo);
        out.add_scaled(c, &nf);
    }
    out
}

/// Normal form of a single tree.
pub fn normalize_tree(t: &Tree) -> Expr {
    normal_form(t, &mut HashMap::new())
}

fn normal_form(t: &Tree, memo: &mut HashMap<Tree, Expr>) -> Expr {
    if let Some(e) = memo.get(t) {
        return e.clone();
    }
    let result = match redexes(t).into_iter().next() {
        None => Expr::tree(t.clone()),
        Some(r) => {
            let mut out = Expr::zero();
            for (c, s) in rewrite_at(t, &r.path, r.rule) {
                let nf = normal_form(&s, memo);
                out.add_scaled(&c, &nf);
            }
            out
        }
    };
    memo.insert(t.clone(), result.clone());
    result
}

/// Normalizes by repeatedly applying one redex picked among all redexes of
/// all terms. `choose(n)` selects an index in `0..n`; any out-of-range value
/// is reduced modulo `n`.
pub fn normalize_with(e: &Expr, mut choose: impl FnMut(usize) -> usize) -> Expr {
    let mut current = e.clone();
    loop {
        let candidates: Vec<(Tree, Redex)> =
            current.terms().flat_map(|(t, _)| redexes(t).into_iter().map(move |r| (t.clone(), r))).collect();
        if candidates.is_empty() {
            return current;
        }
        let (t, r) = &candidates[choose(candidates.len()) % candidates.len()];
        let c = current.coefficient(t);
        current.add_term(-c.clone(), t.clone());
        current.add_scaled(&c, &rewrite(t, r));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::gaussian;

    fn l(a: Atom) -> Tree {
        Tree::Leaf(a)
    }

    fn n(a: Tree, b: Tree) -> Tree {
        Tree::node(a, b)
    }

    fn k(v: i64) -> Coeff {
        Coeff::from_int(v)
    }

    #[test]
    fn nilpotent_pairs() {
        for i in [1, 2] {
            assert!(normalize_tree(&n(l(Atom::Q(i)), l(Atom::Q(i)))).is_zero());
            assert!(normalize_tree(&n(l(Atom::Qd(i)), l(Atom::Qd(i)))).is_zero());
        }
    }

    #[test]
    fn same_chirality_anticommutes() {
        let nf = normalize_tree(&n(l(Atom::Q(2)), l(Atom::Q(1))));
        assert_eq!(nf, Expr::term(k(-1), n(l(Atom::Q(1)), l(Atom::Q(2)))));
    }

    #[test]
    fn mixed_pair() {
        let nf = normalize_tree(&n(l(Atom::Qd(1)), l(Atom::Q(1))));
        let expected = Expr::from_terms([
            (k(-1), n(l(Atom::Q(1)), l(Atom::Qd(1)))),
            (k(2), l(Atom::P(0))),
            (k(2), l(Atom::P(3))),
        ]);
        assert_eq!(nf, expected);
    }

    #[test]
    fn mixed_pair_imaginary_entry() {
        // Qd_2 Q_1 = -Q_1 Qd_2 + 2 P_1 - 2i P_2
        let nf = normalize_tree(&n(l(Atom::Qd(2)), l(Atom::Q(1))));
        let expected = Expr::from_terms([
            (k(-1), n(l(Atom::Q(1)), l(Atom::Qd(2)))),
            (k(2), l(Atom::P(1))),
            (Coeff::constant(gaussian(0, -2)), l(Atom::P(2))),
        ]);
        assert_eq!(nf, expected);
    }

    #[test]
    fn momentum_moves_right_of_a_generator_leaf_only() {
        let nf = normalize_tree(&n(l(Atom::P(2)), l(Atom::Qd(1))));
        assert_eq!(nf, Expr::tree(n(l(Atom::Qd(1)), l(Atom::P(2)))));
        let product = n(l(Atom::P(2)), n(l(Atom::Q(1)), l(Atom::Qd(1))));
        assert!(is_normal(&product));
        let pp = n(l(Atom::P(2)), l(Atom::P(1)));
        assert!(is_normal(&pp));
    }

    #[test]
    fn generator_triple_example() {
        // (Q2 Q1) Qd1 -> -Q1 (Q2 Qd1)
        let t = n(n(l(Atom::Q(2)), l(Atom::Q(1))), l(Atom::Qd(1)));
        let expected = Expr::term(k(-1), n(l(Atom::Q(1)), n(l(Atom::Q(2)), l(Atom::Qd(1)))));
        assert_eq!(normalize_tree(&t), expected);
        // the alternative route through reassociation first
        let right = n(l(Atom::Q(2)), n(l(Atom::Q(1)), l(Atom::Qd(1))));
        assert_eq!(normalize_tree(&right), expected);
    }

    #[test]
    fn triples_with_momentum_are_not_reassociated() {
        let t = n(n(l(Atom::Q(1)), l(Atom::Q(2))), l(Atom::P(0)));
        assert!(is_normal(&t));
    }

    #[test]
    fn four_generators_are_left_alone() {
        let t = n(n(l(Atom::Q(1)), l(Atom::Qd(1))), n(l(Atom::Q(2)), l(Atom::Qd(2))));
        assert!(is_normal(&t));
    }

    #[test]
    fn exchange_produces_momentum_terms() {
        // Qd1 (Q1 Q2) = (Qd1 Q1) Q2 = -Q1 Qd1 Q2 + 2(P0 + P3) Q2
        //            = Q1 (Q2 Qd1) - 2 Q1 (P1 + i P2) + 2 Q2 (P0 + P3)
        let t = n(l(Atom::Qd(1)), n(l(Atom::Q(1)), l(Atom::Q(2))));
        let expected = Expr::from_terms([
            (k(1), n(l(Atom::Q(1)), n(l(Atom::Q(2)), l(Atom::Qd(1))))),
            (k(-2), n(l(Atom::Q(1)), l(Atom::P(1)))),
            (k(2), n(l(Atom::Q(2)), l(Atom::P(0)))),
            (k(2), n(l(Atom::Q(2)), l(Atom::P(3)))),
            (Coeff::constant(gaussian(0, -2)), n(l(Atom::Q(1)), l(Atom::P(2)))),
        ]);
        assert_eq!(normalize_tree(&t), expected);
    }

    #[test]
    fn random_order_agrees_on_example() {
        let t = n(n(l(Atom::Qd(1)), l(Atom::Q(1))), l(Atom::Q(2)));
        let reference = normalize_tree(&t);
        let e = Expr::tree(t);
        for seed in 0..20usize {
            let mut s = seed;
            let nf = normalize_with(&e, |k| {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                (s >> 33) % k
            });
            assert_eq!(nf, reference);
        }
    }
}
