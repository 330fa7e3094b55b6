//! Deterministic, fully parenthesized text form of coefficients and
//! expressions. Everything printed here parses back to the same value.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::coeff::Monomial;
use crate::term::Tree;
use crate::{Coeff, Expr, GaussianRational};

fn rational(r: &BigRational) -> String {
    r.to_string()
}

/// Standalone rendering of a Gaussian rational, e.g. `3/2`, `-i`, `(1 - 2*i)`.
pub fn format_gaussian(g: &GaussianRational) -> String {
    let (neg, body) = term_body(g, &Monomial::one(), None);
    if neg {
        format!("-{body}")
    } else {
        body
    }
}

/// Sign and unsigned factor string for the numeric part of a term.
fn numeric_factor(g: &GaussianRational) -> (bool, Option<String>) {
    if g.im.is_zero() {
        let mag = g.re.abs();
        (g.re.is_negative(), (!mag.is_one()).then(|| rational(&mag)))
    } else if g.re.is_zero() {
        let mag = g.im.abs();
        let s = if mag.is_one() { "i".to_string() } else { format!("{}*i", rational(&mag)) };
        (g.im.is_negative(), Some(s))
    } else {
        let sign = if g.im.is_negative() { '-' } else { '+' };
        let mag = g.im.abs();
        let im = if mag.is_one() { "i".to_string() } else { format!("{}*i", rational(&mag)) };
        (false, Some(format!("({} {sign} {im})", rational(&g.re))))
    }
}

fn term_body(g: &GaussianRational, m: &Monomial, tree: Option<&Tree>) -> (bool, String) {
    let (neg, num) = numeric_factor(g);
    let mut factors: Vec<String> = num.into_iter().collect();
    for (s, e) in m.powers() {
        for _ in 0..*e {
            factors.push(s.to_string());
        }
    }
    if let Some(t) = tree {
        factors.push(t.to_string());
    }
    if factors.is_empty() {
        factors.push("1".to_string());
    }
    (neg, factors.join("*"))
}

fn join_terms(terms: Vec<(bool, String)>) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (neg, body)) in terms.into_iter().enumerate() {
        match (k, neg) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        out.push_str(&body);
    }
    out
}

fn coeff_terms(c: &Coeff, tree: Option<&Tree>) -> Vec<(bool, String)> {
    match (c.len(), tree) {
        (1, _) | (_, None) => c.terms().map(|(m, g)| term_body(g, m, tree)).collect(),
        (_, Some(t)) => vec![(false, format!("({})*{}", format_coeff(c), t))],
    }
}

/// Renders a coefficient polynomial with monomials in canonical order.
pub fn format_coeff(c: &Coeff) -> String {
    join_terms(coeff_terms(c, None))
}

/// Renders an expression: scalar monomials first, then tree terms in
/// canonical tree order. The zero expression prints as `0`.
pub fn pretty_print(e: &Expr) -> String {
    let mut terms = coeff_terms(e.scalar_part(), None);
    for (t, c) in e.terms() {
        terms.extend(coeff_terms(c, Some(t)));
    }
    join_terms(terms)
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&pretty_print(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Symbol;
    use crate::scalar::{gaussian, Scalar};
    use crate::term::Atom;

    fn leaf(a: Atom) -> Tree {
        Tree::Leaf(a)
    }

    #[test]
    fn single_node() {
        let e = Expr::tree(Tree::node(leaf(Atom::Q(1)), leaf(Atom::Qd(1))));
        assert_eq!(pretty_print(&e), "(Q[1]*Qd[1])");
    }

    #[test]
    fn momentum_sum() {
        let e = Expr::from_terms([(Coeff::from_int(2), leaf(Atom::P(3))), (Coeff::from_int(2), leaf(Atom::P(0)))]);
        assert_eq!(pretty_print(&e), "2*P[0] + 2*P[3]");
    }

    #[test]
    fn zero() {
        assert_eq!(pretty_print(&Expr::zero()), "0");
    }

    #[test]
    fn gaussians() {
        assert_eq!(format_gaussian(&gaussian(0, 0)), "0");
        assert_eq!(format_gaussian(&gaussian(0, -1)), "-i");
        assert_eq!(format_gaussian(&gaussian(0, 3)), "3*i");
        assert_eq!(format_gaussian(&gaussian(1, -2)), "(1 - 2*i)");
        assert_eq!(format_gaussian(&GaussianRational::from_ratio(-1, 4)), "-1/4");
    }

    #[test]
    fn signs_and_polynomial_coefficients() {
        let x0 = Coeff::symbol(Symbol::X(0));
        let x1 = Coeff::symbol(Symbol::X(1));
        let e = Expr::from_terms([
            (-x0.clone(), leaf(Atom::P(1))),
            (x0.clone() - x1, leaf(Atom::P(2))),
            (Coeff::constant(gaussian(0, -2)), leaf(Atom::P(3))),
        ]);
        assert_eq!(pretty_print(&e), "-X[0]*P[1] + (X[0] - X[1])*P[2] - 2*i*P[3]");
        let s = Expr::scalar(x0.clone() * x0 + Coeff::from_int(-1));
        assert_eq!(pretty_print(&s), "-1 + X[0]*X[0]");
    }
}
