//! Recursive-descent parser for operator expressions.
//!
//! The grammar is in `grammar.ebnf` at the crate root. Products are binary:
//! a chain `a*b*c` with three or more operator-valued factors has no single
//! meaning in a nonassociative algebra, so strict mode rejects it and
//! permissive mode nests it to the left and records a warning. Scalar
//! factors (numbers, `i`, `X[m]`, `alpha[..]`, `beta[..]`) are central and
//! never count toward the chain length.

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::coeff::Symbol;
use crate::error::Error;
use crate::scalar::imag_unit;
use crate::term::{anticommutator, associator, commutator, Atom};
use crate::{Coeff, Expr};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ParseMode {
    #[default]
    Strict,
    Permissive,
}

/// Which atoms are admissible.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Algebra {
    /// Every atom kind; used for round trips of arbitrary expressions.
    #[default]
    Any,
    /// `Q`, `Qd`, `P` and coefficient symbols; no `q[i]`.
    Susy,
    /// `q[i]` and coefficient symbols; no `Q`, `Qd`, `P`.
    Octonion,
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algebra::Any => "any",
            Algebra::Susy => "susy",
            Algebra::Octonion => "octonion",
        })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ParseOptions {
    pub mode: ParseMode,
    pub algebra: Algebra,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    IndexOutOfRange { what: &'static str, index: i64, range: &'static str },
    /// A product chain with three or more operator factors, in source form.
    Ambiguous(String),
    WrongAlgebra { atom: String, algebra: Algebra },
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::Syntax(msg) => f.write_str(msg),
            ParseErrorKind::IndexOutOfRange { what, index, range } => {
                write!(f, "{what} index {index} out of range {range}")
            }
            ParseErrorKind::Ambiguous(product) => {
                write!(f, "ambiguous product `{product}`: parenthesize it")
            }
            ParseErrorKind::WrongAlgebra { atom, algebra } => {
                write!(f, "{atom} is not allowed in the {algebra} algebra")
            }
        }
    }
}

/// Positions are 1-based and count characters.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{line}:{column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

/// A parsed expression and any permissive-mode warnings.
#[derive(Clone, Debug, PartialEq)]
pub struct Parsed {
    pub expr: Expr,
    pub warnings: Vec<String>,
}

pub fn parse(text: &str, mode: ParseMode) -> Result<Expr, ParseError> {
    parse_with(text, ParseOptions { mode, algebra: Algebra::Any }).map(|p| p.expr)
}

pub fn parse_with(text: &str, options: ParseOptions) -> Result<Parsed, ParseError> {
    let tokens = lex(text)?;
    let mut p = Parser { tokens, pos: 0, options, warnings: Vec::new(), text };
    let expr = p.sum()?;
    match p.peek() {
        Tok::End => Ok(Parsed { expr, warnings: p.warnings }),
        t => Err(p.error_here(ParseErrorKind::Syntax(format!("unexpected {}", t.describe())))),
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ratio(BigInt, BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("number {n}"),
            Tok::Ratio(n, d) => format!("number {n}/{d}"),
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::LBracket => "`[`".into(),
            Tok::RBracket => "`]`".into(),
            Tok::Comma => "`,`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
    offset: usize,
}

fn lex(text: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    let (mut line, mut column) = (1, 1);
    while let Some(&(offset, c)) = chars.peek() {
        let (l, col) = (line, column);
        let mut bump = |chars: &mut std::iter::Peekable<std::str::CharIndices>| {
            let (_, c) = chars.next().unwrap();
            if c == '\n' {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
        };
        let tok = match c {
            c if c.is_whitespace() => {
                bump(&mut chars);
                continue;
            }
            '0'..='9' => {
                let mut num = String::new();
                while let Some(&(_, d)) = chars.peek().filter(|(_, d)| d.is_ascii_digit()) {
                    num.push(d);
                    bump(&mut chars);
                }
                let n: BigInt = num.parse().unwrap();
                let mut rest = chars.clone();
                let slash_then_digit = rest.next().is_some_and(|(_, s)| s == '/') && rest.peek().is_some_and(|(_, d)| d.is_ascii_digit());
                if slash_then_digit {
                    bump(&mut chars);
                    let mut den = String::new();
                    while let Some(&(_, d)) = chars.peek().filter(|(_, d)| d.is_ascii_digit()) {
                        den.push(d);
                        bump(&mut chars);
                    }
                    let d: BigInt = den.parse().unwrap();
                    if d.is_zero() {
                        return Err(ParseError { line: l, column: col, kind: ParseErrorKind::Syntax("zero denominator".into()) });
                    }
                    Tok::Ratio(n, d)
                } else {
                    Tok::Int(n)
                }
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut id = String::new();
                while let Some(&(_, d)) = chars.peek().filter(|(_, d)| d.is_ascii_alphanumeric() || *d == '_') {
                    id.push(d);
                    bump(&mut chars);
                }
                Tok::Ident(id)
            }
            _ => {
                let t = match c {
                    '+' => Tok::Plus,
                    '-' => Tok::Minus,
                    '*' => Tok::Star,
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    '[' => Tok::LBracket,
                    ']' => Tok::RBracket,
                    ',' => Tok::Comma,
                    other => {
                        return Err(ParseError {
                            line: l,
                            column: col,
                            kind: ParseErrorKind::Syntax(format!("unexpected character `{other}`")),
                        })
                    }
                };
                bump(&mut chars);
                t
            }
        };
        out.push(Spanned { tok, line: l, column: col, offset });
    }
    out.push(Spanned { tok: Tok::End, line, column, offset: text.len() });
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Spanned>,
    pos: usize,
    options: ParseOptions,
    warnings: Vec<String>,
    text: &'a str,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.tokens[self.pos].tok
    }

    fn next(&mut self) -> Spanned {
        let t = self.tokens[self.pos].clone();
        if t.tok != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn error_at(&self, at: &Spanned, kind: ParseErrorKind) -> ParseError {
        ParseError { line: at.line, column: at.column, kind }
    }

    fn error_here(&self, kind: ParseErrorKind) -> ParseError {
        self.error_at(&self.tokens[self.pos], kind)
    }

    fn expect(&mut self, want: Tok) -> Result<Spanned, ParseError> {
        if *self.peek() == want {
            Ok(self.next())
        } else {
            let msg = format!("expected {}, found {}", want.describe(), self.peek().describe());
            Err(self.error_here(ParseErrorKind::Syntax(msg)))
        }
    }

    fn sum(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.signed_product()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.next();
                    acc = &acc + &self.product()?;
                }
                Tok::Minus => {
                    self.next();
                    acc = &acc - &self.product()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn signed_product(&mut self) -> Result<Expr, ParseError> {
        if *self.peek() == Tok::Minus {
            self.next();
            Ok(-self.signed_product()?)
        } else {
            self.product()
        }
    }

    fn product(&mut self) -> Result<Expr, ParseError> {
        let start = self.tokens[self.pos].clone();
        let mut factors = vec![self.factor()?];
        while *self.peek() == Tok::Star {
            self.next();
            factors.push(self.factor()?);
        }
        let end = self.tokens[self.pos].offset;
        let (scalars, operators): (Vec<Expr>, Vec<Expr>) = factors.into_iter().partition(Expr::is_scalar);
        if operators.len() >= 3 {
            let source = self.text[start.offset..end].trim().to_string();
            match self.options.mode {
                ParseMode::Strict => return Err(self.error_at(&start, ParseErrorKind::Ambiguous(source))),
                ParseMode::Permissive => self.warnings.push(format!(
                    "{}:{}: product `{source}` of {} factors nested to the left",
                    start.line,
                    start.column,
                    operators.len()
                )),
            }
        }
        let coeff = scalars.iter().fold(Coeff::one(), |acc, s| acc * s.scalar_part().clone());
        let mut ops = operators.into_iter();
        let body = match ops.next() {
            None => Expr::scalar(Coeff::one()),
            Some(first) => ops.fold(first, |acc, f| acc.product(&f)),
        };
        Ok(body.scale(&coeff))
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let t = self.next();
        match &t.tok {
            Tok::Int(n) => Ok(Expr::scalar(Coeff::constant(Complex::new(BigRational::from_integer(n.clone()), Zero::zero())))),
            Tok::Ratio(n, d) => Ok(Expr::scalar(Coeff::constant(Complex::new(BigRational::new(n.clone(), d.clone()), Zero::zero())))),
            Tok::LParen => {
                let e = self.sum()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Tok::Minus => Ok(-self.factor()?),
            Tok::Ident(name) => self.named(&t, name),
            other => Err(self.error_at(&t, ParseErrorKind::Syntax(format!("unexpected {}", other.describe())))),
        }
    }

    fn named(&mut self, at: &Spanned, name: &str) -> Result<Expr, ParseError> {
        match name {
            "i" => Ok(Expr::scalar(Coeff::constant(imag_unit()))),
            "comm" | "acomm" => {
                let args = self.call_args(at, name, 2)?;
                Ok(if name == "comm" { commutator(&args[0], &args[1]) } else { anticommutator(&args[0], &args[1]) })
            }
            "assoc" => {
                let args = self.call_args(at, name, 3)?;
                Ok(associator(&args[0], &args[1], &args[2]))
            }
            "Q" | "Qd" | "P" | "q" | "X" => {
                let idx = self.single_index()?;
                let made = match name {
                    "Q" => Atom::q(idx.1).map(Expr::atom),
                    "Qd" => Atom::qd(idx.1).map(Expr::atom),
                    "P" => Atom::p(idx.1).map(Expr::atom),
                    "q" => Atom::oct(idx.1).map(Expr::atom),
                    _ => Symbol::x(idx.1).map(|s| Expr::scalar(Coeff::symbol(s))),
                };
                let e = self.checked(&idx.0, made, idx.2)?;
                self.admit(at, name, &e)?;
                Ok(e)
            }
            "alpha" | "beta" => {
                self.expect(Tok::LBracket)?;
                let a = self.index()?;
                self.expect(Tok::Comma)?;
                let b = self.index()?;
                self.expect(Tok::RBracket)?;
                let made = if name == "alpha" { Symbol::alpha(a.1, b.1) } else { Symbol::beta(a.1, b.1) };
                let bad = if (1..=2).contains(&a.2) { &b } else { &a };
                self.checked(&bad.0, made.map(|s| Expr::scalar(Coeff::symbol(s))), bad.2)
            }
            _ => Err(self.error_at(at, ParseErrorKind::Syntax(format!("unknown name `{name}`")))),
        }
    }

    fn admit(&self, at: &Spanned, name: &str, e: &Expr) -> Result<(), ParseError> {
        let forbidden = match self.options.algebra {
            Algebra::Any => false,
            Algebra::Susy => name == "q",
            Algebra::Octonion => matches!(name, "Q" | "Qd" | "P"),
        };
        if forbidden {
            let atom = e.terms().next().map(|(t, _)| t.to_string()).unwrap_or_else(|| name.to_string());
            Err(self.error_at(at, ParseErrorKind::WrongAlgebra { atom, algebra: self.options.algebra }))
        } else {
            Ok(())
        }
    }

    /// Maps a constructor range error onto the index token's position.
    fn checked(&self, at: &Spanned, made: Result<Expr, Error>, raw: i64) -> Result<Expr, ParseError> {
        made.map_err(|e| match e {
            Error::IndexOutOfRange { what, range, .. } => {
                self.error_at(at, ParseErrorKind::IndexOutOfRange { what, index: raw, range })
            }
            other => self.error_at(at, ParseErrorKind::Syntax(other.to_string())),
        })
    }

    fn single_index(&mut self) -> Result<(Spanned, u8, i64), ParseError> {
        self.expect(Tok::LBracket)?;
        let idx = self.index()?;
        self.expect(Tok::RBracket)?;
        Ok(idx)
    }

    /// An index token, its value clamped into `u8`, and its exact value.
    fn index(&mut self) -> Result<(Spanned, u8, i64), ParseError> {
        let negative = *self.peek() == Tok::Minus;
        let at = self.tokens[self.pos].clone();
        if negative {
            self.next();
        }
        let t = self.next();
        match t.tok {
            Tok::Int(ref n) => {
                let raw = i64::try_from(n).unwrap_or(i64::MAX);
                let raw = if negative { -raw } else { raw };
                let small = u8::try_from(raw).unwrap_or(u8::MAX);
                Ok((at, small, raw))
            }
            ref other => Err(self.error_at(&t, ParseErrorKind::Syntax(format!("expected an index, found {}", other.describe())))),
        }
    }

    fn call_args(&mut self, at: &Spanned, name: &str, arity: usize) -> Result<Vec<Expr>, ParseError> {
        self.expect(Tok::LParen)?;
        let mut args = vec![self.sum()?];
        while *self.peek() == Tok::Comma {
            self.next();
            args.push(self.sum()?);
        }
        self.expect(Tok::RParen)?;
        if args.len() != arity {
            let msg = format!("{name} takes {arity} arguments, found {}", args.len());
            return Err(self.error_at(at, ParseErrorKind::Syntax(msg)));
        }
        Ok(args)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::print::pretty_print;
    use crate::scalar::{gaussian, Scalar};
    use crate::term::Tree;

    fn leaf(a: Atom) -> Tree {
        Tree::Leaf(a)
    }

    fn strict(s: &str) -> Result<Expr, ParseError> {
        parse(s, ParseMode::Strict)
    }

    #[test]
    fn anticommutator_desugars() {
        let e = strict("acomm(Q[1],Qd[1])").unwrap();
        let expected = Expr::from_terms([
            (Coeff::one(), Tree::node(leaf(Atom::Q(1)), leaf(Atom::Qd(1)))),
            (Coeff::one(), Tree::node(leaf(Atom::Qd(1)), leaf(Atom::Q(1)))),
        ]);
        assert_eq!(e, expected);
    }

    #[test]
    fn explicit_parentheses_build_a_balanced_tree() {
        let e = strict("(Q[1]*Qd[1])*(Q[2]*Qd[2])").unwrap();
        let t = Tree::node(Tree::node(leaf(Atom::Q(1)), leaf(Atom::Qd(1))), Tree::node(leaf(Atom::Q(2)), leaf(Atom::Qd(2))));
        assert_eq!(e, Expr::tree(t));
    }

    #[test]
    fn strict_rejects_unparenthesized_chains() {
        let err = strict("Q[1]*Qd[1]*Q[2]").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::Ambiguous("Q[1]*Qd[1]*Q[2]".into()));
        assert_eq!((err.line, err.column), (1, 1));
    }

    #[test]
    fn permissive_nests_left_and_warns() {
        let p = parse_with("Q[1]*Qd[1]*Q[2]", ParseOptions { mode: ParseMode::Permissive, algebra: Algebra::Susy }).unwrap();
        let t = Tree::node(Tree::node(leaf(Atom::Q(1)), leaf(Atom::Qd(1))), leaf(Atom::Q(2)));
        assert_eq!(p.expr, Expr::tree(t));
        assert_eq!(p.warnings.len(), 1);
    }

    #[test]
    fn scalars_do_not_lengthen_a_chain() {
        let e = strict("2*X[0]*Q[1]*i*Qd[1]").unwrap();
        let c = Coeff::constant(gaussian(0, 2)) * Coeff::symbol(Symbol::X(0));
        assert_eq!(e, Expr::term(c, Tree::node(leaf(Atom::Q(1)), leaf(Atom::Qd(1)))));
    }

    #[test]
    fn literals() {
        assert_eq!(strict("3/2").unwrap(), Expr::scalar(Coeff::from_ratio(3, 2)));
        assert_eq!(strict("-i").unwrap(), Expr::scalar(Coeff::constant(gaussian(0, -1))));
        assert_eq!(strict("(1 - 2*i)").unwrap(), Expr::scalar(Coeff::constant(gaussian(1, -2))));
        assert_eq!(strict("3 / 2").unwrap_err().kind, ParseErrorKind::Syntax("unexpected character `/`".into()));
    }

    #[test]
    fn positions_are_reported() {
        let err = strict("Q[1] +\n  Qd[3]").unwrap_err();
        assert_eq!((err.line, err.column), (2, 6));
        assert_eq!(err.kind, ParseErrorKind::IndexOutOfRange { what: "Qd", index: 3, range: "1..=2" });
        let err = strict("Q[1] + )").unwrap_err();
        assert_eq!((err.line, err.column), (1, 8));
        let err = strict("alpha[1,5]").unwrap_err();
        assert_eq!((err.column, err.kind), (9, ParseErrorKind::IndexOutOfRange { what: "alpha", index: 5, range: "1..=2" }));
        assert!(matches!(strict("P[-1]").unwrap_err().kind, ParseErrorKind::IndexOutOfRange { index: -1, .. }));
    }

    #[test]
    fn algebra_contexts() {
        let susy = ParseOptions { mode: ParseMode::Strict, algebra: Algebra::Susy };
        let oct = ParseOptions { mode: ParseMode::Strict, algebra: Algebra::Octonion };
        assert!(matches!(parse_with("q[1]", susy).unwrap_err().kind, ParseErrorKind::WrongAlgebra { .. }));
        assert!(matches!(parse_with("Q[1]*q[1]", oct).unwrap_err().kind, ParseErrorKind::WrongAlgebra { .. }));
        assert!(parse_with("X[1]*q[2]", oct).is_ok());
    }

    #[test]
    fn function_arity() {
        assert!(strict("comm(Q[1])").is_err());
        assert!(strict("assoc(Q[1],Q[2],Qd[1])").is_ok());
    }

    #[test]
    fn round_trips() {
        for s in [
            "2*P[0] + 2*P[3]",
            "(Q[1]*Qd[1])",
            "-X[0]*P[1] + (X[0] - X[1])*P[2] - 2*i*P[3]",
            "-1 + X[0]*X[0]",
            "(1/2 + 3*i)*((Q[1]*Q[2])*P[0])",
            "alpha[1,2]*beta[2,1]*(Q[1]*(Qd[2]*Q[2]))",
            "0",
        ] {
            let e = strict(s).unwrap();
            assert_eq!(pretty_print(&e), s);
            assert_eq!(strict(&pretty_print(&e)).unwrap(), e);
        }
    }
}
