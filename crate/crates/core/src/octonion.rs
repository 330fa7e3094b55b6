//! Split-octonions in two representations.
//!
//! [`Oct`] holds coordinates in the basis `(1, q_1, ..., q_7)` and multiplies
//! through the fixed multiplication table, which is the authoritative
//! product. [`Zorn`] holds vector-matrix form and multiplies through the
//! vector-matrix product; agreement of the two is checked, never assumed.

use std::fmt::Write as _;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::error::Error;
use crate::print::pretty_print;
use crate::report::CaseRecord;
use crate::scalar::{imag_unit, Scalar};
use crate::term::{Atom, Tree};
use crate::{Coeff, Expr};

/// `q_i q_j` for `i, j` in `1..=7`, as `(sign, k)` with `k = 0` the unit.
const TABLE: [[(i8, u8); 7]; 7] = [
    [(-1, 0), (1, 3), (-1, 2), (-1, 7), (1, 6), (-1, 5), (1, 4)],
    [(-1, 3), (-1, 0), (1, 1), (-1, 6), (-1, 7), (1, 4), (1, 5)],
    [(1, 2), (-1, 1), (-1, 0), (1, 5), (-1, 4), (-1, 7), (1, 6)],
    [(1, 7), (1, 6), (-1, 5), (1, 0), (-1, 3), (1, 2), (1, 1)],
    [(-1, 6), (1, 7), (1, 4), (1, 3), (1, 0), (-1, 1), (1, 2)],
    [(1, 5), (-1, 4), (1, 7), (-1, 2), (1, 1), (1, 0), (1, 3)],
    [(-1, 4), (-1, 5), (-1, 6), (-1, 1), (-1, 2), (-1, 3), (1, 0)],
];

/// Product of two basis elements (index 0 is the unit).
pub fn basis_product(i: usize, j: usize) -> (i8, usize) {
    match (i, j) {
        (0, k) | (k, 0) => (1, k),
        _ => {
            let (s, k) = TABLE[i - 1][j - 1];
            (s, k as usize)
        }
    }
}

/// Levi-Civita symbol on `1..=3`.
pub fn epsilon(i: usize, j: usize, k: usize) -> i64 {
    match (i, j, k) {
        (1, 2, 3) | (2, 3, 1) | (3, 1, 2) => 1,
        (3, 2, 1) | (1, 3, 2) | (2, 1, 3) => -1,
        _ => 0,
    }
}

/// An octonion in basis coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct Oct<S> {
    coords: [S; 8],
}

impl<S: Scalar> Oct<S> {
    pub fn zero() -> Self {
        Oct { coords: std::array::from_fn(|_| S::zero()) }
    }

    pub fn unit() -> Self {
        Self::basis(0)
    }

    /// `q_k`, with `q_0 = 1`. Panics for `k > 7`.
    pub fn basis(k: usize) -> Self {
        let mut o = Self::zero();
        o.coords[k] = S::one();
        o
    }

    pub fn from_coords(coords: [S; 8]) -> Self {
        Oct { coords }
    }

    pub fn coords(&self) -> &[S; 8] {
        &self.coords
    }

    pub fn coord(&self, k: usize) -> &S {
        &self.coords[k]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &S) -> Self {
        Oct { coords: std::array::from_fn(|k| self.coords[k].clone() * c.clone()) }
    }

    /// `uv - vu`.
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    /// `(uv)w - u(vw)`.
    pub fn associator(&self, v: &Self, w: &Self) -> Self {
        &(&(self * v) * w) - &(self * &(v * w))
    }

    /// True when only the unit and `q_1..q_3` coordinates are nonzero.
    pub fn is_quaternion(&self) -> bool {
        self.coords[4..].iter().all(Zero::is_zero)
    }
}

impl<S: Scalar> Add for &Oct<S> {
    type Output = Oct<S>;

    fn add(self, rhs: &Oct<S>) -> Oct<S> {
        Oct { coords: std::array::from_fn(|k| self.coords[k].clone() + rhs.coords[k].clone()) }
    }
}

impl<S: Scalar> Sub for &Oct<S> {
    type Output = Oct<S>;

    fn sub(self, rhs: &Oct<S>) -> Oct<S> {
        Oct { coords: std::array::from_fn(|k| self.coords[k].clone() - rhs.coords[k].clone()) }
    }
}

impl<S: Scalar> Neg for &Oct<S> {
    type Output = Oct<S>;

    fn neg(self) -> Oct<S> {
        Oct { coords: std::array::from_fn(|k| -self.coords[k].clone()) }
    }
}

impl<S: Scalar> Mul for &Oct<S> {
    type Output = Oct<S>;

    /// Bilinear extension of the multiplication table.
    fn mul(self, rhs: &Oct<S>) -> Oct<S> {
        let mut out = Oct::zero();
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coords.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let (s, k) = basis_product(i, j);
                let term = a.clone() * b.clone();
                let acc = std::mem::replace(&mut out.coords[k], S::zero());
                out.coords[k] = if s > 0 { acc + term } else { acc - term };
            }
        }
        out
    }
}

/// Vector-matrix form `(a, x; y, b)` with scalar diagonal and 3-vector
/// off-diagonal entries.
#[derive(Clone, Debug, PartialEq)]
pub struct Zorn<S> {
    pub a: S,
    pub x: [S; 3],
    pub y: [S; 3],
    pub b: S,
}

fn dot<S: Scalar>(u: &[S; 3], v: &[S; 3]) -> S {
    u.iter().zip(v).fold(S::zero(), |acc, (p, q)| acc + p.clone() * q.clone())
}

/// Cross product with `e_i × e_j = ε_{ijk} e_k`.
fn cross<S: Scalar>(u: &[S; 3], v: &[S; 3]) -> [S; 3] {
    let c = |i: usize, j: usize| u[i].clone() * v[j].clone() - u[j].clone() * v[i].clone();
    [c(1, 2), c(2, 0), c(0, 1)]
}

fn vscale<S: Scalar>(c: &S, v: &[S; 3]) -> [S; 3] {
    std::array::from_fn(|i| c.clone() * v[i].clone())
}

fn vadd<S: Scalar>(u: [S; 3], v: [S; 3]) -> [S; 3] {
    let [u0, u1, u2] = u;
    let [v0, v1, v2] = v;
    [u0 + v0, u1 + v1, u2 + v2]
}

fn vneg<S: Scalar>(u: [S; 3]) -> [S; 3] {
    u.map(|x| -x)
}

impl<S: Scalar> Zorn<S> {
    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.x.iter().all(Zero::is_zero) && self.y.iter().all(Zero::is_zero)
    }
}

impl<S: Scalar> Mul for &Zorn<S> {
    type Output = Zorn<S>;

    /// `(a,x;y,b)(c,u;v,d) = (ac + x·v, au + dx - y×v; cy + bv + x×u, bd + y·u)`.
    fn mul(self, rhs: &Zorn<S>) -> Zorn<S> {
        let Zorn { a, x, y, b } = self;
        let Zorn { a: c, x: u, y: v, b: d } = rhs;
        Zorn {
            a: a.clone() * c.clone() + dot(x, v),
            x: vadd(vadd(vscale(a, u), vscale(d, x)), vneg(cross(y, v))),
            y: vadd(vadd(vscale(c, y), vscale(b, v)), cross(x, u)),
            b: b.clone() * d.clone() + dot(y, u),
        }
    }
}

impl<S: Scalar> Sub for &Zorn<S> {
    type Output = Zorn<S>;

    fn sub(self, rhs: &Zorn<S>) -> Zorn<S> {
        Zorn {
            a: self.a.clone() - rhs.a.clone(),
            x: vadd(self.x.clone(), vneg(rhs.x.clone())),
            y: vadd(self.y.clone(), vneg(rhs.y.clone())),
            b: self.b.clone() - rhs.b.clone(),
        }
    }
}

/// Basis images: `1 = diag(1, 1)`, `q_7 = -diag(1, -1)`,
/// `q_i = (0, -e_i; e_i, 0)`, `q_{i+3} = (0, e_i; e_i, 0)`.
pub fn to_zorn<S: Scalar>(o: &Oct<S>) -> Zorn<S> {
    let c = &o.coords;
    Zorn {
        a: c[0].clone() - c[7].clone(),
        x: std::array::from_fn(|i| c[i + 4].clone() - c[i + 1].clone()),
        y: std::array::from_fn(|i| c[i + 1].clone() + c[i + 4].clone()),
        b: c[0].clone() + c[7].clone(),
    }
}

/// Inverse of [`to_zorn`].
pub fn from_zorn<S: Scalar>(m: &Zorn<S>) -> Oct<S> {
    let half = S::from_ratio(1, 2);
    let mut coords: [S; 8] = std::array::from_fn(|_| S::zero());
    coords[0] = half.clone() * (m.a.clone() + m.b.clone());
    coords[7] = half.clone() * (m.b.clone() - m.a.clone());
    for i in 0..3 {
        coords[i + 1] = half.clone() * (m.y[i].clone() - m.x[i].clone());
        coords[i + 4] = half.clone() * (m.x[i].clone() + m.y[i].clone());
    }
    Oct { coords }
}

/// Product computed through the vector-matrix route.
pub fn zorn_route_product<S: Scalar>(u: &Oct<S>, v: &Oct<S>) -> Oct<S> {
    from_zorn(&(&to_zorn(u) * &to_zorn(v)))
}

type Octonion = crate::Octonion;

fn basis(k: usize) -> Octonion {
    Octonion::basis(k)
}

/// `[q_i, q_j]` for basis indices in `1..=7`.
pub fn basis_commutator(i: usize, j: usize) -> Octonion {
    basis(i).commutator(&basis(j))
}

/// `(q_i q_j) q_k - q_i (q_j q_k)` for basis indices in `1..=7`.
pub fn basis_associator(i: usize, j: usize, k: usize) -> Octonion {
    basis(i).associator(&basis(j), &basis(k))
}

/// `-(1/4) Σ_{j,k} ε_{ijk} [q_{j+3}, q_{k+3}]` for `i` in `1..=3`.
pub fn spin_operator(i: usize) -> Octonion {
    spin_operator_with(i, |u, v| u * v)
}

fn spin_operator_with(i: usize, mul: impl Fn(&Octonion, &Octonion) -> Octonion) -> Octonion {
    let mut out = Octonion::zero();
    for j in 1..=3 {
        for k in 1..=3 {
            let e = epsilon(i, j, k);
            if e == 0 {
                continue;
            }
            let (u, v) = (basis(j + 3), basis(k + 3));
            let comm = &mul(&u, &v) - &mul(&v, &u);
            out = &out + &comm.scale(&Coeff::from_ratio(-e, 4));
        }
    }
    out
}

/// The alternative normalization `(ı/2) q_i`.
pub fn half_imaginary_spin(i: usize) -> Octonion {
    basis(i).scale(&(Coeff::constant(imag_unit()) * Coeff::from_ratio(1, 2)))
}

/// Basis-coordinate octonion as an expression over `q[k]` leaves.
pub fn octonion_to_expr(o: &Octonion) -> Expr {
    let mut e = Expr::scalar(o.coords[0].clone());
    for k in 1..8 {
        e.add_term(o.coords[k].clone(), Tree::Leaf(Atom::Oct(k as u8)));
    }
    e
}

/// Evaluates an expression over `q[k]` leaves with the table product.
pub fn evaluate(e: &Expr) -> Result<Octonion, Error> {
    fn tree(t: &Tree) -> Result<Octonion, Error> {
        match t {
            Tree::Leaf(Atom::Oct(k)) => Ok(basis(*k as usize)),
            Tree::Leaf(a) => Err(Error::UnsupportedShape(format!("{a} is not an octonion unit"))),
            Tree::Node(l, r) => Ok(&tree(l)? * &tree(r)?),
        }
    }
    let mut out = Octonion::unit().scale(e.scalar_part());
    for (t, c) in e.terms() {
        out = &out + &tree(t)?.scale(c);
    }
    Ok(out)
}

fn render(o: &Octonion) -> String {
    pretty_print(&octonion_to_expr(o))
}

fn case(id: String, residual: &Octonion) -> CaseRecord {
    CaseRecord::from_residual(id, residual.is_zero(), render(residual))
}

fn eps_sum(i: usize, j: usize, scale: i64, target: impl Fn(usize) -> usize) -> Octonion {
    let mut out = Octonion::zero();
    for k in 1..=3 {
        let e = epsilon(i, j, k);
        if e != 0 {
            out = &out + &basis(target(k)).scale(&Coeff::from_int(scale * e));
        }
    }
    out
}

/// Diagonal signs, antisymmetry off the diagonal, and unit laws.
pub fn verify_table() -> Vec<CaseRecord> {
    let mut cases = Vec::new();
    for i in 1..=7 {
        for j in 1..=7 {
            let prod = &basis(i) * &basis(j);
            if i == j {
                let sign = if i <= 3 { -1 } else { 1 };
                let residual = &prod - &Octonion::unit().scale(&Coeff::from_int(sign));
                cases.push(case(format!("table-square[i={i}]"), &residual));
            } else {
                let residual = &prod + &(&basis(j) * &basis(i));
                cases.push(case(format!("table-antisymmetry[i={i},j={j}]"), &residual));
            }
        }
    }
    for k in 0..8 {
        let u = basis(k);
        let left = &(&Octonion::unit() * &u) - &u;
        let right = &(&u * &Octonion::unit()) - &u;
        cases.push(case(format!("unit-law[k={k}]"), &(&left + &right)));
    }
    cases
}

/// Table product against the vector-matrix product on all 64 basis pairs.
pub fn verify_zorn_homomorphism() -> Vec<CaseRecord> {
    let mut cases = Vec::new();
    for i in 0..8 {
        for j in 0..8 {
            let (u, v) = (basis(i), basis(j));
            let via_table = to_zorn(&(&u * &v));
            let via_zorn = &to_zorn(&u) * &to_zorn(&v);
            let residual = from_zorn(&(&via_zorn - &via_table));
            cases.push(case(format!("zorn-product[u={i},v={j}]"), &residual));
        }
    }
    cases
}

/// The first basis triple `(i, j, k)` at which the table product fails the
/// linearized left alternative law `(q_i, q_j, q_k) + (q_j, q_i, q_k) = 0`,
/// with the offending sum.
pub fn alternativity_witness() -> Option<(usize, usize, usize, Octonion)> {
    (1..8)
        .flat_map(|i| (1..8).flat_map(move |j| (1..8).map(move |k| (i, j, k))))
        .map(|(i, j, k)| (i, j, k, &basis_associator(i, j, k) + &basis_associator(j, i, k)))
        .find(|(.., sum)| !sum.is_zero())
}

/// Context for the homomorphism suite: whether each product is alternative.
pub fn zorn_homomorphism_notes() -> Vec<String> {
    match alternativity_witness() {
        None => Vec::new(),
        Some((i, j, k, sum)) => vec![format!(
            "the table product is not alternative: (q[{i}],q[{j}],q[{k}]) + (q[{j}],q[{i}],q[{k}]) = {}; \
             the vector-matrix product is alternative, so no linear change of basis makes the two agree",
            render(&sum)
        )],
    }
}

/// The commutator and associator identities on `i, j, k ∈ {1,2,3}`, 27
/// triples each. For the commutators, case `(i, j, k)` checks the `q_k`
/// coordinate and that nothing lies outside `span{q_1, q_2, q_3}`.
pub fn verify_identities() -> Vec<CaseRecord> {
    let mut cases = Vec::new();
    let outside = |o: &Octonion| {
        let mut c = o.coords().clone();
        c[1..=3].fill(Coeff::zero());
        Octonion::from_coords(c)
    };
    for i in 1..=3 {
        for j in 1..=3 {
            let split = basis_commutator(i + 3, j + 3);
            let split_expected = eps_sum(i, j, -2, |k| k);
            let quat = basis_commutator(i, j);
            let quat_expected = eps_sum(i, j, 2, |k| k);
            for k in 1..=3 {
                let component = |o: &Octonion, e: &Octonion| {
                    let mut d = outside(&(o - e));
                    d.coords[k] = o.coord(k).clone() - e.coord(k).clone();
                    d
                };
                cases.push(case(format!("split-commutator[i={i},j={j},k={k}]"), &component(&split, &split_expected)));
                cases.push(case(format!("quaternion-commutator[i={i},j={j},k={k}]"), &component(&quat, &quat_expected)));
                let assoc = basis_associator(i + 3, j + 3, k + 3);
                let expected = basis(7).scale(&Coeff::from_int(2 * epsilon(i, j, k)));
                cases.push(case(format!("split-associator[i={i},j={j},k={k}]"), &(&assoc - &expected)));
            }
        }
    }
    cases
}

/// The spin decomposition `s_i = q_i`, with notes comparing the `(ı/2) q_i`
/// normalization and the vector-matrix route.
pub fn verify_spin_decomposition() -> (Vec<CaseRecord>, Vec<String>) {
    let mut cases = Vec::new();
    let mut notes = Vec::new();
    for i in 1..=3 {
        let s = spin_operator(i);
        cases.push(case(format!("spin[i={i}]"), &(&s - &basis(i))));
        let alt = half_imaginary_spin(i);
        let agrees = s == alt;
        notes.push(format!(
            "s_{i} from the commutator decomposition is {}; the (i/2)*q[{i}] normalization gives {}: {}",
            render(&s),
            render(&alt),
            if agrees { "they agree".to_string() } else { format!("they differ by the factor i/2 (difference {})", render(&(&s - &alt))) },
        ));
        let via_zorn = spin_operator_with(i, zorn_route_product);
        if via_zorn != s {
            notes.push(format!(
                "s_{i} evaluated with the vector-matrix product is {}, not {}",
                render(&via_zorn),
                render(&s)
            ));
        }
    }
    (cases, notes)
}

/// Products within `{1, q_1, q_2, q_3}` stay there (16), the quaternion
/// commutators (9), and `q_1 q_4` leaving the span as a negative control.
pub fn verify_quaternion_closure() -> Vec<CaseRecord> {
    let mut cases = Vec::new();
    for i in 0..=3 {
        for j in 0..=3 {
            let prod = &basis(i) * &basis(j);
            let mut outside = prod.clone();
            for k in 0..=3 {
                outside.coords[k] = Coeff::zero();
            }
            cases.push(case(format!("quaternion-closure[u={i},v={j}]"), &outside));
        }
    }
    for i in 1..=3 {
        for j in 1..=3 {
            let residual = &basis_commutator(i, j) - &eps_sum(i, j, 2, |k| k);
            cases.push(case(format!("quaternion-bracket[i={i},j={j}]"), &residual));
        }
    }
    let control = &basis(1) * &basis(4);
    cases.push(CaseRecord::from_residual(
        "quaternion-negative-control[u=1,v=4]".to_string(),
        !control.is_quaternion(),
        render(&control),
    ));
    cases
}

/// The multiplication table as a bordered text grid.
pub fn render_table() -> String {
    let name = |s: i8, k: u8| {
        let body = if k == 0 { "1".to_string() } else { format!("q{k}") };
        if s < 0 {
            format!("-{body}")
        } else {
            body
        }
    };
    let width = 4;
    let mut out = String::new();
    let rule = format!("+{}\n", format!("{}+", "-".repeat(width + 2)).repeat(8));
    out.push_str(&rule);
    let _ = write!(out, "| {:>width$} |", "");
    for j in 1..=7 {
        let _ = write!(out, " {:>width$} |", format!("q{j}"));
    }
    out.push('\n');
    out.push_str(&rule);
    for (i, row) in TABLE.iter().enumerate() {
        let _ = write!(out, "| {:>width$} |", format!("q{}", i + 1));
        for &(s, k) in row {
            let _ = write!(out, " {:>width$} |", name(s, k));
        }
        out.push('\n');
        out.push_str(&rule);
    }
    out
}
