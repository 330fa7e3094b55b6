//! Exact symbolic verification for a nonassociative extension of the
//! supersymmetry algebra and for split-octonion arithmetic.
//!
//! Arithmetic is generic over [`scalar::Scalar`]; the verifiers work over
//! Gaussian rationals and polynomials in them, aliased below.

pub mod coeff;
pub mod error;
pub mod octonion;
pub mod parser;
pub mod print;
pub mod report;
pub mod scalar;
pub mod sigma;
pub mod suites;
pub mod susy;
pub mod term;

/// `p + q·i` with `p, q` rational.
pub type GaussianRational = num_complex::Complex<num_rational::BigRational>;
/// Polynomials over Gaussian rationals in `alpha`, `beta` and `X`.
pub type Coeff = coeff::Poly<GaussianRational>;
pub type Expr = term::LinearExpr<Coeff>;
pub type Octonion = octonion::Oct<Coeff>;
pub type ZornMatrix = octonion::Zorn<Coeff>;

pub use coeff::{Monomial, Symbol};
pub use error::{Error, Result};
pub use parser::{parse, parse_with, Algebra, ParseError, ParseMode, ParseOptions};
pub use print::pretty_print;
pub use report::{CaseRecord, Status, SuiteReport};
pub use scalar::Scalar;
pub use suites::{run_suites, Suite};
pub use term::{Atom, Tree};
