//! Exact arithmetic: rationals, sparse polynomials, reduced rational
//! functions and truncated power series.

mod gcd;
mod monomial;
mod poly;
mod rf;
mod series;

pub use gcd::{content_in, gcd};
pub use monomial::{Monomial, Var};
pub use poly::MultiPoly;
pub use rf::{RationalFunction, Rf};
pub use series::TruncatedSeries;

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Q = num_rational::BigRational;

/// Integer as a rational.
pub fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

/// `n/d` as a rational; panics if `d = 0`.
pub fn qf(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}
