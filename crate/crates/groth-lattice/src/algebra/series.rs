use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::Zero;

use super::monomial::{Monomial, Var};
use super::poly::MultiPoly;
use super::rf::Rf;
use crate::error::{Error, Result};

/// Power series in a fixed set of series variables, truncated at total
/// degree `bound` in those variables. Coefficients are polynomials in the
/// remaining variables; internally everything lives in one `MultiPoly`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    bound: u32,
    vars: Vec<Var>,
    poly: MultiPoly,
}

impl TruncatedSeries {
    pub fn zero(vars: &[Var], bound: u32) -> Self {
        Self::from_poly(&MultiPoly::zero(), vars, bound)
    }

    pub fn one(vars: &[Var], bound: u32) -> Self {
        Self::from_poly(&MultiPoly::one(), vars, bound)
    }

    pub fn from_poly(p: &MultiPoly, vars: &[Var], bound: u32) -> Self {
        let mut vars = vars.to_vec();
        vars.sort();
        vars.dedup();
        let poly = {
            let vs = &vars;
            p.truncate(bound, |v| vs.contains(&v))
        };
        TruncatedSeries { bound, vars, poly }
    }

    /// Taylor expansion of `f` in `vars` up to total degree `bound`.
    pub fn from_rf(f: &Rf, vars: &[Var], bound: u32) -> Result<Self> {
        let mut s = Self::from_poly(f.numer(), vars, bound);
        if f.denom().is_one() {
            return Ok(s);
        }
        let inv = s.inverse_of(f.denom())?;
        s.poly = s.mul_poly(&s.poly, &inv);
        Ok(s)
    }

    fn is_series_var(&self, v: Var) -> bool {
        self.vars.contains(&v)
    }

    fn mul_poly(&self, a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
        let vs = &self.vars;
        a.mul_truncated(b, self.bound, |v| vs.contains(&v))
    }

    /// Truncated inverse of a polynomial whose series-constant part is a nonzero number.
    fn inverse_of(&self, den: &MultiPoly) -> Result<MultiPoly> {
        let mut c0 = MultiPoly::zero();
        let mut rest = MultiPoly::zero();
        for (m, q) in den.terms() {
            if m.degree_where(|v| self.is_series_var(v)) == 0 {
                c0.add_term(m.clone(), q.clone());
            } else {
                rest.add_term(m.clone(), q.clone());
            }
        }
        let c = match c0.as_constant() {
            Some(c) if !c.is_zero() => c,
            _ => return Err(Error::NotExpandable),
        };
        let cinv = c.recip();
        // 1/(c + R) = (1/c) * sum_k (-R/c)^k
        let step = rest.scale(&(-cinv.clone()));
        let mut term = MultiPoly::constant(cinv.clone());
        let mut acc = term.clone();
        for _ in 0..self.bound {
            term = self.mul_poly(&term, &step);
            if term.is_zero() {
                break;
            }
            acc = &acc + &term;
        }
        Ok(acc)
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn vars(&self) -> &[Var] {
        &self.vars
    }

    pub fn as_poly(&self) -> &MultiPoly {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// Terms grouped by their monomial in the series variables.
    pub fn terms(&self) -> BTreeMap<Monomial, MultiPoly> {
        let mut out: BTreeMap<Monomial, MultiPoly> = BTreeMap::new();
        for (m, q) in self.poly.terms() {
            let (s, c) = m.partition_by(|v| self.is_series_var(v));
            out.entry(s).or_default().add_term(c, q.clone());
        }
        out
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.bound != other.bound || self.vars != other.vars {
            Err(Error::BoundMismatch)
        } else {
            Ok(())
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(TruncatedSeries { bound: self.bound, vars: self.vars.clone(), poly: &self.poly + &other.poly })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(TruncatedSeries { bound: self.bound, vars: self.vars.clone(), poly: &self.poly - &other.poly })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(TruncatedSeries { bound: self.bound, vars: self.vars.clone(), poly: self.mul_poly(&self.poly, &other.poly) })
    }

    /// Applies `z_i * w_i = 1` to the coefficients.
    pub fn cancel_inverse_pairs(&self) -> Self {
        TruncatedSeries { bound: self.bound, vars: self.vars.clone(), poly: self.poly.cancel_inverse_pairs() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: Var) -> MultiPoly {
        MultiPoly::var(x)
    }

    #[test]
    fn geometric_series() {
        let xy = &v(Var::X(1)) * &v(Var::Y(1));
        let f = Rf::one().checked_div(&Rf::from_poly(&MultiPoly::one() - &xy)).unwrap();
        let s = TruncatedSeries::from_rf(&f, &[Var::X(1), Var::Y(1)], 2).unwrap();
        assert_eq!(s.as_poly(), &(&MultiPoly::one() + &xy));
    }

    #[test]
    fn geometric_with_parameter() {
        let x = v(Var::X(1));
        let a = v(Var::Alpha);
        let f = Rf::from_poly(x.clone()).checked_div(&Rf::from_poly(&MultiPoly::one() - &(&a * &x))).unwrap();
        let s = TruncatedSeries::from_rf(&f, &[Var::X(1)], 3).unwrap();
        let expect = &(&x + &(&a * &x.pow(2))) + &(&a.pow(2) * &x.pow(3));
        assert_eq!(s.as_poly(), &expect);
    }

    #[test]
    fn not_expandable() {
        let f = Rf::one().checked_div(&Rf::var(Var::X(1))).unwrap();
        assert_eq!(TruncatedSeries::from_rf(&f, &[Var::X(1)], 2), Err(Error::NotExpandable));
    }

    #[test]
    fn truncated_product() {
        let vars = [Var::X(1), Var::X(2), Var::Y(1)];
        let one = MultiPoly::one();
        let p = TruncatedSeries::from_poly(&(&one + &(&v(Var::X(1)) * &v(Var::Y(1)))), &vars, 2);
        let q = TruncatedSeries::from_poly(&(&one + &(&v(Var::X(2)) * &v(Var::Y(1)))), &vars, 2);
        let r = p.mul(&q).unwrap();
        let expect = &(&one + &(&v(Var::X(1)) * &v(Var::Y(1)))) + &(&v(Var::X(2)) * &v(Var::Y(1)));
        assert_eq!(r.as_poly(), &expect);
        let other = TruncatedSeries::one(&vars, 3);
        assert_eq!(p.mul(&other), Err(Error::BoundMismatch));
    }
}
