use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::gcd::gcd;
use super::monomial::{Monomial, Var};
use super::poly::MultiPoly;
use super::Q;
use crate::error::{Error, Result};

/// Reduced quotient of polynomials.
///
/// Canonical form: `gcd(num, den) = 1`, `den` has coprime integer
/// coefficients and a positive leading coefficient, and zero is `0/1`.
/// Equality is therefore structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: MultiPoly,
    den: MultiPoly,
}

pub type Rf = RationalFunction;

impl RationalFunction {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = gcd(&num, &den);
        if g.is_one() {
            return Ok(Self::unit_normalized(num, den));
        }
        let n = num.div_exact(&g).expect("gcd divides numerator");
        let d = den.div_exact(&g).expect("gcd divides denominator");
        Ok(Self::unit_normalized(n, d))
    }

    /// Moves the rational content and sign of a coprime pair's denominator onto the numerator.
    fn unit_normalized(num: MultiPoly, den: MultiPoly) -> Self {
        let (c, d) = den.primitive();
        if c.is_one() {
            return RationalFunction { num, den: d };
        }
        RationalFunction { num: num.scale(&c.recip()), den: d }
    }

    pub fn zero() -> Self {
        RationalFunction { num: MultiPoly::zero(), den: MultiPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(MultiPoly::one())
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        RationalFunction { num: p, den: MultiPoly::one() }
    }

    pub fn constant(q: Q) -> Self {
        Self::from_poly(MultiPoly::constant(q))
    }

    pub fn int(n: i64) -> Self {
        Self::from_poly(MultiPoly::int(n))
    }

    pub fn var(v: Var) -> Self {
        Self::from_poly(MultiPoly::var(v))
    }

    pub fn numer(&self) -> &MultiPoly {
        &self.num
    }

    pub fn denom(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The numerator when the denominator is 1.
    pub fn as_poly(&self) -> Option<&MultiPoly> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::unit_normalized(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.recip()?)
    }

    pub fn pow(&self, k: u32) -> Self {
        // powers of a reduced fraction stay reduced
        if k == 0 {
            return Self::one();
        }
        Self::unit_normalized(self.num.pow(k), self.den.pow(k))
    }

    /// Integer power; negative exponents invert.
    pub fn powi(&self, k: i64) -> Result<Self> {
        if k >= 0 {
            Ok(self.pow(k as u32))
        } else {
            Ok(self.recip()?.pow((-k) as u32))
        }
    }

    /// Simultaneous substitution of variables by rational functions.
    pub fn substitute(&self, bindings: &BTreeMap<Var, Rf>) -> Result<Self> {
        let active: BTreeMap<Var, &Rf> = bindings
            .iter()
            .filter(|(v, _)| self.num.degree_in(**v) > 0 || self.den.degree_in(**v) > 0)
            .map(|(v, f)| (*v, f))
            .collect();
        if active.is_empty() {
            return Ok(self.clone());
        }
        // Clear the binding denominators with a common power per variable.
        let top: BTreeMap<Var, u32> =
            active.keys().map(|&v| (v, self.num.degree_in(v).max(self.den.degree_in(v)))).collect();
        let num = clear_substitute(&self.num, &active, &top);
        let den = clear_substitute(&self.den, &active, &top);
        Self::new(num, den)
    }

    /// Convenience: substitutes a single variable.
    pub fn subs(&self, v: Var, f: &Rf) -> Result<Self> {
        let mut m = BTreeMap::new();
        m.insert(v, f.clone());
        self.substitute(&m)
    }

    /// Renames a variable that does not otherwise occur (no gcd needed).
    pub fn rename(&self, from: Var, to: Var) -> Self {
        Self::unit_normalized(self.num.rename(from, to), self.den.rename(from, to))
    }

    /// Applies `v -> c*v` for a nonzero rational `c` (a ring automorphism, so
    /// the fraction stays reduced).
    pub fn scale_var(&self, v: Var, c: &Q) -> Self {
        let f = |p: &MultiPoly| {
            MultiPoly::from_terms(p.terms().map(|(m, q)| {
                let e = m.exp(v);
                (m.clone(), q * super::poly::pow_q(c, e))
            }))
        };
        Self::unit_normalized(f(&self.num), f(&self.den))
    }

    /// Evaluates at a full rational point; `None` if a variable is missing or
    /// the denominator vanishes.
    pub fn eval(&self, point: &BTreeMap<Var, Q>) -> Option<Q> {
        let d = self.den.eval(point)?;
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(point)? / d)
    }

    pub fn render(&self) -> String {
        if self.den.is_one() {
            return self.num.render();
        }
        let n = if self.num.len() > 1 { format!("({})", self.num) } else { format!("{}", self.num) };
        let d = if self.den.len() > 1 { format!("({})", self.den) } else { format!("{}", self.den) };
        format!("{}/{}", n, d)
    }
}

fn clear_substitute(p: &MultiPoly, active: &BTreeMap<Var, &Rf>, top: &BTreeMap<Var, u32>) -> MultiPoly {
    let mut pows: BTreeMap<(Var, bool, u32), MultiPoly> = BTreeMap::new();
    let mut get = |v: Var, numer: bool, e: u32| -> MultiPoly {
        pows.entry((v, numer, e))
            .or_insert_with(|| {
                let f = active[&v];
                if numer {
                    f.num.pow(e)
                } else {
                    f.den.pow(e)
                }
            })
            .clone()
    };
    let mut out = MultiPoly::zero();
    for (m, q) in p.terms() {
        let mut rest = alloc::vec::Vec::new();
        let mut t = MultiPoly::constant(q.clone());
        for &(v, e) in m.pairs() {
            if active.contains_key(&v) {
                t = &t * &get(v, true, e);
            } else {
                rest.push((v, e));
            }
        }
        for (&v, &k) in top {
            let e = m.exp(v);
            if k > e {
                t = &t * &get(v, false, k - e);
            }
        }
        out = &out + &t.mul_monomial(&Monomial::from_pairs(rest));
    }
    out
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl From<MultiPoly> for RationalFunction {
    fn from(p: MultiPoly) -> Self {
        Self::from_poly(p)
    }
}

impl<'a> Add<&'a Rf> for &'a Rf {
    type Output = Rf;
    fn add(self, rhs: &Rf) -> Rf {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let (a, b, c, d) = (&self.num, &self.den, &rhs.num, &rhs.den);
        if b.is_one() && d.is_one() {
            return Rf::from_poly(a + c);
        }
        if b.is_one() {
            return Rf { num: &(a * d) + c, den: d.clone() };
        }
        if d.is_one() {
            return Rf { num: &(c * b) + a, den: b.clone() };
        }
        if b == d {
            let t = a + c;
            if t.is_zero() {
                return Rf::zero();
            }
            let g = gcd(&t, b);
            if g.is_one() {
                return Rf::unit_normalized(t, b.clone());
            }
            return Rf::unit_normalized(t.div_exact(&g).unwrap(), b.div_exact(&g).unwrap());
        }
        let g = gcd(b, d);
        if g.is_one() {
            return Rf::unit_normalized(&(a * d) + &(c * b), b * d);
        }
        let b1 = b.div_exact(&g).unwrap();
        let d1 = d.div_exact(&g).unwrap();
        let t = &(a * &d1) + &(c * &b1);
        if t.is_zero() {
            return Rf::zero();
        }
        let g2 = gcd(&t, &g);
        let num = t.div_exact(&g2).unwrap();
        let den = &b1 * &d.div_exact(&g2).unwrap();
        Rf::unit_normalized(num, den)
    }
}

impl<'a> Mul<&'a Rf> for &'a Rf {
    type Output = Rf;
    fn mul(self, rhs: &Rf) -> Rf {
        if self.is_zero() || rhs.is_zero() {
            return Rf::zero();
        }
        if self.is_one() {
            return rhs.clone();
        }
        if rhs.is_one() {
            return self.clone();
        }
        let (a, b, c, d) = (&self.num, &self.den, &rhs.num, &rhs.den);
        if b.is_one() && d.is_one() {
            return Rf::from_poly(a * c);
        }
        let g1 = if d.is_one() { MultiPoly::one() } else { gcd(a, d) };
        let g2 = if b.is_one() { MultiPoly::one() } else { gcd(c, b) };
        let (a1, d1) =
            if g1.is_one() { (a.clone(), d.clone()) } else { (a.div_exact(&g1).unwrap(), d.div_exact(&g1).unwrap()) };
        let (c1, b1) =
            if g2.is_one() { (c.clone(), b.clone()) } else { (c.div_exact(&g2).unwrap(), b.div_exact(&g2).unwrap()) };
        Rf::unit_normalized(&a1 * &c1, &b1 * &d1)
    }
}

impl<'a> Sub<&'a Rf> for &'a Rf {
    type Output = Rf;
    fn sub(self, rhs: &Rf) -> Rf {
        self + &(-rhs)
    }
}

impl Neg for &Rf {
    type Output = Rf;
    fn neg(self) -> Rf {
        Rf { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for Rf {
    type Output = Rf;
    fn neg(self) -> Rf {
        -(&self)
    }
}

macro_rules! owned_binop {
    ($tr:ident, $f:ident) => {
        impl $tr<Rf> for Rf {
            type Output = Rf;
            fn $f(self, rhs: Rf) -> Rf {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a Rf> for Rf {
            type Output = Rf;
            fn $f(self, rhs: &Rf) -> Rf {
                (&self).$f(rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Zero for Rf {
    fn zero() -> Self {
        Rf::zero()
    }
    fn is_zero(&self) -> bool {
        Rf::is_zero(self)
    }
}

impl One for Rf {
    fn one() -> Self {
        Rf::one()
    }
}

impl core::iter::Sum for Rf {
    fn sum<I: Iterator<Item = Rf>>(iter: I) -> Rf {
        iter.fold(Rf::zero(), |acc, x| &acc + &x)
    }
}

impl core::iter::Product for Rf {
    fn product<I: Iterator<Item = Rf>>(iter: I) -> Rf {
        iter.fold(Rf::one(), |acc, x| &acc * &x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: u16) -> Rf {
        Rf::var(Var::X(i))
    }
    fn a() -> Rf {
        Rf::var(Var::Alpha)
    }
    fn b() -> Rf {
        Rf::var(Var::Beta)
    }
    fn one() -> Rf {
        Rf::one()
    }
    fn geo(v: &Rf) -> Rf {
        // v/(1 - a v)
        v.checked_div(&(&one() - &(&a() * v))).unwrap()
    }

    #[test]
    fn inverse_pair_cancels() {
        let f = geo(&x(1));
        assert_eq!(&f * &f.recip().unwrap(), one());
    }

    #[test]
    fn common_denominator() {
        let s = &geo(&x(1)) + &geo(&x(2));
        let num = &(&x(1) + &x(2)) - &(&Rf::int(2) * &(&(&a() * &x(1)) * &x(2)));
        let den = &(&one() - &(&a() * &x(1))) * &(&one() - &(&a() * &x(2)));
        assert_eq!(s, num.checked_div(&den).unwrap());
    }

    #[test]
    fn cancellation_after_multiplying_back() {
        let f = &one() + &(&a() * &x(1));
        assert_eq!(&f.recip().unwrap() * &f, one());
    }

    #[test]
    fn denominator_sign_is_canonical() {
        let f = x(1).checked_div(&(&(&a() * &x(1)) - &one())).unwrap();
        let g = (-&x(1)).checked_div(&(&one() - &(&a() * &x(1)))).unwrap();
        assert_eq!(f, g);
        let (_, lc) = f.denom().leading().unwrap();
        assert!(*lc > Q::zero());
    }

    #[test]
    fn zero_numerator_normalizes() {
        let z = Rf::new(MultiPoly::zero(), MultiPoly::var(Var::X(1))).unwrap();
        assert_eq!(z.denom(), &MultiPoly::one());
        assert!(Rf::new(MultiPoly::one(), MultiPoly::zero()).is_err());
        assert_eq!(x(1).checked_div(&Rf::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn substitution_examples() {
        // x/(1-ax) with x -> -x
        let f = geo(&x(1));
        let g = f.subs(Var::X(1), &(-&x(1))).unwrap();
        assert_eq!(g, (-&x(1)).checked_div(&(&one() + &(&a() * &x(1)))).unwrap());
        // x with x -> x/(1+(a-b)x)
        let t = x(1).checked_div(&(&one() + &(&(&a() - &b()) * &x(1)))).unwrap();
        assert_eq!(x(1).subs(Var::X(1), &t).unwrap(), t);
        // x/(1-bx) with b -> 0
        let h = x(1).checked_div(&(&one() - &(&b() * &x(1)))).unwrap();
        assert_eq!(h.subs(Var::Beta, &Rf::zero()).unwrap(), x(1));
        // vanishing denominator
        let k = one().checked_div(&(&x(1) - &a())).unwrap();
        assert_eq!(k.subs(Var::X(1), &a()), Err(Error::DivisionByZero));
    }

    #[test]
    fn scale_var_matches_substitution() {
        let f = geo(&x(1));
        let minus_one = Q::from_integer((-1).into());
        assert_eq!(f.scale_var(Var::Alpha, &minus_one), f.subs(Var::Alpha, &(-&a())).unwrap());
    }
}
