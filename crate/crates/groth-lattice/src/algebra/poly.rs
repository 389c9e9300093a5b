use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::monomial::{Monomial, Var};
use super::Q;

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in a `BTreeMap` keyed by graded-lex order, so iteration is
/// ascending and the leading term is the last entry.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Q>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(Q::one())
    }

    pub fn constant(q: Q) -> Self {
        Self::term(Monomial::one(), q)
    }

    pub fn int(n: i64) -> Self {
        Self::constant(Q::from_integer(BigInt::from(n)))
    }

    pub fn var(v: Var) -> Self {
        Self::term(Monomial::var(v), Q::one())
    }

    pub fn term(m: Monomial, q: Q) -> Self {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(m, q);
        }
        MultiPoly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Q)>>(it: I) -> Self {
        let mut p = MultiPoly::zero();
        for (m, q) in it {
            p.add_term(m, q);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, q: Q) {
        if q.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(q);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += q;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|q| q.is_one())
    }

    /// The value if the polynomial is constant (zero included).
    pub fn as_constant(&self) -> Option<Q> {
        match self.terms.len() {
            0 => Some(Q::zero()),
            1 => {
                let (m, q) = self.terms.iter().next().unwrap();
                if m.is_one() {
                    Some(q.clone())
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Q)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Monomial, Q> {
        self.terms
    }

    pub fn coeff(&self, m: &Monomial) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    pub fn leading(&self) -> Option<(&Monomial, &Q)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        self.terms.keys().flat_map(|m| m.vars()).collect()
    }

    pub fn scale(&self, q: &Q) -> MultiPoly {
        if q.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), c * q)).collect() }
    }

    pub fn mul_monomial(&self, mono: &Monomial) -> MultiPoly {
        MultiPoly { terms: self.terms.iter().map(|(m, c)| (m.mul(mono), c.clone())).collect() }
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        let mut acc = MultiPoly::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Coefficients with respect to `v`: exponent of `v` to a polynomial free of `v`.
    pub fn coeffs_in(&self, v: Var) -> BTreeMap<u32, MultiPoly> {
        let mut out: BTreeMap<u32, MultiPoly> = BTreeMap::new();
        for (m, q) in &self.terms {
            let (e, rest) = m.split(v);
            out.entry(e).or_default().terms.insert(rest, q.clone());
        }
        out
    }

    /// Leading coefficient with respect to `v` (a polynomial free of `v`).
    pub fn lc_in(&self, v: Var) -> MultiPoly {
        let d = self.degree_in(v);
        let mut out = MultiPoly::zero();
        for (m, q) in &self.terms {
            let (e, rest) = m.split(v);
            if e == d {
                out.terms.insert(rest, q.clone());
            }
        }
        out
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &MultiPoly) -> Option<MultiPoly> {
        let (dm, dq) = d.leading()?;
        if let Some(c) = d.as_constant() {
            return Some(self.scale(&c.recip()));
        }
        if d.terms.len() == 1 {
            let mut out = BTreeMap::new();
            for (m, q) in &self.terms {
                out.insert(m.div(dm)?, q / dq);
            }
            return Some(MultiPoly { terms: out });
        }
        let (dm, dq) = (dm.clone(), dq.clone());
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero();
        while let Some((rm, rq)) = rem.leading() {
            let m = rm.div(&dm)?;
            let q = rq / &dq;
            rem = &rem - &d.mul_monomial(&m).scale(&q);
            quot.add_term(m, q);
        }
        Some(quot)
    }

    /// Evaluates at a full rational point; `None` if a variable is unbound.
    pub fn eval(&self, point: &BTreeMap<Var, Q>) -> Option<Q> {
        let mut acc = Q::zero();
        for (m, q) in &self.terms {
            let mut t = q.clone();
            for &(v, e) in m.pairs() {
                t *= pow_q(point.get(&v)?, e);
            }
            acc += t;
        }
        Some(acc)
    }

    /// Substitutes rational values for the bound variables only.
    pub fn eval_partial(&self, point: &BTreeMap<Var, Q>) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, q) in &self.terms {
            let mut t = q.clone();
            let mut rest = Vec::new();
            for &(v, e) in m.pairs() {
                match point.get(&v) {
                    Some(val) => t *= pow_q(val, e),
                    None => rest.push((v, e)),
                }
            }
            out.add_term(Monomial::from_pairs(rest), t);
        }
        out
    }

    /// Replaces variables by polynomials.
    pub fn compose(&self, map: &BTreeMap<Var, MultiPoly>) -> MultiPoly {
        let mut cache: BTreeMap<(Var, u32), MultiPoly> = BTreeMap::new();
        let mut out = MultiPoly::zero();
        for (m, q) in &self.terms {
            let mut t = MultiPoly::constant(q.clone());
            let mut rest = Vec::new();
            for &(v, e) in m.pairs() {
                match map.get(&v) {
                    Some(p) => {
                        let pe = cache.entry((v, e)).or_insert_with(|| p.pow(e));
                        t = &t * pe;
                    }
                    None => rest.push((v, e)),
                }
            }
            out = &out + &t.mul_monomial(&Monomial::from_pairs(rest));
        }
        out
    }

    /// Renames one variable; `to` should not already occur.
    pub fn rename(&self, from: Var, to: Var) -> MultiPoly {
        MultiPoly::from_terms(self.terms.iter().map(|(m, q)| (m.rename(from, to), q.clone())))
    }

    /// Maps every coefficient-monomial pair, merging collisions.
    pub fn map_monomials(&self, f: impl Fn(&Monomial) -> Monomial) -> MultiPoly {
        MultiPoly::from_terms(self.terms.iter().map(|(m, q)| (f(m), q.clone())))
    }

    /// Drops terms whose degree in the variables selected by `pred` exceeds `bound`.
    pub fn truncate(&self, bound: u32, pred: impl Fn(Var) -> bool + Copy) -> MultiPoly {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree_where(pred) <= bound)
                .map(|(m, q)| (m.clone(), q.clone()))
                .collect(),
        }
    }

    /// Product with every term of degree above `bound` (under `pred`) discarded.
    pub fn mul_truncated(&self, other: &MultiPoly, bound: u32, pred: impl Fn(Var) -> bool + Copy) -> MultiPoly {
        let mut out = MultiPoly::zero();
        let rhs: Vec<(&Monomial, &Q, u32)> = other.terms.iter().map(|(m, q)| (m, q, m.degree_where(pred))).collect();
        for (m, q) in &self.terms {
            let d = m.degree_where(pred);
            if d > bound {
                continue;
            }
            for &(m2, q2, d2) in &rhs {
                if d + d2 <= bound {
                    out.add_term(m.mul(m2), q * q2);
                }
            }
        }
        out
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return Monomial::one();
        };
        let mut g = first.clone();
        for m in it {
            if g.is_one() {
                break;
            }
            g = g.gcd(m);
        }
        g
    }

    /// Splits `self = c * p` where `p` has coprime integer coefficients and a
    /// positive leading coefficient. Zero gives `(0, 0)`.
    pub fn primitive(&self) -> (Q, MultiPoly) {
        if self.is_zero() {
            return (Q::zero(), MultiPoly::zero());
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for q in self.terms.values() {
            num_gcd = num_gcd.gcd(q.numer());
            den_lcm = den_lcm.lcm(q.denom());
        }
        let mut c = Q::new(num_gcd, den_lcm);
        if self.leading().unwrap().1.is_negative() {
            c = -c;
        }
        if c.is_one() {
            return (c, self.clone());
        }
        let inv = c.recip();
        (c, self.scale(&inv))
    }

    /// Reduces `z_i * w_i` to 1 in every monomial.
    pub fn cancel_inverse_pairs(&self) -> MultiPoly {
        self.map_monomials(|m| m.cancel_inverse_pairs())
    }

    /// Plain-text rendering, highest terms first: `x1*x2 + b*x1 + b*x2`.
    pub fn render(&self) -> String {
        render_terms(self, "*")
    }
}

pub(crate) fn pow_q(q: &Q, e: u32) -> Q {
    num_traits::pow(q.clone(), e as usize)
}

fn render_terms(p: &MultiPoly, mul: &str) -> String {
    use core::fmt::Write;
    if p.is_zero() {
        return String::from("0");
    }
    let mut s = String::new();
    for (k, (m, q)) in p.terms.iter().rev().enumerate() {
        let neg = q.is_negative();
        let a = q.abs();
        if k == 0 {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        if m.is_one() {
            let _ = write!(s, "{}", a);
        } else if a.is_one() {
            s.push_str(&m.render(mul));
        } else {
            let _ = write!(s, "{}{}{}", a, mul, m.render(mul));
        }
    }
    s
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let (big, small) = if self.terms.len() >= rhs.terms.len() { (self, rhs) } else { (rhs, self) };
        let mut out = big.clone();
        for (m, q) in &small.terms {
            out.add_term(m.clone(), q.clone());
        }
        out
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, q) in &rhs.terms {
            out.add_term(m.clone(), -q.clone());
        }
        out
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        if self.is_zero() || rhs.is_zero() {
            return MultiPoly::zero();
        }
        if let Some(c) = self.as_constant() {
            return rhs.scale(&c);
        }
        if let Some(c) = rhs.as_constant() {
            return self.scale(&c);
        }
        let mut out = MultiPoly::zero();
        for (m1, q1) in &self.terms {
            for (m2, q2) in &rhs.terms {
                out.add_term(m1.mul(m2), q1 * q2);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly { terms: self.terms.iter().map(|(m, q)| (m.clone(), -q.clone())).collect() }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $f:ident) => {
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$f(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -(&self)
    }
}
