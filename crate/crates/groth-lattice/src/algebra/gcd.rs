//! Multivariate polynomial gcd over the rationals.
//!
//! Recursive content/primitive-part scheme with a primitive PRS in a chosen
//! main variable. Two shortcuts keep the common cases cheap: a variable that
//! occurs in only one argument is eliminated by taking the gcd with that
//! argument's coefficients, and a univariate image at a rational point
//! certifies the coprime case (exactly, see `certified_degree_zero`).

use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::monomial::{Monomial, Var};
use super::poly::MultiPoly;
use super::Q;

/// Greatest common divisor, normalized to coprime integer coefficients and a
/// positive leading coefficient. `gcd(0, 0) = 0`.
pub fn gcd(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_zero() {
        return b.primitive().1;
    }
    if b.is_zero() {
        return a.primitive().1;
    }
    if a.as_constant().is_some() || b.as_constant().is_some() {
        return MultiPoly::one();
    }
    let ma = a.monomial_content();
    let mb = b.monomial_content();
    let mg = ma.gcd(&mb);
    let a1 = strip_monomial(a, &ma);
    let b1 = strip_monomial(b, &mb);
    let g = gcd_no_monomial(&a1, &b1);
    g.mul_monomial(&mg).primitive().1
}

fn strip_monomial(p: &MultiPoly, m: &Monomial) -> MultiPoly {
    if m.is_one() {
        p.clone()
    } else {
        MultiPoly::from_terms(p.terms().map(|(t, q)| (t.div(m).unwrap(), q.clone())))
    }
}

fn gcd_no_monomial(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.as_constant().is_some() || b.as_constant().is_some() {
        return MultiPoly::one();
    }
    if a == b {
        return a.primitive().1;
    }
    let (big, small) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    if big.div_exact(small).is_some() {
        return small.primitive().1;
    }
    let va = a.vars();
    let vb = b.vars();
    if let Some(&v) = va.difference(&vb).next() {
        return gcd_with_coeffs(b, a, v);
    }
    if let Some(&v) = vb.difference(&va).next() {
        return gcd_with_coeffs(a, b, v);
    }
    let v = *va.iter().min_by_key(|&&v| (a.degree_in(v).max(b.degree_in(v)), a.degree_in(v) + b.degree_in(v))).unwrap();
    let ca = content_in(a, v);
    let cb = content_in(b, v);
    let c = gcd(&ca, &cb);
    let pa = a.div_exact(&ca).unwrap();
    let pb = b.div_exact(&cb).unwrap();
    if certified_degree_zero(&pa, &pb, v) {
        return c;
    }
    let g = primitive_prs(&pa, &pb, v);
    (&g * &c).primitive().1
}

/// gcd(p, q) where `v` occurs in `q` but not in `p`: any common factor is free
/// of `v`, so it divides every coefficient of `q` in `v`.
fn gcd_with_coeffs(p: &MultiPoly, q: &MultiPoly, v: Var) -> MultiPoly {
    let mut g = p.clone();
    for c in q.coeffs_in(v).values() {
        g = gcd(&g, c);
        if g.as_constant().is_some() {
            return MultiPoly::one();
        }
    }
    g
}

/// gcd of the coefficients of `p` viewed as a polynomial in `v`.
pub fn content_in(p: &MultiPoly, v: Var) -> MultiPoly {
    let coeffs = p.coeffs_in(v);
    let mut it = coeffs.into_values();
    let mut g = it.next().unwrap_or_else(MultiPoly::zero).primitive().1;
    for c in it {
        if g.is_one() {
            break;
        }
        g = gcd(&g, &c);
    }
    g
}

fn primitive_in(p: &MultiPoly, v: Var) -> MultiPoly {
    let c = content_in(p, v);
    p.div_exact(&c).unwrap().primitive().1
}

/// Pseudo-remainder of `a` by `b` in `v`, up to a factor free of `v`.
fn prem(a: &MultiPoly, b: &MultiPoly, v: Var) -> MultiPoly {
    let db = b.degree_in(v);
    let lb = b.lc_in(v);
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(v) >= db {
        let dr = r.degree_in(v);
        let lr = r.lc_in(v);
        let shifted = (&lr * b).mul_monomial(&Monomial::var_pow(v, dr - db));
        r = &(&lb * &r) - &shifted;
    }
    r
}

fn primitive_prs(a: &MultiPoly, b: &MultiPoly, v: Var) -> MultiPoly {
    let (mut p1, mut p2) =
        if a.degree_in(v) >= b.degree_in(v) { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) };
    loop {
        let r = prem(&p1, &p2, v);
        if r.is_zero() {
            return primitive_in(&p2, v);
        }
        if r.degree_in(v) == 0 {
            return MultiPoly::one();
        }
        p1 = p2;
        p2 = primitive_in(&r, v);
    }
}

const SAMPLE: [i64; 16] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53];

/// True only if the gcd of `a` and `b` provably has degree 0 in `v`.
///
/// Every other variable is set to a rational value at which neither leading
/// coefficient in `v` vanishes. The true gcd's image then keeps its degree in
/// `v` and divides both images, so a constant univariate gcd of the images
/// forces degree 0.
fn certified_degree_zero(a: &MultiPoly, b: &MultiPoly, v: Var) -> bool {
    let mut others: Vec<Var> = a.vars().union(&b.vars()).copied().collect();
    others.retain(|&w| w != v);
    for attempt in 0..3usize {
        let point: alloc::collections::BTreeMap<Var, Q> = others
            .iter()
            .enumerate()
            .map(|(i, &w)| {
                let k = SAMPLE[(i * 5 + attempt * 7) % SAMPLE.len()];
                let sign = if (i + attempt) % 2 == 0 { 1 } else { -1 };
                (w, Q::from_integer((sign * k).into()))
            })
            .collect();
        let ua = univariate_image(a, v, &point);
        let ub = univariate_image(b, v, &point);
        if ua.len() as u32 != a.degree_in(v) + 1 || ub.len() as u32 != b.degree_in(v) + 1 {
            continue;
        }
        return uni_gcd(ua, ub).len() == 1;
    }
    false
}

/// Dense coefficients (index = power of `v`), trailing zeros removed.
fn univariate_image(p: &MultiPoly, v: Var, point: &alloc::collections::BTreeMap<Var, Q>) -> Vec<Q> {
    let d = p.degree_in(v) as usize;
    let mut out = alloc::vec![Q::zero(); d + 1];
    for (m, q) in p.terms() {
        let (e, rest) = m.split(v);
        let mut t = q.clone();
        for &(w, k) in rest.pairs() {
            t *= super::poly::pow_q(&point[&w], k);
        }
        out[e as usize] += t;
    }
    while out.len() > 1 && out.last().unwrap().is_zero() {
        out.pop();
    }
    out
}

fn uni_rem(mut a: Vec<Q>, b: &[Q]) -> Vec<Q> {
    let lb = b.last().unwrap().clone();
    while a.len() >= b.len() && !(a.len() == 1 && a[0].is_zero()) {
        let shift = a.len() - b.len();
        let f = a.last().unwrap() / &lb;
        for (i, c) in b.iter().enumerate() {
            a[shift + i] -= &f * c;
        }
        a.pop();
        while a.len() > 1 && a.last().unwrap().is_zero() {
            a.pop();
        }
        if a.is_empty() {
            a.push(Q::zero());
        }
    }
    a
}

fn uni_gcd(mut a: Vec<Q>, mut b: Vec<Q>) -> Vec<Q> {
    while !(b.len() == 1 && b[0].is_zero()) {
        let r = uni_rem(a, &b);
        a = b;
        b = r;
    }
    let l = a.last().unwrap().clone();
    if !l.is_zero() && !l.is_one() {
        for c in a.iter_mut() {
            *c /= &l;
        }
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: Var) -> MultiPoly {
        MultiPoly::var(x)
    }
    fn one() -> MultiPoly {
        MultiPoly::one()
    }

    #[test]
    fn common_linear_factor() {
        let x = v(Var::X(1));
        let a = v(Var::Alpha);
        let f = &one() - &(&a * &x);
        let p = &f * &(&x + &one());
        let q = &f * &(&x - &v(Var::Beta));
        assert_eq!(gcd(&p, &q), f.primitive().1);
    }

    #[test]
    fn coprime_inputs() {
        let x = v(Var::X(1));
        let y = v(Var::Y(1));
        let p = &(&x * &y) + &one();
        let q = &x + &y;
        assert!(gcd(&p, &q).is_one());
    }

    #[test]
    fn monomial_and_power_factors() {
        let x = v(Var::X(1));
        let a = v(Var::Alpha);
        let f = &one() - &(&a * &x);
        let p = &(&x.pow(2) * &f.pow(3)) * &a;
        let q = &x * &f.pow(2);
        let g = gcd(&p, &q);
        assert_eq!(g, (&x * &f.pow(2)).primitive().1);
    }

    #[test]
    fn variable_only_on_one_side() {
        let x = v(Var::X(1));
        let b = v(Var::Beta);
        let f = &x + &one();
        let p = &f * &(&b + &x);
        let q = &f * &v(Var::X(2));
        assert_eq!(gcd(&p, &q), f);
    }

    #[test]
    fn zero_cases() {
        let x = v(Var::X(1)).scale(&Q::from_integer((-3).into()));
        assert_eq!(gcd(&x, &MultiPoly::zero()), v(Var::X(1)));
        assert!(gcd(&MultiPoly::zero(), &MultiPoly::zero()).is_zero());
    }
}
