//! Plain and LaTeX renderings. LaTeX splits simple binomial factors such as
//! `1 - αx_1` out of the denominator so fractions read like `x_1/(1-αx_1)`.

use groth_lattice::algebra::{q, Monomial, MultiPoly, Rf, Var};
use num_traits::{One, Signed};

fn latex_var(v: Var) -> String {
    match v {
        Var::Alpha => "\\alpha".into(),
        Var::Beta => "\\beta".into(),
        Var::X(i) => format!("x_{{{}}}", i),
        Var::Y(i) => format!("y_{{{}}}", i),
        Var::Z(i) => format!("z_{{{}}}", i),
        Var::W(i) => format!("w_{{{}}}", i),
    }
}

fn latex_monomial(m: &Monomial) -> String {
    let is_param = |v: Var| matches!(v, Var::Alpha | Var::Beta);
    let (params, rest): (Vec<_>, Vec<_>) = m.pairs().iter().partition(|p| is_param(p.0));
    let pieces: Vec<String> = params
        .iter()
        .chain(rest.iter())
        .map(|&&(v, e)| if e > 1 { format!("{}^{{{}}}", latex_var(v), e) } else { latex_var(v) })
        .collect();
    pieces.join(" ")
}

pub fn latex_poly(p: &MultiPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut s = String::new();
    for (k, (m, q)) in p.terms().rev().enumerate() {
        if k == 0 {
            if q.is_negative() {
                s.push('-');
            }
        } else {
            s.push_str(if q.is_negative() { " - " } else { " + " });
        }
        let a = q.abs();
        let coeff = if a.is_integer() { a.to_string() } else { format!("\\frac{{{}}}{{{}}}", a.numer(), a.denom()) };
        if m.is_one() {
            s.push_str(&coeff);
        } else {
            if !a.is_one() {
                s.push_str(&coeff);
            }
            s.push_str(&latex_monomial(m));
        }
    }
    s
}

/// Candidate denominator factors `1 ± v·x` built from the variables present.
fn candidates(den: &MultiPoly) -> Vec<MultiPoly> {
    let vars: Vec<Var> = den.vars().into_iter().collect();
    let mut monos: Vec<Monomial> = Vec::new();
    for &v in &vars {
        monos.push(Monomial::var(v));
        for &w in &vars {
            if v < w {
                monos.push(Monomial::from_pairs([(v, 1), (w, 1)]));
            }
        }
    }
    let mut out = Vec::new();
    for m in monos {
        for sign in [-1i64, 1] {
            let mut f = MultiPoly::one();
            f.add_term(m.clone(), q(sign));
            out.push(f);
        }
    }
    out
}

/// Splits `den` into a constant-free cofactor times powers of binomial factors.
fn factor_denominator(den: &MultiPoly) -> (MultiPoly, Vec<(MultiPoly, u32)>) {
    let mut rest = den.clone();
    let mut found = Vec::new();
    for f in candidates(den) {
        let mut e = 0;
        while rest.total_degree() > 0 {
            match rest.div_exact(&f) {
                Some(q) => {
                    rest = q;
                    e += 1;
                }
                None => break,
            }
        }
        if e > 0 {
            found.push((f, e));
        }
    }
    (rest, found)
}

/// `1 - m` or `1 + m`, constant first.
fn latex_binomial(p: &MultiPoly) -> String {
    let (m, q) = p.leading().expect("binomial");
    format!("1 {} {}", if q.is_negative() { "-" } else { "+" }, latex_monomial(m))
}

pub fn latex_rf(f: &Rf) -> String {
    if f.denom().is_one() {
        return latex_poly(f.numer());
    }
    let (mut rest, factors) = factor_denominator(f.denom());
    let mut numer = f.numer().clone();
    if let Some(c) = rest.as_constant() {
        numer = numer.scale(&c.recip());
        rest = MultiPoly::one();
    }
    let num = latex_poly(&numer);
    let mut pieces: Vec<String> = Vec::new();
    if !rest.is_one() {
        pieces.push(latex_poly(&rest));
    }
    for (p, e) in &factors {
        pieces.push(if *e > 1 { format!("({})^{{{}}}", latex_binomial(p), e) } else { latex_binomial(p) });
    }
    let den = if pieces.len() == 1 {
        pieces.pop().unwrap_or_default()
    } else {
        pieces.iter().map(|p| if p.starts_with('(') { p.clone() } else { format!("({})", p) }).collect::<String>()
    };
    format!("\\frac{{{}}}{{{}}}", num, den)
}
