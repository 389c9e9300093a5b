use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{labels, CheckReport, Checker};
use crate::algebra::{Monomial, MultiPoly, Rf, TruncatedSeries, Var};
use crate::models::{Params, WeightModel};
use crate::partitions::{enumerate_partitions, subpartitions, Partition};
use crate::transfer::{
    dual_groth_poly, generalized_poly_with, groth_poly_with, lattice_skew, spec_for, xs, zs, Encoding, GeneralizedKind,
};

fn x_vars(m: usize) -> Vec<Var> {
    (1..=m).map(|i| Var::X(i as u16)).collect()
}

fn y_vars(n: usize) -> Vec<Var> {
    (1..=n).map(|j| Var::Y(j as u16)).collect()
}

fn ys(n: usize) -> Vec<Rf> {
    y_vars(n).into_iter().map(Rf::var).collect()
}

/// `1/z_j` written as `w_j`, so that generalised polynomials in `x/z_j`
/// stay polynomial in `x_i w_j`.
fn inverse_zs(k: usize) -> Vec<Rf> {
    (1..=k).map(|j| Rf::var(Var::W(j as u16)).recip().expect("w is nonzero")).collect()
}

fn inverse_ws(k: usize) -> Vec<Rf> {
    (1..=k).map(|j| Rf::var(Var::Z(j as u16)).recip().expect("z is nonzero")).collect()
}

/// Renames `x_i` to `y_i`.
fn to_y(p: &MultiPoly) -> MultiPoly {
    p.map_monomials(|m| Monomial::from_pairs(m.pairs().iter().map(|&(v, e)| (to_y_var(v), e))))
}

fn to_y_var(v: Var) -> Var {
    match v {
        Var::X(i) => Var::Y(i),
        v => v,
    }
}

fn to_y_rf(f: &Rf) -> Rf {
    Rf::new(to_y(f.numer()), to_y(f.denom())).expect("renaming keeps the denominator nonzero")
}

/// `Π_{i,j} 1/(1 - a_i y_j)` as a series in `vars`.
fn kernel(a: &[MultiPoly], n: usize, vars: &[Var], bound: u32) -> TruncatedSeries {
    let mut out = TruncatedSeries::one(vars, bound);
    for ai in a {
        for y in y_vars(n) {
            let t = ai * &MultiPoly::var(y);
            // geometric series, truncated by the series itself
            let mut g = MultiPoly::one();
            let mut p = MultiPoly::one();
            for _ in 0..bound {
                p = &p * &t;
                g = &g + &p;
            }
            out = out.mul(&TruncatedSeries::from_poly(&g, vars, bound)).expect("same bound");
        }
    }
    out
}

fn x_kernel(m: usize, n: usize, bound: u32) -> TruncatedSeries {
    let vars: Vec<Var> = x_vars(m).into_iter().chain(y_vars(n)).collect();
    let a: Vec<MultiPoly> = x_vars(m).into_iter().map(MultiPoly::var).collect();
    kernel(&a, n, &vars, bound)
}

/// `Π_{i,j} (1 + x_i y_j)`.
fn plus_kernel(m: usize, n: usize) -> MultiPoly {
    let mut out = MultiPoly::one();
    for x in x_vars(m) {
        for y in y_vars(n) {
            out = &out * &(&MultiPoly::one() + &(&MultiPoly::var(x) * &MultiPoly::var(y)));
        }
    }
    out
}

/// Coefficientwise comparison in the series variables, so a failure names
/// the first monomial that differs.
fn compare_series(ck: &mut Checker, lhs: &TruncatedSeries, rhs: &TruncatedSeries) {
    let (l, r) = (lhs.terms(), rhs.terms());
    let monomials: BTreeSet<&Monomial> = l.keys().chain(r.keys()).collect();
    let zero = MultiPoly::zero();
    for m in monomials {
        let a = l.get(m).unwrap_or(&zero);
        let b = r.get(m).unwrap_or(&zero);
        ck.compare(|| format!("coefficient of {}", m.render("*")), a, b, |p| p.render());
    }
}

fn series(f: &Rf, vars: &[Var], bound: u32) -> TruncatedSeries {
    TruncatedSeries::from_rf(f, vars, bound).expect("denominators have constant term 1")
}

/// `Σ_λ G^(-α,-β)_λ(x_1..x_m) g^(α,β)_λ(y_1..y_n) = Π 1/(1 - x_i y_j)` up to
/// joint degree `bound`. `G_λ(x)` starts in degree `|λ|` and vanishes for
/// `ℓ(λ) > m`, which makes the sum finite.
pub fn check_cauchy_1(m: usize, n: usize, bound: u32) -> CheckReport {
    let vars: Vec<Var> = x_vars(m).into_iter().chain(y_vars(n)).collect();
    let mut lhs = TruncatedSeries::zero(&vars, bound);
    for lambda in enumerate_partitions(bound, m, u32::MAX) {
        let g_big = groth_poly_with(&lambda, m, Encoding::Row, &Params::negated());
        let g_small = to_y(&dual_groth_poly(&lambda, n, Encoding::Row));
        let term = series(&g_big, &vars, bound).mul(&TruncatedSeries::from_poly(&g_small, &vars, bound));
        lhs = lhs.add(&term.expect("same bound")).expect("same bound");
    }
    let mut ck = Checker::new("cauchy/1").param("m", m).param("n", n).param("bound", bound);
    compare_series(&mut ck, &lhs, &x_kernel(m, n, bound));
    ck.finish()
}

/// The finite sum `Σ_{λ_1 ≤ m, ℓ(λ) ≤ n} G_{λ'}(x_1..x_m) g_λ(y_1..y_n)` at
/// the given `(α, β)`; `G` is taken at `(-β, -α)`.
fn dual_pairing_sum(m: usize, n: usize, p: &Params) -> Rf {
    let swapped = Params::new(-p.beta.clone(), -p.alpha.clone());
    let mut sum = Rf::zero();
    for lambda in enumerate_partitions(m as u32 * n as u32, n, m as u32) {
        let g_big = groth_poly_with(&lambda.conjugate(), m, Encoding::Row, &swapped);
        let f = crate::transfer::lattice_poly(&spec_for(WeightModel::RowDualg, &lambda, p.clone()), &lambda, &xs(n))
            .expect("homogeneous row");
        sum = &sum + &(&g_big * &to_y_rf(&f));
    }
    sum
}

fn cauchy_2_exact(name: &str, m: usize, n: usize, p: &Params) -> CheckReport {
    let lhs = dual_pairing_sum(m, n, p);
    let rhs = Rf::from_poly(plus_kernel(m, n));
    let mut ck = Checker::new(name).param("m", m).param("n", n);
    ck.compare(|| String::from("λ_1 ≤ m, ℓ(λ) ≤ n"), &lhs, &rhs, |f| f.render());
    ck.finish()
}

/// `Σ_λ G^(-β,-α)_{λ'}(x) g^(α,β)_λ(y) = Π (1 + x_i y_j)` as an exact finite
/// sum over `λ_1 ≤ m`, `ℓ(λ) ≤ n` at formal α, β. At formal β the dual
/// polynomials `g_λ(y_1..y_n)` do not vanish for `ℓ(λ) > n`, so the truncated
/// sum misses terms and this check fails; see [`check_cauchy_2_series`].
pub fn check_cauchy_2(m: usize, n: usize) -> CheckReport {
    cauchy_2_exact("cauchy/2", m, n, &Params::formal())
}

/// The same finite sum at β = 0, where it is complete.
pub fn check_cauchy_2_beta_zero(m: usize, n: usize) -> CheckReport {
    cauchy_2_exact("cauchy/2/beta=0", m, n, &Params::new(Rf::var(Var::Alpha), Rf::zero()))
}

/// The second Cauchy identity at formal α, β as a series up to joint degree
/// `bound`, summing over every `λ` with `λ_1 ≤ m` and `|λ| ≤ bound`.
pub fn check_cauchy_2_series(m: usize, n: usize, bound: u32) -> CheckReport {
    let vars: Vec<Var> = x_vars(m).into_iter().chain(y_vars(n)).collect();
    let p = Params::formal();
    let swapped = Params::new(-p.beta.clone(), -p.alpha.clone());
    let mut lhs = TruncatedSeries::zero(&vars, bound);
    for lambda in enumerate_partitions(bound, usize::MAX, m as u32) {
        let g_big = groth_poly_with(&lambda.conjugate(), m, Encoding::Row, &swapped);
        let g_small = to_y(&dual_groth_poly(&lambda, n, Encoding::Row));
        let term = series(&g_big, &vars, bound).mul(&TruncatedSeries::from_poly(&g_small, &vars, bound));
        lhs = lhs.add(&term.expect("same bound")).expect("same bound");
    }
    let rhs = TruncatedSeries::from_poly(&plus_kernel(m, n), &vars, bound);
    let mut ck = Checker::new("cauchy/2/series").param("m", m).param("n", n).param("bound", bound);
    compare_series(&mut ck, &lhs, &rhs);
    ck.finish()
}

/// Sum of `A_λ(x; z) B_λ(y; 1/z)` over `shapes`, with `z_j = 1/w_j` on the
/// `A` side and `1/z_j` on the `B` side; `z_j w_j` is then cancelled.
#[allow(clippy::too_many_arguments)]
fn generalized_pair_sum(
    a: GeneralizedKind,
    b: GeneralizedKind,
    shapes: &[Partition],
    m: usize,
    n: usize,
    k: usize,
    alpha: &Rf,
    vars: &[Var],
    bound: u32,
) -> TruncatedSeries {
    let (za, zb) = (inverse_zs(k), inverse_ws(k));
    let mut lhs = TruncatedSeries::zero(vars, bound);
    for lambda in shapes {
        let fa = generalized_poly_with(a, lambda, &xs(m), &za, alpha).expect("difference property holds");
        let fb = generalized_poly_with(b, lambda, &ys(n), &zb, alpha).expect("difference property holds");
        let fb = fb.as_poly().cloned().expect("dual weights are polynomial");
        let term = series(&fa, vars, bound).mul(&TruncatedSeries::from_poly(&fb, vars, bound));
        lhs = lhs.add(&term.expect("same bound")).expect("same bound");
    }
    lhs.cancel_inverse_pairs()
}

/// [`check_gen_cauchy`] at any α; the identity holds at formal α as well.
pub fn check_gen_cauchy_at_alpha(m: usize, n: usize, bound: u32, alpha: &Rf) -> CheckReport {
    let vars: Vec<Var> = x_vars(m).into_iter().chain(y_vars(n)).collect();
    let shapes = enumerate_partitions(bound, m, u32::MAX);
    let lhs = generalized_pair_sum(GeneralizedKind::G, GeneralizedKind::DualG, &shapes, m, n, m, alpha, &vars, bound);
    let mut ck = Checker::new("cauchy/generalized")
        .param("m", m)
        .param("n", n)
        .param("bound", bound)
        .param("alpha", alpha.render());
    compare_series(&mut ck, &lhs, &x_kernel(m, n, bound));
    ck.finish()
}

/// `Σ_λ G_λ(x; z) g_λ(y; 1/z) = Π 1/(1 - x_i y_j)` at α = 1, up to joint
/// degree `bound` in `x, y`. Both sides are polynomial in `z_j` and
/// `w_j = 1/z_j` after the substitution; `z_j w_j` is cancelled before comparing.
pub fn check_gen_cauchy(m: usize, n: usize, bound: u32) -> CheckReport {
    check_gen_cauchy_at_alpha(m, n, bound, &Rf::one())
}

/// `Σ_λ J^α_λ(x; z) j^α_λ(y; 1/z) = Π 1/(1 - x_i y_j)` at formal α. `J_λ` is
/// built on `λ'`, so it vanishes unless `λ_1 ≤ m`.
pub fn check_gen_cauchy_weak(m: usize, n: usize, bound: u32) -> CheckReport {
    let vars: Vec<Var> = x_vars(m).into_iter().chain(y_vars(n)).collect();
    let shapes = enumerate_partitions(bound, usize::MAX, m as u32);
    let alpha = Rf::var(Var::Alpha);
    let lhs = generalized_pair_sum(
        GeneralizedKind::J,
        GeneralizedKind::DualJ,
        &shapes,
        m,
        n,
        bound.max(1) as usize,
        &alpha,
        &vars,
        bound,
    );
    let mut ck = Checker::new("cauchy/generalized/weak").param("m", m).param("n", n).param("bound", bound);
    compare_series(&mut ck, &lhs, &x_kernel(m, n, bound));
    ck.finish()
}

/// `Σ_λ G_λ(x; z) j_λ(y; 1/z) = Π (1 + x_i y_j)` at α = 1. Exact: the sum is
/// finite over `ℓ(λ) ≤ m`, `λ_1 ≤ n`, and compared as a series of degree
/// `m·n·2`, which is past the top degree of either side.
pub fn check_gen_cauchy_dual_weak(m: usize, n: usize) -> CheckReport {
    let vars: Vec<Var> = x_vars(m).into_iter().chain(y_vars(n)).collect();
    let bound = 2 * (m * n) as u32;
    let shapes = enumerate_partitions(m as u32 * n as u32, m, n as u32);
    let lhs =
        generalized_pair_sum(GeneralizedKind::G, GeneralizedKind::DualJ, &shapes, m, n, m, &Rf::one(), &vars, bound);
    let rhs = TruncatedSeries::from_poly(&plus_kernel(m, n), &vars, bound);
    let mut ck = Checker::new("cauchy/generalized/dual-weak").param("m", m).param("n", n);
    compare_series(&mut ck, &lhs, &rhs);
    ck.finish()
}

fn g_at_z(lambda: &Partition, m: usize) -> Rf {
    let k = m.max(lambda.len());
    generalized_poly_with(GeneralizedKind::G, lambda, &zs(m), &zs(k), &Rf::one()).expect("difference property holds")
}

/// `G_λ(z_1..z_m; z_1..z_m) = 1` at α = 1. It holds when `ℓ(λ) ≤ m`; for
/// longer `λ` the polynomial in `m` variables is 0.
pub fn check_g_at_z(lambda: &Partition, m: usize) -> CheckReport {
    let mut ck = Checker::new("cauchy/G(z;z)").param("lambda", lambda).param("m", m);
    ck.compare(|| labels(&[("lambda", lambda)]), &g_at_z(lambda, m), &Rf::one(), |f| f.render());
    ck.finish()
}

/// [`check_g_at_z`] over all `λ` with `λ_1 ≤ max_width` and `|λ| ≤ max_size`;
/// with `length_at_most_m` only those with `ℓ(λ) ≤ m` are included.
pub fn check_g_at_z_range(max_width: u32, max_size: u32, m: usize, length_at_most_m: bool) -> CheckReport {
    let max_len = if length_at_most_m { m } else { usize::MAX };
    let mut ck = Checker::new("cauchy/G(z;z)")
        .param("max_width", max_width)
        .param("max_size", max_size)
        .param("m", m)
        .param("length_at_most_m", length_at_most_m);
    for lambda in enumerate_partitions(max_size, max_len, max_width) {
        ck.compare(|| labels(&[("lambda", &lambda)]), &g_at_z(&lambda, m), &Rf::one(), |f| f.render());
    }
    ck.finish()
}

/// `Σ_{ℓ(λ) ≤ m} g_λ(y; 1/z) = Π 1/(1 - z_i y_j)` at α = 1, as a series in
/// `y` up to degree `bound`. `g_λ` starts in degree `λ_1`.
pub fn check_yeliussizov(m: usize, n: usize, bound: u32) -> CheckReport {
    let vars = y_vars(n);
    let z = inverse_ws(m);
    let mut lhs = TruncatedSeries::zero(&vars, bound);
    for lambda in enumerate_partitions(m as u32 * bound, m, bound) {
        let f = generalized_poly_with(GeneralizedKind::DualG, &lambda, &ys(n), &z, &Rf::one())
            .expect("difference property holds");
        let f = f.as_poly().cloned().expect("dual weights are polynomial");
        lhs = lhs.add(&TruncatedSeries::from_poly(&f, &vars, bound)).expect("same bound");
    }
    let a: Vec<MultiPoly> = (1..=m).map(|i| MultiPoly::var(Var::Z(i as u16))).collect();
    let rhs = kernel(&a, n, &vars, bound);
    let mut ck = Checker::new("cauchy/yeliussizov").param("m", m).param("n", n).param("bound", bound);
    compare_series(&mut ck, &lhs, &rhs);
    ck.finish()
}

/// Skew form of the first Cauchy identity:
/// `Σ_ν G_{ν//λ}(x) g_{ν/μ}(y) = Π 1/(1 - x_i y_j) Σ_κ G_{μ//κ}(x) g_{λ/κ}(y)`,
/// with `G_{ν//λ}` the matrix element of the dual-tile rows at `(-α,-β)`
/// between `λ` and `ν`, and `g_{ν/μ}` the skew dual polynomial.
pub fn check_skew_cauchy(lambda: &Partition, mu: &Partition, m: usize, n: usize, bound: u32) -> CheckReport {
    let vars: Vec<Var> = x_vars(m).into_iter().chain(y_vars(n)).collect();
    let (x, y) = (xs(m), xs(n));
    let big = |inner: &Partition, outer: &Partition| {
        let spec = spec_for(WeightModel::RowGDual, outer, Params::negated());
        let f = lattice_skew(&spec, inner, outer, &x).expect("homogeneous row");
        series(&f, &vars, bound)
    };
    let small = |inner: &Partition, outer: &Partition| {
        let spec = spec_for(WeightModel::RowDualg, outer, Params::formal());
        let f = lattice_skew(&spec, inner, outer, &y).expect("homogeneous row");
        TruncatedSeries::from_poly(&to_y(f.as_poly().expect("dual weights are polynomial")), &vars, bound)
    };

    // ν ⊇ λ ∪ μ; G_{ν//λ} starts in degree |ν| - |λ| and adds at most m rows
    let mut lhs = TruncatedSeries::zero(&vars, bound);
    let max_len = lambda.len() + m;
    for nu in enumerate_partitions(lambda.size() + bound, max_len, u32::MAX) {
        if !nu.contains(lambda) || !nu.contains(mu) {
            continue;
        }
        let term = big(lambda, &nu).mul(&small(mu, &nu)).expect("same bound");
        lhs = lhs.add(&term).expect("same bound");
    }

    let mut inner = TruncatedSeries::zero(&vars, bound);
    for kappa in subpartitions(lambda) {
        if !mu.contains(&kappa) {
            continue;
        }
        let term = big(&kappa, mu).mul(&small(&kappa, lambda)).expect("same bound");
        inner = inner.add(&term).expect("same bound");
    }
    let rhs = x_kernel(m, n, bound).mul(&inner).expect("same bound");

    let mut ck = Checker::new("cauchy/skew")
        .param("lambda", lambda)
        .param("mu", mu)
        .param("m", m)
        .param("n", n)
        .param("bound", bound);
    compare_series(&mut ck, &lhs, &rhs);
    ck.finish()
}
