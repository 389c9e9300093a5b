//! Closed-form single-variable skew weights and the branching recursions they
//! generate. Nothing here touches the lattice code, so the two can be
//! compared against each other.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{Rf, Var};
use crate::partitions::{is_horizontal_strip, is_vertical_strip, outer_row_stat, skew_stats, subpartitions, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SkewWeightKind {
    /// `G_{λ//μ}(x)`, supported on horizontal strips.
    GSkew,
    /// `g_{λ/μ}(x)`, supported on `μ ⊆ λ`.
    DualGSkew,
    /// `j_{λ/μ}(x)`, supported on vertical strips.
    JSkew,
}

/// Polynomial families with a branching rule.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BranchKind {
    G,
    DualG,
    J,
}

impl BranchKind {
    fn skew(self) -> SkewWeightKind {
        match self {
            BranchKind::G => SkewWeightKind::GSkew,
            BranchKind::DualG => SkewWeightKind::DualGSkew,
            BranchKind::J => SkewWeightKind::JSkew,
        }
    }
}

/// Skew weight at formal `α, β`.
pub fn skew_weight(kind: SkewWeightKind, lambda: &Partition, mu: &Partition, x: &Rf) -> Rf {
    skew_weight_with(kind, lambda, mu, x, &Rf::var(Var::Alpha), &Rf::var(Var::Beta))
}

pub fn skew_weight_with(kind: SkewWeightKind, lambda: &Partition, mu: &Partition, x: &Rf, alpha: &Rf, beta: &Rf) -> Rf {
    let one = Rf::one();
    match kind {
        SkewWeightKind::GSkew => {
            let Ok(r) = outer_row_stat(lambda, mu) else {
                return Rf::zero();
            };
            let den = &one - &(alpha * x);
            let geo = x.checked_div(&den).expect("1 - αx is nonzero");
            let pass = (&one + &(beta * x)).checked_div(&den).expect("1 - αx is nonzero");
            &geo.pow(lambda.size() - mu.size()) * &pass.pow(r)
        }
        SkewWeightKind::DualGSkew => {
            let Ok((r, c, b)) = skew_stats(lambda, mu) else {
                return Rf::zero();
            };
            let size = lambda.size() - mu.size();
            // |λ/μ| - r - c + b ≥ 0 for every skew shape
            let ab = size + b - r - c;
            &(&(&beta.pow(r - b) * &(alpha + beta).pow(ab)) * &x.pow(b)) * &(alpha + x).pow(c - b)
        }
        SkewWeightKind::JSkew => {
            if !is_vertical_strip(lambda, mu) {
                return Rf::zero();
            }
            let (_, c, _) = skew_stats(lambda, mu).expect("vertical strips are contained");
            let size = lambda.size() - mu.size();
            &x.pow(c) * &(x + &one).pow(size - c)
        }
    }
}

/// `F_λ(x_1..x_n) = Σ_μ F_μ(x_1..x_{n-1}) · skew(λ, μ)(x_n)` with `F_∅ = 1`.
pub fn branch_poly(kind: BranchKind, lambda: &Partition, n: usize) -> Rf {
    branch_poly_with(kind, lambda, n, &Rf::var(Var::Alpha), &Rf::var(Var::Beta))
}

pub fn branch_poly_with(kind: BranchKind, lambda: &Partition, n: usize, alpha: &Rf, beta: &Rf) -> Rf {
    let subs = subpartitions(lambda);
    let index: BTreeMap<&Partition, usize> = subs.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let skew = kind.skew();
    // f[i] = F_{subs[i]} in the variables seen so far
    let mut f = vec![Rf::zero(); subs.len()];
    f[index[&Partition::empty()]] = Rf::one();
    for k in 1..=n {
        let x = Rf::var(Var::X(k as u16));
        let next: Vec<Rf> = subs
            .iter()
            .map(|nu| {
                let mut acc = Rf::zero();
                for (j, mu) in subs.iter().enumerate() {
                    if f[j].is_zero() || !nu.contains(mu) {
                        continue;
                    }
                    if kind == BranchKind::G && !is_horizontal_strip(nu, mu) {
                        continue;
                    }
                    let w = skew_weight_with(skew, nu, mu, &x, alpha, beta);
                    if !w.is_zero() {
                        acc = &acc + &(&f[j] * &w);
                    }
                }
                acc
            })
            .collect();
        f = next;
    }
    f[index[lambda]].clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::MultiPoly;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }
    fn x() -> Rf {
        Rf::var(Var::X(1))
    }
    fn geo(x: &Rf) -> Rf {
        x.checked_div(&(&Rf::one() - &(&Rf::var(Var::Alpha) * x))).unwrap()
    }
    fn pass(x: &Rf) -> Rf {
        (&Rf::one() + &(&Rf::var(Var::Beta) * x)).checked_div(&(&Rf::one() - &(&Rf::var(Var::Alpha) * x))).unwrap()
    }

    #[test]
    fn skew_examples() {
        let w = skew_weight(SkewWeightKind::GSkew, &p(&[4, 3, 2, 1]), &p(&[3, 2, 2, 1]), &x());
        assert_eq!(w, &geo(&x()).pow(2) * &pass(&x()).pow(2));
        // λ = μ leaves only the pass factors, one per row longer than the next
        let lam = p(&[3, 3, 1]);
        assert_eq!(skew_weight(SkewWeightKind::GSkew, &lam, &lam, &x()), pass(&x()).pow(2));
        assert_eq!(skew_weight(SkewWeightKind::DualGSkew, &p(&[2]), &p(&[1]), &x()), x());
        assert_eq!(skew_weight(SkewWeightKind::JSkew, &p(&[1, 1]), &p(&[1]), &x()), x());
        assert!(skew_weight(SkewWeightKind::JSkew, &p(&[2]), &p(&[]), &x()).is_zero());
        assert!(skew_weight(SkewWeightKind::DualGSkew, &p(&[1]), &p(&[2]), &x()).is_zero());
    }

    #[test]
    fn single_column_j() {
        for h in 1..5u32 {
            let col = Partition::new(vec![1; h as usize]).unwrap();
            let expect = &x() * &(&x() + &Rf::one()).pow(h - 1);
            assert_eq!(skew_weight(SkewWeightKind::JSkew, &col, &Partition::empty(), &x()), expect);
        }
    }

    #[test]
    fn branching_examples() {
        let x1 = Rf::var(Var::X(1));
        let x2 = Rf::var(Var::X(2));
        let g2 = branch_poly(BranchKind::G, &p(&[2]), 2);
        let expect = &(&(&geo(&x1).pow(2) * &pass(&x2)) + &(&(&geo(&x1) * &geo(&x2)) * &pass(&x2))) + &geo(&x2).pow(2);
        assert_eq!(g2, expect);

        let a = Rf::var(Var::Alpha);
        let d2 = branch_poly(BranchKind::DualG, &p(&[2]), 2);
        let expect = &(&(&x1 * &(&x1 + &a)) + &(&x1 * &x2)) + &(&x2 * &(&x2 + &a));
        assert_eq!(d2, expect);
        assert!(d2.as_poly().is_some());
        assert_eq!(branch_poly(BranchKind::J, &p(&[]), 0).as_poly(), Some(&MultiPoly::one()));
        assert!(branch_poly(BranchKind::G, &p(&[1]), 0).is_zero());
    }
}
