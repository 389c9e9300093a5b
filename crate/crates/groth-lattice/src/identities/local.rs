use alloc::format;

use super::{labels, CheckReport, Checker};
use crate::algebra::{Rf, Var};
use crate::models::{rmatrix_entry, RMatrixFamily};

fn entry(f: RMatrixFamily, a: u32, b: u32, c: u32, d: u32, x: &Rf, y: &Rf) -> Rf {
    rmatrix_entry(f, a, b, c, d, x, y).unwrap_or_else(|_| Rf::zero())
}

/// For fixed right labels `(c, d)`, the entries summed over all left labels
/// `(a, b)` give 1. For the five-vertex matrices this is the column sum.
/// `MixedR` is covered by its RLL replay instead.
pub fn check_eigenvector(family: RMatrixFamily, max_label: u32) -> CheckReport {
    let (x, y) = (Rf::var(Var::X(1)), Rf::var(Var::Y(1)));
    let (fx, fy) = family.fermionic_lines();
    let cmax = if fx { max_label.min(1) } else { max_label };
    let dmax = if fy { max_label.min(1) } else { max_label };
    let mut ck = Checker::new(format!("eigenvector/{}", family.name())).param("max_label", max_label);
    for c in 0..=cmax {
        for d in 0..=dmax {
            let mut sum = Rf::zero();
            for a in 0..=c + d {
                let b = c + d - a;
                if (fx && a > 1) || (fy && b > 1) {
                    continue;
                }
                sum = &sum + &entry(family, a, b, c, d, &x, &y);
            }
            ck.compare(|| labels(&[("c", &c), ("d", &d)]), &sum, &Rf::one(), |f| f.render());
        }
    }
    ck.finish()
}

/// `Σ_g R̃(x,y)^{a,a+a'-g}_{a',g} R̃(y,x)^{a+a'-g,b}_{g,b'} = δ_{a,b} δ_{a',b'}`
/// for all labels up to `max_label`.
pub fn check_unitary(max_label: u32) -> CheckReport {
    let (x, y) = (Rf::var(Var::X(1)), Rf::var(Var::Y(1)));
    let f = RMatrixFamily::ColGR;
    let mut ck = Checker::new("unitary/ColGR").param("max_label", max_label);
    for a in 0..=max_label {
        for a2 in 0..=max_label {
            for b in 0..=max_label {
                let Some(b2) = (a + a2).checked_sub(b) else { continue };
                if b2 > max_label {
                    continue;
                }
                let mut sum = Rf::zero();
                for g in 0..=a + a2 {
                    let top = a + a2 - g;
                    let first = entry(f, a, a2, g, top, &x, &y);
                    if first.is_zero() {
                        continue;
                    }
                    sum = &sum + &(&first * &entry(f, top, g, b2, b, &y, &x));
                }
                let expect = if a == b && a2 == b2 { Rf::one() } else { Rf::zero() };
                ck.compare(|| labels(&[("a", &a), ("a'", &a2), ("b", &b), ("b'", &b2)]), &sum, &expect, |f| f.render());
            }
        }
    }
    ck.finish()
}
