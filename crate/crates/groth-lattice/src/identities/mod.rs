//! Exhaustive finite checks of the lattice relations: RLL, eigenvector,
//! unitarity, inversion, commutation and the Cauchy identities.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::Display;

mod cauchy;
mod commutation;
mod inversion;
mod local;
mod rll;

pub use cauchy::{
    check_cauchy_1, check_cauchy_2, check_cauchy_2_beta_zero, check_cauchy_2_series, check_g_at_z, check_g_at_z_range,
    check_gen_cauchy, check_gen_cauchy_at_alpha, check_gen_cauchy_dual_weak, check_gen_cauchy_weak, check_skew_cauchy,
    check_yeliussizov,
};
pub use commutation::{check_commutation, check_commutation_with_bound, CommutationKind};
pub use inversion::{check_inversion_dual, check_inversion_g};
pub use local::{check_eigenvector, check_unitary};
pub use rll::{check_rll, RllPair};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub labels: String,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of one check. A failed check always carries the first failing
/// case in enumeration order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub params: Vec<(String, String)>,
    pub passed: bool,
    /// Number of label configurations compared.
    pub cases: usize,
    pub counterexample: Option<Counterexample>,
}

/// Accumulates comparisons for one report.
pub(crate) struct Checker {
    name: String,
    params: Vec<(String, String)>,
    cases: usize,
    failure: Option<Counterexample>,
}

impl Checker {
    pub(crate) fn new(name: impl Into<String>) -> Self {
        Checker { name: name.into(), params: Vec::new(), cases: 0, failure: None }
    }

    pub(crate) fn param(mut self, key: &str, value: impl Display) -> Self {
        self.params.push((key.to_string(), value.to_string()));
        self
    }

    /// Records one comparison; `labels` is only built on failure.
    pub(crate) fn compare<T: PartialEq>(
        &mut self,
        labels: impl FnOnce() -> String,
        lhs: &T,
        rhs: &T,
        render: impl Fn(&T) -> String,
    ) -> bool {
        self.cases += 1;
        let ok = lhs == rhs;
        if !ok && self.failure.is_none() {
            self.failure = Some(Counterexample { labels: labels(), lhs: render(lhs), rhs: render(rhs) });
        }
        ok
    }

    pub(crate) fn finish(self) -> CheckReport {
        CheckReport {
            name: self.name,
            params: self.params,
            passed: self.failure.is_none(),
            cases: self.cases,
            counterexample: self.failure,
        }
    }
}

pub(crate) fn labels(parts: &[(&str, &dyn Display)]) -> String {
    parts.iter().map(|(k, v)| format!("{}={}", k, v)).collect::<Vec<_>>().join(" ")
}

/// Renders an occupancy vector as `[1,0,2]`.
pub(crate) fn occ(v: &[u32]) -> String {
    format!("[{}]", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
}

/// Every vector of length `sites` with entries in `0..=max`.
pub(crate) fn occupancy_vectors(sites: usize, max: u32) -> Vec<Vec<u32>> {
    let mut out = alloc::vec![Vec::new()];
    for _ in 0..sites {
        out = out
            .into_iter()
            .flat_map(|v: Vec<u32>| {
                (0..=max).map(move |k| {
                    let mut w = v.clone();
                    w.push(k);
                    w
                })
            })
            .collect();
    }
    out
}
