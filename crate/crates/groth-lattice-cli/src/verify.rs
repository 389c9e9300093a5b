//! Verification suites. Checks run on a small worker pool; reports are
//! printed in suite order through a single writer as soon as they are ready.

use std::collections::BTreeMap;
use std::io::Write;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::mpsc;
use std::sync::Mutex;

use clap::ValueEnum;
use groth_lattice::identities::*;
use groth_lattice::models::RMatrixFamily;
use groth_lattice::partitions::{enumerate_partitions, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Every suite below except cauchy-literal.
    All,
    Rll,
    Eigenvector,
    Unitary,
    Inversion,
    Commutation,
    Cauchy,
    /// Cauchy statements taken literally where they are known not to hold
    /// (finite second Cauchy sum at formal β, G(z;z) over λ1 ≤ 3).
    CauchyLiteral,
}

#[derive(Clone, Debug)]
pub struct Bounds {
    pub bound: u32,
    pub sites: usize,
    pub occ_max: u32,
    pub aux_max: u32,
    pub phys_max: u32,
    pub max_label: u32,
    pub m: usize,
    pub n: usize,
}

type Job = Box<dyn FnOnce() -> CheckReport + Send>;

fn jobs(suite: Suite, b: &Bounds) -> Vec<Job> {
    let mut out: Vec<Job> = Vec::new();
    let b = b.clone();
    let want = |s: Suite| suite == s || (suite == Suite::All && s != Suite::CauchyLiteral);
    if want(Suite::Rll) {
        for pair in RllPair::ALL {
            let (a, p) = (b.aux_max, b.phys_max);
            out.push(Box::new(move || check_rll(pair, a, p)));
        }
    }
    if want(Suite::Eigenvector) {
        for family in RMatrixFamily::ALL {
            if family == RMatrixFamily::MixedR {
                continue;
            }
            let k = b.max_label;
            out.push(Box::new(move || check_eigenvector(family, k)));
        }
    }
    if want(Suite::Unitary) {
        let k = b.max_label;
        out.push(Box::new(move || check_unitary(k)));
    }
    if want(Suite::Inversion) {
        for with_z in [false, true] {
            let (s, o) = (b.sites, b.occ_max);
            out.push(Box::new(move || check_inversion_g(s, o, with_z)));
            out.push(Box::new(move || check_inversion_dual(s, o, with_z)));
        }
    }
    if want(Suite::Commutation) {
        for kind in CommutationKind::ALL {
            let (s, o, d) = (b.sites, b.occ_max, b.bound);
            out.push(Box::new(move || check_commutation_with_bound(kind, s, o, d)));
        }
    }
    if want(Suite::Cauchy) {
        let (m, n, d) = (b.m, b.n, b.bound);
        out.push(Box::new(move || check_cauchy_1(m, n, d)));
        out.push(Box::new(move || check_cauchy_2_beta_zero(m, n)));
        out.push(Box::new(move || check_cauchy_2_series(m, n, d)));
        out.push(Box::new(move || check_gen_cauchy(m, n, d)));
        out.push(Box::new(move || check_gen_cauchy_weak(m, n, d)));
        out.push(Box::new(move || check_gen_cauchy_dual_weak(m, n)));
        out.push(Box::new(move || check_yeliussizov(m, n, d)));
        out.push(Box::new(move || check_g_at_z_range(3, 4, 3, true)));
        let shapes: Vec<Partition> = enumerate_partitions(2, usize::MAX, u32::MAX);
        for lam in &shapes {
            for mu in &shapes {
                let (lam, mu) = (lam.clone(), mu.clone());
                out.push(Box::new(move || check_skew_cauchy(&lam, &mu, m, n, d)));
            }
        }
    }
    if want(Suite::CauchyLiteral) {
        let (m, n) = (b.m, b.n);
        out.push(Box::new(move || check_cauchy_2(m, n)));
        out.push(Box::new(move || check_g_at_z_range(3, 4, 3, false)));
    }
    out
}

/// Runs the suite and writes one JSON line per report. Returns the number of
/// passed and failed checks.
pub fn run(suite: Suite, bounds: &Bounds, workers: usize, out: &mut dyn Write) -> std::io::Result<(usize, usize)> {
    let queue: Vec<Mutex<Option<Job>>> = jobs(suite, bounds).into_iter().map(|j| Mutex::new(Some(j))).collect();
    let total = queue.len();
    let next = AtomicUsize::new(0);
    let (tx, rx) = mpsc::channel::<(usize, CheckReport)>();
    let mut passed = 0;
    let mut failed = 0;
    std::thread::scope(|scope| -> std::io::Result<()> {
        for _ in 0..workers.clamp(1, total.max(1)) {
            let tx = tx.clone();
            let (queue, next) = (&queue, &next);
            scope.spawn(move || loop {
                let i = next.fetch_add(1, Ordering::SeqCst);
                if i >= total {
                    break;
                }
                let job = queue[i].lock().expect("job slot").take().expect("each job runs once");
                if tx.send((i, job())).is_err() {
                    break;
                }
            });
        }
        drop(tx);
        let mut pending: BTreeMap<usize, CheckReport> = BTreeMap::new();
        let mut printed = 0;
        for (i, r) in rx {
            pending.insert(i, r);
            while let Some(r) = pending.remove(&printed) {
                if r.passed {
                    passed += 1;
                } else {
                    failed += 1;
                }
                writeln!(out, "{}", crate::json::report_line(&r))?;
                out.flush()?;
                printed += 1;
            }
        }
        Ok(())
    })?;
    Ok((passed, failed))
}
