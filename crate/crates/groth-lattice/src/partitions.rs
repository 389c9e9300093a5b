//! Integer partitions, their occupancy encodings, strips and skew statistics.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Weakly decreasing list of positive parts. The empty list is the empty partition.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<u32>);

/// Site occupancies `m_1, m_2, ..`; trailing zeros beyond the stored length are implied.
pub type Occupancies = Vec<u32>;

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition);
        }
        Ok(Partition(parts))
    }

    /// Sorts and drops zero parts.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of boxes `|λ|`.
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of parts `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest part `λ_1` (0 for the empty partition).
    pub fn width(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }

    /// `λ_i` with 0-based `i`, zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn contains(&self, mu: &Partition) -> bool {
        mu.len() <= self.len() && mu.0.iter().enumerate().all(|(i, &m)| m <= self.0[i])
    }

    pub fn conjugate(&self) -> Partition {
        conjugate(self)
    }

    /// `λ̄ = (λ_2, λ_3, ..)`.
    pub fn drop_first(&self) -> Partition {
        Partition(self.0.iter().skip(1).copied().collect())
    }

    /// Inverse of `row_multiplicities`.
    pub fn from_row_multiplicities(m: &[u32]) -> Partition {
        let mut parts = Vec::new();
        for (i, &k) in m.iter().enumerate().rev() {
            for _ in 0..k {
                parts.push(i as u32 + 1);
            }
        }
        Partition(parts)
    }

    /// Inverse of `column_multiplicities`.
    pub fn from_column_multiplicities(m: &[u32]) -> Partition {
        Partition::from_row_multiplicities(m).conjugate()
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", p)?;
        }
        f.write_str(")")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Entry `i` (1-based site) counts rows of length `i`; length is `λ_1`.
pub fn row_multiplicities(lambda: &Partition) -> Occupancies {
    let mut m = alloc::vec![0; lambda.width() as usize];
    for &p in lambda.parts() {
        m[p as usize - 1] += 1;
    }
    m
}

/// Entry `i` counts columns of height `i`; length is `ℓ(λ)`.
pub fn column_multiplicities(lambda: &Partition) -> Occupancies {
    row_multiplicities(&conjugate(lambda))
}

pub fn conjugate(lambda: &Partition) -> Partition {
    let w = lambda.width() as usize;
    let mut out = Vec::with_capacity(w);
    for j in 0..w {
        out.push(lambda.parts().iter().filter(|&&p| p as usize > j).count() as u32);
    }
    Partition(out)
}

/// `μ ⊆ λ` and `λ_{i+1} ≤ μ_i` for all `i`.
pub fn is_horizontal_strip(lambda: &Partition, mu: &Partition) -> bool {
    lambda.contains(mu) && (0..lambda.len()).all(|i| lambda.part(i + 1) <= mu.part(i))
}

pub fn is_vertical_strip(lambda: &Partition, mu: &Partition) -> bool {
    is_horizontal_strip(&conjugate(lambda), &conjugate(mu))
}

/// Boxes `(row, col)` of `λ/μ`, 0-based, row-major.
pub fn skew_boxes(lambda: &Partition, mu: &Partition) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for i in 0..lambda.len() {
        for j in mu.part(i)..lambda.part(i) {
            out.push((i as u32, j));
        }
    }
    out
}

/// `(r, c, b)`: rows met, columns met, and edge-connected components of `λ/μ`.
pub fn skew_stats(lambda: &Partition, mu: &Partition) -> Result<(u32, u32, u32)> {
    if !lambda.contains(mu) {
        return Err(Error::NotContained);
    }
    let boxes = skew_boxes(lambda, mu);
    let r = (0..lambda.len()).filter(|&i| lambda.part(i) > mu.part(i)).count() as u32;
    let mut cols: Vec<u32> = boxes.iter().map(|b| b.1).collect();
    cols.sort_unstable();
    cols.dedup();
    let c = cols.len() as u32;

    let mut parent: Vec<usize> = (0..boxes.len()).collect();
    fn find(p: &mut [usize], mut i: usize) -> usize {
        while p[i] != i {
            p[i] = p[p[i]];
            i = p[i];
        }
        i
    }
    for (k, &(i, j)) in boxes.iter().enumerate() {
        // neighbours to the right and below, if present
        for nb in [(i, j + 1), (i + 1, j)] {
            if let Ok(l) = boxes.binary_search(&nb) {
                let (x, y) = (find(&mut parent, k), find(&mut parent, l));
                parent[x] = y;
            }
        }
    }
    let b = (0..boxes.len()).filter(|&k| find(&mut parent, k) == k).count() as u32;
    Ok((r, c, b))
}

/// `r(μ/λ̄)`: number of rows `i` with `μ_i > λ_{i+1}`.
pub fn outer_row_stat(lambda: &Partition, mu: &Partition) -> Result<u32> {
    if !is_horizontal_strip(lambda, mu) {
        return Err(Error::NotHorizontalStrip);
    }
    Ok((0..mu.len()).filter(|&i| mu.part(i) > lambda.part(i + 1)).count() as u32)
}

/// Partitions of exactly `n` with the given bounds, in decreasing lex order.
fn partitions_of(n: u32, max_len: usize, max_part: u32, out: &mut Vec<Partition>) {
    fn rec(n: u32, max_len: usize, max_part: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if max_len == 0 {
            return;
        }
        let mut p = max_part.min(n);
        while p >= 1 {
            cur.push(p);
            rec(n - p, max_len - 1, p, cur, out);
            cur.pop();
            p -= 1;
        }
    }
    rec(n, max_len, max_part, &mut Vec::new(), out);
}

/// Every partition with `|λ| ≤ max_size`, `ℓ(λ) ≤ max_length`, `λ_1 ≤ max_width`,
/// ordered by size and then decreasing lex (so `(2)` precedes `(1,1)`).
pub fn enumerate_partitions(max_size: u32, max_length: usize, max_width: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    for n in 0..=max_size {
        partitions_of(n, max_length, max_width, &mut out);
    }
    out
}

/// All `μ ⊆ λ`, in the same order as `enumerate_partitions`.
pub fn subpartitions(lambda: &Partition) -> Vec<Partition> {
    enumerate_partitions(lambda.size(), lambda.len(), lambda.width())
        .into_iter()
        .filter(|mu| lambda.contains(mu))
        .collect()
}

/// All `μ` with `λ/μ` a horizontal strip.
pub fn enumerate_horizontal_strip_subs(lambda: &Partition) -> Vec<Partition> {
    subpartitions(lambda).into_iter().filter(|mu| is_horizontal_strip(lambda, mu)).collect()
}
