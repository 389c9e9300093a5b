use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

/// A formal variable from the fixed alphabet.
///
/// The derived order is the variable order used by graded-lex comparison:
/// `x1, x2, .., y1, .., z1, .., w1, .., a, b`, earlier variables being more
/// significant. Spectral variables lead so printed output reads as a
/// polynomial in `x`, `y` with coefficients in `a`, `b`.
/// `w_i` stands for `1/z_i` when Laurent monomials in `z` are needed.
/// Index 0 of each family is reserved for placeholder spectral variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    X(u16),
    Y(u16),
    Z(u16),
    W(u16),
    Alpha,
    Beta,
}

impl Var {
    pub fn parse(s: &str) -> Option<Var> {
        match s {
            "a" | "alpha" => return Some(Var::Alpha),
            "b" | "beta" => return Some(Var::Beta),
            _ => {}
        }
        let (head, tail) = (s.get(..1)?, s.get(1..)?);
        let idx: u16 = tail.parse().ok()?;
        match head {
            "x" => Some(Var::X(idx)),
            "y" => Some(Var::Y(idx)),
            "z" => Some(Var::Z(idx)),
            "w" => Some(Var::W(idx)),
            _ => None,
        }
    }

    /// True for the spectral families `x` and `y`.
    pub fn is_spectral(self) -> bool {
        matches!(self, Var::X(_) | Var::Y(_))
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::Alpha => f.write_str("a"),
            Var::Beta => f.write_str("b"),
            Var::X(i) => write!(f, "x{}", i),
            Var::Y(i) => write!(f, "y{}", i),
            Var::Z(i) => write!(f, "z{}", i),
            Var::W(i) => write!(f, "w{}", i),
        }
    }
}

/// Power product of variables, stored sparsely and sorted by variable.
/// Zero exponents are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        Monomial(alloc::vec![(v, 1)])
    }

    pub fn var_pow(v: Var, e: u32) -> Self {
        if e == 0 {
            Self::one()
        } else {
            Monomial(alloc::vec![(v, e)])
        }
    }

    /// Builds from arbitrary (var, exp) pairs; repeated variables are merged.
    pub fn from_pairs<I: IntoIterator<Item = (Var, u32)>>(pairs: I) -> Self {
        let mut v: Vec<(Var, u32)> = pairs.into_iter().filter(|p| p.1 > 0).collect();
        v.sort_by_key(|p| p.0);
        let mut out: Vec<(Var, u32)> = Vec::with_capacity(v.len());
        for (var, e) in v {
            match out.last_mut() {
                Some(last) if last.0 == var => last.1 += e,
                _ => out.push((var, e)),
            }
        }
        Monomial(out)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn pairs(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|p| p.1).sum()
    }

    /// Total degree restricted to the variables accepted by `pred`.
    pub fn degree_where(&self, pred: impl Fn(Var) -> bool) -> u32 {
        self.0.iter().filter(|p| pred(p.0)).map(|p| p.1).sum()
    }

    pub fn exp(&self, v: Var) -> u32 {
        match self.0.binary_search_by_key(&v, |p| p.0) {
            Ok(i) => self.0[i].1,
            Err(_) => 0,
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// `self / other` if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut j = 0;
        for &(v, e) in &self.0 {
            if j < other.0.len() && other.0[j].0 < v {
                return None;
            }
            if j < other.0.len() && other.0[j].0 == v {
                let f = other.0[j].1;
                j += 1;
                match e.cmp(&f) {
                    Ordering::Less => return None,
                    Ordering::Equal => continue,
                    Ordering::Greater => out.push((v, e - f)),
                }
            } else {
                out.push((v, e));
            }
        }
        if j < other.0.len() {
            return None;
        }
        Some(Monomial(out))
    }

    pub fn pow(&self, k: u32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|&(v, e)| (v, e * k)).collect())
    }

    /// Componentwise minimum of exponents.
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::new();
        for &(v, e) in &self.0 {
            let f = other.exp(v);
            if f > 0 {
                out.push((v, e.min(f)));
            }
        }
        Monomial(out)
    }

    /// Splits off the power of `v`: returns (exponent of v, remaining monomial).
    pub fn split(&self, v: Var) -> (u32, Monomial) {
        match self.0.binary_search_by_key(&v, |p| p.0) {
            Ok(i) => {
                let mut rest = self.0.clone();
                let (_, e) = rest.remove(i);
                (e, Monomial(rest))
            }
            Err(_) => (0, self.clone()),
        }
    }

    /// Keeps only the variables accepted by `pred`; returns (kept, dropped).
    pub fn partition_by(&self, pred: impl Fn(Var) -> bool) -> (Monomial, Monomial) {
        let (a, b): (Vec<_>, Vec<_>) = self.0.iter().partition(|p| pred(p.0));
        (Monomial(a), Monomial(b))
    }

    /// Cancels `z_i * w_i` pairs, treating `w_i` as the inverse of `z_i`.
    pub fn cancel_inverse_pairs(&self) -> Monomial {
        let mut out = self.0.clone();
        for i in 0..out.len() {
            if let Var::Z(k) = out[i].0 {
                if let Ok(j) = out.binary_search_by_key(&Var::W(k), |p| p.0) {
                    let m = out[i].1.min(out[j].1);
                    out[i].1 -= m;
                    out[j].1 -= m;
                }
            }
        }
        out.retain(|p| p.1 > 0);
        Monomial(out)
    }

    pub fn rename(&self, from: Var, to: Var) -> Monomial {
        Monomial::from_pairs(self.0.iter().map(|&(v, e)| if v == from { (to, e) } else { (v, e) }))
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        self.0.iter().map(|p| p.0)
    }

    /// Renders as `a*x1^2`, parameters first (empty string for the unit monomial).
    pub fn render(&self, mul: &str) -> String {
        use core::fmt::Write;
        let mut s = String::new();
        let is_param = |v: Var| matches!(v, Var::Alpha | Var::Beta);
        let params = self.0.iter().filter(|p| is_param(p.0));
        let spectral = self.0.iter().filter(|p| !is_param(p.0));
        for (k, &(v, e)) in params.chain(spectral).enumerate() {
            if k > 0 {
                s.push_str(mul);
            }
            let _ = write!(s, "{}", v);
            if e > 1 {
                let _ = write!(s, "^{}", e);
            }
        }
        s
    }
}

/// Graded lexicographic: total degree first, then the exponent of the
/// smallest variable (in `Var` order) where the two differ.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(p), Some(q)) => match p.0.cmp(&q.0) {
                    // p's variable is absent from other: self has the larger exponent there
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => {
                        if p.1 != q.1 {
                            return p.1.cmp(&q.1);
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grlex_order() {
        let x1 = Monomial::var(Var::X(1));
        let x2 = Monomial::var(Var::X(2));
        let a = Monomial::var(Var::Alpha);
        assert!(x1 > a);
        assert!(x2 > a);
        assert!(x1 > x2);
        assert!(x2.pow(2) > a);
        assert!(x1.mul(&x2) < x1.pow(2));
        assert!(Monomial::one() < x2);
    }

    #[test]
    fn divide_and_split() {
        let m = Monomial::from_pairs([(Var::X(1), 2), (Var::Alpha, 1), (Var::X(1), 1)]);
        assert_eq!(m.exp(Var::X(1)), 3);
        assert_eq!(m.div(&Monomial::var(Var::Alpha)), Some(Monomial::var_pow(Var::X(1), 3)));
        assert_eq!(m.div(&Monomial::var(Var::Beta)), None);
        assert_eq!(m.split(Var::X(1)), (3, Monomial::var(Var::Alpha)));
        assert_eq!(m.render("*"), "a*x1^3");
    }

    #[test]
    fn inverse_pairs_cancel() {
        let m = Monomial::from_pairs([(Var::Z(1), 2), (Var::W(1), 1), (Var::W(2), 1)]);
        assert_eq!(m.cancel_inverse_pairs(), Monomial::from_pairs([(Var::Z(1), 1), (Var::W(2), 1)]));
    }

    #[test]
    fn parse_names() {
        assert_eq!(Var::parse("x12"), Some(Var::X(12)));
        assert_eq!(Var::parse("b"), Some(Var::Beta));
        assert_eq!(Var::parse("q1"), None);
        assert_eq!(Var::parse("x"), None);
    }
}
