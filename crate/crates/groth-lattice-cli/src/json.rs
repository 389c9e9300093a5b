//! JSON form of polynomials and rational functions:
//! `{"num": [{"coeff": "p/q", "exps": {"x1": 2, "a": 1}}], "den": [...]}`.
//! Terms are written highest first, in the same order as the plain rendering.

use std::collections::BTreeMap;
use std::str::FromStr;

use groth_lattice::algebra::{Monomial, MultiPoly, Rf, Var, Q};
use groth_lattice::identities::CheckReport;
use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct TermJson {
    pub coeff: String,
    pub exps: BTreeMap<String, u32>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct RfJson {
    pub num: Vec<TermJson>,
    pub den: Vec<TermJson>,
}

pub fn poly_to_json(p: &MultiPoly) -> Vec<TermJson> {
    p.terms()
        .rev()
        .map(|(m, q)| TermJson {
            coeff: q.to_string(),
            exps: m.pairs().iter().map(|&(v, e)| (v.to_string(), e)).collect(),
        })
        .collect()
}

pub fn rf_to_json(f: &Rf) -> RfJson {
    RfJson { num: poly_to_json(f.numer()), den: poly_to_json(f.denom()) }
}

pub fn poly_from_json(terms: &[TermJson]) -> Result<MultiPoly, String> {
    let mut p = MultiPoly::zero();
    for t in terms {
        let q = Q::from_str(&t.coeff).map_err(|_| format!("bad coefficient {:?}", t.coeff))?;
        let mut pairs = Vec::with_capacity(t.exps.len());
        for (name, &e) in &t.exps {
            let v = Var::parse(name).ok_or_else(|| format!("unknown variable {:?}", name))?;
            pairs.push((v, e));
        }
        p.add_term(Monomial::from_pairs(pairs), q);
    }
    Ok(p)
}

pub fn rf_from_json(j: &RfJson) -> Result<Rf, String> {
    Rf::new(poly_from_json(&j.num)?, poly_from_json(&j.den)?).map_err(|e| format!("{:?}", e))
}

#[derive(Serialize)]
pub struct ReportJson<'a> {
    pub name: &'a str,
    pub passed: bool,
    pub params: BTreeMap<&'a str, &'a str>,
    pub cases: usize,
    pub counterexample: Option<CounterexampleJson<'a>>,
}

#[derive(Serialize)]
pub struct CounterexampleJson<'a> {
    pub labels: &'a str,
    pub lhs: &'a str,
    pub rhs: &'a str,
}

pub fn report_line(r: &CheckReport) -> String {
    let j = ReportJson {
        name: &r.name,
        passed: r.passed,
        params: r.params.iter().map(|(k, v)| (k.as_str(), v.as_str())).collect(),
        cases: r.cases,
        counterexample: r.counterexample.as_ref().map(|c| CounterexampleJson {
            labels: &c.labels,
            lhs: &c.lhs,
            rhs: &c.rhs,
        }),
    };
    serde_json::to_string(&j).expect("report serializes")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let x = Rf::var(Var::X(1));
        let a = Rf::var(Var::Alpha);
        let f = (&x * &Rf::constant(Q::new(3.into(), 2.into()))).checked_div(&(&Rf::one() - &(&a * &x))).unwrap();
        let j = rf_to_json(&f);
        let s = serde_json::to_string(&j).unwrap();
        let back: RfJson = serde_json::from_str(&s).unwrap();
        assert_eq!(rf_from_json(&back).unwrap(), f);
    }

    #[test]
    fn schema_shape() {
        let f = Rf::from_poly(MultiPoly::var(Var::Beta).mul_monomial(&Monomial::var_pow(Var::X(1), 2)));
        let s = serde_json::to_string(&rf_to_json(&f)).unwrap();
        assert_eq!(s, r#"{"num":[{"coeff":"1","exps":{"b":1,"x1":2}}],"den":[{"coeff":"1","exps":{}}]}"#);
    }

    #[test]
    fn rejects_unknown_variables() {
        let t = TermJson { coeff: "1".into(), exps: [("q7".to_string(), 1)].into_iter().collect() };
        assert!(poly_from_json(&[t]).is_err());
    }
}
