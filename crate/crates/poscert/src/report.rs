//! JSON-facing report types. Rationals travel as exact `"p/q"` strings so
//! certificates survive a round-trip bit-for-bit and can be re-verified
//! from the report alone.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use crate::certificate::{Decision, PositivityCertificate, Verdict};
use crate::mpoly::MultiPoly;
use crate::rational::{format_rat, parse_rat, Rat};
use crate::sat::UnsatCertificate;
use crate::unipoly::UniPoly;
use crate::Result;

pub fn rats_to_strings(v: &[Rat]) -> Vec<String> {
    v.iter().map(format_rat).collect()
}

pub fn strings_to_rats(v: &[String]) -> Result<Vec<Rat>> {
    v.iter().map(|s| parse_rat(s)).collect()
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CertificateReport {
    pub d: usize,
    /// Multiplier coefficients, ascending powers.
    pub t: Vec<String>,
    /// Product coefficients, ascending powers.
    pub v: Vec<String>,
}

impl CertificateReport {
    pub fn from_certificate(c: &PositivityCertificate) -> Self {
        CertificateReport {
            d: c.d,
            t: rats_to_strings(c.t.coeffs()),
            v: rats_to_strings(c.v.coeffs()),
        }
    }

    pub fn multiplier(&self) -> Result<UniPoly> {
        Ok(UniPoly::new(strings_to_rats(&self.t)?))
    }

    pub fn product(&self) -> Result<UniPoly> {
        Ok(UniPoly::new(strings_to_rats(&self.v)?))
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub input: String,
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_verdict: Option<String>,
    pub attempted_degrees: Vec<usize>,
    pub bounded_search: bool,
    pub negated: bool,
    pub stripped_power: usize,
    pub timings_ms: BTreeMap<String, f64>,
}

pub fn verdict_str(v: Verdict) -> &'static str {
    match v {
        Verdict::NoPositiveRoot => "no_positive_root",
        Verdict::PositiveRootExists => "positive_root_exists",
    }
}

impl RunReport {
    pub fn from_decision(command: &str, input: &str, d: &Decision) -> Self {
        RunReport {
            command: command.to_string(),
            input: input.to_string(),
            verdict: verdict_str(d.verdict).to_string(),
            certificate: d.certificate.as_ref().map(CertificateReport::from_certificate),
            oracle_verdict: d.oracle_has_positive_root.map(|has| {
                if has { "positive_root_exists" } else { "no_positive_root" }.to_string()
            }),
            attempted_degrees: d.attempted_degrees.clone(),
            bounded_search: d.bounded_search,
            negated: d.negated,
            stripped_power: d.stripped_power,
            timings_ms: BTreeMap::new(),
        }
    }
}

/// One multivariate term: exponent vector plus exact coefficient.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct TermReport {
    pub exps: Vec<u32>,
    pub coeff: String,
}

pub fn mpoly_to_terms(p: &MultiPoly) -> Vec<TermReport> {
    p.terms()
        .map(|(m, c)| TermReport { exps: m.0.clone(), coeff: format_rat(c) })
        .collect()
}

pub fn terms_to_mpoly(num_vars: usize, terms: &[TermReport]) -> Result<MultiPoly> {
    MultiPoly::from_terms(
        num_vars,
        terms
            .iter()
            .map(|t| Ok((t.exps.clone(), parse_rat(&t.coeff)?)))
            .collect::<Result<Vec<_>>>()?,
    )
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct UnsatCertificateReport {
    pub num_vars: usize,
    pub d: usize,
    pub k: Vec<TermReport>,
    pub k_i: Vec<Vec<TermReport>>,
    pub p: Vec<TermReport>,
}

impl UnsatCertificateReport {
    pub fn from_certificate(c: &UnsatCertificate, num_vars: usize) -> Self {
        UnsatCertificateReport {
            num_vars,
            d: c.degree_bound_used,
            k: mpoly_to_terms(&c.k),
            k_i: c.k_i.iter().map(mpoly_to_terms).collect(),
            p: mpoly_to_terms(&c.p),
        }
    }

    pub fn to_certificate(&self) -> Result<UnsatCertificate> {
        Ok(UnsatCertificate {
            k: terms_to_mpoly(self.num_vars, &self.k)?,
            k_i: self
                .k_i
                .iter()
                .map(|t| terms_to_mpoly(self.num_vars, t))
                .collect::<Result<_>>()?,
            p: terms_to_mpoly(self.num_vars, &self.p)?,
            degree_bound_used: self.d,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::{decide_positive_root, verify_certificate, DecisionConfig};
    use crate::rational::int;

    #[test]
    fn certificate_report_round_trips() {
        let p = UniPoly::from_ints(&[1, -1, 1]);
        let d = decide_positive_root(&p, &DecisionConfig::default()).unwrap();
        let report = RunReport::from_decision("check", "[1, -1, 1]", &d);
        let json = serde_json::to_string(&report).unwrap();
        let back: RunReport = serde_json::from_str(&json).unwrap();
        let cert = back.certificate.unwrap();
        let t = cert.multiplier().unwrap();
        assert!(verify_certificate(&p, &t));
        assert_eq!(p.mul(&t), cert.product().unwrap());
    }

    #[test]
    fn term_lists_round_trip() {
        let p = crate::sat::pin_polynomials(2).unwrap().remove(0);
        let terms = mpoly_to_terms(&p);
        let back = terms_to_mpoly(2, &terms).unwrap();
        assert_eq!(p, back);
    }

    #[test]
    fn rationals_serialize_as_fractions() {
        let terms = rats_to_strings(&[crate::rational::rat(-3, 7), int(4)]);
        assert_eq!(terms, vec!["-3/7", "4"]);
        assert_eq!(strings_to_rats(&terms).unwrap()[0], crate::rational::rat(-3, 7));
    }
}
