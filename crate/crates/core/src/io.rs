//! JSON representations: arithmetic functions, power-series polynomials,
//! fractions, family files, and dependence reports.
//!
//! Coefficients travel as exact text (`"3/2"`, `"L2 + 1"`, `"(L2)/(L3)"`),
//! so round-trips lose nothing. Serialization always emits terms in
//! ascending index order, which makes printing canonical.

use serde::{Deserialize, Serialize};

use crate::arithfn::ArithFn;
use crate::error::{Error, Result};
use crate::fraction::FracElem;
use crate::scalar::Scalar;
use crate::series::PowerSeriesPoly;
use crate::wronskian::{
    DependenceReport, DependenceVerdict, EnumerationMode, IndependenceCertificate,
};

/// `{"precision": N, "terms": [{"n": 4, "coeff": "3/2"}, ...]}`; omitted
/// indices are zero.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ArithFnJson {
    pub precision: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TermJson {
    pub n: u64,
    pub coeff: String,
}

/// `{"vars": m, "terms": [{"exps": [1,0,2], "coeff": "1/3"}, ...]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PowerSeriesJson {
    pub vars: usize,
    pub terms: Vec<PsTermJson>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PsTermJson {
    pub exps: Vec<u32>,
    pub coeff: String,
}

/// `{"num": <ArithFn>, "den": <ArithFn>}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FracJson {
    pub num: ArithFnJson,
    pub den: ArithFnJson,
}

/// A family input: `{"field": "rational", "members": [...]}` where each
/// member is an arithmetic function, a power-series polynomial, or a
/// fraction, told apart by their required keys.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FamilyFileJson {
    pub field: String,
    pub members: Vec<MemberJson>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MemberJson {
    Arith(ArithFnJson),
    Series(PowerSeriesJson),
    Frac(FracJson),
}

/// A parsed family member in domain form.
#[derive(Debug, Clone)]
pub enum FamilyMember {
    Fn(ArithFn<Scalar>),
    Series(PowerSeriesPoly),
    Frac(FracElem<Scalar>),
}

/// A parsed family.
#[derive(Debug, Clone)]
pub struct Family {
    pub members: Vec<FamilyMember>,
}

fn ctx(path: &str, e: Error) -> Error {
    match e {
        Error::Parse { pos, msg } => {
            Error::InvalidInput(format!("{}: parse error at byte {}: {}", path, pos, msg))
        }
        other => Error::InvalidInput(format!("{}: {}", path, other)),
    }
}

pub fn arithfn_from_json(json: &ArithFnJson, path: &str) -> Result<ArithFn<Scalar>> {
    if json.precision < 1 {
        return Err(Error::InvalidInput(format!(
            "{}.precision: must be at least 1",
            path
        )));
    }
    let mut f = ArithFn::zero(json.precision);
    let mut seen = std::collections::BTreeSet::new();
    for (i, term) in json.terms.iter().enumerate() {
        let tpath = format!("{}.terms[{}]", path, i);
        if term.n < 1 || term.n > json.precision as u64 {
            return Err(Error::InvalidInput(format!(
                "{}.n: index {} outside 1..={}",
                tpath, term.n, json.precision
            )));
        }
        if !seen.insert(term.n) {
            return Err(Error::InvalidInput(format!(
                "{}.n: duplicate index {}",
                tpath, term.n
            )));
        }
        let coeff =
            Scalar::parse(&term.coeff).map_err(|e| ctx(&format!("{}.coeff", tpath), e))?;
        f.set_value(term.n, coeff);
    }
    Ok(f)
}

pub fn arithfn_to_json(f: &ArithFn<Scalar>) -> ArithFnJson {
    ArithFnJson {
        precision: f.precision(),
        terms: (1..=f.precision() as u64)
            .filter(|&n| !f.value(n).is_zero())
            .map(|n| TermJson {
                n,
                coeff: f.value(n).to_string(),
            })
            .collect(),
    }
}

pub fn power_series_from_json(json: &PowerSeriesJson, path: &str) -> Result<PowerSeriesPoly> {
    if json.vars < 1 {
        return Err(Error::InvalidInput(format!(
            "{}.vars: must be at least 1",
            path
        )));
    }
    let mut terms = Vec::with_capacity(json.terms.len());
    for (i, term) in json.terms.iter().enumerate() {
        let tpath = format!("{}.terms[{}]", path, i);
        let scalar =
            Scalar::parse(&term.coeff).map_err(|e| ctx(&format!("{}.coeff", tpath), e))?;
        let coeff = scalar.as_rational().ok_or_else(|| {
            Error::InvalidInput(format!(
                "{}.coeff: power-series coefficients must be rational",
                tpath
            ))
        })?;
        terms.push((term.exps.clone(), coeff));
    }
    PowerSeriesPoly::from_terms(json.vars, terms).map_err(|e| ctx(path, e))
}

pub fn power_series_to_json(ps: &PowerSeriesPoly) -> PowerSeriesJson {
    PowerSeriesJson {
        vars: ps.num_vars(),
        terms: ps
            .terms()
            .map(|(exps, coeff)| PsTermJson {
                exps: exps.clone(),
                coeff: Scalar::from_rational(coeff.clone()).to_string(),
            })
            .collect(),
    }
}

pub fn frac_from_json(json: &FracJson, path: &str) -> Result<FracElem<Scalar>> {
    let num = arithfn_from_json(&json.num, &format!("{}.num", path))?;
    let den = arithfn_from_json(&json.den, &format!("{}.den", path))?;
    FracElem::new(num, den).map_err(|e| ctx(path, e))
}

pub fn frac_to_json(f: &FracElem<Scalar>) -> FracJson {
    FracJson {
        num: arithfn_to_json(f.num()),
        den: arithfn_to_json(f.den()),
    }
}

pub fn member_from_json(json: &MemberJson, path: &str) -> Result<FamilyMember> {
    Ok(match json {
        MemberJson::Arith(a) => FamilyMember::Fn(arithfn_from_json(a, path)?),
        MemberJson::Series(s) => FamilyMember::Series(power_series_from_json(s, path)?),
        MemberJson::Frac(q) => FamilyMember::Frac(frac_from_json(q, path)?),
    })
}

pub fn member_to_json(member: &FamilyMember) -> MemberJson {
    match member {
        FamilyMember::Fn(f) => MemberJson::Arith(arithfn_to_json(f)),
        FamilyMember::Series(s) => MemberJson::Series(power_series_to_json(s)),
        FamilyMember::Frac(q) => MemberJson::Frac(frac_to_json(q)),
    }
}

/// Parse a family file. Only the rational field tag is supported.
pub fn parse_family(text: &str) -> Result<Family> {
    let json: FamilyFileJson = serde_json::from_str(text).map_err(|e| {
        Error::InvalidInput(format!(
            "malformed family JSON at line {}, column {}: {}",
            e.line(),
            e.column(),
            e
        ))
    })?;
    if json.field != "rational" {
        return Err(Error::InvalidInput(format!(
            "field: unsupported coefficient field '{}' (expected \"rational\")",
            json.field
        )));
    }
    let members = json
        .members
        .iter()
        .enumerate()
        .map(|(i, m)| member_from_json(m, &format!("members[{}]", i)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Family { members })
}

pub fn family_to_json(family: &Family) -> FamilyFileJson {
    FamilyFileJson {
        field: "rational".into(),
        members: family.members.iter().map(member_to_json).collect(),
    }
}

impl Family {
    /// Convert every member to a ring element: power series decode at the
    /// given default precision, fractions go through denominator clearing
    /// of the whole family.
    pub fn to_ring_family(&self, default_precision: usize) -> Result<Vec<ArithFn<Scalar>>> {
        let fracs = self
            .members
            .iter()
            .map(|m| -> Result<FracElem<Scalar>> {
                Ok(match m {
                    FamilyMember::Fn(f) => FracElem::embed(f.clone()),
                    FamilyMember::Series(s) => {
                        FracElem::embed(crate::series::from_power_series(s, default_precision))
                    }
                    FamilyMember::Frac(q) => q.clone(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(crate::wronskian::clear_denominators(&fracs))
    }

    /// The smallest member precision (power series have none).
    pub fn min_precision(&self) -> Option<usize> {
        self.members
            .iter()
            .filter_map(|m| match m {
                FamilyMember::Fn(f) => Some(f.precision()),
                FamilyMember::Frac(q) => Some(q.eff_precision()),
                FamilyMember::Series(_) => None,
            })
            .min()
    }
}

/// `{"verdict": ..., "certificate": ..., "precision": N,
/// "tuplesChecked": k, "mode": ...}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportJson {
    pub verdict: String,
    pub certificate: CertificateJson,
    pub precision: usize,
    #[serde(rename = "tuplesChecked")]
    pub tuples_checked: usize,
    pub mode: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum CertificateJson {
    #[serde(rename = "wronskianTuple")]
    WronskianTuple {
        tuple: Vec<u64>,
        index: u64,
        value: String,
    },
    #[serde(rename = "gaussianPivots")]
    GaussianPivots { pivots: Vec<u64> },
    #[serde(rename = "nullVector")]
    NullVector { coefficients: Vec<String> },
    #[serde(rename = "inconclusive")]
    Inconclusive { reason: String },
}

pub fn report_to_json(report: &DependenceReport<Scalar>) -> ReportJson {
    let (verdict, certificate) = match &report.verdict {
        DependenceVerdict::Independent { certificate } => (
            "independent".to_string(),
            match certificate {
                IndependenceCertificate::WronskianTuple { tuple, index, value } => {
                    CertificateJson::WronskianTuple {
                        tuple: tuple.entries().to_vec(),
                        index: *index,
                        value: value.to_string(),
                    }
                }
                IndependenceCertificate::GaussianPivots { pivots } => {
                    CertificateJson::GaussianPivots {
                        pivots: pivots.clone(),
                    }
                }
            },
        ),
        DependenceVerdict::DependentUpToPrecision { null_vector, .. } => (
            "dependent-up-to-precision".to_string(),
            CertificateJson::NullVector {
                coefficients: null_vector.iter().map(|c| c.to_string()).collect(),
            },
        ),
        DependenceVerdict::Inconclusive { reason } => (
            "inconclusive".to_string(),
            CertificateJson::Inconclusive {
                reason: reason.clone(),
            },
        ),
    };
    ReportJson {
        verdict,
        certificate,
        precision: report.precision,
        tuples_checked: report.tuples_checked,
        mode: report.mode.to_string(),
    }
}

pub fn report_from_json(json: &ReportJson) -> Result<DependenceReport<Scalar>> {
    let mode = match json.mode.as_str() {
        "full" => EnumerationMode::Full,
        "walker" => EnumerationMode::Walker,
        other => {
            return Err(Error::InvalidInput(format!(
                "mode: expected 'full' or 'walker', found '{}'",
                other
            )))
        }
    };
    let verdict = match (&json.verdict[..], &json.certificate) {
        ("independent", CertificateJson::WronskianTuple { tuple, index, value }) => {
            DependenceVerdict::Independent {
                certificate: IndependenceCertificate::WronskianTuple {
                    tuple: crate::wronskian::AdmissibleTuple::new(tuple.clone())?,
                    index: *index,
                    value: Scalar::parse(value)
                        .map_err(|e| ctx("certificate.value", e))?,
                },
            }
        }
        ("independent", CertificateJson::GaussianPivots { pivots }) => {
            DependenceVerdict::Independent {
                certificate: IndependenceCertificate::GaussianPivots {
                    pivots: pivots.clone(),
                },
            }
        }
        ("dependent-up-to-precision", CertificateJson::NullVector { coefficients }) => {
            DependenceVerdict::DependentUpToPrecision {
                null_vector: coefficients
                    .iter()
                    .enumerate()
                    .map(|(i, c)| {
                        Scalar::parse(c)
                            .map_err(|e| ctx(&format!("certificate.coefficients[{}]", i), e))
                    })
                    .collect::<Result<Vec<_>>>()?,
                precision: json.precision,
            }
        }
        ("inconclusive", CertificateJson::Inconclusive { reason }) => {
            DependenceVerdict::Inconclusive {
                reason: reason.clone(),
            }
        }
        (v, _) => {
            return Err(Error::InvalidInput(format!(
                "verdict '{}' does not match its certificate type",
                v
            )))
        }
    };
    Ok(DependenceReport {
        verdict,
        precision: json.precision,
        tuples_checked: json.tuples_checked,
        mode,
    })
}
