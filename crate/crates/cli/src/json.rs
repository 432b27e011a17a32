//! JSON formats. Every number that can grow is a decimal string; `n`, `k`
//! and exponents are plain integers.

use serde::{Deserialize, Serialize};
use serde_json::Value;
use symres::closedform::ResultantReport;
use symres::finsler::{ConfiguratrixOutcome, Momentum};
use symres::oracle::{RootWitness, TwoValuePattern, WitnessField};
use symres::{MultiPoly, QuadExt, Scalar, SymmetricCubic};

use crate::error::CliError;

fn scalar(s: &str, what: &str) -> Result<Scalar, CliError> {
    s.parse()
        .map_err(|e| CliError::input(format!("{what}: {e}")))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CubicJson {
    pub n: usize,
    #[serde(rename = "A1")]
    pub a1: String,
    #[serde(rename = "A2")]
    pub a2: String,
    #[serde(rename = "A3")]
    pub a3: String,
}

impl CubicJson {
    pub fn from_cubic(sc: &SymmetricCubic) -> Self {
        CubicJson {
            n: sc.n(),
            a1: sc.a1().to_string(),
            a2: sc.a2().to_string(),
            a3: sc.a3().to_string(),
        }
    }

    pub fn to_cubic(&self) -> Result<SymmetricCubic, CliError> {
        Ok(SymmetricCubic::new(
            self.n,
            scalar(&self.a1, "A1")?,
            scalar(&self.a2, "A2")?,
            scalar(&self.a3, "A3")?,
        )?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermJson {
    pub exps: Vec<u32>,
    pub num: String,
    pub den: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyJson {
    pub n: usize,
    pub terms: Vec<TermJson>,
}

impl PolyJson {
    /// Terms in descending grevlex order.
    pub fn from_poly(p: &MultiPoly) -> Self {
        PolyJson {
            n: p.num_vars(),
            terms: p
                .terms()
                .map(|(m, c)| TermJson {
                    exps: m.exps().to_vec(),
                    num: c.numer().to_string(),
                    den: c.denom().to_string(),
                })
                .collect(),
        }
    }

    pub fn to_poly(&self) -> Result<MultiPoly, CliError> {
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let c = scalar(&format!("{}/{}", t.num, t.den), "term coefficient")?;
                Ok((t.exps.clone(), c))
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        Ok(MultiPoly::from_terms(self.n, terms)?)
    }
}

/// Accepts either the cubic schema or a polynomial that is a symmetric cubic.
pub fn parse_cubic(text: &str) -> Result<SymmetricCubic, CliError> {
    let v: Value =
        serde_json::from_str(text).map_err(|e| CliError::input(format!("invalid JSON: {e}")))?;
    if v.get("terms").is_some() {
        let p: PolyJson =
            serde_json::from_value(v).map_err(|e| CliError::input(format!("polynomial: {e}")))?;
        Ok(SymmetricCubic::decompose(&p.to_poly()?)?)
    } else {
        let c: CubicJson =
            serde_json::from_value(v).map_err(|e| CliError::input(format!("cubic: {e}")))?;
        c.to_cubic()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorJson {
    pub k: usize,
    #[serde(rename = "Y")]
    pub y: String,
    pub exp: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    pub n: usize,
    pub canonical: String,
    pub paper: String,
    pub vanishes: bool,
    pub factors: Vec<FactorJson>,
    pub ratio: Option<String>,
    /// `"canonical"` or `"paper"`; selects which value `primary` repeats.
    pub normalization: String,
    pub primary: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<String>,
}

impl ReportJson {
    pub fn new(r: &ResultantReport, paper_normalization: bool) -> Self {
        let (normalization, primary) = if paper_normalization {
            ("paper", &r.paper_value)
        } else {
            ("canonical", &r.canonical_value)
        };
        ReportJson {
            n: r.n,
            canonical: r.canonical_value.to_string(),
            paper: r.paper_value.to_string(),
            vanishes: r.vanishes,
            factors: r
                .factors
                .iter()
                .map(|f| FactorJson {
                    k: f.k,
                    y: f.y.to_string(),
                    exp: f.exponent,
                })
                .collect(),
            ratio: r.normalization_ratio.as_ref().map(Scalar::to_string),
            normalization: normalization.to_string(),
            primary: primary.to_string(),
            oracle: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompareJson {
    pub boxed: String,
    /// A value, or `"unavailable"` when `A3 = 0` or `D = 0`.
    pub chain: String,
    /// `None` unless the oracle was requested.
    pub oracle: Option<String>,
    pub ratio: Option<String>,
    pub agree: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PatternJson {
    pub k: usize,
    pub t: String,
    pub u: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessJson {
    pub pattern: Option<PatternJson>,
    pub point: Vec<String>,
    pub field: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum WitnessOutput {
    Found(WitnessJson),
    None { witness: Option<()> },
}

impl WitnessOutput {
    pub fn new(w: Option<&RootWitness>) -> Self {
        match w {
            Some(w) => WitnessOutput::Found(WitnessJson::from_witness(w)),
            None => WitnessOutput::None { witness: None },
        }
    }
}

impl WitnessJson {
    pub fn from_witness(w: &RootWitness) -> Self {
        WitnessJson {
            pattern: w.pattern.as_ref().map(|p| PatternJson {
                k: p.k,
                t: p.t.to_string(),
                u: p.u.to_string(),
            }),
            point: w.point.iter().map(QuadExt::to_string).collect(),
            field: match w.field() {
                WitnessField::Rational => "rational".to_string(),
                WitnessField::Quadratic(d) => format!("quadratic(delta={d})"),
            },
        }
    }

    pub fn to_witness(&self) -> Result<RootWitness, CliError> {
        let delta = if self.field == "rational" {
            Scalar::zero()
        } else {
            let inner = self
                .field
                .strip_prefix("quadratic(delta=")
                .and_then(|s| s.strip_suffix(')'))
                .ok_or_else(|| CliError::input(format!("unknown field {:?}", self.field)))?;
            scalar(inner, "delta")?
        };
        let q = |s: &str| QuadExt::parse_with(s, &delta).map_err(CliError::from);
        let point = self
            .point
            .iter()
            .map(|s| q(s))
            .collect::<Result<Vec<_>, _>>()?;
        let pattern = match &self.pattern {
            Some(p) => Some(TwoValuePattern {
                k: p.k,
                t: q(&p.t)?,
                u: q(&p.u)?,
            }),
            None => None,
        };
        Ok(RootWitness { point, pattern })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MomentumJson {
    pub y: Vec<String>,
}

impl MomentumJson {
    pub fn from_momentum(m: &Momentum) -> Self {
        MomentumJson {
            y: m.y.iter().map(Scalar::to_string).collect(),
        }
    }

    pub fn to_momentum(&self) -> Result<Momentum, CliError> {
        let y = self
            .y
            .iter()
            .map(|s| scalar(s, "y"))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Momentum::new(y))
    }
}

pub fn parse_momentum(text: &str) -> Result<Momentum, CliError> {
    let m: MomentumJson =
        serde_json::from_str(text).map_err(|e| CliError::input(format!("momentum: {e}")))?;
    m.to_momentum()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfiguratrixJson {
    pub resultant: String,
    pub vanishes: bool,
    pub diagnostic: Option<String>,
}

impl ConfiguratrixJson {
    pub fn new(out: &ConfiguratrixOutcome) -> Self {
        ConfiguratrixJson {
            resultant: out.resultant.to_string(),
            vanishes: out.vanishes,
            diagnostic: out.diagnostic.map(|d| d.as_str().to_string()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepLine {
    #[serde(rename = "A1")]
    pub a1: String,
    #[serde(rename = "A2")]
    pub a2: String,
    pub canonical: String,
    pub vanishes: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorJson {
    pub error: String,
    pub code: u8,
}
