//! The five commands as pure functions from input text to output text and
//! exit code.

use num_bigint::BigInt;
use rayon::prelude::*;
use symres::finsler::{configuratrix_resultant, MetricFunction};
use symres::oracle::{gradient_resultant, root_witness};
use symres::{resultant_boxed, resultant_via_scaling, Error, Scalar, SymmetricCubic};

use crate::error::{CliError, EXIT_MISMATCH, EXIT_OK, EXIT_VANISHES};
use crate::json::{
    parse_cubic, parse_momentum, CompareJson, ConfiguratrixJson, ReportJson, SweepLine,
    WitnessOutput,
};

/// Largest `n` for which the Macaulay oracle is run.
pub const ORACLE_MAX_DIM: usize = 4;
/// Largest number of sweep grid points.
pub const SWEEP_MAX_POINTS: u64 = 1_000_000;

#[derive(Clone, Debug, Default)]
pub struct Options {
    pub oracle: bool,
    pub paper_normalization: bool,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    /// Everything destined for stdout (or `--out`), newline-terminated.
    pub text: String,
    pub code: u8,
}

fn json_line<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string(v).expect("serializable");
    s.push('\n');
    s
}

fn oracle_value(sc: &SymmetricCubic, seed: u64) -> Result<Scalar, CliError> {
    if sc.n() > ORACLE_MAX_DIM {
        return Err(CliError::guard(format!(
            "oracle supports n <= {ORACLE_MAX_DIM} (got {})",
            sc.n()
        )));
    }
    Ok(gradient_resultant(sc, seed)?.value)
}

pub fn closed(input: &str, opts: &Options) -> Result<Output, CliError> {
    let sc = parse_cubic(input)?;
    let report = resultant_boxed(&sc);
    let mut json = ReportJson::new(&report, opts.paper_normalization);
    let mut code = if report.vanishes {
        EXIT_VANISHES
    } else {
        EXIT_OK
    };
    if opts.oracle {
        let v = oracle_value(&sc, opts.seed)?;
        if v != report.canonical_value {
            code = EXIT_MISMATCH;
        }
        json.oracle = Some(v.to_string());
    }
    Ok(Output {
        text: json_line(&json),
        code,
    })
}

pub fn compare(input: &str, opts: &Options) -> Result<Output, CliError> {
    let sc = parse_cubic(input)?;
    let report = resultant_boxed(&sc);
    let boxed = &report.canonical_value;
    let chain = match resultant_via_scaling(&sc) {
        Ok(v) => Some(v),
        Err(Error::TransformationUndefined(_)) => None,
        Err(e) => return Err(e.into()),
    };
    let oracle = if opts.oracle {
        Some(oracle_value(&sc, opts.seed)?)
    } else {
        None
    };
    let agree = chain.iter().chain(oracle.iter()).all(|v| v == boxed);
    let json = CompareJson {
        boxed: boxed.to_string(),
        chain: chain.map_or_else(|| "unavailable".to_string(), |v| v.to_string()),
        oracle: oracle.map(|v| v.to_string()),
        ratio: report.normalization_ratio.map(|r| r.to_string()),
        agree,
    };
    Ok(Output {
        text: json_line(&json),
        code: if agree { EXIT_OK } else { EXIT_MISMATCH },
    })
}

pub fn witness(input: &str, _opts: &Options) -> Result<Output, CliError> {
    let sc = parse_cubic(input)?;
    let w = root_witness(&sc);
    Ok(Output {
        text: json_line(&WitnessOutput::new(w.as_ref())),
        code: EXIT_OK,
    })
}

pub fn configuratrix(metric: &str, momentum: &str, opts: &Options) -> Result<Output, CliError> {
    let m = MetricFunction::new(parse_cubic(metric)?);
    let y = parse_momentum(momentum)?;
    let out = configuratrix_resultant(&m, &y, opts.seed)?;
    Ok(Output {
        text: json_line(&ConfiguratrixJson::new(&out)),
        code: EXIT_OK,
    })
}

/// `start:stop:step` with `step > 0`; includes `stop` when it is on the grid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Range {
    pub start: Scalar,
    pub stop: Scalar,
    pub step: Scalar,
}

impl Range {
    pub fn parse(s: &str) -> Result<Range, CliError> {
        let parts: Vec<&str> = s.split(':').collect();
        let [start, stop, step] = parts[..] else {
            return Err(CliError::input(format!(
                "range {s:?} is not start:stop:step"
            )));
        };
        let p = |t: &str| {
            t.parse::<Scalar>()
                .map_err(|e| CliError::input(format!("range {s:?}: {e}")))
        };
        let r = Range {
            start: p(start)?,
            stop: p(stop)?,
            step: p(step)?,
        };
        if r.step.is_zero() || r.step.is_negative() {
            return Err(CliError::input(format!("range {s:?}: step must be > 0")));
        }
        if r.stop < r.start {
            return Err(CliError::input(format!("range {s:?}: stop < start")));
        }
        Ok(r)
    }

    pub fn len(&self) -> BigInt {
        let q = (&self.stop - &self.start) / &self.step;
        q.numer() / q.denom() + 1
    }

    pub fn values(&self) -> Vec<Scalar> {
        let mut out = Vec::new();
        let mut v = self.start.clone();
        while v <= self.stop {
            out.push(v.clone());
            v += &self.step;
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepSpec {
    pub n: usize,
    pub a1: Range,
    pub a2: Range,
    pub a3: Scalar,
}

/// One line per `(A1, A2)`, `A1` outer. The all-zero cubic is reported as
/// vanishing with canonical value 0.
pub fn sweep(spec: &SweepSpec, opts: &Options) -> Result<Output, CliError> {
    SymmetricCubic::new(spec.n, Scalar::zero(), Scalar::zero(), Scalar::one())?;
    let total = spec.a1.len() * spec.a2.len();
    if total > BigInt::from(SWEEP_MAX_POINTS) {
        return Err(CliError::guard(format!(
            "grid has {total} points (limit {SWEEP_MAX_POINTS})"
        )));
    }
    if opts.oracle && spec.n > ORACLE_MAX_DIM {
        return Err(CliError::guard(format!(
            "oracle supports n <= {ORACLE_MAX_DIM} (got {})",
            spec.n
        )));
    }
    let a2s = spec.a2.values();
    let points: Vec<(Scalar, Scalar)> = spec
        .a1
        .values()
        .into_iter()
        .flat_map(|a1| a2s.iter().map(move |a2| (a1.clone(), a2.clone())))
        .collect();

    let rows: Vec<Result<(String, bool), CliError>> = points
        .par_iter()
        .map(|(a1, a2)| {
            let (canonical, vanishes, agree) =
                match SymmetricCubic::new(spec.n, a1.clone(), a2.clone(), spec.a3.clone()) {
                    Ok(sc) => {
                        let r = resultant_boxed(&sc);
                        let agree = if opts.oracle {
                            oracle_value(&sc, opts.seed)? == r.canonical_value
                        } else {
                            true
                        };
                        (r.canonical_value, r.vanishes, agree)
                    }
                    Err(Error::ZeroCubic) => (Scalar::zero(), true, true),
                    Err(e) => return Err(e.into()),
                };
            let line = json_line(&SweepLine {
                a1: a1.to_string(),
                a2: a2.to_string(),
                canonical: canonical.to_string(),
                vanishes,
            });
            Ok((line, agree))
        })
        .collect();

    let mut text = String::new();
    let mut code = EXIT_OK;
    for row in rows {
        let (line, agree) = row?;
        if !agree {
            code = EXIT_MISMATCH;
        }
        text.push_str(&line);
    }
    Ok(Output { text, code })
}
