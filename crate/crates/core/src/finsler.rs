//! Indicatrix degeneracy and configuratrix solvability for metric functions
//! with `L^3 = S`, `S` a symmetric cubic.
//!
//! The region bounded by the indicatrix `L = 1` is finite only if the
//! gradient system of `S` has no nontrivial common zero, i.e. its resultant
//! is nonzero. The configuratrix at momenta `y` is solvable iff the system
//! `{S - 1, ∂_i S - 3 y_i}` has a solution; this is decided by the Macaulay
//! resultant of its homogenization in an extra variable `x0`.
//!
//! A degenerate `S` has common gradient zeros at `x0 = 0` (by Euler's
//! identity `S` vanishes there too), so the configuratrix resultant is then
//! zero for every `y`. That case is flagged with
//! [`Diagnostic::DegenerateMetricIdenticallyZero`].

use alloc::string::ToString;
use alloc::vec::Vec;

use crate::closedform::{resultant_boxed, ResultantReport};
use crate::error::{Error, Result};
use crate::oracle::{self, MacaulaySystem, Route};
use crate::poly::MultiPoly;
use crate::scalar::Scalar;
use crate::symcubic::SymmetricCubic;

/// Largest `n` accepted by [`configuratrix_resultant`] (84 x 84 at n = 3).
pub const MAX_CONFIGURATRIX_DIM: usize = 3;

/// `L^3 = S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetricFunction {
    s: SymmetricCubic,
}

impl MetricFunction {
    pub const K_EXPONENT: u32 = 3;

    pub fn new(s: SymmetricCubic) -> Self {
        MetricFunction { s }
    }

    pub fn cubic(&self) -> &SymmetricCubic {
        &self.s
    }

    pub fn n(&self) -> usize {
        self.s.n()
    }
}

/// Conjugate momenta `y_i = ∂_i L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Momentum {
    pub y: Vec<Scalar>,
}

impl Momentum {
    pub fn new(y: Vec<Scalar>) -> Self {
        Momentum { y }
    }

    /// Momenta of the point `xi` on the indicatrix: `y_i = ∂_i S(xi) / 3`.
    /// Requires `S(xi) = 1` for the result to be meaningful.
    pub fn at_point(m: &MetricFunction, xi: &[Scalar]) -> Result<Momentum> {
        let third = Scalar::frac(1, 3);
        let y =
            m.s.gradient_system()
                .iter()
                .map(|g| g.eval(xi).map(|v| v * &third))
                .collect::<Result<Vec<_>>>()?;
        Ok(Momentum { y })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Diagnostic {
    DegenerateMetricIdenticallyZero,
}

impl Diagnostic {
    pub fn as_str(self) -> &'static str {
        match self {
            Diagnostic::DegenerateMetricIdenticallyZero => "DEGENERATE_METRIC_IDENTICALLY_ZERO",
        }
    }

    pub fn parse(s: &str) -> Option<Diagnostic> {
        (s == "DEGENERATE_METRIC_IDENTICALLY_ZERO")
            .then_some(Diagnostic::DegenerateMetricIdenticallyZero)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Degeneracy {
    pub degenerate: bool,
    pub report: ResultantReport,
    /// Macaulay value of the gradient system, when a cross-check was asked for.
    pub oracle_value: Option<Scalar>,
}

/// Whether `R{∂_i S} = 0`. With `cross_check`, the Macaulay oracle is also
/// run and must agree with the closed form.
pub fn indicatrix_degenerate(m: &MetricFunction, cross_check: bool) -> Result<Degeneracy> {
    let report = resultant_boxed(&m.s);
    let oracle_value = if cross_check {
        let v = oracle::gradient_resultant_value(&m.s)?;
        if v != report.canonical_value {
            return Err(Error::OracleMismatch {
                closed: report.canonical_value.to_string(),
                oracle: v.to_string(),
            });
        }
        Some(v)
    } else {
        None
    };
    Ok(Degeneracy {
        degenerate: report.vanishes,
        report,
        oracle_value,
    })
}

/// `[S - x0^3, ∂_1 S - 3 y_1 x0^2, ..., ∂_n S - 3 y_n x0^2]` in the variables
/// `(x0, x1, ..., xn)`.
pub fn configuratrix_system(m: &MetricFunction, y: &Momentum) -> Result<Vec<MultiPoly>> {
    let n = m.n();
    if y.y.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            found: y.y.len(),
        });
    }
    let x0 = MultiPoly::var(n + 1, 0)?;
    let x0sq = &x0 * &x0;
    let mut out = Vec::with_capacity(n + 1);
    out.push(m.s.expand().prepend_vars(1) - &x0sq * &x0);
    for (g, yi) in m.s.gradient_system().iter().zip(&y.y) {
        out.push(g.prepend_vars(1) - x0sq.scale(&(Scalar::from(3) * yi)));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfiguratrixOutcome {
    pub resultant: Scalar,
    pub vanishes: bool,
    pub diagnostic: Option<Diagnostic>,
    pub route: Route,
}

/// Macaulay resultant of [`configuratrix_system`]; zero iff the momenta lie
/// on the configuratrix or the metric is degenerate.
pub fn configuratrix_resultant(
    m: &MetricFunction,
    y: &Momentum,
    seed: u64,
) -> Result<ConfiguratrixOutcome> {
    let n = m.n();
    if n > MAX_CONFIGURATRIX_DIM {
        return Err(Error::UnsupportedDimension {
            n,
            max: MAX_CONFIGURATRIX_DIM,
        });
    }
    let forms = configuratrix_system(m, y)?;
    let mut degrees = alloc::vec![2; n + 1];
    degrees[0] = 3;
    let sys = MacaulaySystem::new(forms, degrees)?;
    let out = oracle::macaulay_resultant_seeded(&sys, seed)?;
    let diagnostic = resultant_boxed(&m.s)
        .vanishes
        .then_some(Diagnostic::DegenerateMetricIdenticallyZero);
    Ok(ConfiguratrixOutcome {
        vanishes: out.value.is_zero(),
        resultant: out.value,
        diagnostic,
        route: out.route,
    })
}
