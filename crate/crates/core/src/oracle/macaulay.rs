//! Macaulay-matrix resultant of `n` homogeneous forms in `n` variables.
//!
//! At the critical degree `ν = Σ(d_i - 1) + 1` every monomial of degree `ν`
//! is divisible by some `x_i^{d_i}`. Each column monomial `x^β` is assigned
//! to the least such `i` and gets the row `x^(β - d_i e_i) f_i`. The minor
//! `M'` keeps the rows and columns whose monomials are divisible by at least
//! two of the `x_i^{d_i}`. Then `Res = det M / det M'`, normalized so that
//! `Res(x_1^{d_1}, ..., x_n^{d_n}) = 1`.
//!
//! When `det M' = 0` the forms are composed with a pseudo-random integer
//! substitution `T` and `Res(F) = Res(F∘T) / det(T)^(d_1⋯d_n)`. If that
//! keeps failing (the extraneous factor can vanish identically, for example
//! when two forms coincide), the value is recovered as `R(0)` for the
//! polynomial `R(s) = Res(f_i - s x_i^{d_i})`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::{clear_denominators, det_bareiss, det_rational};
use crate::poly::{Monomial, MultiPoly};
use crate::scalar::Scalar;

/// Refuse matrices above this many entries.
pub const MAX_MATRIX_ENTRIES: u128 = 1_000_000;

/// Substitutions tried when `det M' = 0`.
pub const MAX_RETRIES: u32 = 8;

pub const DEFAULT_SEED: u64 = 1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MacaulaySystem {
    forms: Vec<MultiPoly>,
    degrees: Vec<u32>,
}

impl MacaulaySystem {
    pub fn new(forms: Vec<MultiPoly>, degrees: Vec<u32>) -> Result<Self> {
        let n = forms.len();
        if n == 0 {
            return Err(Error::InvalidSystem("no forms".into()));
        }
        if degrees.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                found: degrees.len(),
            });
        }
        for (i, (f, &d)) in forms.iter().zip(&degrees).enumerate() {
            if f.num_vars() != n {
                return Err(Error::InvalidSystem(format!(
                    "form {i} has {} variables, expected {n}",
                    f.num_vars()
                )));
            }
            if d == 0 {
                return Err(Error::InvalidSystem(format!("form {i} has degree 0")));
            }
            if !f.is_homogeneous_of(d) {
                return Err(Error::InvalidSystem(format!(
                    "form {i} is not homogeneous of degree {d}"
                )));
            }
        }
        Ok(MacaulaySystem { forms, degrees })
    }

    /// Infers each degree from the form; zero forms are rejected.
    pub fn from_forms(forms: Vec<MultiPoly>) -> Result<Self> {
        let degrees = forms
            .iter()
            .enumerate()
            .map(|(i, f)| {
                f.homogeneous_degree().ok_or_else(|| {
                    Error::InvalidSystem(format!("form {i} is zero or not homogeneous"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(forms, degrees)
    }

    pub fn forms(&self) -> &[MultiPoly] {
        &self.forms
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn num_vars(&self) -> usize {
        self.forms.len()
    }

    pub fn critical_degree(&self) -> u32 {
        self.degrees.iter().map(|d| d - 1).sum::<u32>() + 1
    }

    /// Number of rows (= columns) of the Macaulay matrix.
    pub fn matrix_size(&self) -> u128 {
        let n = self.num_vars() as u128;
        let nu = u128::from(self.critical_degree());
        // C(ν + n - 1, n - 1)
        (1..n).fold(1u128, |acc, i| acc * (nu + i) / i)
    }

    /// Composes every form with `x -> T x`.
    pub fn substitute(&self, t: &[Vec<Scalar>]) -> Result<MacaulaySystem> {
        let forms = self
            .forms
            .iter()
            .map(|f| f.compose_linear(t))
            .collect::<Result<Vec<_>>>()?;
        Ok(MacaulaySystem {
            forms,
            degrees: self.degrees.clone(),
        })
    }

    fn bezout_product(&self) -> u64 {
        self.degrees.iter().map(|&d| u64::from(d)).product()
    }
}

/// A substitution that was needed to get a nonsingular `M'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Substitution {
    pub seed: u64,
    pub matrix: Vec<Vec<Scalar>>,
    pub det: Scalar,
}

/// How the value was obtained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Route {
    /// `det M / det M'` on the forms as given.
    Direct,
    /// On the forms composed with a random substitution.
    Substitution(Substitution),
    /// `R(0)` for `R(s) = Res(f_i - s x_i^{d_i})`, interpolated from
    /// `samples` values `det(M - sI) / det(M' - sI)`. Used when `det M'`
    /// vanishes for every substitution, e.g. for repeated forms.
    Perturbation { samples: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MacaulayOutcome {
    pub value: Scalar,
    pub route: Route,
}

impl MacaulayOutcome {
    pub fn substitution(&self) -> Option<&Substitution> {
        match &self.route {
            Route::Substitution(s) => Some(s),
            _ => None,
        }
    }
}

/// Macaulay resultant with the default seed.
pub fn macaulay_resultant(sys: &MacaulaySystem) -> Result<Scalar> {
    macaulay_resultant_seeded(sys, DEFAULT_SEED).map(|o| o.value)
}

/// Macaulay resultant; fallback substitutions use seeds
/// `seed, seed + 1, ..., seed + 7`.
pub fn macaulay_resultant_seeded(sys: &MacaulaySystem, seed: u64) -> Result<MacaulayOutcome> {
    let size = sys.matrix_size();
    let entries = size.saturating_mul(size);
    if entries > MAX_MATRIX_ENTRIES {
        return Err(Error::MatrixTooLarge {
            entries,
            limit: MAX_MATRIX_ENTRIES,
        });
    }
    if sys.forms.iter().any(MultiPoly::is_zero) {
        return Ok(MacaulayOutcome {
            value: Scalar::zero(),
            route: Route::Direct,
        });
    }
    let matrix = MacaulayMatrix::build(sys);
    if let Some(value) = matrix.det_ratio() {
        return Ok(MacaulayOutcome {
            value,
            route: Route::Direct,
        });
    }
    let n = sys.num_vars();
    for attempt in 0..MAX_RETRIES {
        let s = seed.wrapping_add(u64::from(attempt));
        let t = substitution_matrix(n, s);
        let det_t = det_rational(&t);
        if det_t.is_zero() {
            continue;
        }
        if let Some(v) = MacaulayMatrix::build(&sys.substitute(&t)?).det_ratio() {
            let value = v / det_t.pow(sys.bezout_product());
            return Ok(MacaulayOutcome {
                value,
                route: Route::Substitution(Substitution {
                    seed: s,
                    matrix: t,
                    det: det_t,
                }),
            });
        }
    }
    let (value, samples) = matrix
        .perturbed_value()
        .ok_or(Error::DegenerateDenominator {
            retries: MAX_RETRIES,
        })?;
    Ok(MacaulayOutcome {
        value,
        route: Route::Perturbation { samples },
    })
}

/// `n × n` matrix with entries in `{-2, ..., 2}` drawn from a seeded stream.
pub fn substitution_matrix(n: usize, seed: u64) -> Vec<Vec<Scalar>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            (0..n)
                .map(|_| Scalar::from(rng.gen_range(-2i64..=2)))
                .collect()
        })
        .collect()
}

struct MacaulayMatrix {
    rows: Vec<Vec<Scalar>>,
    /// Column monomial divisible by exactly one `x_i^{d_i}`.
    reduced: Vec<bool>,
}

impl MacaulayMatrix {
    fn build(sys: &MacaulaySystem) -> Self {
        let n = sys.num_vars();
        let columns = Monomial::all_of_degree(n, sys.critical_degree());
        let index: BTreeMap<&Monomial, usize> =
            columns.iter().enumerate().map(|(i, m)| (m, i)).collect();

        let mut rows: Vec<Vec<Scalar>> = Vec::with_capacity(columns.len());
        let mut reduced = Vec::with_capacity(columns.len());
        for beta in &columns {
            let e = beta.exps();
            let mut divisors = (0..n).filter(|&i| e[i] >= sys.degrees[i]);
            let owner = divisors
                .next()
                .expect("every critical-degree monomial has a divisor");
            reduced.push(divisors.next().is_none());

            let mut shift = e.to_vec();
            shift[owner] -= sys.degrees[owner];
            let shifted = sys.forms[owner].mul_monomial(&Monomial::new(shift));
            let mut row = alloc::vec![Scalar::zero(); columns.len()];
            for (m, c) in shifted.terms() {
                row[index[m]] = c.clone();
            }
            rows.push(row);
        }
        MacaulayMatrix { rows, reduced }
    }

    /// `det M / det M'`, or `None` when `det M' = 0`.
    fn det_ratio(&self) -> Option<Scalar> {
        ratio_of(&self.rows, &self.reduced)
    }

    /// Perturbing `f_i -> f_i - s x_i^{d_i}` subtracts `s` on the diagonal
    /// of both `M` and `M'`. `R(s) = Res(f - s x^d)` is a polynomial of
    /// degree at most the number of reduced columns, so `D + 1` samples
    /// with `det(M' - sI) != 0` determine `R(0)`.
    fn perturbed_value(&self) -> Option<(Scalar, usize)> {
        let degree = self.reduced.iter().filter(|&&r| r).count();
        let minor_size = self.reduced.len() - degree;
        let mut xs: Vec<Scalar> = Vec::with_capacity(degree + 1);
        let mut ys: Vec<Scalar> = Vec::with_capacity(degree + 1);
        // det(M' - sI) has at most `minor_size` roots.
        for s in 1..=(degree + minor_size + 1) as i64 {
            if xs.len() == degree + 1 {
                break;
            }
            let s = Scalar::from(s);
            let mut rows = self.rows.clone();
            for (i, row) in rows.iter_mut().enumerate() {
                row[i] -= &s;
            }
            if let Some(v) = ratio_of(&rows, &self.reduced) {
                xs.push(s);
                ys.push(v);
            }
        }
        if xs.len() < degree + 1 {
            return None;
        }
        Some((lagrange_at_zero(&xs, &ys), xs.len()))
    }
}

fn ratio_of(rows: &[Vec<Scalar>], reduced: &[bool]) -> Option<Scalar> {
    let (ints, scales) = clear_denominators(rows);
    let keep: Vec<usize> = (0..rows.len()).filter(|&i| !reduced[i]).collect();
    let minor: Vec<Vec<BigInt>> = keep
        .iter()
        .map(|&r| keep.iter().map(|&c| ints[r][c].clone()).collect())
        .collect();
    let det_minor = det_bareiss(minor);
    if det_minor.is_zero() {
        return None;
    }
    let det_full = det_bareiss(ints);
    // Row scales of M' cancel; the reduced rows' scales remain.
    let reduced_scale: BigInt = scales
        .iter()
        .zip(reduced)
        .filter(|(_, &r)| r)
        .map(|(s, _)| s)
        .fold(BigInt::one(), |acc, s| acc * s);
    Some(Scalar::new(det_full, det_minor * reduced_scale).expect("nonzero"))
}

fn lagrange_at_zero(xs: &[Scalar], ys: &[Scalar]) -> Scalar {
    let mut acc = Scalar::zero();
    for (k, (xk, yk)) in xs.iter().zip(ys).enumerate() {
        let mut w = yk.clone();
        for (j, xj) in xs.iter().enumerate() {
            if j != k {
                w = w * (-xj) / (xk - xj);
            }
        }
        acc += &w;
    }
    acc
}
