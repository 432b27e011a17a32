//! Symmetric cubics `A1*s1^3 + A2*s1*s2 + A3*s3` and their gradient systems.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::poly::{elem_sym, MultiPoly};
use crate::scalar::Scalar;

/// Largest supported dimension. Resultant exponents grow like `2^(n-1)`.
pub const MAX_DIM: usize = 60;

/// A symmetric cubic in `n >= 3` variables, by its coefficients on
/// `s1^3`, `s1*s2` and `s3`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymmetricCubic {
    n: usize,
    a1: Scalar,
    a2: Scalar,
    a3: Scalar,
}

/// Parameters of the reduced system `x_i^2 + 2A x_i s1 + B s1^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedParams {
    pub cap_a: Scalar,
    pub cap_b: Scalar,
    /// `D = 2A3 - n(A2 + A3)`.
    pub d: Scalar,
    /// `A^2 - B`.
    pub radicand: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BParams {
    pub b1: Scalar,
    pub b2: Scalar,
    pub b3: Scalar,
}

impl SymmetricCubic {
    pub fn new(n: usize, a1: Scalar, a2: Scalar, a3: Scalar) -> Result<Self> {
        if n < 3 {
            return Err(Error::DimensionTooSmall(n));
        }
        if n > MAX_DIM {
            return Err(Error::DimensionTooLarge { n, max: MAX_DIM });
        }
        if a1.is_zero() && a2.is_zero() && a3.is_zero() {
            return Err(Error::ZeroCubic);
        }
        Ok(SymmetricCubic { n, a1, a2, a3 })
    }

    /// Integer-coefficient shorthand.
    pub fn from_ints(n: usize, a1: i64, a2: i64, a3: i64) -> Result<Self> {
        Self::new(n, a1.into(), a2.into(), a3.into())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn a1(&self) -> &Scalar {
        &self.a1
    }

    pub fn a2(&self) -> &Scalar {
        &self.a2
    }

    pub fn a3(&self) -> &Scalar {
        &self.a3
    }

    fn n_scalar(&self) -> Scalar {
        Scalar::from(self.n as i64)
    }

    /// `c * S`.
    pub fn scaled(&self, c: &Scalar) -> Result<Self> {
        Self::new(self.n, &self.a1 * c, &self.a2 * c, &self.a3 * c)
    }

    /// The explicit polynomial `A1*s1^3 + A2*s1*s2 + A3*s3`.
    pub fn expand(&self) -> MultiPoly {
        let n = self.n;
        let s1 = elem_sym(n, 1).expect("n >= 3");
        let s2 = elem_sym(n, 2).expect("n >= 3");
        let s3 = elem_sym(n, 3).expect("n >= 3");
        s1.pow(3).scale(&self.a1) + (&s1 * &s2).scale(&self.a2) + s3.scale(&self.a3)
    }

    /// Recovers `(A1, A2, A3)` from a symmetric homogeneous cubic.
    ///
    /// Only three coefficients are needed: `[x1^3] = A1`,
    /// `[x1^2 x2] = 3A1 + A2` and `[x1 x2 x3] = 6A1 + 3A2 + A3`.
    pub fn decompose(p: &MultiPoly) -> Result<Self> {
        let n = p.num_vars();
        if n < 3 {
            return Err(Error::DimensionTooSmall(n));
        }
        if p.is_zero() {
            return Err(Error::ZeroCubic);
        }
        if !p.is_homogeneous_of(3) {
            return Err(Error::NotHomogeneous(3));
        }
        if !p.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        let probe = |e: &[u32]| {
            let mut exps = alloc::vec![0u32; n];
            exps[..e.len()].copy_from_slice(e);
            p.coeff(&exps)
        };
        let c300 = probe(&[3]);
        let c210 = probe(&[2, 1]);
        let c111 = probe(&[1, 1, 1]);
        let a1 = c300;
        let a2 = c210 - Scalar::from(3) * &a1;
        let a3 = c111 - Scalar::from(6) * &a1 - Scalar::from(3) * &a2;
        let sc = Self::new(n, a1, a2, a3)?;
        debug_assert_eq!(&sc.expand(), p);
        Ok(sc)
    }

    /// `∂_i S = A3 x_i^2 - (A2+A3) x_i s1 + (3A1+A2) s1^2 + (A2+A3) s2`,
    /// built from the closed form and checked against direct
    /// differentiation of [`expand`](Self::expand).
    pub fn gradient_system(&self) -> Vec<MultiPoly> {
        let closed = self.gradient_closed_form();
        debug_assert!({
            let s = self.expand();
            closed
                .iter()
                .enumerate()
                .all(|(i, g)| s.partial(i).as_ref() == Ok(g))
        });
        closed
    }

    fn gradient_closed_form(&self) -> Vec<MultiPoly> {
        let n = self.n;
        let s1 = elem_sym(n, 1).expect("n >= 3");
        let s2 = elem_sym(n, 2).expect("n >= 3");
        let a23 = &self.a2 + &self.a3;
        let common = (&s1 * &s1).scale(&(Scalar::from(3) * &self.a1 + &self.a2)) + s2.scale(&a23);
        (0..n)
            .map(|i| {
                let xi = MultiPoly::var(n, i).expect("in range");
                (&xi * &xi).scale(&self.a3) - (&xi * &s1).scale(&a23) + common.clone()
            })
            .collect()
    }

    /// `D = 2A3 - n(A2 + A3)`, which equals `-B2`.
    pub fn d(&self) -> Scalar {
        Scalar::from(2) * &self.a3 - self.n_scalar() * (&self.a2 + &self.a3)
    }

    pub fn reduced_params(&self) -> Result<ReducedParams> {
        if self.a3.is_zero() {
            return Err(Error::TransformationUndefined("A3 = 0"));
        }
        let d = self.d();
        if d.is_zero() {
            return Err(Error::TransformationUndefined("2A3 - n(A2+A3) = 0"));
        }
        let (a1, a2, a3) = (&self.a1, &self.a2, &self.a3);
        let cap_a = -(a2 + a3) / (Scalar::from(2) * a3);
        let numer = Scalar::from(6) * a1 * a3 + a2 * a3 - a2 * a2;
        let cap_b = numer / (a3 * &d);
        let radicand = &cap_a * &cap_a - &cap_b;
        Ok(ReducedParams {
            cap_a,
            cap_b,
            d,
            radicand,
        })
    }

    /// The forms `F_i = x_i^2 + 2A x_i s1 + B s1^2`.
    pub fn reduced_system(&self) -> Result<Vec<MultiPoly>> {
        let rp = self.reduced_params()?;
        let n = self.n;
        let s1 = elem_sym(n, 1).expect("n >= 3");
        let tail = (&s1 * &s1).scale(&rp.cap_b);
        let two_a = Scalar::from(2) * &rp.cap_a;
        let forms: Vec<MultiPoly> = (0..n)
            .map(|i| {
                let xi = MultiPoly::var(n, i).expect("in range");
                &xi * &xi + (&xi * &s1).scale(&two_a) + tail.clone()
            })
            .collect();
        debug_assert_eq!(Some(&forms), self.reduced_by_combination().ok().as_ref());
        Ok(forms)
    }

    /// `(1/A3) ∂_i S + (A2+A3)/(A3 D) Σ_j ∂_j S`, computed on the explicit
    /// gradient polynomials.
    pub fn reduced_by_combination(&self) -> Result<Vec<MultiPoly>> {
        let rp = self.reduced_params()?;
        let grad = self.gradient_system();
        let total = grad
            .iter()
            .fold(MultiPoly::zero(self.n), |acc, g| acc + g.clone());
        let own = self.a3.recip()?;
        let shared = (&self.a2 + &self.a3) / (&self.a3 * &rp.d);
        let total = total.scale(&shared);
        Ok(grad.iter().map(|g| g.scale(&own) + total.clone()).collect())
    }

    pub fn b_params(&self) -> BParams {
        let n = self.n as i64;
        let b1 = Scalar::from(n * n) * &self.a1
            + Scalar::frac(n * (n - 1), 2) * &self.a2
            + Scalar::frac((n - 1) * (n - 2), 6) * &self.a3;
        let b2 = Scalar::from(n) * &self.a2 + Scalar::from(n - 2) * &self.a3;
        BParams {
            b1,
            b2,
            b3: self.a3.clone(),
        }
    }
}
