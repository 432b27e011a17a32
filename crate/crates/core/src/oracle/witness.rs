//! Explicit nonzero common roots of a symmetric gradient system.
//!
//! For `A3 != 0` every coordinate of a common root solves the same quadratic
//! `A3 z^2 - (A2+A3) s1 z + C = 0`, so a root takes at most two values. After
//! sorting coordinates, it has the shape `(t, ..., t, u, ..., u)` with `k`
//! copies of `t`, and the `n` forms collapse to two binary quadratics in
//! `(t, u)`. For `A3 = 0` the forms vanish wherever `s1 = s2 = 0`, which
//! contains `(1, ω, ω², 0, ..., 0)` for a primitive cube root of unity `ω`.

use alloc::vec;
use alloc::vec::Vec;

use crate::poly::MultiPoly;
use crate::quad::QuadExt;
use crate::scalar::Scalar;
use crate::symcubic::SymmetricCubic;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessField {
    Rational,
    /// `Q(sqrt(delta))`.
    Quadratic(Scalar),
}

/// `k` coordinates equal to `t`, the remaining `n - k` equal to `u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoValuePattern {
    pub k: usize,
    pub t: QuadExt,
    pub u: QuadExt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootWitness {
    /// Coordinates sharing one radicand (0 for rational points).
    pub point: Vec<QuadExt>,
    /// `None` for points outside the two-value family.
    pub pattern: Option<TwoValuePattern>,
}

impl RootWitness {
    pub fn field(&self) -> WitnessField {
        if self.point.iter().all(QuadExt::is_rational) {
            WitnessField::Rational
        } else {
            WitnessField::Quadratic(self.point[0].radicand().clone())
        }
    }

    /// The point as rationals, when it is rational.
    pub fn rational_point(&self) -> Option<Vec<Scalar>> {
        self.point.iter().map(QuadExt::to_rational).collect()
    }
}

/// True iff the point is nonzero and every gradient form vanishes there.
pub fn verify_witness(sc: &SymmetricCubic, w: &RootWitness) -> bool {
    verify_point(&sc.gradient_system(), &w.point)
}

fn verify_point(grad: &[MultiPoly], point: &[QuadExt]) -> bool {
    if point.iter().all(QuadExt::is_zero) {
        return false;
    }
    grad.iter()
        .all(|g| matches!(g.eval_ext(point), Ok(v) if v.is_zero()))
}

/// Searches for a nonzero common root of the gradient system.
///
/// Patterns are tried for `k = 0, 1, ..., n`; within one `k`, rational
/// candidates come first in increasing `t/u` (with `[1:0]` last), then the
/// conjugate pair over `Q(sqrt(Δ))` with the `+` root first.
pub fn root_witness(sc: &SymmetricCubic) -> Option<RootWitness> {
    let n = sc.n();
    let grad = sc.gradient_system();
    for k in 0..=n {
        let forms = pattern_forms(sc, k);
        let present: Vec<&MultiPoly> = forms.iter().flatten().filter(|f| !f.is_zero()).collect();
        let candidates = match present.first() {
            Some(f) => binary_roots(f),
            None => vec![(rat(1), rat(0)), (rat(0), rat(1)), (rat(1), rat(1))],
        };
        for (t, u) in candidates {
            let mut point = vec![t.clone(); k];
            point.extend(core::iter::repeat_n(u.clone(), n - k));
            if verify_point(&grad, &point) {
                return Some(RootWitness {
                    point,
                    pattern: Some(TwoValuePattern { k, t, u }),
                });
            }
        }
    }
    cube_root_family(n).filter(|w| verify_point(&grad, &w.point))
}

fn rat(v: i64) -> QuadExt {
    QuadExt::rational(v.into(), Scalar::zero())
}

/// `(1, ω, ω², 0, ..., 0)` with `ω = -1/2 + sqrt(-3)/2`.
fn cube_root_family(n: usize) -> Option<RootWitness> {
    let delta = Scalar::from(-3);
    let half = Scalar::frac(1, 2);
    let omega = QuadExt::new(-&half, half.clone(), delta.clone());
    let omega2 = omega.conjugate();
    let mut point = vec![QuadExt::one(delta.clone()), omega, omega2];
    point.extend(core::iter::repeat_n(
        QuadExt::zero(delta),
        n.checked_sub(3)?,
    ));
    Some(RootWitness {
        point,
        pattern: None,
    })
}

/// The gradient forms at `(t×k, u×(n-k))`, as binary forms in `(t, u)`:
/// one for the `t` coordinates (if `k > 0`) and one for the `u` coordinates
/// (if `k < n`).
fn pattern_forms(sc: &SymmetricCubic, k: usize) -> [Option<MultiPoly>; 2] {
    let n = sc.n();
    let t = MultiPoly::var(2, 0).expect("binary");
    let u = MultiPoly::var(2, 1).expect("binary");
    let kt = t.scale(&Scalar::from(k as i64));
    let ru = u.scale(&Scalar::from((n - k) as i64));
    let s1 = &kt + &ru;
    let p2 = &(&kt * &t) + &(&ru * &u);
    let s2 = (&(&s1 * &s1) - &p2).scale(&Scalar::frac(1, 2));
    let a23 = sc.a2() + sc.a3();
    let common = (&s1 * &s1).scale(&(Scalar::from(3) * sc.a1() + sc.a2())) + s2.scale(&a23);
    let at = |v: &MultiPoly| (v * v).scale(sc.a3()) - (v * &s1).scale(&a23) + common.clone();
    [(k > 0).then(|| at(&t)), (k < n).then(|| at(&u))]
}

/// Projective roots `[t : u]` of a nonzero binary form of degree <= 2.
fn binary_roots(f: &MultiPoly) -> Vec<(QuadExt, QuadExt)> {
    let a = f.coeff(&[2, 0]);
    let b = f.coeff(&[1, 1]);
    let c = f.coeff(&[0, 2]);
    let zero = Scalar::zero();
    let r = |v: Scalar| QuadExt::rational(v, zero.clone());
    let mut out = Vec::new();
    if a.is_zero() {
        // u (b t + c u)
        if !b.is_zero() {
            out.push((r(-(&c / &b)), r(Scalar::one())));
        }
        out.push((r(Scalar::one()), r(Scalar::zero())));
        return out;
    }
    let disc = &b * &b - Scalar::from(4) * &a * &c;
    let two_a = Scalar::from(2) * &a;
    match disc.sqrt_exact() {
        Some(root) => {
            let lo = (-&b - &root) / &two_a;
            let hi = (-&b + &root) / &two_a;
            let (lo, hi) = if lo <= hi { (lo, hi) } else { (hi, lo) };
            let same = lo == hi;
            out.push((r(lo), r(Scalar::one())));
            if !same {
                out.push((r(hi), r(Scalar::one())));
            }
        }
        None => {
            let re = -&b / &two_a;
            let im = Scalar::one() / &two_a;
            let one = QuadExt::one(disc.clone());
            out.push((
                QuadExt::new(re.clone(), im.clone(), disc.clone()),
                one.clone(),
            ));
            out.push((QuadExt::new(re, -im, disc), one));
        }
    }
    out
}

/// Convenience for tests and callers holding rational points.
pub fn rational_witness(point: Vec<Scalar>) -> RootWitness {
    RootWitness {
        point: point
            .into_iter()
            .map(|v| QuadExt::rational(v, Scalar::zero()))
            .collect(),
        pattern: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closedform::resultant_boxed;

    fn sc(n: usize, a1: i64, a2: i64, a3: i64) -> SymmetricCubic {
        SymmetricCubic::from_ints(n, a1, a2, a3).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| Scalar::from(x)).collect()
    }

    #[test]
    fn s3_witness() {
        let w = root_witness(&sc(3, 0, 0, 1)).unwrap();
        assert_eq!(w.rational_point().unwrap(), ints(&[1, 0, 0]));
        let p = w.pattern.clone().unwrap();
        assert_eq!((p.k, p.t, p.u), (1, rat(1), rat(0)));
        assert_eq!(w.field(), WitnessField::Rational);
        assert!(verify_witness(&sc(3, 0, 0, 1), &w));
    }

    #[test]
    fn s1_cubed_witness_has_zero_sum() {
        for n in [3, 4] {
            let s = sc(n, 1, 0, 0);
            let w = root_witness(&s).unwrap();
            assert!(verify_witness(&s, &w));
            let pt = w.rational_point().unwrap();
            assert!(pt.iter().cloned().sum::<Scalar>().is_zero());
        }
    }

    #[test]
    fn power_sum_has_no_witness() {
        assert!(root_witness(&sc(3, 1, -3, 3)).is_none());
    }

    #[test]
    fn verify_examples() {
        let s3 = sc(3, 0, 0, 1);
        assert!(verify_witness(&s3, &rational_witness(ints(&[1, 0, 0]))));
        assert!(!verify_witness(&s3, &rational_witness(ints(&[1, 1, 1]))));
        assert!(!verify_witness(&s3, &rational_witness(ints(&[0, 0, 0]))));
        let p3 = sc(3, 1, -3, 3);
        for pt in [[1, 0, 0], [1, -1, 0], [2, 3, 5]] {
            assert!(!verify_witness(&p3, &rational_witness(ints(&pt))));
        }
    }

    #[test]
    fn a3_zero_uses_cube_roots() {
        // A2 != 0, A3 = 0: the two-value family misses the roots.
        let s = sc(3, 0, 1, 0);
        assert!(resultant_boxed(&s).vanishes);
        let w = root_witness(&s).unwrap();
        assert!(verify_witness(&s, &w));
        let s = sc(5, 2, -3, 0);
        let w = root_witness(&s).unwrap();
        assert!(verify_witness(&s, &w));
    }

    #[test]
    fn two_value_witnesses_are_rational() {
        // The t- and u-forms differ by (t - u)(A3 (t + u) - (A2 + A3) s1), so a
        // shared root lies on a rational line; only the cube-root family
        // needs an extension.
        for a1 in -4..=4 {
            for a2 in -4..=4 {
                for a3 in 1..=4 {
                    let s = sc(3, a1, a2, a3);
                    if let Some(w) = root_witness(&s) {
                        assert!(verify_witness(&s, &w));
                        assert_eq!(w.field(), WitnessField::Rational, "{s:?}");
                    }
                }
            }
        }
        let w = root_witness(&sc(4, 1, 2, 0)).unwrap();
        assert!(w.pattern.is_none());
        assert_eq!(w.field(), WitnessField::Quadratic(Scalar::from(-3)));
    }

    #[test]
    fn vanishing_iff_witness_small_grid() {
        for n in [3, 4] {
            for a1 in -3..=3 {
                for a2 in -3..=3 {
                    for a3 in -3..=3 {
                        let Ok(s) = SymmetricCubic::from_ints(n, a1, a2, a3) else {
                            continue;
                        };
                        let vanishes = resultant_boxed(&s).vanishes;
                        let w = root_witness(&s);
                        assert_eq!(vanishes, w.is_some(), "{s:?}");
                        if let Some(w) = w {
                            assert!(verify_witness(&s, &w));
                        }
                    }
                }
            }
        }
    }
}
