//! Closed-form evaluation of the gradient-system resultant.
//!
//! Two conventions are in play:
//!
//! - the *canonical* value is the resultant normalized by
//!   `R{x_1^2, ..., x_n^2} = 1`, which is what [`crate::oracle`] computes;
//! - the boxed value (`paper_value`) is the product over `k` of
//!   `6(n-2k)^2/n^2 B1 B3^2 - k(n-k)/n^2 B2^3` raised to `C(n-1,k)`, times
//!   `B3^((n-3) 2^(n-1))`.
//!
//! The two differ by exactly `2^(2^(n-1))`. The `Y_k` factors carry the
//! prefactor `1/8`, the grouped product is
//! `(1+nA)^2 - (A^2-B)(n-2k)^2`, and `B` has numerator
//! `6A1A3 + A2A3 - A2^2`.

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::quad::{quad_product, QuadExt};
use crate::scalar::Scalar;
use crate::symcubic::{BParams, ReducedParams, SymmetricCubic};

/// Pascal's triangle up to a fixed row.
#[derive(Clone, Debug)]
pub struct BinomialTable {
    rows: Vec<Vec<BigUint>>,
}

impl BinomialTable {
    pub fn new(max_p: usize) -> Self {
        let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(max_p + 1);
        rows.push(alloc::vec![BigUint::one()]);
        for p in 1..=max_p {
            let prev = &rows[p - 1];
            let mut row = Vec::with_capacity(p + 1);
            row.push(BigUint::one());
            for q in 1..p {
                row.push(&prev[q - 1] + &prev[q]);
            }
            row.push(BigUint::one());
            rows.push(row);
        }
        BinomialTable { rows }
    }

    pub fn get(&self, p: usize, q: usize) -> Option<&BigUint> {
        self.rows.get(p)?.get(q)
    }
}

pub fn binomial(p: i64, q: i64) -> Result<BigUint> {
    if p < 0 || q < 0 || q > p {
        return Err(Error::BinomialRange { p, q });
    }
    Ok(BinomialTable::new(p as usize)
        .get(p as usize, q as usize)
        .expect("in range")
        .clone())
}

fn binomial_u64(p: usize, q: usize) -> u64 {
    binomial(p as i64, q as i64)
        .expect("in range")
        .to_u64()
        .expect("n is bounded so C(n-1, k) fits in u64")
}

/// `2^(n-1)`, the degree of the resultant in each form's coefficients.
fn half_bezout(n: usize) -> u64 {
    1u64 << (n - 1)
}

/// `Y_k` and its multiplicity `C(n-1, k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YFactor {
    pub k: usize,
    pub y: Scalar,
    pub exponent: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResultantReport {
    pub n: usize,
    /// Resultant with `R{x_i^2} = 1`.
    pub canonical_value: Scalar,
    /// The boxed product taken verbatim.
    pub paper_value: Scalar,
    /// `Y_0 .. Y_{n-1}`; their weighted product is `canonical_value`.
    pub factors: Vec<YFactor>,
    pub vanishes: bool,
    /// `paper_value / canonical_value`, absent when the resultant vanishes.
    pub normalization_ratio: Option<Scalar>,
}

/// The `k`-th parenthesized factor `6(n-2k)^2/n^2 B1 B3^2 - k(n-k)/n^2 B2^3`.
pub fn boxed_factor(bp: &BParams, n: usize, k: usize) -> Result<Scalar> {
    if k >= n {
        return Err(Error::FactorIndex { n, k });
    }
    let (ni, ki) = (n as i64, k as i64);
    let n2 = Scalar::from(ni * ni);
    let m = ni - 2 * ki;
    let first = Scalar::from(6 * m * m) / &n2 * &bp.b1 * &bp.b3 * &bp.b3;
    let second = Scalar::from(ki * (ni - ki)) / &n2 * bp.b2.pow(3);
    Ok(first - second)
}

/// `Y_k = 1/8 A3^(n-3) { D^3 - (n-2k)^2 ((A2+A3)^2 D - 4A3(6A1A3 + A2A3 - A2^2)) }`.
pub fn y_factor(sc: &SymmetricCubic, k: usize) -> Result<Scalar> {
    let n = sc.n();
    if k >= n {
        return Err(Error::FactorIndex { n, k });
    }
    let (a1, a2, a3) = (sc.a1(), sc.a2(), sc.a3());
    let d = sc.d();
    let a23 = a2 + a3;
    let m = Scalar::from(n as i64 - 2 * k as i64);
    let inner =
        &a23 * &a23 * &d - Scalar::from(4) * a3 * (Scalar::from(6) * a1 * a3 + a2 * a3 - a2 * a2);
    let brace = d.pow(3) - &m * &m * inner;
    Ok(Scalar::frac(1, 8) * a3.pow(n as u64 - 3) * brace)
}

/// Evaluates the closed product. Total: defined for every valid cubic,
/// including `A3 = 0` and `D = 0`.
pub fn resultant_boxed(sc: &SymmetricCubic) -> ResultantReport {
    let n = sc.n();
    let bp = sc.b_params();
    let mut paper_value = bp.b3.pow((n as u64 - 3) * half_bezout(n));
    let mut canonical_value = Scalar::one();
    let mut factors = Vec::with_capacity(n);
    for k in 0..n {
        let exponent = binomial_u64(n - 1, k);
        paper_value *= &boxed_factor(&bp, n, k).expect("k < n").pow(exponent);
        let y = y_factor(sc, k).expect("k < n");
        canonical_value *= &y.pow(exponent);
        factors.push(YFactor { k, y, exponent });
    }
    debug_assert_eq!(
        paper_value,
        &canonical_value * &Scalar::from(2).pow(half_bezout(n))
    );
    let vanishes = canonical_value.is_zero();
    let normalization_ratio = (!vanishes).then(|| &paper_value / &canonical_value);
    ResultantReport {
        n,
        canonical_value,
        paper_value,
        factors,
        vanishes,
        normalization_ratio,
    }
}

/// The product of `1 + nA + λ Σ_j (-1)^(k_j)` over all sign vectors, with
/// `λ^2 = A^2 - B`. Sign vectors are grouped by their number of minus signs
/// `j`, which contributes `(1 + nA + λ(n - 2j))^C(n, j)`.
pub fn poisson_product(cap_a: &Scalar, cap_b: &Scalar, n: usize) -> Scalar {
    let delta = cap_a * cap_a - cap_b;
    let base = Scalar::one() + Scalar::from(n as i64) * cap_a;
    let mut acc = QuadExt::one(delta.clone());
    for j in 0..=n {
        let f = QuadExt::new(
            base.clone(),
            Scalar::from(n as i64 - 2 * j as i64),
            delta.clone(),
        );
        acc = acc.mul(&f.pow(binomial_u64(n, j))).expect("same radicand");
    }
    acc.to_rational()
        .expect("a sign-symmetric product has no radical part")
}

/// [`poisson_product`] enumerating all `2^n` sign vectors one by one.
pub fn poisson_product_enumerated(cap_a: &Scalar, cap_b: &Scalar, n: usize) -> Result<Scalar> {
    let delta = cap_a * cap_a - cap_b;
    let base = Scalar::one() + Scalar::from(n as i64) * cap_a;
    let factors: Vec<QuadExt> = (0u64..1 << n)
        .map(|mask| {
            let minus = mask.count_ones() as i64;
            QuadExt::new(
                base.clone(),
                Scalar::from(n as i64 - 2 * minus),
                delta.clone(),
            )
        })
        .collect();
    let p = quad_product(&factors)?;
    p.to_rational().ok_or(Error::MixedRadicands)
}

/// `Π_k [(1+nA)^2 - (A^2-B)(n-2k)^2]^C(n-1,k)` for `k = 0..n-1`.
pub fn grouped_product(cap_a: &Scalar, cap_b: &Scalar, n: usize) -> Scalar {
    let delta = cap_a * cap_a - cap_b;
    let base = Scalar::one() + Scalar::from(n as i64) * cap_a;
    let base2 = &base * &base;
    (0..n)
        .map(|k| {
            let m = Scalar::from(n as i64 - 2 * k as i64);
            (&base2 - &delta * &(&m * &m)).pow(binomial_u64(n - 1, k))
        })
        .product()
}

impl ReducedParams {
    pub fn poisson_product(&self, n: usize) -> Scalar {
        poisson_product(&self.cap_a, &self.cap_b, n)
    }

    pub fn grouped_product(&self, n: usize) -> Scalar {
        grouped_product(&self.cap_a, &self.cap_b, n)
    }
}

/// Canonical resultant through the reduced system:
/// `R{F_i} * (A3^(n-1) D / 2)^(2^(n-1))`.
pub fn resultant_via_scaling(sc: &SymmetricCubic) -> Result<Scalar> {
    let n = sc.n();
    let rp = sc.reduced_params()?;
    let scale = sc.a3().pow(n as u64 - 1) * &rp.d / Scalar::from(2);
    Ok(rp.poisson_product(n) * scale.pow(half_bezout(n)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;
    use proptest::prelude::*;

    fn sc(n: usize, a1: i64, a2: i64, a3: i64) -> SymmetricCubic {
        SymmetricCubic::from_ints(n, a1, a2, a3).unwrap()
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(2, 1).unwrap(), BigUint::from(2u32));
        assert_eq!(binomial(0, 0).unwrap(), BigUint::from(1u32));
        assert_eq!(binomial(6, 3).unwrap(), BigUint::from(20u32));
        assert!(binomial(2, 3).is_err());
        assert!(binomial(-1, 0).is_err());
        let t = BinomialTable::new(12);
        for p in 1..=12usize {
            for q in 1..p {
                assert_eq!(
                    t.get(p, q).unwrap(),
                    &(t.get(p - 1, q - 1).unwrap() + t.get(p - 1, q).unwrap())
                );
            }
        }
    }

    #[test]
    fn exponent_bookkeeping() {
        // Σ_k C(n-1,k) = 2^(n-1) and C(n,k) = C(n-1,k) + C(n-1,k-1).
        for n in 1..=10usize {
            let sum: u64 = (0..n).map(|k| binomial_u64(n - 1, k)).sum();
            assert_eq!(sum, half_bezout(n));
        }
    }

    #[test]
    fn boxed_factor_examples() {
        let bp = sc(3, 1, -3, 3).b_params();
        assert_eq!(boxed_factor(&bp, 3, 0).unwrap(), Scalar::from(54));
        assert_eq!(boxed_factor(&bp, 3, 1).unwrap(), Scalar::from(54));
        let bp = sc(3, 0, 0, 1).b_params();
        assert!(boxed_factor(&bp, 3, 1).unwrap().is_zero());
        assert!(boxed_factor(&bp, 3, 3).is_err());
    }

    #[test]
    fn boxed_examples() {
        let r = resultant_boxed(&sc(3, 0, 0, 1));
        assert!(r.vanishes);
        assert!(r.paper_value.is_zero());
        assert_eq!(r.normalization_ratio, None);

        assert!(resultant_boxed(&sc(3, 1, 0, 0)).vanishes);

        let r = resultant_boxed(&sc(3, 1, -3, 3));
        assert_eq!(r.paper_value, Scalar::from(8_503_056));
        assert_eq!(r.canonical_value, Scalar::from(531_441));
        assert_eq!(r.normalization_ratio, Some(Scalar::from(16)));
        assert!(!r.vanishes);
        let exps: Vec<u64> = r.factors.iter().map(|f| f.exponent).collect();
        assert_eq!(exps, [1, 2, 1]);
    }

    #[test]
    fn y_factor_examples() {
        let p3 = sc(3, 1, -3, 3);
        assert_eq!(y_factor(&p3, 0).unwrap(), Scalar::from(27));
        assert_eq!(y_factor(&p3, 1).unwrap(), Scalar::from(27));
        assert!(y_factor(&sc(3, 0, 0, 1), 1).unwrap().is_zero());
        assert!(y_factor(&p3, 3).is_err());
    }

    #[test]
    fn poisson_examples() {
        for n in 3..=6 {
            assert_eq!(poisson_product(&0.into(), &0.into(), n), Scalar::one());
        }
        // λ = 0
        let a = Scalar::frac(2, 5);
        let b = &a * &a;
        assert_eq!(
            poisson_product(&a, &b, 3),
            (Scalar::one() + Scalar::from(3) * &a).pow(8)
        );
        // S = s3: A = -1/2, B = 0; the factor with Σ = 1 vanishes.
        assert!(poisson_product(&Scalar::frac(-1, 2), &0.into(), 3).is_zero());
        assert!(grouped_product(&Scalar::frac(-1, 2), &0.into(), 3).is_zero());
    }

    #[test]
    fn grouped_examples() {
        assert_eq!(grouped_product(&0.into(), &0.into(), 4), Scalar::one());
        assert!(grouped_product(&0.into(), &(-1).into(), 3).is_zero());
    }

    #[test]
    fn scaling_route_examples() {
        assert_eq!(
            resultant_via_scaling(&sc(3, 1, -3, 3)).unwrap(),
            Scalar::from(531_441)
        );
        assert!(resultant_via_scaling(&sc(3, 0, 0, 1)).unwrap().is_zero());
        assert!(resultant_via_scaling(&sc(4, 0, 0, 1)).unwrap().is_zero());
        assert!(matches!(
            resultant_via_scaling(&sc(3, 1, 0, 0)),
            Err(Error::TransformationUndefined(_))
        ));
    }

    fn arb_rat() -> impl Strategy<Value = Scalar> {
        (-12i64..=12, 1i64..=6).prop_map(|(a, b)| Scalar::frac(a, b))
    }

    fn arb_cubic(ns: core::ops::RangeInclusive<usize>) -> impl Strategy<Value = SymmetricCubic> {
        (ns, arb_rat(), arb_rat(), arb_rat()).prop_filter_map("nonzero", |(n, a, b, c)| {
            SymmetricCubic::new(n, a, b, c).ok()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn poisson_equals_grouped(a in arb_rat(), b in arb_rat(), n in 3usize..=5) {
            let p = poisson_product(&a, &b, n);
            prop_assert_eq!(&p, &grouped_product(&a, &b, n));
            if n <= 4 {
                prop_assert_eq!(&p, &poisson_product_enumerated(&a, &b, n).unwrap());
            }
        }

        #[test]
        fn y_factor_matches_boxed_factor(s in arb_cubic(3..=6)) {
            let n = s.n();
            let bp = s.b_params();
            for k in 0..n {
                let lhs = y_factor(&s, k).unwrap() * Scalar::from(2);
                let rhs = boxed_factor(&bp, n, k).unwrap() * s.a3().pow(n as u64 - 3);
                prop_assert_eq!(lhs, rhs);
            }
        }

        #[test]
        fn chain_matches_boxed(s in arb_cubic(3..=6)) {
            if let Ok(chain) = resultant_via_scaling(&s) {
                prop_assert_eq!(chain, resultant_boxed(&s).canonical_value);
            }
        }

        #[test]
        fn ratio_is_pinned(s in arb_cubic(3..=6)) {
            let r = resultant_boxed(&s);
            if let Some(ratio) = r.normalization_ratio {
                prop_assert_eq!(ratio, Scalar::from(2).pow(half_bezout(s.n())));
            }
        }

        #[test]
        fn homogeneity(s in arb_cubic(3..=5), c in arb_rat()) {
            prop_assume!(!c.is_zero());
            let n = s.n() as u64;
            let lhs = resultant_boxed(&s.scaled(&c).unwrap()).canonical_value;
            let rhs = c.pow(n * half_bezout(s.n())) * resultant_boxed(&s).canonical_value;
            prop_assert_eq!(lhs, rhs);
        }
    }
}
