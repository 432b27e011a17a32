//! Exact determinants by fraction-free (Bareiss) elimination.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::scalar::Scalar;

/// Determinant of a square integer matrix. Consumes the matrix; the empty
/// matrix has determinant 1.
pub fn det_bareiss(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    debug_assert!(m.iter().all(|r| r.len() == n), "matrix must be square");
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, p);
            negate = !negate;
        }
        let (top, rest) = m.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[k];
        for row in rest.iter_mut() {
            let factor = core::mem::take(&mut row[k]);
            for j in k + 1..n {
                let mut v = &row[j] * pivot;
                if !factor.is_zero() && !pivot_row[j].is_zero() {
                    v -= &factor * &pivot_row[j];
                }
                // Exact by Sylvester's identity.
                row[j] = if prev.is_one() { v } else { v / &prev };
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Scales each row of a rational matrix to integers. Returns the integer
/// matrix and the per-row multipliers.
pub fn clear_denominators(m: &[Vec<Scalar>]) -> (Vec<Vec<BigInt>>, Vec<BigInt>) {
    let mut rows = Vec::with_capacity(m.len());
    let mut scales = Vec::with_capacity(m.len());
    for row in m {
        let l = Scalar::denominator_lcm(row);
        rows.push(
            row.iter()
                .map(|v| v.numer() * (&l / v.denom()))
                .collect::<Vec<_>>(),
        );
        scales.push(l);
    }
    (rows, scales)
}

/// Determinant of a square rational matrix.
pub fn det_rational(m: &[Vec<Scalar>]) -> Scalar {
    let (ints, scales) = clear_denominators(m);
    let scale: BigInt = scales.iter().product();
    Scalar::new(det_bareiss(ints), scale).expect("row scales are positive")
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    /// Cofactor expansion along the first row.
    fn det_laplace(m: &[Vec<Scalar>]) -> Scalar {
        let n = m.len();
        if n == 0 {
            return Scalar::one();
        }
        let mut acc = Scalar::zero();
        for j in 0..n {
            if m[0][j].is_zero() {
                continue;
            }
            let minor: Vec<Vec<Scalar>> = m[1..]
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != j)
                        .map(|(_, v)| v.clone())
                        .collect()
                })
                .collect();
            let t = &m[0][j] * &det_laplace(&minor);
            if j % 2 == 0 {
                acc += &t;
            } else {
                acc -= &t;
            }
        }
        acc
    }

    fn s(v: i64) -> Scalar {
        Scalar::from(v)
    }

    #[test]
    fn small_cases() {
        assert_eq!(det_rational(&[]), Scalar::one());
        assert_eq!(det_rational(&[vec![s(7)]]), s(7));
        // needs a row swap
        let m = vec![vec![s(0), s(1)], vec![s(1), s(0)]];
        assert_eq!(det_rational(&m), s(-1));
        let sing = vec![vec![s(1), s(2)], vec![s(2), s(4)]];
        assert!(det_rational(&sing).is_zero());
        let frac = vec![
            vec![Scalar::frac(1, 2), Scalar::frac(1, 3)],
            vec![Scalar::frac(1, 4), Scalar::frac(1, 5)],
        ];
        assert_eq!(
            det_rational(&frac),
            Scalar::frac(1, 10) - Scalar::frac(1, 12)
        );
    }

    proptest! {
        #[test]
        fn matches_cofactor_expansion(
            m in (1usize..=5).prop_flat_map(|n| proptest::collection::vec(
                proptest::collection::vec((-4i64..=4, 1i64..=3), n), n))
        ) {
            let m: Vec<Vec<Scalar>> = m
                .into_iter()
                .map(|r| r.into_iter().map(|(a, b)| Scalar::frac(a, b)).collect())
                .collect();
            prop_assert_eq!(det_rational(&m), det_laplace(&m));
        }
    }
}
