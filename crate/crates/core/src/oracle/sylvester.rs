use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::det_rational;
use crate::poly::MultiPoly;
use crate::scalar::Scalar;

/// Resultant of two binary forms as the determinant of their Sylvester
/// matrix, with `Res(x1^d, x2^e) = 1`.
pub fn sylvester_resultant(f: &MultiPoly, g: &MultiPoly) -> Result<Scalar> {
    if f.num_vars() != 2 || g.num_vars() != 2 {
        return Err(Error::InvalidSystem(
            "Sylvester resultant needs binary forms".into(),
        ));
    }
    if f.is_zero() || g.is_zero() {
        return Ok(Scalar::zero());
    }
    let (Some(d), Some(e)) = (f.homogeneous_degree(), g.homogeneous_degree()) else {
        return Err(Error::InvalidSystem("forms must be homogeneous".into()));
    };
    // a_j is the coefficient of x1^(d-j) x2^j
    let coeffs = |p: &MultiPoly, deg: u32| -> Vec<Scalar> {
        (0..=deg).map(|j| p.coeff(&[deg - j, j])).collect()
    };
    let (fc, gc) = (coeffs(f, d), coeffs(g, e));
    let (d, e) = (d as usize, e as usize);
    let size = d + e;
    let mut m = vec![vec![Scalar::zero(); size]; size];
    for r in 0..e {
        for (j, c) in fc.iter().enumerate() {
            m[r][r + j] = c.clone();
        }
    }
    for r in 0..d {
        for (j, c) in gc.iter().enumerate() {
            m[e + r][r + j] = c.clone();
        }
    }
    Ok(det_rational(&m))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> MultiPoly {
        MultiPoly::var(2, i).unwrap()
    }

    fn s(v: i64) -> Scalar {
        Scalar::from(v)
    }

    #[test]
    fn examples() {
        assert_eq!(
            sylvester_resultant(&x(0).pow(2), &x(1).pow(2)).unwrap(),
            s(1)
        );
        assert!(sylvester_resultant(&(&x(0) * &x(1)), &x(0).pow(2))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn hand_expanded_example() {
        // f = x1^2 - x2^2, g = x1^2 + x2^2; Sylvester matrix
        //   1 0 -1  0
        //   0 1  0 -1
        //   1 0  1  0
        //   0 1  0  1
        // Expanding along the first column: 1*det(A) + 1*det(B) with
        //   A = [1 0 -1; 0 1 0; 1 0 1] -> 1*(1*1-0) - 0 + (-1)*(0-1) = 2
        //   B = minor of row 3, col 1 with sign (+1) = det([0 -1 0; 1 0 -1; 1 0 1])
        //     = 0 - (-1)*(1*1 - (-1)*1) + 0 = 2
        let by_hand = s(1) * s(2) + s(1) * s(2);
        let f = &x(0).pow(2) - &x(1).pow(2);
        let g = &x(0).pow(2) + &x(1).pow(2);
        assert_eq!(sylvester_resultant(&f, &g).unwrap(), by_hand);
    }

    #[test]
    fn rejects_non_binary() {
        let p = MultiPoly::var(3, 0).unwrap();
        assert!(sylvester_resultant(&p, &p).is_err());
        let inhom = &x(0) + &x(1).pow(2);
        assert!(sylvester_resultant(&inhom, &x(0)).is_err());
    }
}
