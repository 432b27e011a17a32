//! Arithmetic in `Q[λ]/(λ² − δ)`.
//!
//! The element `a + bλ` is stored with its radicand `δ`. The arithmetic is
//! formal: it is correct whether or not `δ` happens to be a rational square,
//! which is what the sign-vector product needs. [`QuadExt::is_zero`] is only
//! a field test when `δ` is not a square.

use alloc::format;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadExt {
    rational: Scalar,
    radical: Scalar,
    radicand: Scalar,
}

impl QuadExt {
    pub fn new(rational: Scalar, radical: Scalar, radicand: Scalar) -> Self {
        QuadExt {
            rational,
            radical,
            radicand,
        }
    }

    /// Embeds a rational with the given radicand.
    pub fn rational(value: Scalar, radicand: Scalar) -> Self {
        QuadExt::new(value, Scalar::zero(), radicand)
    }

    pub fn zero(radicand: Scalar) -> Self {
        QuadExt::rational(Scalar::zero(), radicand)
    }

    pub fn one(radicand: Scalar) -> Self {
        QuadExt::rational(Scalar::one(), radicand)
    }

    /// `λ` itself.
    pub fn lambda(radicand: Scalar) -> Self {
        QuadExt::new(Scalar::zero(), Scalar::one(), radicand)
    }

    pub fn rational_part(&self) -> &Scalar {
        &self.rational
    }

    pub fn radical_part(&self) -> &Scalar {
        &self.radical
    }

    pub fn radicand(&self) -> &Scalar {
        &self.radicand
    }

    pub fn is_rational(&self) -> bool {
        self.radical.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.radical.is_zero()
    }

    pub fn to_rational(&self) -> Option<Scalar> {
        self.is_rational().then(|| self.rational.clone())
    }

    /// `λ → −λ`.
    pub fn conjugate(&self) -> QuadExt {
        QuadExt::new(self.rational.clone(), -&self.radical, self.radicand.clone())
    }

    /// `a² − δb²`, the product with the conjugate.
    pub fn norm(&self) -> Scalar {
        &self.rational * &self.rational - &self.radicand * &(&self.radical * &self.radical)
    }

    fn check(&self, rhs: &QuadExt) -> Result<()> {
        if self.radicand != rhs.radicand {
            return Err(Error::MixedRadicands);
        }
        Ok(())
    }

    pub fn add(&self, rhs: &QuadExt) -> Result<QuadExt> {
        self.check(rhs)?;
        Ok(QuadExt::new(
            &self.rational + &rhs.rational,
            &self.radical + &rhs.radical,
            self.radicand.clone(),
        ))
    }

    pub fn sub(&self, rhs: &QuadExt) -> Result<QuadExt> {
        self.check(rhs)?;
        Ok(QuadExt::new(
            &self.rational - &rhs.rational,
            &self.radical - &rhs.radical,
            self.radicand.clone(),
        ))
    }

    pub fn mul(&self, rhs: &QuadExt) -> Result<QuadExt> {
        self.check(rhs)?;
        let (a, b) = (&self.rational, &self.radical);
        let (c, d) = (&rhs.rational, &rhs.radical);
        Ok(QuadExt::new(
            a * c + &self.radicand * &(b * d),
            a * d + b * c,
            self.radicand.clone(),
        ))
    }

    pub fn scale(&self, k: &Scalar) -> QuadExt {
        QuadExt::new(&self.rational * k, &self.radical * k, self.radicand.clone())
    }

    pub fn pow(&self, exp: u64) -> QuadExt {
        let mut base = self.clone();
        let mut exp = exp;
        let mut acc = QuadExt::one(self.radicand.clone());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base).expect("same radicand");
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base).expect("same radicand");
            }
        }
        acc
    }
}

/// Product of a list of extension elements sharing one radicand.
///
/// The empty product is `1` in `Q` (radicand 0).
pub fn quad_product(factors: &[QuadExt]) -> Result<QuadExt> {
    let Some(first) = factors.first() else {
        return Ok(QuadExt::one(Scalar::zero()));
    };
    factors
        .iter()
        .try_fold(QuadExt::one(first.radicand.clone()), |acc, f| acc.mul(f))
}

impl fmt::Debug for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [λ²={}]", self, self.radicand)
    }
}

/// `"a"`, `"b*sqrt(δ)"` or `"a+b*sqrt(δ)"` (with `-` when `b < 0`).
impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.radical.is_zero() {
            return write!(f, "{}", self.rational);
        }
        if !self.rational.is_zero() {
            write!(f, "{}", self.rational)?;
            if !self.radical.is_negative() {
                f.write_str("+")?;
            }
        }
        write!(f, "{}*sqrt({})", self.radical, self.radicand)
    }
}

impl QuadExt {
    /// Parses the [`Display`](fmt::Display) form. A purely rational string
    /// takes `default_radicand`.
    pub fn parse_with(s: &str, default_radicand: &Scalar) -> Result<QuadExt> {
        let s = s.trim();
        let Some(open) = s.find("*sqrt(") else {
            let r = Scalar::from_str(s)?;
            return Ok(QuadExt::rational(r, default_radicand.clone()));
        };
        let close = s
            .strip_suffix(')')
            .ok_or_else(|| Error::Parse(format!("unterminated sqrt in {s:?}")))?;
        let radicand = Scalar::from_str(&close[open + "*sqrt(".len()..])?;
        let head = &s[..open];
        // The split between rational and radical parts is the last sign that
        // is not at the start.
        let split = head
            .char_indices()
            .filter(|&(i, c)| (c == '+' || c == '-') && i > 0)
            .map(|(i, _)| i)
            .next_back();
        let (rational, radical) = match split {
            Some(i) => {
                let radical = head[i..].strip_prefix('+').unwrap_or(&head[i..]);
                (Scalar::from_str(&head[..i])?, Scalar::from_str(radical)?)
            }
            None => (Scalar::zero(), Scalar::from_str(head)?),
        };
        Ok(QuadExt::new(rational, radical, radicand))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;
    use alloc::vec::Vec;
    use proptest::prelude::*;

    fn q(a: i64, b: i64, d: i64) -> QuadExt {
        QuadExt::new(a.into(), b.into(), d.into())
    }

    #[test]
    fn identity_product() {
        for d in [-3, 0, 2, 5] {
            let ones = vec![QuadExt::one(d.into()); 8];
            assert_eq!(
                quad_product(&ones).unwrap().to_rational(),
                Some(Scalar::one())
            );
        }
    }

    #[test]
    fn lambda_squared_is_radicand() {
        let l = QuadExt::lambda(5.into());
        assert_eq!(quad_product(&[l.clone(), l]).unwrap(), q(5, 0, 5));
    }

    #[test]
    fn conjugate_pair_is_norm() {
        // δ = A² − B with A = 2, B = 1
        let delta = Scalar::from(3);
        let p = quad_product(&[
            QuadExt::new(1.into(), 1.into(), delta.clone()),
            QuadExt::new(1.into(), (-1).into(), delta.clone()),
        ])
        .unwrap();
        assert_eq!(p.to_rational(), Some(Scalar::one() - delta));
    }

    #[test]
    fn mixed_radicands_rejected() {
        assert_eq!(
            quad_product(&[q(1, 1, 2), q(1, 1, 3)]),
            Err(Error::MixedRadicands)
        );
    }

    #[test]
    fn display_forms() {
        assert_eq!(q(3, 0, 7).to_string(), "3");
        assert_eq!(q(0, -2, 7).to_string(), "-2*sqrt(7)");
        let half = QuadExt::new(Scalar::frac(-1, 2), Scalar::frac(-1, 2), (-3).into());
        assert_eq!(half.to_string(), "-1/2-1/2*sqrt(-3)");
        assert_eq!(
            QuadExt::parse_with(&half.to_string(), &Scalar::zero()).unwrap(),
            half
        );
    }

    proptest! {
        #[test]
        fn sign_symmetric_product_is_rational(
            pairs in proptest::collection::vec((-20i64..20, -20i64..20), 1..6),
            d in -10i64..10,
        ) {
            let mut factors = Vec::new();
            for (a, b) in pairs {
                let f = q(a, b, d);
                factors.push(f.conjugate());
                factors.push(f);
            }
            let p = quad_product(&factors).unwrap();
            prop_assert!(p.is_rational());
        }

        #[test]
        fn product_order_independent(
            xs in proptest::collection::vec((-9i64..9, -9i64..9), 1..6),
            d in -10i64..10,
        ) {
            let fs: Vec<_> = xs.iter().map(|&(a, b)| q(a, b, d)).collect();
            let mut rev = fs.clone();
            rev.reverse();
            prop_assert_eq!(quad_product(&fs).unwrap(), quad_product(&rev).unwrap());
        }

        #[test]
        fn display_round_trip(a in -99i64..99, an in 1i64..9, b in -99i64..99, bn in 1i64..9, d in -30i64..30) {
            let x = QuadExt::new(Scalar::frac(a, an), Scalar::frac(b, bn), d.into());
            let back = QuadExt::parse_with(&x.to_string(), &Scalar::from(d)).unwrap();
            prop_assert_eq!(back, x);
        }
    }
}
