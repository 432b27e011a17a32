//! Exact rational scalars.

use alloc::format;
use alloc::string::{String, ToString};
use core::fmt;
use core::iter::{Product, Sum};
use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Scalar(BigRational);

impl Scalar {
    pub fn zero() -> Self {
        Scalar(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar(BigRational::one())
    }

    pub fn from_int<T: Into<BigInt>>(v: T) -> Self {
        Scalar(BigRational::from_integer(v.into()))
    }

    /// `num / den`, reduced. Fails on a zero denominator.
    pub fn new<N: Into<BigInt>, D: Into<BigInt>>(num: N, den: D) -> Result<Self> {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar(BigRational::new(num.into(), den)))
    }

    /// Shorthand for small literal fractions; panics on a zero denominator.
    pub fn frac(num: i64, den: i64) -> Self {
        Self::new(num, den).expect("nonzero denominator")
    }

    pub fn from_rational(r: BigRational) -> Self {
        Scalar(r)
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Scalar(self.0.abs())
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar(&self.0 / &rhs.0))
    }

    pub fn recip(&self) -> Result<Scalar> {
        Scalar::one().checked_div(self)
    }

    /// `self^exp` with `0^0 = 1`.
    pub fn pow(&self, exp: u64) -> Scalar {
        let mut base = self.clone();
        let mut exp = exp;
        let mut acc = Scalar::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact square root when `self` is the square of a rational.
    pub fn sqrt_exact(&self) -> Option<Scalar> {
        if self.is_negative() {
            return None;
        }
        let n = self.numer().sqrt();
        let d = self.denom().sqrt();
        if &(&n * &n) == self.numer() && &(&d * &d) == self.denom() {
            Some(Scalar(BigRational::new(n, d)))
        } else {
            None
        }
    }

    /// Least common multiple of the denominators of `values` (1 for none).
    pub fn denominator_lcm<'a, I: IntoIterator<Item = &'a Scalar>>(values: I) -> BigInt {
        values
            .into_iter()
            .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `"num"` for integers, `"num/den"` otherwise.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for Scalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse_int = |t: &str| -> Result<BigInt> {
            let t = t.trim();
            let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::Parse(format!("invalid integer {t:?}")));
            }
            t.parse::<BigInt>()
                .map_err(|e| Error::Parse(format!("invalid integer {t:?}: {e}")))
        };
        match s.split_once('/') {
            Some((n, d)) => Scalar::new(parse_int(n)?, parse_int(d)?)
                .map_err(|_| Error::Parse(format!("zero denominator in {s:?}"))),
            None => Ok(Scalar::from_int(parse_int(s)?)),
        }
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Scalar::from_int(v)
    }
}

impl From<i32> for Scalar {
    fn from(v: i32) -> Self {
        Scalar::from_int(v)
    }
}

impl From<BigInt> for Scalar {
    fn from(v: BigInt) -> Self {
        Scalar::from_int(v)
    }
}

impl From<Scalar> for String {
    fn from(v: Scalar) -> String {
        v.to_string()
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar($tr::$method(&self.0, &rhs.0))
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar($tr::$method(self.0, rhs.0))
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar($tr::$method(self.0, &rhs.0))
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar($tr::$method(&self.0, rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
// Panics on a zero divisor, like the integer types; see `checked_div`.
forward_binop!(Div, div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        self.0 *= &rhs.0;
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-self.0)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-&self.0)
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::one()
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Self {
        iter.fold(Scalar::zero(), |acc, v| acc + v)
    }
}

impl Product for Scalar {
    fn product<I: Iterator<Item = Scalar>>(iter: I) -> Self {
        iter.fold(Scalar::one(), |acc, v| acc * v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn lowest_terms() {
        let s = Scalar::new(6, -4).unwrap();
        assert_eq!(s.to_string(), "-3/2");
        assert_eq!(Scalar::new(0, 7).unwrap().to_string(), "0");
        assert_eq!(Scalar::new(0, 7).unwrap().denom(), &BigInt::one());
        assert!(Scalar::new(1, 0).is_err());
    }

    #[test]
    fn parse_rejects_garbage() {
        for bad in ["", "1/", "/2", "1/0", "x", "1.5", "--3", "1/2/3"] {
            assert!(bad.parse::<Scalar>().is_err(), "{bad:?}");
        }
        assert_eq!("-12/8".parse::<Scalar>().unwrap(), Scalar::frac(-3, 2));
        assert_eq!("+7".parse::<Scalar>().unwrap(), Scalar::from(7));
    }

    #[test]
    fn big_values_survive_parse() {
        let big = Scalar::from(3).pow(200) / Scalar::from(2).pow(90);
        let back: Scalar = big.to_string().parse().unwrap();
        assert_eq!(back, big);
    }

    #[test]
    fn pow_and_sqrt() {
        assert_eq!(Scalar::zero().pow(0), Scalar::one());
        assert_eq!(Scalar::frac(-2, 3).pow(3), Scalar::frac(-8, 27));
        assert_eq!(Scalar::frac(9, 4).sqrt_exact(), Some(Scalar::frac(3, 2)));
        assert_eq!(Scalar::frac(2, 1).sqrt_exact(), None);
        assert_eq!(Scalar::frac(-4, 1).sqrt_exact(), None);
    }

    proptest! {
        #[test]
        fn string_round_trip(n in any::<i64>(), d in 1i64..i64::MAX, e in 0u64..6) {
            let s = Scalar::new(n, d).unwrap().pow(e);
            let back: Scalar = s.to_string().parse().unwrap();
            prop_assert_eq!(back, s);
        }

        #[test]
        fn field_axioms(a in -50i64..50, b in 1i64..50, c in -50i64..50, d in 1i64..50) {
            let x = Scalar::new(a, b).unwrap();
            let y = Scalar::new(c, d).unwrap();
            prop_assert_eq!(&(&x + &y) - &y, x.clone());
            if !y.is_zero() {
                prop_assert_eq!(&(&x * &y) / &y, x.clone());
            }
        }
    }
}
