//! Arbitrary-precision rational scalar in canonical form.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

/// Exact rational number, always reduced with a positive denominator.
///
/// Parses from `"p/q"` or `"p"` (no decimals) and prints the same way.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rat(BigRational);

impl Rat {
    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    /// `p/q` from machine integers. Panics if `q == 0`.
    pub fn new(p: i64, q: i64) -> Self {
        Rat(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn from_int(p: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(p)))
    }

    /// `p/q` from big integers. Panics if `q == 0`.
    pub fn from_big(p: BigInt, q: BigInt) -> Self {
        Rat(BigRational::new(p, q))
    }

    pub fn from_big_int(p: BigInt) -> Self {
        Rat(BigRational::from_integer(p))
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

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// -1, 0 or +1.
    pub fn signum(&self) -> i8 {
        if self.0.is_zero() {
            0
        } else if self.0.is_positive() {
            1
        } else {
            -1
        }
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        Rat(self.0.recip())
    }

    /// Integer power, negative exponents allowed (panics on 0^-k).
    pub fn pow(&self, exp: i32) -> Self {
        if exp == 0 {
            return Rat::one();
        }
        let base = if exp < 0 { self.recip() } else { self.clone() };
        let mut acc = Rat::one();
        for _ in 0..exp.unsigned_abs() {
            acc *= &base;
        }
        acc
    }

    pub fn as_ratio(&self) -> &BigRational {
        &self.0
    }

    pub fn into_ratio(self) -> BigRational {
        self.0
    }

    /// Canonical-form check: reduced, positive denominator.
    pub fn is_canonical(&self) -> bool {
        use num_integer::Integer;
        self.0.denom().is_positive()
            && self.0.numer().gcd(self.0.denom()).is_one()
    }
}

impl From<BigRational> for Rat {
    fn from(r: BigRational) -> Self {
        Rat(r)
    }
}

impl From<i64> for Rat {
    fn from(p: i64) -> Self {
        Rat::from_int(p)
    }
}

impl From<BigInt> for Rat {
    fn from(p: BigInt) -> Self {
        Rat::from_big_int(p)
    }
}

/// `n!` as a big integer.
pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}

/// Binomial coefficient `C(n, k)` as a big integer (0 when `k > n`).
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
        impl<'a> $trait<&'a Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &'a Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
        impl<'a> $trait<Rat> for &'a Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
        impl<'a, 'b> $trait<&'b Rat> for &'a Rat {
            type Output = Rat;
            fn $method(self, rhs: &'b Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl AddAssign<&Rat> for Rat {
    fn add_assign(&mut self, rhs: &Rat) {
        self.0 += &rhs.0;
    }
}

impl AddAssign for Rat {
    fn add_assign(&mut self, rhs: Rat) {
        self.0 += rhs.0;
    }
}

impl SubAssign<&Rat> for Rat {
    fn sub_assign(&mut self, rhs: &Rat) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rat> for Rat {
    fn mul_assign(&mut self, rhs: &Rat) {
        self.0 *= &rhs.0;
    }
}

impl MulAssign for Rat {
    fn mul_assign(&mut self, rhs: Rat) {
        self.0 *= rhs.0;
    }
}

impl Sum for Rat {
    fn sum<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |acc, x| acc + x)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Error parsing a rational literal.
#[derive(Debug, Clone, thiserror::Error)]
#[error("invalid rational literal {input:?}: expected \"p\" or \"p/q\" with q != 0")]
pub struct ParseRatError {
    pub input: String,
}

impl FromStr for Rat {
    type Err = ParseRatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ParseRatError { input: s.to_owned() };
        let s = s.trim();
        match s.split_once('/') {
            None => {
                let p: BigInt = s.parse().map_err(|_| bad())?;
                Ok(Rat::from_big_int(p))
            }
            Some((ps, qs)) => {
                let p: BigInt = ps.trim().parse().map_err(|_| bad())?;
                let q: BigInt = qs.trim().parse().map_err(|_| bad())?;
                if q.is_zero() {
                    return Err(bad());
                }
                Ok(Rat::from_big(p, q))
            }
        }
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["0", "1", "-1", "3/4", "-3/4", "45/16"] {
            let r: Rat = s.parse().unwrap();
            assert_eq!(r.to_string(), s);
            assert!(r.is_canonical());
        }
    }

    #[test]
    fn parse_normalizes() {
        let r: Rat = "6/8".parse().unwrap();
        assert_eq!(r, Rat::new(3, 4));
        let r: Rat = "3/-4".parse().unwrap();
        assert_eq!(r, Rat::new(-3, 4));
        assert_eq!(r.to_string(), "-3/4");
    }

    #[test]
    fn parse_rejects_garbage() {
        for s in ["", "1.5", "1/0", "a/b", "1/2/3"] {
            assert!(s.parse::<Rat>().is_err(), "accepted {s:?}");
        }
    }

    #[test]
    fn arithmetic_is_canonical() {
        let a = Rat::new(1, 6);
        let b = Rat::new(1, 3);
        let s = &a + &b;
        assert_eq!(s, Rat::new(1, 2));
        assert!(s.is_canonical());
        assert_eq!((&a - &b).signum(), -1);
        assert_eq!((&a * &b), Rat::new(1, 18));
        assert_eq!((&a / &b), Rat::new(1, 2));
    }

    #[test]
    fn pow_and_recip() {
        let half = Rat::new(1, 2);
        assert_eq!(half.pow(3), Rat::new(1, 8));
        assert_eq!(half.pow(-2), Rat::from_int(4));
        assert_eq!(half.pow(0), Rat::one());
        assert_eq!(half.recip(), Rat::from_int(2));
    }

    #[test]
    fn factorial_binomial() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(binomial(6, 2), BigInt::from(15));
        assert_eq!(binomial(4, 0), BigInt::from(1));
        assert_eq!(binomial(3, 5), BigInt::from(0));
    }

    #[test]
    fn serde_as_string() {
        let r = Rat::new(-45, 16);
        let j = serde_json::to_string(&r).unwrap();
        assert_eq!(j, "\"-45/16\"");
        let back: Rat = serde_json::from_str(&j).unwrap();
        assert_eq!(back, r);
    }
}
