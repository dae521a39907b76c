//! Exact rational coefficients and symmetric q-numbers.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An exact rational number kept in lowest terms with a positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ExactScalar(BigRational);

impl ExactScalar {
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        ExactScalar(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn from_integer(value: i64) -> Self {
        ExactScalar(BigRational::from_integer(BigInt::from(value)))
    }

    pub fn zero() -> Self {
        ExactScalar(BigRational::zero())
    }

    pub fn one() -> Self {
        ExactScalar(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(ExactScalar(self.0.recip()))
        }
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn pow(&self, exp: i32) -> Self {
        if exp >= 0 {
            let mut acc = ExactScalar::one();
            for _ in 0..exp {
                acc = &acc * self;
            }
            acc
        } else {
            self.recip().expect("negative power of zero").pow(-exp)
        }
    }

    pub fn abs(&self) -> Self {
        ExactScalar(self.0.abs())
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }
}

impl From<i64> for ExactScalar {
    fn from(v: i64) -> Self {
        ExactScalar::from_integer(v)
    }
}

impl From<BigRational> for ExactScalar {
    fn from(v: BigRational) -> Self {
        ExactScalar(v)
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for ExactScalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("not a rational literal: {s:?}"));
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let valid = |t: &str| {
            let digits = t.strip_prefix('-').unwrap_or(t);
            !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
        };
        if !valid(num) || !valid(den) || den.starts_with('-') {
            return Err(bad());
        }
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        Ok(ExactScalar(BigRational::new(num, den)))
    }
}

impl Serialize for ExactScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ExactScalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $op:tt) => {
        impl $tr<&ExactScalar> for &ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: &ExactScalar) -> ExactScalar {
                ExactScalar(&self.0 $op &rhs.0)
            }
        }
        impl $tr<ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: ExactScalar) -> ExactScalar {
                ExactScalar(self.0 $op rhs.0)
            }
        }
        impl $tr<&ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: &ExactScalar) -> ExactScalar {
                ExactScalar(self.0 $op &rhs.0)
            }
        }
        impl $tr<ExactScalar> for &ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: ExactScalar) -> ExactScalar {
                ExactScalar(&self.0 $op rhs.0)
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);
binop!(Div, div, /);

impl AddAssign<&ExactScalar> for ExactScalar {
    fn add_assign(&mut self, rhs: &ExactScalar) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&ExactScalar> for ExactScalar {
    fn sub_assign(&mut self, rhs: &ExactScalar) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&ExactScalar> for ExactScalar {
    fn mul_assign(&mut self, rhs: &ExactScalar) {
        self.0 *= &rhs.0;
    }
}

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar(-self.0)
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar(-&self.0)
    }
}

impl Sum for ExactScalar {
    fn sum<I: Iterator<Item = ExactScalar>>(iter: I) -> Self {
        iter.fold(ExactScalar::zero(), |acc, x| acc + x)
    }
}

impl Product for ExactScalar {
    fn product<I: Iterator<Item = ExactScalar>>(iter: I) -> Self {
        iter.fold(ExactScalar::one(), |acc, x| acc * x)
    }
}

/// The deformation parameter `q`, guaranteed nonzero.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct DeformationParam(ExactScalar);

impl DeformationParam {
    pub fn new(q: ExactScalar) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::InvalidParameter("q must be nonzero".into()));
        }
        Ok(DeformationParam(q))
    }

    pub fn value(&self) -> &ExactScalar {
        &self.0
    }

    pub fn inv(&self) -> ExactScalar {
        self.0.recip().expect("q is nonzero")
    }

    pub fn pow(&self, exp: i32) -> ExactScalar {
        self.0.pow(exp)
    }

    /// Symmetric q-number `j_q = q^{j-1} + q^{j-3} + ... + q^{1-j}`.
    pub fn q_number(&self, j: usize) -> ExactScalar {
        let j = j as i32;
        (0..j).map(|t| self.pow(j - 1 - 2 * t)).sum()
    }

    /// `true` iff `k_q != 0` for every `k` in `1..=j`.
    pub fn is_admissible(&self, j: usize) -> bool {
        (1..=j).all(|k| !self.q_number(k).is_zero())
    }

    /// Returns `Err(NotAdmissible)` unless `j` is q-admissible.
    pub fn require_admissible(&self, j: usize) -> Result<()> {
        if self.is_admissible(j) {
            Ok(())
        } else {
            Err(Error::NotAdmissible(j))
        }
    }
}

impl fmt::Display for DeformationParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Free-function form of [`DeformationParam::q_number`] taking a raw scalar.
pub fn q_number(j: usize, q: &ExactScalar) -> Result<ExactScalar> {
    Ok(DeformationParam::new(q.clone())?.q_number(j))
}

pub fn is_q_admissible(j: usize, q: &ExactScalar) -> Result<bool> {
    Ok(DeformationParam::new(q.clone())?.is_admissible(j))
}
