//! Exact half-integer coordinates.
//!
//! Every weight that occurs for the three rank one families lives in
//! `(1/2)Z^d`. Vectors store doubled integer coordinates so addition and
//! integer scaling stay in `i64`; inner products are returned as exact
//! rationals.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{Signed, Zero};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Rational = Ratio<i64>;

/// A number in `(1/2)Z`, stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct HalfInt(i64);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);
    pub const HALF: HalfInt = HalfInt(1);
    pub const ONE: HalfInt = HalfInt(2);

    pub const fn from_doubled(doubled: i64) -> Self {
        HalfInt(doubled)
    }

    pub const fn from_int(value: i64) -> Self {
        HalfInt(2 * value)
    }

    pub const fn doubled(self) -> i64 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn abs(self) -> Self {
        HalfInt(self.0.abs())
    }

    /// Integer value if the number is integral.
    pub fn to_int(self) -> Option<i64> {
        self.is_integer().then_some(self.0 / 2)
    }

    pub fn to_rational(self) -> Rational {
        Rational::new(self.0, 2)
    }

    pub fn from_rational(r: Rational) -> Result<Self> {
        let doubled = r * 2;
        if doubled.is_integer() {
            Ok(HalfInt(doubled.to_integer()))
        } else {
            Err(Error::NotHalfIntegral(format_rational(&r)))
        }
    }

    pub fn checked_mul(self, other: HalfInt) -> Result<HalfInt> {
        HalfInt::from_rational(self.to_rational() * other.to_rational())
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 + rhs.0)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 - rhs.0)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt(-self.0)
    }
}

impl Mul<i64> for HalfInt {
    type Output = HalfInt;
    fn mul(self, rhs: i64) -> HalfInt {
        HalfInt(self.0 * rhs)
    }
}

impl AddAssign for HalfInt {
    fn add_assign(&mut self, rhs: HalfInt) {
        self.0 += rhs.0;
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl FromStr for HalfInt {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let r = parse_rational(s)?;
        HalfInt::from_rational(r)
    }
}

impl Serialize for HalfInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self.to_int() {
            Some(v) => serializer.serialize_i64(v),
            None => serializer.serialize_str(&self.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for HalfInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct HalfIntVisitor;

        impl Visitor<'_> for HalfIntVisitor {
            type Value = HalfInt;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an integer or a string of the form \"a/2\"")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<HalfInt, E> {
                Ok(HalfInt::from_int(v))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<HalfInt, E> {
                i64::try_from(v)
                    .map(HalfInt::from_int)
                    .map_err(|_| E::custom("integer out of range"))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<HalfInt, E> {
                v.parse().map_err(E::custom)
            }
        }

        deserializer.deserialize_any(HalfIntVisitor)
    }
}

/// Parses `"p"`, `"-p"` or `"p/q"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::InvalidInput(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((num, den)) => {
            let num: i64 = num.trim().parse().map_err(|_| bad())?;
            let den: i64 = den.trim().parse().map_err(|_| bad())?;
            if den == 0 {
                return Err(bad());
            }
            Ok(Rational::new(num, den))
        }
        None => s
            .parse::<i64>()
            .map(Rational::from_integer)
            .map_err(|_| bad()),
    }
}

pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Serde adapter writing a rational as an integer or a `"p/q"` string.
pub mod rational_serde {
    use super::*;

    pub fn serialize<S: Serializer>(
        r: &Rational,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        if r.is_integer() {
            serializer.serialize_i64(r.to_integer())
        } else {
            serializer.serialize_str(&format_rational(r))
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Rational, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Text(String),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Int(v) => Ok(Rational::from_integer(v)),
            Raw::Text(s) => parse_rational(&s).map_err(de::Error::custom),
        }
    }
}

/// A vector in `(1/2)Z^d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct HalfIntVec {
    doubled: Vec<i64>,
}

impl HalfIntVec {
    pub fn from_doubled(doubled: Vec<i64>) -> Self {
        HalfIntVec { doubled }
    }

    pub fn from_ints(values: &[i64]) -> Self {
        HalfIntVec {
            doubled: values.iter().map(|v| 2 * v).collect(),
        }
    }

    pub fn from_halfints(values: &[HalfInt]) -> Self {
        HalfIntVec {
            doubled: values.iter().map(|v| v.doubled()).collect(),
        }
    }

    pub fn from_rationals(values: &[Rational]) -> Result<Self> {
        values
            .iter()
            .map(|r| HalfInt::from_rational(*r).map(HalfInt::doubled))
            .collect::<Result<Vec<_>>>()
            .map(HalfIntVec::from_doubled)
    }

    pub fn zeros(dim: usize) -> Self {
        HalfIntVec {
            doubled: vec![0; dim],
        }
    }

    /// The standard basis vector `e_i` (zero based).
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = HalfIntVec::zeros(dim);
        v.doubled[i] = 2;
        v
    }

    pub fn dim(&self) -> usize {
        self.doubled.len()
    }

    pub fn doubled(&self) -> &[i64] {
        &self.doubled
    }

    pub fn get(&self, i: usize) -> HalfInt {
        HalfInt(self.doubled[i])
    }

    pub fn set(&mut self, i: usize, value: HalfInt) {
        self.doubled[i] = value.doubled();
    }

    pub fn coords(&self) -> Vec<HalfInt> {
        self.doubled.iter().map(|&d| HalfInt(d)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.doubled.iter().all(|&d| d == 0)
    }

    pub fn all_integral(&self) -> bool {
        self.doubled.iter().all(|d| d % 2 == 0)
    }

    pub fn all_strictly_half(&self) -> bool {
        self.doubled.iter().all(|d| d % 2 != 0)
    }

    fn check_dim(&self, other: &HalfIntVec) -> Result<()> {
        if self.dim() == other.dim() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            })
        }
    }

    pub fn try_add(&self, other: &HalfIntVec) -> Result<HalfIntVec> {
        self.check_dim(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn try_sub(&self, other: &HalfIntVec) -> Result<HalfIntVec> {
        self.check_dim(other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    fn zip_with(&self, other: &HalfIntVec, f: impl Fn(i64, i64) -> i64) -> HalfIntVec {
        HalfIntVec {
            doubled: self
                .doubled
                .iter()
                .zip(&other.doubled)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    pub fn scale_int(&self, k: i64) -> HalfIntVec {
        HalfIntVec {
            doubled: self.doubled.iter().map(|d| d * k).collect(),
        }
    }

    /// Scaling by a half-integer; fails when a coordinate leaves `(1/2)Z`.
    pub fn scale_half(&self, k: HalfInt) -> Result<HalfIntVec> {
        self.doubled
            .iter()
            .map(|&d| HalfInt(d).checked_mul(k).map(HalfInt::doubled))
            .collect::<Result<Vec<_>>>()
            .map(HalfIntVec::from_doubled)
    }

    /// Euclidean inner product.
    pub fn inner(&self, other: &HalfIntVec) -> Result<Rational> {
        self.check_dim(other)?;
        Ok(self.inner_unchecked(other))
    }

    pub(crate) fn inner_unchecked(&self, other: &HalfIntVec) -> Rational {
        let raw: i64 = self
            .doubled
            .iter()
            .zip(&other.doubled)
            .map(|(a, b)| a * b)
            .sum();
        Rational::new(raw, 4)
    }

    pub fn norm_sq(&self) -> Rational {
        self.inner_unchecked(self)
    }

    /// Reflection in the hyperplane orthogonal to `root`.
    pub fn reflect(&self, root: &HalfIntVec) -> Result<HalfIntVec> {
        self.check_dim(root)?;
        let coeff = self.inner_unchecked(root) * 2 / root.norm_sq();
        let shift = root.scale_rational(coeff)?;
        self.try_sub(&shift)
    }

    pub fn scale_rational(&self, k: Rational) -> Result<HalfIntVec> {
        let values: Vec<Rational> = self.coords().iter().map(|c| c.to_rational() * k).collect();
        HalfIntVec::from_rationals(&values)
    }

    /// Coordinates sorted by absolute value, largest first.
    pub fn abs_sorted_desc(&self) -> Vec<HalfInt> {
        let mut out: Vec<HalfInt> = self.coords().into_iter().map(HalfInt::abs).collect();
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    pub fn sorted_desc(&self) -> Vec<HalfInt> {
        let mut out = self.coords();
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }
}

impl PartialOrd for HalfIntVec {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on the doubled coordinates.
impl Ord for HalfIntVec {
    fn cmp(&self, other: &Self) -> Ordering {
        self.doubled.cmp(&other.doubled)
    }
}

impl Add for &HalfIntVec {
    type Output = HalfIntVec;
    fn add(self, rhs: &HalfIntVec) -> HalfIntVec {
        self.try_add(rhs)
            .expect("dimension mismatch in vector addition")
    }
}

impl Sub for &HalfIntVec {
    type Output = HalfIntVec;
    fn sub(self, rhs: &HalfIntVec) -> HalfIntVec {
        self.try_sub(rhs)
            .expect("dimension mismatch in vector subtraction")
    }
}

impl Neg for &HalfIntVec {
    type Output = HalfIntVec;
    fn neg(self) -> HalfIntVec {
        self.scale_int(-1)
    }
}

impl AddAssign<&HalfIntVec> for HalfIntVec {
    fn add_assign(&mut self, rhs: &HalfIntVec) {
        assert_eq!(self.dim(), rhs.dim(), "dimension mismatch");
        for (a, b) in self.doubled.iter_mut().zip(&rhs.doubled) {
            *a += b;
        }
    }
}

impl SubAssign<&HalfIntVec> for HalfIntVec {
    fn sub_assign(&mut self, rhs: &HalfIntVec) {
        assert_eq!(self.dim(), rhs.dim(), "dimension mismatch");
        for (a, b) in self.doubled.iter_mut().zip(&rhs.doubled) {
            *a -= b;
        }
    }
}

impl fmt::Display for HalfIntVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.coords().iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl Serialize for HalfIntVec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.coords().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for HalfIntVec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let coords = Vec::<HalfInt>::deserialize(deserializer)?;
        Ok(HalfIntVec::from_halfints(&coords))
    }
}

/// `<lambda, alpha^vee> = 2 <lambda, alpha> / <alpha, alpha>`.
pub fn coroot_pairing(lambda: &HalfIntVec, alpha: &HalfIntVec) -> Result<Rational> {
    let num = lambda.inner(alpha)?;
    let den = alpha.norm_sq();
    if den.is_zero() {
        return Err(Error::InvalidWeight("zero root".into()));
    }
    Ok(num * 2 / den)
}

pub fn rational_abs(r: Rational) -> Rational {
    r.abs()
}
