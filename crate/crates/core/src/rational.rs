//! Exact rationals over 128-bit integers.
//!
//! Every operation is overflow-checked. The `checked_*` methods report
//! overflow as [`Error::Overflow`]; the operator impls panic instead, so an
//! overflowing computation aborts rather than silently wrapping.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// A reduced fraction `num / den` with `den > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ExactRational {
    num: i128,
    den: i128,
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl ExactRational {
    pub const ZERO: ExactRational = ExactRational { num: 0, den: 1 };
    pub const ONE: ExactRational = ExactRational { num: 1, den: 1 };

    pub fn new(num: i128, den: i128) -> Result<Self> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        if num == i128::MIN || den == i128::MIN {
            return Err(Error::Overflow("new"));
        }
        let g = gcd(num, den);
        let (mut num, mut den) = if g == 0 { (0, 1) } else { (num / g, den / g) };
        if den < 0 {
            num = -num;
            den = -den;
        }
        Ok(ExactRational { num, den })
    }

    pub const fn from_int(v: i128) -> Self {
        ExactRational { num: v, den: 1 }
    }

    pub fn numer(&self) -> i128 {
        self.num
    }

    pub fn denom(&self) -> i128 {
        self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    pub fn to_integer(&self) -> Option<i128> {
        self.is_integer().then_some(self.num)
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// Always `p/q`, including `p/1` for integers.
    pub fn to_fraction_string(&self) -> String {
        format!("{}/{}", self.num, self.den)
    }

    pub fn checked_add(self, rhs: Self) -> Result<Self> {
        // a/b + c/d = (a*(d/g) + c*(b/g)) / (b/g*d), g = gcd(b, d)
        let g = gcd(self.den, rhs.den);
        let lhs_scale = rhs.den / g;
        let rhs_scale = self.den / g;
        let a = self.num.checked_mul(lhs_scale).ok_or(Error::Overflow("add"))?;
        let c = rhs.num.checked_mul(rhs_scale).ok_or(Error::Overflow("add"))?;
        let num = a.checked_add(c).ok_or(Error::Overflow("add"))?;
        let den = self.den.checked_mul(lhs_scale).ok_or(Error::Overflow("add"))?;
        Self::new(num, den)
    }

    pub fn checked_sub(self, rhs: Self) -> Result<Self> {
        self.checked_add(rhs.checked_neg()?)
    }

    pub fn checked_neg(self) -> Result<Self> {
        Ok(ExactRational {
            num: self.num.checked_neg().ok_or(Error::Overflow("neg"))?,
            den: self.den,
        })
    }

    pub fn checked_mul(self, rhs: Self) -> Result<Self> {
        // cross-reduce first to keep intermediates small
        let g1 = gcd(self.num, rhs.den).max(1);
        let g2 = gcd(rhs.num, self.den).max(1);
        let num = (self.num / g1)
            .checked_mul(rhs.num / g2)
            .ok_or(Error::Overflow("mul"))?;
        let den = (self.den / g2)
            .checked_mul(rhs.den / g1)
            .ok_or(Error::Overflow("mul"))?;
        Self::new(num, den)
    }

    pub fn checked_div(self, rhs: Self) -> Result<Self> {
        if rhs.num == 0 {
            return Err(Error::DivisionByZero);
        }
        self.checked_mul(ExactRational::new(rhs.den, rhs.num)?)
    }
}

impl Default for ExactRational {
    fn default() -> Self {
        Self::ZERO
    }
}

impl From<i64> for ExactRational {
    fn from(v: i64) -> Self {
        Self::from_int(v as i128)
    }
}

impl From<u64> for ExactRational {
    fn from(v: u64) -> Self {
        Self::from_int(v as i128)
    }
}

impl From<i32> for ExactRational {
    fn from(v: i32) -> Self {
        Self::from_int(v as i128)
    }
}

macro_rules! panicking_op {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait for ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: ExactRational) -> ExactRational {
                match self.$checked(rhs) {
                    Ok(v) => v,
                    Err(e) => panic!("{e}"),
                }
            }
        }
    };
}

panicking_op!(Add, add, checked_add);
panicking_op!(Sub, sub, checked_sub);
panicking_op!(Mul, mul, checked_mul);
panicking_op!(Div, div, checked_div);

impl Neg for ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        self.checked_neg().expect("exact rational negation overflow")
    }
}

impl Ord for ExactRational {
    fn cmp(&self, other: &Self) -> Ordering {
        // denominators are positive, so cross-multiplication preserves order
        match (
            self.num.checked_mul(other.den),
            other.num.checked_mul(self.den),
        ) {
            (Some(a), Some(b)) => a.cmp(&b),
            _ => self.to_f64().total_cmp(&other.to_f64()),
        }
    }
}

impl PartialOrd for ExactRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Integers print bare; everything else as `p/q`.
impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl FromStr for ExactRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse = |t: &str| {
            t.trim()
                .parse::<i128>()
                .map_err(|e| Error::Parse(format!("bad rational {s:?}: {e}")))
        };
        match s.split_once('/') {
            Some((p, q)) => Self::new(parse(p)?, parse(q)?),
            None => Ok(Self::from_int(parse(s)?)),
        }
    }
}

impl Serialize for ExactRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_fraction_string())
    }
}

impl<'de> Deserialize<'de> for ExactRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
