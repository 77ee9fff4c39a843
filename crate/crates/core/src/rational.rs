//! Exact rational scalar used for every coordinate and matrix entry.
//!
//! Backed by `num_rational::Ratio<i128>`, which keeps values reduced with a
//! positive denominator. Parsed inputs are limited to the `i64` range so that
//! the sums and small products the geometry needs stay far from `i128`
//! overflow.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::ParseError;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(Ratio<i128>);

impl Rational {
    pub const ZERO: Rational = Rational(Ratio::new_raw(0, 1));
    pub const ONE: Rational = Rational(Ratio::new_raw(1, 1));

    /// Builds `numer / denom` in lowest terms.
    ///
    /// Panics if `denom == 0`.
    pub fn new(numer: i128, denom: i128) -> Self {
        Rational(Ratio::new(numer, denom))
    }

    pub fn from_int(n: i64) -> Self {
        Rational(Ratio::from_integer(n as i128))
    }

    pub fn numer(&self) -> i128 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i128 {
        *self.0.denom()
    }

    pub fn abs(self) -> Self {
        Rational(self.0.abs())
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

    pub fn signum(&self) -> i32 {
        match self.0.cmp(&Ratio::zero()) {
            Ordering::Less => -1,
            Ordering::Equal => 0,
            Ordering::Greater => 1,
        }
    }

    pub fn max(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }

    pub fn min(self, other: Self) -> Self {
        if other < self {
            other
        } else {
            self
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.numer() as f64 / self.denom() as f64
    }

    /// Always `n/d`, including integers (`3/1`). Used by the JSON export.
    pub fn to_fraction_string(&self) -> String {
        format!("{}/{}", self.numer(), self.denom())
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
    }
}

impl From<i32> for Rational {
    fn from(n: i32) -> Self {
        Rational::from_int(n as i64)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_int(s: &str) -> Result<i64, ParseError> {
    s.parse::<i64>()
        .map_err(|_| ParseError::new(format!("invalid rational {s:?}")))
}

impl FromStr for Rational {
    type Err = ParseError;

    /// Accepts `-3`, `5/2`, `+7`, and the unicode minus sign.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let cleaned = s.trim().replace('\u{2212}', "-");
        if cleaned.is_empty() {
            return Err(ParseError::new("empty rational"));
        }
        match cleaned.split_once('/') {
            None => Ok(Rational::from_int(parse_int(&cleaned)?)),
            Some((n, d)) => {
                let n = parse_int(n.trim())?;
                let d = parse_int(d.trim())?;
                if d == 0 {
                    return Err(ParseError::new(format!("zero denominator in {s:?}")));
                }
                Ok(Rational::new(n as i128, d as i128))
            }
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_fraction_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Text(String),
            Int(i64),
        }
        match Repr::deserialize(deserializer)? {
            Repr::Text(s) => s.parse().map_err(serde::de::Error::custom),
            Repr::Int(n) => Ok(Rational::from_int(n)),
        }
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        Rational(self.0 + rhs.0)
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        Rational(self.0 - rhs.0)
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        Rational(self.0 * rhs.0)
    }
}

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        Rational(self.0 / rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl AddAssign for Rational {
    fn add_assign(&mut self, rhs: Rational) {
        self.0 += rhs.0;
    }
}

impl SubAssign for Rational {
    fn sub_assign(&mut self, rhs: Rational) {
        self.0 -= rhs.0;
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::ZERO, |acc, x| acc + x)
    }
}

/// Shorthand for integer rationals in tests and tables.
pub fn r(n: i64) -> Rational {
    Rational::from_int(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_sign() {
        let x = Rational::new(6, -4);
        assert_eq!(x.numer(), -3);
        assert_eq!(x.denom(), 2);
        assert_eq!(x.to_string(), "-3/2");
        assert_eq!(r(-3).to_string(), "-3");
        assert_eq!(r(-3).to_fraction_string(), "-3/1");
    }

    #[test]
    fn parse_forms() {
        assert_eq!("5/2".parse::<Rational>().unwrap(), Rational::new(5, 2));
        assert_eq!(" -3 ".parse::<Rational>().unwrap(), r(-3));
        assert_eq!("\u{2212}4".parse::<Rational>().unwrap(), r(-4));
        assert_eq!("10/-4".parse::<Rational>().unwrap(), Rational::new(-5, 2));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("abc".parse::<Rational>().is_err());
        assert!("".parse::<Rational>().is_err());
        assert!("99999999999999999999".parse::<Rational>().is_err());
    }

    #[test]
    fn serde_uses_fraction_strings() {
        let s = serde_json::to_string(&Rational::new(-7, 3)).unwrap();
        assert_eq!(s, "\"-7/3\"");
        let back: Rational = serde_json::from_str(&s).unwrap();
        assert_eq!(back, Rational::new(-7, 3));
        let from_int: Rational = serde_json::from_str("4").unwrap();
        assert_eq!(from_int, r(4));
    }

    #[test]
    fn exact_comparisons() {
        assert!(Rational::new(1, 3) < Rational::new(34, 100));
        assert_eq!(r(2).max(r(-5)), r(2));
        assert_eq!(Rational::new(-1, 2).abs(), Rational::new(1, 2));
        assert_eq!(Rational::new(-1, 2).signum(), -1);
    }
}
