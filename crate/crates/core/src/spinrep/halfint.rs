use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use crate::error::Error;
use crate::scalar::Real;

/// An exact half-integer, stored as twice its value.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct HalfInt {
    twice: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { twice: 0 };
    pub const HALF: HalfInt = HalfInt { twice: 1 };

    /// The half-integer `twice / 2`.
    #[inline]
    pub const fn from_twice(twice: i64) -> Self {
        HalfInt { twice }
    }

    #[inline]
    pub const fn int(i: i64) -> Self {
        HalfInt { twice: 2 * i }
    }

    #[inline]
    pub const fn twice(self) -> i64 {
        self.twice
    }

    #[inline]
    pub const fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    /// `self - other` when it is an integer.
    pub fn int_diff(self, other: HalfInt) -> Option<i64> {
        let d = self.twice - other.twice;
        (d % 2 == 0).then_some(d / 2)
    }

    /// Integer value, if any.
    pub fn as_int(self) -> Option<i64> {
        self.is_integer().then_some(self.twice / 2)
    }

    pub fn abs(self) -> Self {
        HalfInt { twice: self.twice.abs() }
    }

    #[inline]
    pub fn value<R: Real>(self) -> R {
        R::of(self.twice) / R::lit(2.0)
    }

    pub fn to_f64(self) -> f64 {
        self.twice as f64 / 2.0
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, o: HalfInt) -> HalfInt {
        HalfInt { twice: self.twice + o.twice }
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, o: HalfInt) -> HalfInt {
        HalfInt { twice: self.twice - o.twice }
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt { twice: -self.twice }
    }
}

impl From<i64> for HalfInt {
    fn from(i: i64) -> Self {
        HalfInt::int(i)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

impl FromStr for HalfInt {
    type Err = Error;

    /// Accepts `"3"`, `"-3/2"` or `"1.5"`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let bad = || Error::Contract(format!("not a half-integer: {s:?}"));
        if let Some((num, den)) = s.split_once('/') {
            let num: i64 = num.trim().parse().map_err(|_| bad())?;
            return match den.trim() {
                "2" => Ok(HalfInt::from_twice(num)),
                "1" => Ok(HalfInt::int(num)),
                _ => Err(bad()),
            };
        }
        if let Ok(i) = s.parse::<i64>() {
            return Ok(HalfInt::int(i));
        }
        let x: f64 = s.parse().map_err(|_| bad())?;
        let t = 2.0 * x;
        if t.fract() != 0.0 || !t.is_finite() {
            return Err(bad());
        }
        Ok(HalfInt::from_twice(t as i64))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = HalfInt::from_twice(3);
        let b = HalfInt::from_twice(-1);
        assert_eq!(a - b, HalfInt::int(2));
        assert_eq!(a.int_diff(b), Some(2));
        assert_eq!(a.int_diff(HalfInt::int(1)), None);
        assert_eq!((-a).to_string(), "-3/2");
        assert_eq!(HalfInt::int(4).to_string(), "4");
        assert_eq!(a.value::<f64>(), 1.5);
    }

    #[test]
    fn parse() {
        assert_eq!("-3/2".parse::<HalfInt>().unwrap(), HalfInt::from_twice(-3));
        assert_eq!("2".parse::<HalfInt>().unwrap(), HalfInt::int(2));
        assert_eq!("2.5".parse::<HalfInt>().unwrap(), HalfInt::from_twice(5));
        assert!("0.3".parse::<HalfInt>().is_err());
        assert!("1/3".parse::<HalfInt>().is_err());
    }
}
