use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Neg, Sub};

/// An exact half-integer, stored as twice its value.
///
/// Quantities such as `d/2 - s1(F)/2` and `(3 s1(F) - s1)/2` live here so that
/// comparisons and the final floor are exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct HalfInt {
    doubled: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { doubled: 0 };

    pub const fn from_doubled(doubled: i64) -> Self {
        HalfInt { doubled }
    }

    pub const fn from_int(value: i64) -> Self {
        HalfInt { doubled: 2 * value }
    }

    /// `value / 2`.
    pub const fn half(value: i64) -> Self {
        HalfInt { doubled: value }
    }

    pub const fn doubled(self) -> i64 {
        self.doubled
    }

    pub const fn is_integer(self) -> bool {
        self.doubled % 2 == 0
    }

    pub const fn floor(self) -> i64 {
        self.doubled.div_euclid(2)
    }

    pub const fn ceil(self) -> i64 {
        -(-self.doubled).div_euclid(2)
    }
}

impl From<i64> for HalfInt {
    fn from(value: i64) -> Self {
        HalfInt::from_int(value)
    }
}

impl Ord for HalfInt {
    fn cmp(&self, other: &Self) -> Ordering {
        self.doubled.cmp(&other.doubled)
    }
}

impl PartialOrd for HalfInt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl PartialEq<i64> for HalfInt {
    fn eq(&self, other: &i64) -> bool {
        self.doubled == 2 * other
    }
}

impl PartialOrd<i64> for HalfInt {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        Some(self.doubled.cmp(&(2 * other)))
    }
}

impl PartialEq<HalfInt> for i64 {
    fn eq(&self, other: &HalfInt) -> bool {
        2 * self == other.doubled
    }
}

impl PartialOrd<HalfInt> for i64 {
    fn partial_cmp(&self, other: &HalfInt) -> Option<Ordering> {
        Some((2 * self).cmp(&other.doubled))
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_doubled(self.doubled + rhs.doubled)
    }
}

impl Add<i64> for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: i64) -> HalfInt {
        HalfInt::from_doubled(self.doubled + 2 * rhs)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_doubled(self.doubled - rhs.doubled)
    }
}

impl Sub<i64> for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: i64) -> HalfInt {
        HalfInt::from_doubled(self.doubled - 2 * rhs)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt::from_doubled(-self.doubled)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.doubled / 2)
        } else {
            write!(f, "{}/2", self.doubled)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floor_and_ceil_follow_sign() {
        assert_eq!(HalfInt::half(7).floor(), 3);
        assert_eq!(HalfInt::half(-7).floor(), -4);
        assert_eq!(HalfInt::half(-7).ceil(), -3);
        assert_eq!(HalfInt::half(8).floor(), 4);
        assert_eq!(HalfInt::half(-8).ceil(), -4);
    }

    #[test]
    fn mixed_comparisons() {
        assert!(HalfInt::half(5) < 3);
        assert!(HalfInt::half(5) > 2);
        assert!(3 > HalfInt::half(5));
        assert_eq!(HalfInt::half(6), 3);
        assert_eq!(HalfInt::half(3) + HalfInt::half(1), 2);
        assert_eq!((HalfInt::half(9) - 1).to_string(), "7/2");
    }
}
