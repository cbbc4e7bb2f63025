//! Exact rationals for the step-function gates of the overlap formulas.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// `numerator / denominator` with a strictly positive denominator.
///
/// Not reduced; equality and ordering are by value.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ExactRatio {
    numerator: i128,
    denominator: i128,
}

impl ExactRatio {
    pub fn new(numerator: i128, denominator: i128) -> Result<Self> {
        match denominator.cmp(&0) {
            Ordering::Greater => Ok(ExactRatio {
                numerator,
                denominator,
            }),
            Ordering::Less => {
                let overflow = || Error::Overflow("ExactRatio::new");
                Ok(ExactRatio {
                    numerator: numerator.checked_neg().ok_or_else(overflow)?,
                    denominator: denominator.checked_neg().ok_or_else(overflow)?,
                })
            }
            Ordering::Equal => Err(Error::Domain("zero denominator".into())),
        }
    }

    pub fn from_integer(value: i128) -> Self {
        ExactRatio {
            numerator: value,
            denominator: 1,
        }
    }

    pub fn numerator(&self) -> i128 {
        self.numerator
    }

    pub fn denominator(&self) -> i128 {
        self.denominator
    }

    pub fn signum(&self) -> Ordering {
        self.numerator.cmp(&0)
    }

    pub fn floor(&self) -> i128 {
        self.numerator.div_euclid(self.denominator)
    }

    pub fn ceil(&self) -> i128 {
        let q = self.numerator.div_euclid(self.denominator);
        if q * self.denominator == self.numerator {
            q
        } else {
            q + 1
        }
    }

    pub fn heaviside(&self) -> Heaviside {
        heaviside(*self)
    }
}

impl PartialEq for ExactRatio {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for ExactRatio {}

impl PartialOrd for ExactRatio {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExactRatio {
    /// Cross-multiplies when that fits in `i128`; otherwise compares
    /// continued-fraction expansions, which never overflows.
    fn cmp(&self, other: &Self) -> Ordering {
        if let (Some(lhs), Some(rhs)) = (
            self.numerator.checked_mul(other.denominator),
            other.numerator.checked_mul(self.denominator),
        ) {
            return lhs.cmp(&rhs);
        }
        let (mut a_num, mut a_den) = (self.numerator, self.denominator);
        let (mut b_num, mut b_den) = (other.numerator, other.denominator);
        let mut flipped = false;
        loop {
            let (qa, ra) = (a_num.div_euclid(a_den), a_num.rem_euclid(a_den));
            let (qb, rb) = (b_num.div_euclid(b_den), b_num.rem_euclid(b_den));
            let ord = match qa.cmp(&qb) {
                Ordering::Equal => match (ra == 0, rb == 0) {
                    (true, true) => Ordering::Equal,
                    (true, false) => Ordering::Less,
                    (false, true) => Ordering::Greater,
                    (false, false) => {
                        // a = qa + ra/a_den; compare reciprocals of the fractional parts
                        (a_num, a_den, b_num, b_den) = (a_den, ra, b_den, rb);
                        flipped = !flipped;
                        continue;
                    }
                },
                ord => ord,
            };
            return if flipped { ord.reverse() } else { ord };
        }
    }
}

impl fmt::Display for ExactRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

/// Value of the unit step: 0 below zero, one half at zero, 1 above.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Heaviside {
    Zero,
    Half,
    One,
}

impl Heaviside {
    pub fn as_ratio(self) -> ExactRatio {
        match self {
            Heaviside::Zero => ExactRatio::from_integer(0),
            Heaviside::Half => ExactRatio {
                numerator: 1,
                denominator: 2,
            },
            Heaviside::One => ExactRatio::from_integer(1),
        }
    }
}

pub fn heaviside(z: ExactRatio) -> Heaviside {
    match z.signum() {
        Ordering::Less => Heaviside::Zero,
        Ordering::Equal => Heaviside::Half,
        Ordering::Greater => Heaviside::One,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i128, d: i128) -> ExactRatio {
        ExactRatio::new(n, d).unwrap()
    }

    #[test]
    fn heaviside_examples() {
        assert_eq!(heaviside(r(1, 2)), Heaviside::One);
        assert_eq!(heaviside(r(0, 1)), Heaviside::Half);
        assert_eq!(heaviside(r(-1, 3)), Heaviside::Zero);
        assert_eq!(heaviside(r(1, -3)), Heaviside::Zero);
        assert_eq!(Heaviside::Half.as_ratio(), r(2, 4));
    }

    #[test]
    fn floor_and_ceil() {
        assert_eq!((r(7, 2).floor(), r(7, 2).ceil()), (3, 4));
        assert_eq!((r(-7, 2).floor(), r(-7, 2).ceil()), (-4, -3));
        assert_eq!((r(6, 3).floor(), r(6, 3).ceil()), (2, 2));
        assert_eq!((r(-6, 3).floor(), r(-6, 3).ceil()), (-2, -2));
        assert_eq!((r(1, -2).floor(), r(1, -2).ceil()), (-1, 0));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(ExactRatio::new(1, 0).is_err());
        assert!(ExactRatio::new(i128::MIN, -1).is_err());
    }

    #[test]
    fn ordering_without_overflow() {
        let big = i128::MAX / 3;
        assert!(r(big, big - 1) < r(big - 1, big - 2));
        assert_eq!(r(big, big).cmp(&r(1, 1)), Ordering::Equal);
        assert!(r(-big, big - 1) < r(-big + 1, big));
    }

    proptest! {
        #[test]
        fn cmp_matches_cross_multiplication(a in -1000i128..1000, b in 1i128..1000,
                                     c in -1000i128..1000, d in 1i128..1000) {
            let lhs = r(a, b);
            let rhs = r(c, d);
            prop_assert_eq!(lhs.cmp(&rhs), (a * d).cmp(&(c * b)));
        }

        #[test]
        fn continued_fraction_path_agrees(a in -10_000i128..10_000, b in 1i128..10_000,
                                          c in -10_000i128..10_000, d in 1i128..10_000,
                                          s in 1i128..(1i128 << 100)) {
            // scaling both sides pushes cross products past i128
            let lhs = r(a * s, b * s);
            let rhs = r(c * s, d * s);
            prop_assert_eq!(lhs.cmp(&rhs), (a * d).cmp(&(c * b)));
        }

        #[test]
        fn floor_ceil_bracket(a in -100_000i128..100_000, b in 1i128..1000) {
            let x = r(a, b);
            prop_assert!(x.floor() * b <= a && a < (x.floor() + 1) * b);
            prop_assert!((x.ceil() - 1) * b < a && a <= x.ceil() * b);
        }
    }
}
