//! Exact rationals for slopes, stability parameters and bounds.
//!
//! A thin wrapper around [`num_rational::Ratio<i64>`], which keeps values in
//! lowest terms with a positive denominator. The wrapper fixes the textual
//! form used everywhere in output: `a/b`, or a bare integer when `b = 1`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::Error;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(Ratio<i64>);

impl Rational {
    pub const ZERO: Rational = Rational(Ratio::new_raw(0, 1));

    /// Panics if `denom` is zero.
    pub fn new(numer: i64, denom: i64) -> Self {
        Rational(Ratio::new(numer, denom))
    }

    pub fn integer(n: i64) -> Self {
        Rational(Ratio::from_integer(n))
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    /// Always positive.
    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn floor(&self) -> i64 {
        Integer::div_floor(&self.numer(), &self.denom())
    }

    pub fn ceil(&self) -> i64 {
        -Integer::div_floor(&-self.numer(), &self.denom())
    }

    /// Lossy, for display and plotting only.
    pub fn to_f64(&self) -> f64 {
        self.numer() as f64 / self.denom() as f64
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::integer(n)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom() == 1 {
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

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `n` or `a/b` with `b > 0`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || Error::Parse {
            what: "rational",
            input: s.to_string(),
        };
        let s = s.trim();
        match s.split_once('/') {
            None => s.parse::<i64>().map(Rational::integer).map_err(|_| err()),
            Some((a, b)) => {
                let a: i64 = a.trim().parse().map_err(|_| err())?;
                let b: i64 = b.trim().parse().map_err(|_| err())?;
                if b <= 0 {
                    return Err(err());
                }
                Ok(Rational::new(a, b))
            }
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }

        impl $trait<i64> for Rational {
            type Output = Rational;
            fn $method(self, rhs: i64) -> Rational {
                Rational(self.0.$method(Ratio::from_integer(rhs)))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl PartialEq<i64> for Rational {
    fn eq(&self, other: &i64) -> bool {
        self.0 == Ratio::from_integer(*other)
    }
}

impl PartialOrd<i64> for Rational {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        self.0.partial_cmp(&Ratio::from_integer(*other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_display() {
        let r = Rational::new(6, -4);
        assert_eq!((r.numer(), r.denom()), (-3, 2));
        assert_eq!(r.to_string(), "-3/2");
        assert_eq!(Rational::new(8, 4).to_string(), "2");
        assert_eq!(Rational::ZERO.to_string(), "0");
    }

    #[test]
    fn parse() {
        assert_eq!("3/2".parse::<Rational>().unwrap(), Rational::new(3, 2));
        assert_eq!("-7".parse::<Rational>().unwrap(), Rational::integer(-7));
        assert_eq!("4/6".parse::<Rational>().unwrap(), Rational::new(2, 3));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("1/-2".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
    }

    #[test]
    fn floor_ceil() {
        let r = Rational::new(-7, 2);
        assert_eq!((r.floor(), r.ceil()), (-4, -3));
        let r = Rational::new(7, 2);
        assert_eq!((r.floor(), r.ceil()), (3, 4));
        assert_eq!((Rational::integer(5).floor(), Rational::integer(5).ceil()), (5, 5));
    }
}
