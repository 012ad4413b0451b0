//! Exact rational scalars, the ground field of every computation here.
//!
//! The field is ℚ with arbitrary-precision numerator and denominator, so rank,
//! invertibility and every certified identity are decided exactly rather than
//! up to a floating-point tolerance. Values are kept canonical at all times:
//! denominator positive, gcd(|numerator|, denominator) = 1.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An exact rational number in canonical form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Scalar(BigRational);

impl Scalar {
    pub fn zero() -> Self {
        Scalar(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar(BigRational::one())
    }

    /// Builds `numerator / denominator`, canonicalized. Fails on a zero denominator.
    pub fn new(numerator: BigInt, denominator: BigInt) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::Parse("denominator is zero".into()));
        }
        Ok(Scalar(BigRational::new(numerator, denominator)))
    }

    pub fn from_int(value: i64) -> Self {
        Scalar(BigRational::from_integer(BigInt::from(value)))
    }

    /// `p/q` from machine integers; panics on q = 0 (test and example helper).
    pub fn ratio(p: i64, q: i64) -> Self {
        Scalar::new(BigInt::from(p), BigInt::from(q)).expect("nonzero denominator")
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    /// Always positive in canonical form.
    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn abs(&self) -> Self {
        Scalar(self.0.abs())
    }

    /// Multiplicative inverse; fails on zero.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Parse("division by zero".into()));
        }
        Ok(Scalar(self.0.recip()))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parses `"p"` or `"p/q"`, with optional sign on either part; q must be nonzero.
impl FromStr for Scalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |what: &str| Error::Parse(format!("{what} in rational literal {s:?}"));
        match s.split_once('/') {
            None => {
                let n = BigInt::from_str(s).map_err(|_| bad("bad integer"))?;
                Ok(Scalar(BigRational::from_integer(n)))
            }
            Some((p, q)) => {
                let p = BigInt::from_str(p.trim()).map_err(|_| bad("bad numerator"))?;
                let q = BigInt::from_str(q.trim()).map_err(|_| bad("bad denominator"))?;
                if q.is_zero() {
                    return Err(bad("zero denominator"));
                }
                Ok(Scalar(BigRational::new(p, q)))
            }
        }
    }
}

// Fast paths for 0 and 1 skip the gcd work entirely; matrices here are full
// of identity and permutation blocks, so these cases dominate.
fn add_ref(a: &Scalar, b: &Scalar) -> Scalar {
    if a.is_zero() {
        b.clone()
    } else if b.is_zero() {
        a.clone()
    } else {
        Scalar(&a.0 + &b.0)
    }
}

fn sub_ref(a: &Scalar, b: &Scalar) -> Scalar {
    if b.is_zero() {
        a.clone()
    } else {
        Scalar(&a.0 - &b.0)
    }
}

fn mul_ref(a: &Scalar, b: &Scalar) -> Scalar {
    if a.is_zero() || b.is_zero() {
        Scalar::zero()
    } else if a.is_one() {
        b.clone()
    } else if b.is_one() {
        a.clone()
    } else {
        Scalar(&a.0 * &b.0)
    }
}

// Panics on a zero divisor, like integer division; use `inverse` for a checked path.
fn div_ref(a: &Scalar, b: &Scalar) -> Scalar {
    if b.is_one() {
        a.clone()
    } else {
        Scalar(&a.0 / &b.0)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $helper:ident) => {
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                $helper(&self, &rhs)
            }
        }
        impl $trait for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                $helper(self, rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                $helper(&self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);
forward_binop!(Div, div, div_ref);

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

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |a, b| a + b)
    }
}

impl Product for Scalar {
    fn product<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::one(), |a, b| a * b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;
    use proptest::prelude::*;

    fn canonical(s: &Scalar) -> bool {
        let num = s.numerator();
        let den = s.denominator();
        den > &BigInt::from(0) && num.abs().gcd(den).is_one() || num.is_zero() && den.is_one()
    }

    #[test]
    fn arithmetic_is_textbook_rational() {
        let a = Scalar::ratio(1, 2);
        let b = Scalar::ratio(1, 3);
        assert_eq!(&a + &b, Scalar::ratio(5, 6));
        assert_eq!(&a * &b, Scalar::ratio(1, 6));
        assert_eq!(&a - &b, Scalar::ratio(1, 6));
        assert_eq!(&a / &b, Scalar::ratio(3, 2));
    }

    #[test]
    fn canonical_form_on_construction() {
        let s = Scalar::ratio(-4, -6);
        assert_eq!(s, Scalar::ratio(2, 3));
        assert_eq!(s.to_string(), "2/3");
        let neg = Scalar::ratio(4, -6);
        assert_eq!(neg.to_string(), "-2/3");
        assert!(neg.denominator() > &BigInt::from(0));
    }

    #[test]
    fn parse_round_trip_and_rejects() {
        for text in ["0", "7", "-3", "1/2", "-5/3", " 9/12 "] {
            let s: Scalar = text.parse().unwrap();
            let again: Scalar = s.to_string().parse().unwrap();
            assert_eq!(s, again);
        }
        assert_eq!("9/12".parse::<Scalar>().unwrap().to_string(), "3/4");
        for text in ["1/0", "", "a", "1/2/3", "1.5"] {
            assert!(text.parse::<Scalar>().is_err(), "{text:?} should not parse");
        }
    }

    #[test]
    fn inverse_of_zero_fails() {
        assert!(Scalar::zero().inverse().is_err());
        assert_eq!(Scalar::ratio(3, 4).inverse().unwrap(), Scalar::ratio(4, 3));
    }

    proptest! {
        #[test]
        fn ops_preserve_canonical_form(p in -40i64..=40, q in 1i64..=12, r in -40i64..=40, s in 1i64..=12) {
            let a = Scalar::ratio(p, q);
            let b = Scalar::ratio(r, s);
            for v in [&a + &b, &a - &b, &a * &b, -&a] {
                prop_assert!(canonical(&v), "not canonical: {v}");
            }
            if !b.is_zero() {
                prop_assert!(canonical(&(&a / &b)));
            }
        }

        #[test]
        fn field_identities(p in -20i64..=20, q in 1i64..=9, r in -20i64..=20, s in 1i64..=9) {
            let a = Scalar::ratio(p, q);
            let b = Scalar::ratio(r, s);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.inverse().unwrap(), Scalar::one());
            }
        }
    }
}
