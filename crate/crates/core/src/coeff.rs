//! Exact coefficient domains.
//!
//! Everything in the crate is generic over [`Coefficient`], which is
//! implemented for arbitrary-precision integers and normalized rationals.
//! Nothing ever converts an integer value into a rational one implicitly;
//! crossing domains goes through [`to_rational`] or [`clear_denominators`].

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Integer = BigInt;
pub type Rational = BigRational;

/// An exact coefficient ring.
pub trait Coefficient:
    Clone
    + Debug
    + Display
    + PartialEq
    + Eq
    + Zero
    + One
    + std::ops::Neg<Output = Self>
    + std::ops::Add<Output = Self>
    + std::ops::Sub<Output = Self>
    + std::ops::Mul<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// Short domain tag used in reports (`"rational"` / `"integer"`).
    const DOMAIN: &'static str;

    fn from_i64(value: i64) -> Self;

    /// Whether the element is invertible in the ring.
    fn is_unit(&self) -> bool;

    /// Inverse of a unit, `None` otherwise.
    fn unit_inverse(&self) -> Option<Self>;

    /// Canonical representative modulo a non-zero modulus. Fields have no
    /// proper quotients, so the rational implementation returns zero.
    fn rem_euclid(&self, modulus: &Self) -> Self;

    /// The value as an integer, if it is one.
    fn to_integer(&self) -> Option<Integer>;

    fn from_integer(value: Integer) -> Self;

    fn as_rational(&self) -> Rational;
}

impl Coefficient for Integer {
    const DOMAIN: &'static str = "integer";

    fn from_i64(value: i64) -> Self {
        BigInt::from(value)
    }

    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }

    fn unit_inverse(&self) -> Option<Self> {
        self.is_unit().then(|| self.clone())
    }

    fn rem_euclid(&self, modulus: &Self) -> Self {
        self.mod_floor(&modulus.abs())
    }

    fn to_integer(&self) -> Option<Integer> {
        Some(self.clone())
    }

    fn from_integer(value: Integer) -> Self {
        value
    }

    fn as_rational(&self) -> Rational {
        BigRational::from_integer(self.clone())
    }
}

impl Coefficient for Rational {
    const DOMAIN: &'static str = "rational";

    fn from_i64(value: i64) -> Self {
        BigRational::from_integer(BigInt::from(value))
    }

    fn is_unit(&self) -> bool {
        !self.is_zero()
    }

    fn unit_inverse(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }

    fn rem_euclid(&self, _modulus: &Self) -> Self {
        Rational::zero()
    }

    fn to_integer(&self) -> Option<Integer> {
        self.is_integer().then(|| BigRational::to_integer(self))
    }

    fn from_integer(value: Integer) -> Self {
        BigRational::from_integer(value)
    }

    fn as_rational(&self) -> Rational {
        self.clone()
    }
}

pub fn rational(numer: i64, denom: i64) -> Rational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn to_rational(value: &Integer) -> Rational {
    BigRational::from_integer(value.clone())
}

/// Scales a list of rationals by the least common multiple of their
/// denominators and divides out the content, yielding a primitive integer
/// vector with the same span. The sign is left as is.
pub fn clear_denominators<'a, I>(values: I) -> Vec<Integer>
where
    I: IntoIterator<Item = &'a Rational>,
{
    let values: Vec<&Rational> = values.into_iter().collect();
    let lcm = values
        .iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let scaled: Vec<BigInt> = values
        .iter()
        .map(|v| v.numer() * (&lcm / v.denom()))
        .collect();
    let content = scaled
        .iter()
        .fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if content.is_zero() {
        return scaled;
    }
    scaled.into_iter().map(|v| v / &content).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_are_normalized() {
        let r = rational(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
    }

    #[test]
    fn integer_units() {
        assert!(Integer::from(-1).is_unit());
        assert!(!Integer::from(2).is_unit());
        assert_eq!(Integer::from(2).unit_inverse(), None);
        assert_eq!(Integer::from(-7).rem_euclid(&Integer::from(3)), Integer::from(2));
    }

    #[test]
    fn clearing_denominators_is_primitive() {
        let v = [rational(1, 2), rational(-3, 4), rational(0, 1)];
        let out = clear_denominators(v.iter());
        assert_eq!(out, vec![Integer::from(2), Integer::from(-3), Integer::from(0)]);
    }
}
