use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::prime::MODULAR_PRIME;
use super::{Field, FieldSpec, PrimeField};
use crate::error::{Error, Result};

/// The rational numbers with arbitrary-precision numerator and denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RationalField;

impl Field for RationalField {
    type Elem = BigRational;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rational
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_rational(&self, r: &BigRational) -> Result<BigRational> {
        Ok(r.clone())
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn inv(&self, a: &BigRational) -> Result<BigRational> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(a.recip())
    }

    fn sub_mul_assign(&self, a: &mut BigRational, b: &BigRational, c: &BigRational) {
        *a -= b * c;
    }

    fn generator(&self) -> Option<BigRational> {
        None
    }

    fn root_of_unity(&self, k: u64) -> Option<BigRational> {
        match k {
            1 => Some(self.one()),
            2 => Some(-self.one()),
            _ => None,
        }
    }

    fn as_rational(&self, a: &BigRational) -> Option<BigRational> {
        Some(a.clone())
    }

    fn modular_image(&self) -> Option<PrimeField> {
        PrimeField::new(MODULAR_PRIME).ok()
    }

    fn reduce_mod(&self, a: &BigRational, target: &PrimeField) -> Option<u64> {
        target.from_rational(a).ok()
    }

    fn format(&self, a: &BigRational) -> String {
        format_rational(a)
    }
}

pub(crate) fn format_rational(a: &BigRational) -> String {
    if a.denom().is_one() {
        a.numer().to_string()
    } else if a.is_negative() {
        format!("-{}/{}", a.numer().abs(), a.denom())
    } else {
        format!("{}/{}", a.numer(), a.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_of_two() {
        let q = RationalField;
        let two = q.from_i64(2);
        assert_eq!(q.format(&q.inv(&two).unwrap()), "1/2");
        assert_eq!(q.inv(&q.zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn roots_of_unity_in_q() {
        let q = RationalField;
        assert_eq!(q.root_of_unity(2), Some(q.from_i64(-1)));
        assert_eq!(q.root_of_unity(3), None);
    }
}
