use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

/// Integer coefficient type used by every polynomial carrier.
///
/// All arithmetic on coefficients is checked; an overflow panics instead of
/// wrapping, so a result is either exact or absent.
pub type Coeff = i128;

#[inline]
pub(crate) fn cadd(a: Coeff, b: Coeff) -> Coeff {
    a.checked_add(b).expect("coefficient overflow in addition")
}

#[inline]
pub(crate) fn cmul(a: Coeff, b: Coeff) -> Coeff {
    a.checked_mul(b).expect("coefficient overflow in multiplication")
}

#[inline]
pub(crate) fn cneg(a: Coeff) -> Coeff {
    a.checked_neg().expect("coefficient overflow in negation")
}

/// Commutative ring with identity.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    fn inv(&self) -> Option<Self>;
}

impl Ring for Coeff {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
}

impl Ring for num_rational::BigRational {
    fn zero() -> Self {
        num_traits::Zero::zero()
    }
    fn one() -> Self {
        num_traits::One::one()
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
}

impl Field for num_rational::BigRational {
    fn inv(&self) -> Option<Self> {
        (!Ring::is_zero(self)).then(|| num_traits::Inv::inv(self.clone()))
    }
}
