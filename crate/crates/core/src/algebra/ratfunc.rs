//! Reduced fractions over the integer polynomial carriers.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::laurent::IntLaurent;
use super::ring::{Field, Ring};
use super::zpoly::ZPoly;
use crate::error::{Error, Result};

/// Polynomial ring with exact division and a GCD, enough to keep fractions
/// in lowest terms.
pub trait GcdRing: Ring {
    fn gcd(&self, other: &Self) -> Self;
    fn div_exact(&self, other: &Self) -> Option<Self>;
    /// Moves units between numerator and denominator so the pair is canonical.
    fn normalize_units(num: Self, den: Self) -> (Self, Self);
}

impl GcdRing for ZPoly {
    fn gcd(&self, other: &Self) -> Self {
        ZPoly::gcd(self, other)
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        ZPoly::div_exact(self, other)
    }
    fn normalize_units(num: Self, den: Self) -> (Self, Self) {
        if den.leading() < 0 {
            (-num, -den)
        } else {
            (num, den)
        }
    }
}

impl GcdRing for IntLaurent {
    fn gcd(&self, other: &Self) -> Self {
        let (_, a) = self.to_poly_parts();
        let (_, b) = other.to_poly_parts();
        IntLaurent::from_poly(&a.gcd(&b), 0)
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        IntLaurent::div_exact(self, other)
    }
    fn normalize_units(num: Self, den: Self) -> (Self, Self) {
        let low = den.min_exp().unwrap_or(0);
        let (num, den) = (num.shift(-low), den.shift(-low));
        let top = den.max_exp().map(|e| den.coeff(e)).unwrap_or(1);
        if top < 0 {
            (-num, -den)
        } else {
            (num, den)
        }
    }
}

/// `num / den` in lowest terms: common factors and content cancelled, and
/// the denominator's leading coefficient positive. Two equal fractions have
/// identical fields.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc<P> {
    num: P,
    den: P,
}

impl<P: GcdRing> RatFunc<P> {
    pub fn new(num: P, den: P) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self {
                num,
                den: P::one(),
            });
        }
        let g = num.gcd(&den);
        let num = num.div_exact(&g).expect("gcd divides numerator");
        let den = den.div_exact(&g).expect("gcd divides denominator");
        let (num, den) = P::normalize_units(num, den);
        Ok(Self { num, den })
    }

    pub fn from_poly(p: P) -> Self {
        Self::new(p, P::one()).unwrap()
    }

    pub fn num(&self) -> &P {
        &self.num
    }

    pub fn den(&self) -> &P {
        &self.den
    }

    /// The polynomial this fraction equals, if the denominator is a unit.
    pub fn as_poly(&self) -> Option<P> {
        self.num.div_exact(&self.den)
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.recip()?)
    }
}

impl<P: GcdRing> From<P> for RatFunc<P> {
    fn from(p: P) -> Self {
        Self::from_poly(p)
    }
}

impl<P: GcdRing + fmt::Display> fmt::Display for RatFunc<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl<P: GcdRing + fmt::Display> fmt::Debug for RatFunc<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl<'a, P: GcdRing> Add<&'a RatFunc<P>> for &'a RatFunc<P> {
    type Output = RatFunc<P>;
    fn add(self, rhs: &'a RatFunc<P>) -> RatFunc<P> {
        let num = self.num.clone() * rhs.den.clone() + rhs.num.clone() * self.den.clone();
        RatFunc::new(num, self.den.clone() * rhs.den.clone()).unwrap()
    }
}

impl<'a, P: GcdRing> Sub<&'a RatFunc<P>> for &'a RatFunc<P> {
    type Output = RatFunc<P>;
    fn sub(self, rhs: &'a RatFunc<P>) -> RatFunc<P> {
        let num = self.num.clone() * rhs.den.clone() - rhs.num.clone() * self.den.clone();
        RatFunc::new(num, self.den.clone() * rhs.den.clone()).unwrap()
    }
}

impl<'a, P: GcdRing> Mul<&'a RatFunc<P>> for &'a RatFunc<P> {
    type Output = RatFunc<P>;
    fn mul(self, rhs: &'a RatFunc<P>) -> RatFunc<P> {
        RatFunc::new(
            self.num.clone() * rhs.num.clone(),
            self.den.clone() * rhs.den.clone(),
        )
        .unwrap()
    }
}

impl<P: GcdRing> Neg for &RatFunc<P> {
    type Output = RatFunc<P>;
    fn neg(self) -> RatFunc<P> {
        RatFunc {
            num: -self.num.clone(),
            den: self.den.clone(),
        }
    }
}

impl<P: GcdRing> Add for RatFunc<P> {
    type Output = RatFunc<P>;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<P: GcdRing> Sub for RatFunc<P> {
    type Output = RatFunc<P>;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl<P: GcdRing> Mul for RatFunc<P> {
    type Output = RatFunc<P>;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<P: GcdRing> Neg for RatFunc<P> {
    type Output = RatFunc<P>;
    fn neg(self) -> Self {
        -&self
    }
}

impl<P: GcdRing + fmt::Display> Ring for RatFunc<P> {
    fn zero() -> Self {
        Self::from_poly(P::zero())
    }
    fn one() -> Self {
        Self::from_poly(P::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<P: GcdRing + fmt::Display> Field for RatFunc<P> {
    fn inv(&self) -> Option<Self> {
        self.recip().ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_cancels_common_factor_and_content() {
        // (2z^2 - 2) / (4z + 4) = (z - 1) / 2
        let a = ZPoly::from_coeffs(vec![-2, 0, 2]);
        let b = ZPoly::from_coeffs(vec![4, 4]);
        let r = RatFunc::new(a, b).unwrap();
        assert_eq!(r.num(), &ZPoly::from_coeffs(vec![-1, 1]));
        assert_eq!(r.den(), &ZPoly::constant(2));
    }

    #[test]
    fn denominator_sign_is_positive() {
        let r = RatFunc::new(ZPoly::constant(1), ZPoly::from_coeffs(vec![1, -1])).unwrap();
        assert_eq!(r.num(), &ZPoly::constant(-1));
        assert_eq!(r.den(), &ZPoly::from_coeffs(vec![-1, 1]));
    }

    #[test]
    fn nested_fraction_example() {
        // 1/(z - 1/z) = z/(z^2-1)
        let z = RatFunc::from_poly(ZPoly::x());
        let inner = &z - &z.recip().unwrap();
        let r = inner.recip().unwrap();
        assert_eq!(r, RatFunc::new(ZPoly::x(), ZPoly::from_coeffs(vec![-1, 0, 1])).unwrap());
    }

    #[test]
    fn laurent_units_are_absorbed() {
        // q^-1 / (q^2 + q) = q^-2 / (q + 1)
        let r = RatFunc::new(
            IntLaurent::monomial(1, -1),
            IntLaurent::from_terms([(2, 1), (1, 1)]),
        )
        .unwrap();
        assert_eq!(r.num(), &IntLaurent::monomial(1, -2));
        assert_eq!(r.den(), &IntLaurent::from_terms([(1, 1), (0, 1)]));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            RatFunc::new(ZPoly::one(), ZPoly::zero()).unwrap_err(),
            Error::ZeroDenominator
        );
    }
}
