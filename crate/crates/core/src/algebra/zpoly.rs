//! Dense integer polynomials, used for polynomials in `z = q + q⁻¹` and for
//! ordinary polynomial arithmetic (GCD, exact division) under the Laurent
//! carrier.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::laurent::{render_terms, IntLaurent};
use super::ring::{cadd, cmul, cneg, Coeff, Ring};
use crate::error::Error;

/// `Σ c_k z^k` stored densely, ascending; trailing zeros are trimmed so the
/// last entry (if any) is the leading coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct ZPoly {
    coeffs: Vec<Coeff>,
}

impl ZPoly {
    pub fn from_coeffs(mut coeffs: Vec<Coeff>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn constant(c: Coeff) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The variable.
    pub fn x() -> Self {
        Self::from_coeffs(vec![0, 1])
    }

    pub fn monomial(c: Coeff, e: usize) -> Self {
        let mut v = vec![0; e + 1];
        v[e] = c;
        Self::from_coeffs(v)
    }

    pub fn coeffs(&self) -> &[Coeff] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Coeff {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Coeff {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn scale(&self, s: Coeff) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|&c| cmul(c, s)).collect())
    }

    /// Gcd of the coefficients, nonnegative.
    pub fn content(&self) -> Coeff {
        self.coeffs.iter().fold(0, |g: Coeff, &c| g.gcd(&c))
    }

    pub fn eval(&self, x: Coeff) -> Coeff {
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| cadd(cmul(acc, x), c))
    }

    /// Exact quotient, or `None` if `other` does not divide `self` over ℤ.
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        let db = other.degree()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let da = self.degree().unwrap();
        if da < db {
            return None;
        }
        let lb = other.leading();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0; da - db + 1];
        for k in (0..=da - db).rev() {
            let top = rem[k + db];
            if top == 0 {
                continue;
            }
            if top % lb != 0 {
                return None;
            }
            let c = top / lb;
            quot[k] = c;
            for (i, &b) in other.coeffs.iter().enumerate() {
                rem[k + i] = cadd(rem[k + i], cneg(cmul(c, b)));
            }
        }
        if rem.iter().any(|&c| c != 0) {
            return None;
        }
        Some(Self::from_coeffs(quot))
    }

    /// Greatest common divisor with positive leading coefficient, computed by
    /// a primitive pseudo-remainder sequence in arbitrary precision.
    pub fn gcd(&self, other: &Self) -> Self {
        let a = to_big(self);
        let b = to_big(other);
        let g = big_gcd(a, b);
        from_big(&g)
    }

    /// `p(q + q⁻¹)`.
    pub fn z_substitute(&self) -> IntLaurent {
        let z = IntLaurent::z();
        let mut acc = IntLaurent::zero();
        for &c in self.coeffs.iter().rev() {
            acc = &(&acc * &z) + &IntLaurent::constant(c);
        }
        acc
    }

    /// Inverse of [`ZPoly::z_substitute`] on palindromic Laurent polynomials.
    pub fn q_to_z(p: &IntLaurent) -> Result<Self, Error> {
        if !p.is_palindromic() {
            return Err(Error::NotSymmetric(p.to_string()));
        }
        let Some(top) = p.max_exp() else {
            return Ok(Self::zero());
        };
        let top = top as usize;
        let z = IntLaurent::z();
        let mut pows = vec![IntLaurent::one()];
        for k in 1..=top {
            pows.push(&pows[k - 1] * &z);
        }
        let mut rest = p.clone();
        let mut out = vec![0; top + 1];
        for d in (0..=top).rev() {
            let c = rest.coeff(d as i32);
            if c != 0 {
                out[d] = c;
                rest = &rest - &pows[d].scale(c);
            }
        }
        debug_assert!(rest.is_zero());
        Ok(Self::from_coeffs(out))
    }

    /// Expansion of `num/den` at infinity: the coefficients `c_0, c_1, …` of
    /// `z^{d}, z^{d-1}, …` with `d = deg num − deg den`. Needs a unit leading
    /// coefficient in `den` so the expansion stays integral.
    pub fn expand_at_infinity(num: &Self, den: &Self, count: usize) -> Option<Vec<Coeff>> {
        let dd = den.degree()?;
        let lc = den.leading();
        if lc != 1 && lc != -1 {
            return None;
        }
        if num.is_zero() {
            return Some(vec![0; count]);
        }
        // Work with reversed coefficient lists: series in w = 1/z.
        let nrev: Vec<Coeff> = num.coeffs.iter().rev().copied().collect();
        let drev: Vec<Coeff> = den.coeffs.iter().rev().copied().collect();
        let mut out = Vec::with_capacity(count);
        for k in 0..count {
            let mut s = nrev.get(k).copied().unwrap_or(0);
            for j in 1..=k.min(dd) {
                s = cadd(s, cneg(cmul(drev[j], out[k - j])));
            }
            out.push(s * lc);
        }
        Some(out)
    }

    pub fn render(&self, var: &str) -> String {
        render_terms(
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(i, &c)| (i as i32, c)),
            var,
        )
    }
}

fn to_big(p: &ZPoly) -> Vec<BigInt> {
    p.coeffs.iter().map(|&c| BigInt::from(c)).collect()
}

fn from_big(p: &[BigInt]) -> ZPoly {
    ZPoly::from_coeffs(
        p.iter()
            .map(|c| c.to_i128().expect("gcd coefficient exceeds i128"))
            .collect(),
    )
}

fn big_trim(p: &mut Vec<BigInt>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn big_content(p: &[BigInt]) -> BigInt {
    p.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn big_primitive(p: &[BigInt]) -> Vec<BigInt> {
    let c = big_content(p);
    if c.is_zero() || c.is_one() {
        return p.to_vec();
    }
    p.iter().map(|x| x / &c).collect()
}

/// Pseudo-remainder of `a` by `b` (b nonzero).
fn big_prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = b[db].clone();
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c *= &lb;
        }
        let shift = dr - db;
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] -= &lr * bc;
        }
        big_trim(&mut r);
    }
    r
}

fn big_gcd(mut a: Vec<BigInt>, mut b: Vec<BigInt>) -> Vec<BigInt> {
    big_trim(&mut a);
    big_trim(&mut b);
    if a.is_empty() {
        return normalize_sign(big_primitive(&b)).scaled(big_content(&b));
    }
    if b.is_empty() {
        return normalize_sign(big_primitive(&a)).scaled(big_content(&a));
    }
    let cont = big_content(&a).gcd(&big_content(&b));
    let mut a = big_primitive(&a);
    let mut b = big_primitive(&b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = big_prem(&a, &b);
        a = b;
        b = if r.is_empty() { r } else { big_primitive(&r) };
    }
    normalize_sign(a).scaled(cont)
}

trait Scaled {
    fn scaled(self, c: BigInt) -> Self;
}

impl Scaled for Vec<BigInt> {
    fn scaled(self, c: BigInt) -> Self {
        self.into_iter().map(|x| x * &c).collect()
    }
}

fn normalize_sign(p: Vec<BigInt>) -> Vec<BigInt> {
    if p.last().is_some_and(|c| c.is_negative()) {
        p.into_iter().map(|x| -x).collect()
    } else {
        p
    }
}

impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("z"))
    }
}

impl fmt::Debug for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ZPoly({})", self.render("z"))
    }
}

impl<'a> Add<&'a ZPoly> for &'a ZPoly {
    type Output = ZPoly;
    fn add(self, rhs: &'a ZPoly) -> ZPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        ZPoly::from_coeffs((0..n).map(|i| cadd(self.coeff(i), rhs.coeff(i))).collect())
    }
}

impl<'a> Sub<&'a ZPoly> for &'a ZPoly {
    type Output = ZPoly;
    fn sub(self, rhs: &'a ZPoly) -> ZPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        ZPoly::from_coeffs(
            (0..n)
                .map(|i| cadd(self.coeff(i), cneg(rhs.coeff(i))))
                .collect(),
        )
    }
}

impl<'a> Mul<&'a ZPoly> for &'a ZPoly {
    type Output = ZPoly;
    fn mul(self, rhs: &'a ZPoly) -> ZPoly {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return ZPoly::zero();
        }
        let mut out = vec![0; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = cadd(out[i + j], cmul(a, b));
            }
        }
        ZPoly::from_coeffs(out)
    }
}

impl Neg for &ZPoly {
    type Output = ZPoly;
    fn neg(self) -> ZPoly {
        ZPoly::from_coeffs(self.coeffs.iter().map(|&c| cneg(c)).collect())
    }
}

impl Add for ZPoly {
    type Output = ZPoly;
    fn add(self, rhs: ZPoly) -> ZPoly {
        &self + &rhs
    }
}

impl Sub for ZPoly {
    type Output = ZPoly;
    fn sub(self, rhs: ZPoly) -> ZPoly {
        &self - &rhs
    }
}

impl Mul for ZPoly {
    type Output = ZPoly;
    fn mul(self, rhs: ZPoly) -> ZPoly {
        &self * &rhs
    }
}

impl Neg for ZPoly {
    type Output = ZPoly;
    fn neg(self) -> ZPoly {
        -&self
    }
}

impl Ring for ZPoly {
    fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }
    fn one() -> Self {
        Self::constant(1)
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl From<Coeff> for ZPoly {
    fn from(c: Coeff) -> Self {
        Self::constant(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn substitute_z_squared_minus_one() {
        let p = ZPoly::from_coeffs(vec![-1, 0, 1]);
        let l = p.z_substitute();
        assert_eq!(l, IntLaurent::from_terms([(2, 1), (0, 1), (-2, 1)]));
        assert_eq!(ZPoly::q_to_z(&l).unwrap(), p);
    }

    #[test]
    fn asymmetric_input_is_rejected() {
        assert!(matches!(
            ZPoly::q_to_z(&IntLaurent::q()),
            Err(Error::NotSymmetric(_))
        ));
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (z-1)(z+2) and (z-1)(z-3)
        let a = ZPoly::from_coeffs(vec![-2, 1, 1]);
        let b = ZPoly::from_coeffs(vec![3, -4, 1]);
        assert_eq!(a.gcd(&b), ZPoly::from_coeffs(vec![-1, 1]));
        // contents combine
        assert_eq!(a.scale(6).gcd(&b.scale(4)), ZPoly::from_coeffs(vec![-2, 2]));
    }

    #[test]
    fn gcd_with_zero() {
        let a = ZPoly::from_coeffs(vec![2, -4]);
        assert_eq!(a.gcd(&ZPoly::zero()), ZPoly::from_coeffs(vec![-2, 4]));
    }

    #[test]
    fn division_rejects_nonintegral_quotient() {
        let a = ZPoly::from_coeffs(vec![1, 1]);
        let b = ZPoly::from_coeffs(vec![1, 2]);
        assert!(a.div_exact(&b).is_none());
    }

    #[test]
    fn expansion_at_infinity_of_one_over_z_minus_one() {
        // 1/(z-1) = z^-1 + z^-2 + ...
        let den = ZPoly::from_coeffs(vec![-1, 1]);
        let c = ZPoly::expand_at_infinity(&ZPoly::one(), &den, 4).unwrap();
        assert_eq!(c, vec![1, 1, 1, 1]);
    }
}
