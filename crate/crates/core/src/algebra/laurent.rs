//! Integer Laurent polynomials in one variable.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::ring::{cadd, cmul, cneg, Coeff, Ring};
use super::zpoly::ZPoly;

/// Sparse integer Laurent polynomial `Σ c_k q^k`, `k ∈ ℤ`.
///
/// Zero coefficients are never stored, so the empty map is the zero element
/// and structural equality is ring equality.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct IntLaurent {
    coeffs: BTreeMap<i32, Coeff>,
}

impl IntLaurent {
    pub fn new() -> Self {
        Self::default()
    }

    /// `c q^e`.
    pub fn monomial(c: Coeff, e: i32) -> Self {
        let mut p = Self::new();
        p.add_term(e, c);
        p
    }

    pub fn constant(c: Coeff) -> Self {
        Self::monomial(c, 0)
    }

    /// The variable `q`.
    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    /// `q + q⁻¹`.
    pub fn z() -> Self {
        Self::from_terms([(1, 1), (-1, 1)])
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, Coeff)>>(terms: I) -> Self {
        let mut p = Self::new();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, e: i32, c: Coeff) {
        if c == 0 {
            return;
        }
        let slot = self.coeffs.entry(e).or_insert(0);
        *slot = cadd(*slot, c);
        if *slot == 0 {
            self.coeffs.remove(&e);
        }
    }

    pub fn coeff(&self, e: i32) -> Coeff {
        self.coeffs.get(&e).copied().unwrap_or(0)
    }

    /// Nonzero terms `(exponent, coefficient)` in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, Coeff)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(&e, &c)| (e + k, c)).collect(),
        }
    }

    pub fn scale(&self, s: Coeff) -> Self {
        if s == 0 {
            return Self::new();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(&e, &c)| (e, cmul(c, s))).collect(),
        }
    }

    /// `p(q⁻¹)`.
    pub fn invert_var(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(&e, &c)| (-e, c)).collect(),
        }
    }

    /// `p(q^k)` for `k ≠ 0`.
    pub fn subs_pow(&self, k: i32) -> Self {
        assert!(k != 0, "substitution q -> q^0 collapses the ring");
        Self {
            coeffs: self.coeffs.iter().map(|(&e, &c)| (e * k, c)).collect(),
        }
    }

    /// Invariant under `q → q⁻¹`.
    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().all(|(&e, &c)| self.coeff(-e) == c)
    }

    /// Formal derivative; `d/dq q^k = k q^{k-1}` for every integer `k`.
    pub fn derivative(&self) -> Self {
        let mut out = Self::new();
        for (&e, &c) in &self.coeffs {
            out.add_term(e - 1, cmul(c, e as Coeff));
        }
        out
    }

    /// Splits `p = q^v · r` with `r` an ordinary polynomial with nonzero
    /// constant term. The zero polynomial maps to `(0, 0)`.
    pub fn to_poly_parts(&self) -> (i32, ZPoly) {
        let Some(v) = self.min_exp() else {
            return (0, ZPoly::zero());
        };
        let top = self.max_exp().unwrap();
        let mut dense = vec![0; (top - v) as usize + 1];
        for (&e, &c) in &self.coeffs {
            dense[(e - v) as usize] = c;
        }
        (v, ZPoly::from_coeffs(dense))
    }

    /// `q^shift · p(q)` for an ordinary polynomial `p`.
    pub fn from_poly(p: &ZPoly, shift: i32) -> Self {
        Self::from_terms(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(i, &c)| (i as i32 + shift, c)),
        )
    }

    /// Exact quotient by a monomial unit `±q^k`, or `None` when `other`
    /// is not a monomial dividing every coefficient.
    pub fn div_monomial(&self, other: &Self) -> Option<Self> {
        if !other.is_monomial() {
            return None;
        }
        let (e, c) = other.terms().next().unwrap();
        let mut out = Self::new();
        for (&k, &v) in &self.coeffs {
            if v % c != 0 {
                return None;
            }
            out.add_term(k - e, v / c);
        }
        Some(out)
    }

    /// Exact quotient in the Laurent ring, or `None` when not divisible.
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::new());
        }
        let (va, pa) = self.to_poly_parts();
        let (vb, pb) = other.to_poly_parts();
        let quot = pa.div_exact(&pb)?;
        Some(Self::from_poly(&quot, va - vb))
    }

    /// Evaluates at an integer point. Negative exponents are only allowed
    /// at the units `1` and `-1`; elsewhere `None`.
    pub fn eval_i128(&self, x: Coeff) -> Option<Coeff> {
        let mut acc: Coeff = 0;
        for (&e, &c) in &self.coeffs {
            if e < 0 && x.abs() != 1 {
                return None;
            }
            let pw = x.checked_pow(e.unsigned_abs())?;
            acc = acc.checked_add(c.checked_mul(pw)?)?;
        }
        Some(acc)
    }

    pub fn eval_rational(&self, x: &BigRational) -> Option<BigRational> {
        let mut acc = BigRational::zero();
        for (e, c) in self.terms() {
            acc += BigRational::from_integer(c.into()) * rational_pow(x, e)?;
        }
        Some(acc)
    }

    /// Canonical text in the variable `var`: ascending exponents, `c*q^e`.
    pub fn render(&self, var: &str) -> String {
        render_terms(self.terms(), var)
    }
}

pub(crate) fn render_terms<I: Iterator<Item = (i32, Coeff)>>(terms: I, var: &str) -> String {
    let mut out = String::new();
    for (e, c) in terms {
        let mag = c.unsigned_abs();
        if out.is_empty() {
            if c < 0 {
                out.push('-');
            }
        } else {
            out.push_str(if c < 0 { " - " } else { " + " });
        }
        let mono = match e {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{e}"),
        };
        if mono.is_empty() {
            out.push_str(&mag.to_string());
        } else if mag == 1 {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{mag}*{mono}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for IntLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("q"))
    }
}

impl fmt::Debug for IntLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntLaurent({})", self.render("q"))
    }
}

impl<'a> Add<&'a IntLaurent> for &'a IntLaurent {
    type Output = IntLaurent;
    fn add(self, rhs: &'a IntLaurent) -> IntLaurent {
        let mut out = self.clone();
        for (&e, &c) in &rhs.coeffs {
            out.add_term(e, c);
        }
        out
    }
}

impl<'a> Sub<&'a IntLaurent> for &'a IntLaurent {
    type Output = IntLaurent;
    fn sub(self, rhs: &'a IntLaurent) -> IntLaurent {
        let mut out = self.clone();
        for (&e, &c) in &rhs.coeffs {
            out.add_term(e, cneg(c));
        }
        out
    }
}

impl<'a> Mul<&'a IntLaurent> for &'a IntLaurent {
    type Output = IntLaurent;
    // exponents add under multiplication
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &'a IntLaurent) -> IntLaurent {
        let mut acc: BTreeMap<i32, Coeff> = BTreeMap::new();
        for (&e1, &c1) in &self.coeffs {
            for (&e2, &c2) in &rhs.coeffs {
                let slot = acc.entry(e1 + e2).or_insert(0);
                *slot = cadd(*slot, cmul(c1, c2));
            }
        }
        acc.retain(|_, c| *c != 0);
        IntLaurent { coeffs: acc }
    }
}

impl Neg for &IntLaurent {
    type Output = IntLaurent;
    fn neg(self) -> IntLaurent {
        IntLaurent {
            coeffs: self.coeffs.iter().map(|(&e, &c)| (e, cneg(c))).collect(),
        }
    }
}

impl Add for IntLaurent {
    type Output = IntLaurent;
    fn add(self, rhs: IntLaurent) -> IntLaurent {
        &self + &rhs
    }
}

impl Sub for IntLaurent {
    type Output = IntLaurent;
    fn sub(self, rhs: IntLaurent) -> IntLaurent {
        &self - &rhs
    }
}

impl Mul for IntLaurent {
    type Output = IntLaurent;
    fn mul(self, rhs: IntLaurent) -> IntLaurent {
        &self * &rhs
    }
}

impl Neg for IntLaurent {
    type Output = IntLaurent;
    fn neg(self) -> IntLaurent {
        -&self
    }
}

impl Ring for IntLaurent {
    fn zero() -> Self {
        Self::new()
    }
    fn one() -> Self {
        Self::constant(1)
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl From<Coeff> for IntLaurent {
    fn from(c: Coeff) -> Self {
        Self::constant(c)
    }
}

/// `x^e`; `None` for a negative power of zero.
pub(crate) fn rational_pow(x: &BigRational, e: i32) -> Option<BigRational> {
    if e < 0 && x.is_zero() {
        return None;
    }
    let p = num_traits::pow(x.clone(), e.unsigned_abs() as usize);
    Some(if e < 0 { p.recip() } else { p })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_is_empty_and_cancellation_removes_terms() {
        let p = IntLaurent::z();
        let d = &p - &p;
        assert!(d.is_zero());
        assert_eq!(d.len(), 0);
        assert_eq!(d.to_string(), "0");
    }

    #[test]
    fn rendering_is_ascending_with_negative_exponents() {
        let p = IntLaurent::from_terms([(2, 1), (0, 1), (-2, 1)]);
        assert_eq!(p.to_string(), "q^-2 + 1 + q^2");
        let r = IntLaurent::from_terms([(1, -3), (0, 1), (-1, -1)]);
        assert_eq!(r.to_string(), "-q^-1 + 1 - 3*q");
    }

    #[test]
    fn derivative_of_negative_powers() {
        // d/dq (q + q^-1) = 1 - q^-2
        let d = IntLaurent::z().derivative();
        assert_eq!(d, IntLaurent::from_terms([(0, 1), (-2, -1)]));
    }

    #[test]
    fn z_squared() {
        let z = IntLaurent::z();
        assert_eq!(&z * &z, IntLaurent::from_terms([(2, 1), (0, 2), (-2, 1)]));
    }

    #[test]
    fn exact_division() {
        let a = IntLaurent::from_terms([(3, 1), (0, -1)]); // q^3 - 1
        let b = IntLaurent::from_terms([(1, 1), (0, -1)]); // q - 1
        let quot = a.div_exact(&b).unwrap();
        assert_eq!(quot, IntLaurent::from_terms([(2, 1), (1, 1), (0, 1)]));
        assert!(b.div_exact(&a).is_none());
    }
}

