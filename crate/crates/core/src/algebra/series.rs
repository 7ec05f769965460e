//! Truncated power series in one variable `u` with exact rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub const DEFAULT_ORDER: usize = 32;

/// `Σ_{k ≤ N} c_k u^k`; everything above `u^N` is discarded.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncSeries {
    order: usize,
    coeffs: Vec<BigRational>,
}

impl TruncSeries {
    pub fn from_coeffs(order: usize, mut coeffs: Vec<BigRational>) -> Self {
        coeffs.resize(order + 1, BigRational::zero());
        Self { order, coeffs }
    }

    pub fn from_ints(order: usize, coeffs: &[i128]) -> Self {
        Self::from_coeffs(
            order,
            coeffs
                .iter()
                .take(order + 1)
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn zero(order: usize) -> Self {
        Self::from_coeffs(order, Vec::new())
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, BigRational::one())
    }

    pub fn constant(order: usize, c: BigRational) -> Self {
        Self::from_coeffs(order, vec![c])
    }

    /// The variable `u`.
    pub fn var(order: usize) -> Self {
        if order == 0 {
            return Self::zero(0);
        }
        Self::from_coeffs(order, vec![BigRational::zero(), BigRational::one()])
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(order, self.coeffs.iter().take(order + 1).cloned().collect())
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        Self::from_coeffs(self.order, self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Multiplicative inverse; `None` if the constant term vanishes.
    pub fn inverse(&self) -> Option<Self> {
        let c0 = self.coeffs[0].clone();
        if c0.is_zero() {
            return None;
        }
        let inv0 = c0.recip();
        let mut out: Vec<BigRational> = vec![inv0.clone()];
        for k in 1..=self.order {
            let mut s = BigRational::zero();
            for j in 1..=k {
                s += &self.coeffs[j] * &out[k - j];
            }
            out.push(-s * &inv0);
        }
        Some(Self::from_coeffs(self.order, out))
    }

    /// Evaluates the polynomial `Σ p_k w^k` at `w = self`.
    pub fn compose_poly(&self, p: &[BigRational]) -> Self {
        let mut acc = Self::zero(self.order);
        for c in p.iter().rev() {
            acc = &(&acc * self) + &Self::constant(self.order, c.clone());
        }
        acc
    }

    pub fn render(&self, var: &str) -> String {
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            parts.push(if mono.is_empty() {
                c.to_string()
            } else if c.is_one() {
                mono
            } else {
                format!("({c})*{mono}")
            });
        }
        if parts.is_empty() {
            "0".into()
        } else {
            format!("{} + O({var}^{})", parts.join(" + "), self.order + 1)
        }
    }
}

/// Binomial series of `(1+u)^{1/2}` through `u^N`.
pub fn sqrt1p(order: usize) -> TruncSeries {
    // c_{k+1} = c_k (1/2 - k) / (k + 1)
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    let mut coeffs = vec![BigRational::one()];
    for k in 0..order {
        let kk = BigRational::from_integer(BigInt::from(k));
        let next = &coeffs[k] * (&half - &kk) / (kk + BigRational::one());
        coeffs.push(next);
    }
    TruncSeries::from_coeffs(order, coeffs)
}

impl fmt::Debug for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncSeries({})", self.render("u"))
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("u"))
    }
}

impl<'a> Add<&'a TruncSeries> for &'a TruncSeries {
    type Output = TruncSeries;
    fn add(self, rhs: &'a TruncSeries) -> TruncSeries {
        let n = self.order.min(rhs.order);
        TruncSeries::from_coeffs(n, (0..=n).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect())
    }
}

impl<'a> Sub<&'a TruncSeries> for &'a TruncSeries {
    type Output = TruncSeries;
    fn sub(self, rhs: &'a TruncSeries) -> TruncSeries {
        let n = self.order.min(rhs.order);
        TruncSeries::from_coeffs(n, (0..=n).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect())
    }
}

impl<'a> Mul<&'a TruncSeries> for &'a TruncSeries {
    type Output = TruncSeries;
    fn mul(self, rhs: &'a TruncSeries) -> TruncSeries {
        let n = self.order.min(rhs.order);
        let mut out = vec![BigRational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for j in 0..=n - i {
                out[i + j] += a * &rhs.coeffs[j];
            }
        }
        TruncSeries::from_coeffs(n, out)
    }
}

impl Neg for &TruncSeries {
    type Output = TruncSeries;
    fn neg(self) -> TruncSeries {
        TruncSeries::from_coeffs(self.order, self.coeffs.iter().map(|c| -c).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn sqrt_low_orders() {
        assert_eq!(sqrt1p(0).coeffs(), &[r(1, 1)]);
        assert_eq!(sqrt1p(2).coeffs(), &[r(1, 1), r(1, 2), r(-1, 8)]);
    }

    #[test]
    fn sqrt_squares_to_one_plus_u() {
        let s = sqrt1p(8);
        let sq = &s * &s;
        assert_eq!(sq, &TruncSeries::one(8) + &TruncSeries::var(8));
    }

    #[test]
    fn inverse_of_one_plus_u_alternates() {
        let s = &TruncSeries::one(5) + &TruncSeries::var(5);
        let inv = s.inverse().unwrap();
        let want: Vec<_> = (0..=5).map(|k| r(if k % 2 == 0 { 1 } else { -1 }, 1)).collect();
        assert_eq!(inv.coeffs(), &want[..]);
        assert!(TruncSeries::var(3).inverse().is_none());
    }

    #[test]
    fn mixed_orders_truncate_to_smaller() {
        let a = TruncSeries::var(3);
        let b = TruncSeries::one(7);
        assert_eq!((&a + &b).order(), 3);
    }
}
