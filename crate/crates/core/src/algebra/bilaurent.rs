//! Two-variable integer Laurent polynomials in `x, y`, home of Bezoutians.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::laurent::{rational_pow, IntLaurent};
use super::ring::{cadd, cmul, cneg, Coeff, Ring};

#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct BiLaurent {
    coeffs: BTreeMap<(i32, i32), Coeff>,
}

impl BiLaurent {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn monomial(c: Coeff, ex: i32, ey: i32) -> Self {
        let mut p = Self::new();
        p.add_term(ex, ey, c);
        p
    }

    fn add_term(&mut self, ex: i32, ey: i32, c: Coeff) {
        if c == 0 {
            return;
        }
        let slot = self.coeffs.entry((ex, ey)).or_insert(0);
        *slot = cadd(*slot, c);
        if *slot == 0 {
            self.coeffs.remove(&(ex, ey));
        }
    }

    pub fn coeff(&self, ex: i32, ey: i32) -> Coeff {
        self.coeffs.get(&(ex, ey)).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((i32, i32), Coeff)> + '_ {
        self.coeffs.iter().map(|(&k, &c)| (k, c))
    }

    pub fn scale(&self, s: Coeff) -> Self {
        let mut out = Self::new();
        if s != 0 {
            for (k, c) in self.terms() {
                out.coeffs.insert(k, cmul(c, s));
            }
        }
        out
    }

    /// Exact value at a point with nonzero coordinates (or any point when
    /// no exponent is negative).
    pub fn eval_rational(&self, x: &BigRational, y: &BigRational) -> Option<BigRational> {
        let mut acc = BigRational::zero();
        for ((ex, ey), c) in self.terms() {
            acc += BigRational::from_integer(c.into()) * rational_pow(x, ex)? * rational_pow(y, ey)?;
        }
        Some(acc)
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `f(x)`.
    pub fn in_x(f: &IntLaurent) -> Self {
        Self::tensor(f, &IntLaurent::one())
    }

    /// `f(y)`.
    pub fn in_y(f: &IntLaurent) -> Self {
        Self::tensor(&IntLaurent::one(), f)
    }

    /// `f(x)·g(y)`.
    pub fn tensor(f: &IntLaurent, g: &IntLaurent) -> Self {
        let mut p = Self::new();
        for (a, c) in f.terms() {
            for (b, d) in g.terms() {
                p.add_term(a, b, cmul(c, d));
            }
        }
        p
    }

    /// Exchanges `x` and `y`.
    pub fn swap(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(&(a, b), &c)| ((b, a), c)).collect(),
        }
    }

    /// Substitutes `y := x`.
    pub fn diagonal(&self) -> IntLaurent {
        IntLaurent::from_terms(self.coeffs.iter().map(|(&(a, b), &c)| (a + b, c)))
    }

    /// Exact quotient by `x − y`, or `None` when it leaves a remainder.
    pub fn div_x_minus_y(&self) -> Option<Self> {
        let mut by_degree: BTreeMap<i32, BTreeMap<i32, Coeff>> = BTreeMap::new();
        for (&(a, b), &c) in &self.coeffs {
            by_degree.entry(a + b).or_default().insert(a, c);
        }
        let mut out = Self::new();
        for (s, comp) in by_degree {
            let lo = *comp.keys().next().unwrap();
            let hi = *comp.keys().next_back().unwrap();
            // quotient coefficient of x^k y^{s-1-k}: d_k = d_{k-1} - c_k
            let mut d: Coeff = 0;
            for k in lo..hi {
                d = cadd(d, cneg(comp.get(&k).copied().unwrap_or(0)));
                out.add_term(k, s - 1 - k, d);
            }
            if comp[&hi] != d {
                return None;
            }
        }
        Some(out)
    }

    pub fn render(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (&(a, b), &c) in &self.coeffs {
            let mag = c.unsigned_abs();
            if out.is_empty() {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if c < 0 { " - " } else { " + " });
            }
            let mut mono = Vec::new();
            for (v, e) in [("x", a), ("y", b)] {
                match e {
                    0 => {}
                    1 => mono.push(v.to_string()),
                    _ => mono.push(format!("{v}^{e}")),
                }
            }
            let mono = mono.join("*");
            if mono.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag == 1 {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{mag}*{mono}"));
            }
        }
        out
    }
}

/// `(f(x)g(y) − f(y)g(x)) / (x − y)`.
pub fn bezoutian(f: &IntLaurent, g: &IntLaurent) -> BiLaurent {
    let fg = BiLaurent::tensor(f, g);
    let num = &fg - &fg.swap();
    num.div_x_minus_y()
        .expect("antisymmetric polynomial is divisible by x - y")
}

/// `f′g − fg′`.
pub fn wronskian(f: &IntLaurent, g: &IntLaurent) -> IntLaurent {
    &(&f.derivative() * g) - &(f * &g.derivative())
}

impl fmt::Display for BiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for BiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiLaurent({})", self.render())
    }
}

impl<'a> Add<&'a BiLaurent> for &'a BiLaurent {
    type Output = BiLaurent;
    fn add(self, rhs: &'a BiLaurent) -> BiLaurent {
        let mut out = self.clone();
        for (&(a, b), &c) in &rhs.coeffs {
            out.add_term(a, b, c);
        }
        out
    }
}

impl<'a> Sub<&'a BiLaurent> for &'a BiLaurent {
    type Output = BiLaurent;
    fn sub(self, rhs: &'a BiLaurent) -> BiLaurent {
        let mut out = self.clone();
        for (&(a, b), &c) in &rhs.coeffs {
            out.add_term(a, b, cneg(c));
        }
        out
    }
}

impl<'a> Mul<&'a BiLaurent> for &'a BiLaurent {
    type Output = BiLaurent;
    fn mul(self, rhs: &'a BiLaurent) -> BiLaurent {
        let mut out = BiLaurent::new();
        for (&(a1, b1), &c1) in &self.coeffs {
            for (&(a2, b2), &c2) in &rhs.coeffs {
                out.add_term(a1 + a2, b1 + b2, cmul(c1, c2));
            }
        }
        out
    }
}

impl Neg for &BiLaurent {
    type Output = BiLaurent;
    fn neg(self) -> BiLaurent {
        BiLaurent {
            coeffs: self.coeffs.iter().map(|(&k, &c)| (k, cneg(c))).collect(),
        }
    }
}

impl Add for BiLaurent {
    type Output = BiLaurent;
    fn add(self, rhs: BiLaurent) -> BiLaurent {
        &self + &rhs
    }
}

impl Sub for BiLaurent {
    type Output = BiLaurent;
    fn sub(self, rhs: BiLaurent) -> BiLaurent {
        &self - &rhs
    }
}

impl Mul for BiLaurent {
    type Output = BiLaurent;
    fn mul(self, rhs: BiLaurent) -> BiLaurent {
        &self * &rhs
    }
}

impl Neg for BiLaurent {
    type Output = BiLaurent;
    fn neg(self) -> BiLaurent {
        -&self
    }
}

impl Ring for BiLaurent {
    fn zero() -> Self {
        Self::new()
    }
    fn one() -> Self {
        Self::monomial(1, 0, 0)
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bezoutian_of_z_and_one() {
        let b = bezoutian(&IntLaurent::z(), &IntLaurent::one());
        let expect = &BiLaurent::one() - &BiLaurent::monomial(1, -1, -1);
        assert_eq!(b, expect);
    }

    #[test]
    fn bezoutian_of_equal_arguments_vanishes() {
        let f = IntLaurent::from_terms([(3, 2), (-1, 5)]);
        assert!(bezoutian(&f, &f).is_zero());
        assert!(bezoutian(&IntLaurent::one(), &IntLaurent::one()).is_zero());
    }

    #[test]
    fn wronskian_small_cases() {
        assert_eq!(
            wronskian(&IntLaurent::z(), &IntLaurent::one()),
            IntLaurent::from_terms([(0, 1), (-2, -1)])
        );
        assert_eq!(
            wronskian(&IntLaurent::one(), &IntLaurent::q()),
            IntLaurent::constant(-1)
        );
    }

    #[test]
    fn non_divisible_remainder_is_detected() {
        assert!(BiLaurent::monomial(1, 1, 0).div_x_minus_y().is_none());
        let xy = &BiLaurent::monomial(1, 2, 0) - &BiLaurent::monomial(1, 0, 2);
        assert_eq!(
            xy.div_x_minus_y().unwrap(),
            &BiLaurent::monomial(1, 1, 0) + &BiLaurent::monomial(1, 0, 1)
        );
    }

    #[test]
    fn bezoutian_diagonal_is_wronskian() {
        let f = IntLaurent::from_terms([(2, 1), (0, -3), (-3, 2)]);
        let g = IntLaurent::from_terms([(1, 4), (-1, 1)]);
        assert_eq!(bezoutian(&f, &g).diagonal(), wronskian(&f, &g));
    }
}
