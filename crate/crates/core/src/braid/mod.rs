//! Braid words, the Burau representation and invariants of pure braids
//! viewed as string links.

mod free;
mod levin;
mod magnus;

use std::fmt;
use std::str::FromStr;

use crate::algebra::{det_exact, IntLaurent, Matrix, RatFunc, Ring};
use crate::error::{Error, Result};

pub use free::{artin_action, longitudes, FreeWord};
pub use levin::{catalog, closure_conway, conway_to_w, conway_ratio_check, levin_check, levin_check_with, torus_link};
pub use magnus::{linking_number, magnus, milnor, MagnusSeries, MilnorTable};

/// Longest accepted word, in generators.
pub const MAX_WORD_LEN: usize = 10_000;
/// Largest accepted strand count.
pub const MAX_STRANDS: usize = 64;

/// A word in the Artin generators of `B_n`; `k > 0` stands for `σ_k`,
/// `k < 0` for `σ_{|k|}⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    word: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, word: Vec<i32>) -> Result<Self> {
        if strands == 0 || strands > MAX_STRANDS {
            return Err(Error::Parse(format!("strand count {strands} out of range")));
        }
        if word.len() > MAX_WORD_LEN {
            return Err(Error::Parse("braid word too long".into()));
        }
        for &g in &word {
            if g == 0 || g.unsigned_abs() as usize >= strands {
                return Err(Error::Parse(format!("generator {g} outside B_{strands}")));
            }
        }
        Ok(Self { strands, word })
    }

    pub fn identity(strands: usize) -> Result<Self> {
        Self::new(strands, Vec::new())
    }

    /// Whitespace-separated tokens `sK` or `-sK`, `K` 1-based.
    pub fn parse(strands: usize, text: &str) -> Result<Self> {
        let mut word = Vec::new();
        for tok in text.split_whitespace() {
            let (sign, rest) = match tok.strip_prefix('-') {
                Some(r) => (-1, r),
                None => (1, tok),
            };
            let k = rest
                .strip_prefix('s')
                .and_then(|d| (!d.starts_with('+')).then_some(d))
                .and_then(|d| d.parse::<i32>().ok())
                .filter(|&k| k > 0)
                .ok_or_else(|| Error::Parse(format!("bad braid token {tok:?}")))?;
            word.push(sign * k);
        }
        Self::new(strands, word)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn word(&self) -> &[i32] {
        &self.word
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// `self` followed by `other`.
    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch(self.strands, other.strands));
        }
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        BraidWord::new(self.strands, word)
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            word: self.word.iter().rev().map(|g| -g).collect(),
        }
    }

    /// `perm[p]` is the starting position of the strand that ends at `p`.
    pub fn permutation(&self) -> Vec<usize> {
        let mut perm: Vec<usize> = (0..self.strands).collect();
        for &g in &self.word {
            let i = g.unsigned_abs() as usize - 1;
            perm.swap(i, i + 1);
        }
        perm
    }

    pub fn is_pure(&self) -> bool {
        self.permutation().iter().enumerate().all(|(p, &s)| p == s)
    }

    /// Sum of generator signs.
    pub fn exponent_sum(&self) -> i64 {
        self.word.iter().map(|g| g.signum() as i64).sum()
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let toks: Vec<String> = self
            .word
            .iter()
            .map(|&g| if g > 0 { format!("s{g}") } else { format!("-s{}", -g) })
            .collect();
        f.write_str(&toks.join(" "))
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    /// `"<strands>: <tokens>"`.
    fn from_str(s: &str) -> Result<Self> {
        let (n, rest) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse("expected \"<strands>: <word>\"".into()))?;
        let n = n
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad strand count {n:?}")))?;
        BraidWord::parse(n, rest)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BurauKind {
    /// `n × n`.
    Unreduced,
    /// `(n−1) × (n−1)`.
    Reduced,
}

/// Image of a generator: identity except the block `[[1−t, t], [1, 0]]`
/// at `(i, i+1)`, or its inverse `[[0, 1], [t⁻¹, 1−t⁻¹]]`.
fn generator_matrix(n: usize, g: i32) -> Matrix<IntLaurent> {
    let i = g.unsigned_abs() as usize - 1;
    let mut m = Matrix::identity(n);
    let one = IntLaurent::one();
    let block = if g > 0 {
        let t = IntLaurent::q();
        [&one - &t, t, one.clone(), IntLaurent::zero()]
    } else {
        let ti = IntLaurent::monomial(1, -1);
        [IntLaurent::zero(), one.clone(), ti.clone(), &one - &ti]
    };
    let [a, b, c, d] = block;
    m.set(i, i, a);
    m.set(i, i + 1, b);
    m.set(i + 1, i, c);
    m.set(i + 1, i + 1, d);
    m
}

/// Burau matrix in the variable `t`; generator images multiply in word
/// order.
pub fn burau(b: &BraidWord, kind: BurauKind) -> Matrix<IntLaurent> {
    let n = b.strands();
    let mut acc = Matrix::identity(n);
    for &g in b.word() {
        acc = acc.mul(&generator_matrix(n, g));
    }
    match kind {
        BurauKind::Unreduced => acc,
        BurauKind::Reduced => reduce(&acc),
    }
}

/// Conjugates by `P = [[E, 1], [0, 1]]` (last column all ones) and keeps the
/// leading `(n−1) × (n−1)` block, which is invariant.
fn reduce(u: &Matrix<IntLaurent>) -> Matrix<IntLaurent> {
    let n = u.rows();
    let p = Matrix::from_fn(n, n, |i, j| {
        if i == j || j == n - 1 {
            IntLaurent::one()
        } else {
            IntLaurent::zero()
        }
    });
    let p_inv = Matrix::from_fn(n, n, |i, j| {
        if i == j {
            IntLaurent::one()
        } else if j == n - 1 && i < n - 1 {
            -IntLaurent::one()
        } else {
            IntLaurent::zero()
        }
    });
    let c = p_inv.mul(u).mul(&p);
    debug_assert!((0..n - 1).all(|i| c.get(i, n - 1).is_zero()));
    let idx: Vec<usize> = (0..n - 1).collect();
    c.select(&idx, &idx)
}

/// `det(E − β)`.
pub fn det_one_minus(m: &Matrix<IntLaurent>) -> IntLaurent {
    det_exact(&Matrix::identity(m.rows()).sub(m))
}

/// `det(E − β(L)) / det(E − β(B·L))`.
pub fn det_ratio(l: &BraidWord, b: &BraidWord, kind: BurauKind) -> Result<RatFunc<IntLaurent>> {
    let bl = b.concat(l)?;
    RatFunc::new(det_one_minus(&burau(l, kind)), det_one_minus(&burau(&bl, kind)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, s: &str) -> BraidWord {
        BraidWord::parse(n, s).unwrap()
    }

    fn t(p: &str) -> IntLaurent {
        IntLaurent::parse(p, "q").unwrap()
    }

    #[test]
    fn parsing() {
        assert_eq!(w(3, "s1 s1 -s2").word(), &[1, 1, -2]);
        assert_eq!(w(3, "s1 -s2").to_string(), "s1 -s2");
        assert!(BraidWord::parse(2, "s2").is_err());
        assert!(BraidWord::parse(2, "s0").is_err());
        assert!(BraidWord::parse(2, "x1").is_err());
        assert!(BraidWord::parse(2, "s+1").is_err());
        assert!(BraidWord::parse(0, "").is_err());
        assert_eq!("3: s2 -s1".parse::<BraidWord>().unwrap(), w(3, "s2 -s1"));
    }

    #[test]
    fn generator_images() {
        let m = burau(&w(2, "s1"), BurauKind::Unreduced);
        assert_eq!(m.get(0, 0), &t("1 - q"));
        assert_eq!(m.get(0, 1), &t("q"));
        assert_eq!(m.get(1, 0), &IntLaurent::one());
        assert!(m.get(1, 1).is_zero());
        let r = burau(&w(2, "s1"), BurauKind::Reduced);
        assert_eq!(r.get(0, 0), &t("-q"));
        assert_eq!(burau(&w(3, ""), BurauKind::Unreduced), Matrix::identity(3));
    }

    #[test]
    fn relations() {
        for kind in [BurauKind::Unreduced, BurauKind::Reduced] {
            assert_eq!(burau(&w(3, "s1 s2 s1"), kind), burau(&w(3, "s2 s1 s2"), kind));
            let b = w(4, "s1 -s3 s2 s2 -s1");
            assert_eq!(
                burau(&b, kind).mul(&burau(&b.inverse(), kind)),
                Matrix::identity(burau(&b, kind).rows())
            );
        }
    }

    #[test]
    fn ratios() {
        let s1 = w(2, "s1");
        let r = det_ratio(&s1, &s1, BurauKind::Reduced).unwrap();
        assert_eq!(r, RatFunc::new(IntLaurent::one(), t("1 - q")).unwrap());
        let r = det_ratio(&w(2, "s1 s1 s1"), &w(2, "-s1 -s1"), BurauKind::Reduced).unwrap();
        assert_eq!(r, RatFunc::from_poly(t("1 - q + q^2")));
        assert_eq!(
            det_ratio(&s1, &w(3, "s1"), BurauKind::Reduced),
            Err(Error::StrandMismatch(3, 2))
        );
    }

    #[test]
    fn purity() {
        assert!(w(3, "s1 s1 s2 -s2").is_pure());
        assert!(!w(3, "s1 s2").is_pure());
        assert_eq!(w(3, "s1 s2").permutation(), vec![1, 2, 0]);
    }
}
