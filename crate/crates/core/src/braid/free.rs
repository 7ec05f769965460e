//! Free groups, the Artin action and longitudes of pure braids.

use std::fmt;

use super::BraidWord;
use crate::error::{Error, Result};

/// Freely reduced word; letter `k > 0` is `x_k`, `k < 0` is `x_{|k|}⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct FreeWord(Vec<i32>);

impl FreeWord {
    pub fn new(letters: Vec<i32>) -> Self {
        let mut out = FreeWord(Vec::with_capacity(letters.len()));
        for l in letters {
            out.push(l);
        }
        out
    }

    pub fn generator(k: i32) -> Self {
        FreeWord(vec![k])
    }

    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn push(&mut self, l: i32) {
        debug_assert!(l != 0);
        if self.0.last() == Some(&-l) {
            self.0.pop();
        } else {
            self.0.push(l);
        }
    }

    pub fn mul(&self, other: &FreeWord) -> FreeWord {
        let mut out = self.clone();
        for &l in &other.0 {
            out.push(l);
        }
        out
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord(self.0.iter().rev().map(|l| -l).collect())
    }

    /// `x_k^e`.
    pub fn power(k: i32, e: i64) -> FreeWord {
        let l = if e >= 0 { k } else { -k };
        FreeWord(vec![l; e.unsigned_abs() as usize])
    }

    /// Exponent sum of `x_k`.
    pub fn exponent_of(&self, k: i32) -> i64 {
        self.0.iter().filter(|l| l.abs() == k).map(|l| l.signum() as i64).sum()
    }

    pub fn total_exponent(&self) -> i64 {
        self.0.iter().map(|l| l.signum() as i64).sum()
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let toks: Vec<String> = self
            .0
            .iter()
            .map(|&l| if l > 0 { format!("x{l}") } else { format!("x{}^-1", -l) })
            .collect();
        f.write_str(&toks.join(" "))
    }
}

/// Images of `x_1 … x_n`. Each generator acts on the current tuple:
/// `σ_i: (a_i, a_{i+1}) ↦ (a_i a_{i+1} a_i⁻¹, a_i)`,
/// `σ_i⁻¹: (a_i, a_{i+1}) ↦ (a_{i+1}, a_{i+1}⁻¹ a_i a_{i+1})`.
pub fn artin_action(b: &BraidWord) -> Vec<FreeWord> {
    let mut img: Vec<FreeWord> = (1..=b.strands() as i32).map(FreeWord::generator).collect();
    for &g in b.word() {
        let i = g.unsigned_abs() as usize - 1;
        let (a, c) = (img[i].clone(), img[i + 1].clone());
        if g > 0 {
            img[i] = a.mul(&c).mul(&a.inverse());
            img[i + 1] = a;
        } else {
            img[i] = c.clone();
            img[i + 1] = c.inverse().mul(&a).mul(&c);
        }
    }
    img
}

/// Longitude of every strand of a pure braid: the conjugator `λ` with
/// `x_i ↦ λ x_i λ⁻¹`, normalized to `x_i`-exponent one, then multiplied on
/// the left by `x_i^{−s}` so that its total exponent `s` becomes zero.
pub fn longitudes(b: &BraidWord) -> Result<Vec<FreeWord>> {
    if !b.is_pure() {
        return Err(Error::NotPure);
    }
    let img = artin_action(b);
    Ok(img
        .iter()
        .enumerate()
        .map(|(idx, w)| {
            let i = idx as i32 + 1;
            let m = w.len() / 2;
            debug_assert_eq!(w.letters()[m], i);
            let lambda = FreeWord(w.letters()[..m].to_vec());
            let lambda = lambda.mul(&FreeWord::power(i, 1 - lambda.exponent_of(i)));
            FreeWord::power(i, -lambda.total_exponent()).mul(&lambda)
        })
        .collect())
}
