//! Magnus expansion into noncommuting power series and Milnor invariants.

use std::collections::BTreeMap;
use std::fmt;

use super::free::{longitudes, FreeWord};
use super::BraidWord;
use crate::algebra::Coeff;
use crate::error::Result;

/// Truncated series in noncommuting `u_1 … u_n`; keys are 1-based index
/// words of length at most `order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MagnusSeries {
    order: usize,
    coeffs: BTreeMap<Vec<u8>, Coeff>,
}

impl MagnusSeries {
    pub fn one(order: usize) -> Self {
        Self {
            order,
            coeffs: BTreeMap::from([(Vec::new(), 1)]),
        }
    }

    /// `x_k ↦ 1 + u_k`, `x_k⁻¹ ↦ Σ_j (−u_k)^j`.
    pub fn letter(l: i32, order: usize) -> Self {
        let k = l.unsigned_abs() as u8;
        let mut coeffs = BTreeMap::new();
        coeffs.insert(Vec::new(), 1);
        if l > 0 {
            if order >= 1 {
                coeffs.insert(vec![k], 1);
            }
        } else {
            for j in 1..=order {
                coeffs.insert(vec![k; j], if j % 2 == 0 { 1 } else { -1 });
            }
        }
        Self { order, coeffs }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, word: &[u8]) -> Coeff {
        self.coeffs.get(word).copied().unwrap_or(0)
    }

    /// Nonzero terms.
    pub fn terms(&self) -> impl Iterator<Item = (&[u8], Coeff)> {
        self.coeffs.iter().map(|(k, &c)| (k.as_slice(), c))
    }

    pub fn mul(&self, other: &MagnusSeries) -> MagnusSeries {
        let order = self.order.min(other.order);
        let mut coeffs: BTreeMap<Vec<u8>, Coeff> = BTreeMap::new();
        for (a, &ca) in &self.coeffs {
            for (b, &cb) in &other.coeffs {
                if a.len() + b.len() > order {
                    continue;
                }
                let mut key = a.clone();
                key.extend_from_slice(b);
                let e = coeffs.entry(key).or_insert(0);
                *e = e
                    .checked_add(ca.checked_mul(cb).expect("Magnus coefficient overflow"))
                    .expect("Magnus coefficient overflow");
            }
        }
        coeffs.retain(|_, c| *c != 0);
        MagnusSeries { order, coeffs }
    }
}

impl fmt::Display for MagnusSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(k, c)| {
                if k.is_empty() {
                    c.to_string()
                } else {
                    let mono: Vec<String> = k.iter().map(|i| format!("u{i}")).collect();
                    format!("{c}*{}", mono.join(""))
                }
            })
            .collect();
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

pub fn magnus(word: &FreeWord, order: usize) -> MagnusSeries {
    word.letters()
        .iter()
        .fold(MagnusSeries::one(order), |acc, &l| acc.mul(&MagnusSeries::letter(l, order)))
}

/// `μ_{i_1 … i_r, i}` for `r + 1 ≤ order`, 1-based, nonzero values only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MilnorTable {
    pub order: usize,
    pub entries: BTreeMap<Vec<usize>, Coeff>,
}

impl MilnorTable {
    pub fn get(&self, seq: &[usize]) -> Coeff {
        self.entries.get(seq).copied().unwrap_or(0)
    }
}

pub fn milnor(b: &BraidWord, order: usize) -> Result<MilnorTable> {
    let longs = longitudes(b)?;
    let mut entries = BTreeMap::new();
    for (i, l) in longs.iter().enumerate() {
        let m = magnus(l, order.saturating_sub(1));
        for (word, c) in m.terms() {
            if word.is_empty() {
                continue;
            }
            let mut seq: Vec<usize> = word.iter().map(|&k| k as usize).collect();
            seq.push(i + 1);
            entries.insert(seq, c);
        }
    }
    Ok(MilnorTable { order, entries })
}

/// Linking number of strands `i`, `j` (1-based starting positions) from
/// signed crossings.
pub fn linking_number(b: &BraidWord, i: usize, j: usize) -> i64 {
    let mut at: Vec<usize> = (1..=b.strands()).collect();
    let mut twice = 0;
    for &g in b.word() {
        let p = g.unsigned_abs() as usize - 1;
        let pair = (at[p], at[p + 1]);
        if pair == (i, j) || pair == (j, i) {
            twice += g.signum() as i64;
        }
        at.swap(p, p + 1);
    }
    twice / 2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expansions() {
        let m = magnus(&FreeWord::generator(1), 4);
        assert_eq!(m.to_string(), "1 + 1*u1");
        assert_eq!(magnus(&FreeWord::new(vec![1, -1]), 6), MagnusSeries::one(6));
        let comm = FreeWord::new(vec![1, 2, -1, -2]);
        let c = magnus(&comm, 2);
        assert_eq!(c.coeff(&[]), 1);
        assert_eq!(c.coeff(&[1, 2]), 1);
        assert_eq!(c.coeff(&[2, 1]), -1);
        assert_eq!(c.coeff(&[1]), 0);
    }

    #[test]
    fn hopf_table() {
        let b = BraidWord::parse(2, "s1 s1").unwrap();
        let t = milnor(&b, 6).unwrap();
        for k in 0..=4 {
            let mut seq = vec![1; k + 1];
            seq.push(1);
            assert_eq!(t.get(&seq), if k % 2 == 0 { -1 } else { 1 }, "k={k}");
        }
        assert_eq!(t.get(&[2, 1]), 1);
        assert_eq!(linking_number(&b, 1, 2), 1);
        assert!(milnor(&BraidWord::identity(3).unwrap(), 5).unwrap().entries.is_empty());
    }
}
