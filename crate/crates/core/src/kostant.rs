//! Poincaré series of binary polyhedral groups on affine ADE diagrams.
//!
//! Vertex 0 is the affine vertex. An auxiliary vertex −1, attached to 0 by a
//! unit edge, exists only in this bookkeeping: `P_{−1} = q⁻¹`,
//! `Z_{−1} = q⁻¹(1−qᵃ)(1−qᵇ)`, `H_{−1,0} = T^#`.

use std::collections::VecDeque;

use crate::algebra::{Coeff, IntLaurent, Matrix, RatFunc, Ring, ZPoly};
use crate::coxeter::{char_poly, char_matrix, cofactors, expansion_at_infinity, walk_gf};
use crate::diagram::{Diagram, Family};
use crate::error::{Error, Result};
use crate::report::IdentityReport;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KleinGroupData {
    pub family: Family,
    pub n: usize,
    pub a: i32,
    pub b: i32,
    /// Coxeter number.
    pub h: i32,
    /// Group order.
    pub order: i64,
    /// `Z_0 … Z_n`.
    pub z: Vec<IntLaurent>,
    pub z_minus1: IntLaurent,
}

fn poly(exps: &[i32]) -> IntLaurent {
    IntLaurent::from_terms(exps.iter().map(|&e| (e, 1)))
}

fn e6_table() -> Vec<Vec<i32>> {
    vec![
        vec![0, 12],
        vec![1, 5, 7, 11],
        vec![2, 4, 6, 6, 8, 10],
        vec![3, 5, 7, 9],
        vec![4, 8],
        vec![3, 5, 7, 9],
        vec![4, 8],
    ]
}

fn e7_table() -> Vec<Vec<i32>> {
    vec![
        vec![0, 18],
        vec![1, 7, 11, 17],
        vec![2, 6, 8, 10, 12, 16],
        vec![3, 5, 7, 9, 9, 11, 13, 15],
        vec![4, 6, 8, 10, 12, 14],
        vec![5, 7, 11, 13],
        vec![6, 12],
        vec![4, 8, 10, 14],
    ]
}

fn e8_table() -> Vec<Vec<i32>> {
    vec![
        vec![0, 30],
        vec![1, 11, 19, 29],
        vec![2, 10, 12, 18, 20, 28],
        vec![3, 9, 11, 13, 17, 19, 21, 27],
        vec![4, 8, 10, 12, 14, 16, 18, 20, 22, 26],
        vec![5, 7, 9, 11, 13, 15, 15, 17, 19, 21, 23, 25],
        vec![6, 8, 12, 14, 16, 18, 22, 24],
        vec![7, 13, 17, 23],
        vec![6, 10, 14, 16, 20, 24],
    ]
}

fn d_table(n: i32) -> Vec<Vec<i32>> {
    let mut t = vec![vec![0, 2 * n - 2]];
    for k in 1..=n - 3 {
        t.push(vec![k, k + 2, 2 * n - 4 - k, 2 * n - 2 - k]);
    }
    t.push(vec![n - 2, n]);
    t.push(vec![2, 2 * n - 4]);
    t.push(vec![n - 2, n]);
    t
}

/// Built-in exponent tables for `~A_n`, `~D_n`, `~E_6`, `~E_7`, `~E_8`.
pub fn klein_data(family: Family, n: usize) -> Result<KleinGroupData> {
    if !family.is_affine() {
        return Err(Error::BadType(family.name(n)));
    }
    if !family.valid_rank(n) || n > 4096 {
        return Err(Error::BadType(family.name(n)));
    }
    let ni = n as i32;
    let (a, b, z): (i32, i32, Vec<IntLaurent>) = match family {
        Family::AffA => (
            2,
            ni + 1,
            (0..=ni).map(|i| poly(&[i, ni - i + 1])).collect(),
        ),
        Family::AffD => (4, 2 * ni - 4, d_table(ni).iter().map(|e| poly(e)).collect()),
        Family::AffE => {
            let (a, b, t) = match n {
                6 => (6, 8, e6_table()),
                7 => (8, 12, e7_table()),
                _ => (12, 20, e8_table()),
            };
            (a, b, t.iter().map(|e| poly(e)).collect())
        }
        _ => unreachable!(),
    };
    let z_minus1 = denominator(a, b).shift(-1);
    Ok(KleinGroupData {
        family,
        n,
        a,
        b,
        h: a + b - 2,
        order: (a as i64 * b as i64) / 2,
        z,
        z_minus1,
    })
}

/// `(1 − qᵃ)(1 − qᵇ)`.
pub fn denominator(a: i32, b: i32) -> IntLaurent {
    let one = IntLaurent::one();
    &(&one - &IntLaurent::monomial(1, a)) * &(&one - &IntLaurent::monomial(1, b))
}

impl KleinGroupData {
    pub fn from_name(name: &str) -> Result<Self> {
        let (f, n) = crate::diagram::build::parse_name(name)?;
        klein_data(f, n)
    }

    pub fn name(&self) -> String {
        self.family.name(self.n)
    }

    pub fn diagram(&self) -> Diagram {
        Diagram::build(self.family, self.n).expect("valid affine type")
    }

    pub fn denominator(&self) -> IntLaurent {
        denominator(self.a, self.b)
    }

    /// `Z_i` for `−1 ≤ i ≤ n`.
    pub fn z_at(&self, i: i64) -> Result<&IntLaurent> {
        if i == -1 {
            Ok(&self.z_minus1)
        } else if i >= 0 && (i as usize) < self.z.len() {
            Ok(&self.z[i as usize])
        } else {
            Err(Error::IndexOutOfRange(i))
        }
    }

    /// `P_i = Z_i / ((1−qᵃ)(1−qᵇ))`; `P_{−1} = q⁻¹`.
    pub fn poincare(&self, i: i64) -> Result<RatFunc<IntLaurent>> {
        RatFunc::new(self.z_at(i)?.clone(), self.denominator())
    }

    /// Neighbours of `i` strictly closer to vertex −1 (two of them only for
    /// the vertex opposite 0 on `~A_{odd}`).
    pub fn toward_root(&self, i: usize) -> Vec<i64> {
        if i == 0 {
            return vec![-1];
        }
        let d = self.diagram();
        let dist = distances(&d, 0);
        d.neighbors(i)
            .into_iter()
            .filter(|&u| dist[u] + 1 == dist[i])
            .map(|u| u as i64)
            .collect()
    }

    /// Vertices whose shortest paths to −1 all pass through `i`.
    pub fn q_set(&self, i: usize) -> Vec<usize> {
        let d = self.diagram();
        let dist0 = distances(&d, 0);
        let without = d.delete_with_map(&[i]).unwrap();
        let (rest, map) = without;
        let reach = if i == 0 {
            vec![usize::MAX; rest.len()]
        } else {
            distances(&rest, map[0].unwrap())
        };
        (0..d.len())
            .filter(|&k| k == i || map[k].is_some_and(|m| reach[m] != dist0[k]))
            .collect()
    }
}

fn distances(d: &Diagram, s: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; d.len()];
    dist[s] = 0;
    let mut q = VecDeque::from([s]);
    while let Some(v) = q.pop_front() {
        for u in d.neighbors(v) {
            if dist[u] == usize::MAX {
                dist[u] = dist[v] + 1;
                q.push_back(u);
            }
        }
    }
    dist
}

/// Expansion of `P_i` through `q^terms`, as an exact Laurent polynomial.
pub fn poincare_series(data: &KleinGroupData, i: i64, terms: usize) -> Result<IntLaurent> {
    let zi = data.z_at(i)?.clone();
    let top = terms as i32;
    // multiply by 1/(1−qᵃ) and 1/(1−qᵇ) as geometric sums, truncating above q^top
    let mut acc = zi;
    for step in [data.a, data.b] {
        let mut out = IntLaurent::new();
        for (e, c) in acc.terms() {
            let mut k = e;
            while k <= top {
                out.add_term(k, c);
                k += step;
            }
        }
        acc = out;
    }
    Ok(IntLaurent::from_terms(acc.terms().filter(|&(e, _)| e <= top)))
}

fn z_of_cofactor(p: &ZPoly) -> IntLaurent {
    p.z_substitute()
}

/// `Z_i` recomputed from cofactors: `H_{i0} (1 + q^h) / H_{00}`.
pub fn cramer_table(data: &KleinGroupData) -> Result<Vec<IntLaurent>> {
    let t = cofactors(&data.diagram());
    let h00 = z_of_cofactor(t.h(0, 0));
    let z0 = &IntLaurent::one() + &IntLaurent::monomial(1, data.h);
    (0..=data.n)
        .map(|i| {
            let num = &z_of_cofactor(t.h(i, 0)) * &z0;
            RatFunc::new(num, h00.clone())?
                .as_poly()
                .ok_or_else(|| Error::NotSymmetric(format!("Z_{i} is not a Laurent polynomial")))
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum System {
    /// Rational form with `P_i`.
    Series,
    /// Cleared form with `Z_i`.
    Numerators,
    /// Cofactor form over `ℤ[z]`.
    Cofactors,
}

/// Checks the row-vector system `v · ((z−2)E + C) = (v_{−1}, 0, …, 0)`.
pub fn verify_system(data: &KleinGroupData, which: System) -> Result<Vec<IdentityReport>> {
    let d = data.diagram();
    let m = char_matrix(&d);
    let n = d.len();
    let name = data.name();
    let mut out = Vec::new();
    match which {
        System::Cofactors => {
            let t = cofactors(&d);
            for j in 0..n {
                let mut lhs = ZPoly::zero();
                for i in 0..n {
                    lhs = &lhs + &(t.h(i, 0) * m.get(i, j));
                }
                let rhs = if j == 0 { t.det().clone() } else { ZPoly::zero() };
                out.push(IdentityReport::compare(format!("{name} cofactor system col {j}"), lhs, rhs));
            }
        }
        System::Numerators => {
            let mq = m.map(ZPoly::z_substitute);
            for j in 0..n {
                let mut lhs = IntLaurent::zero();
                for i in 0..n {
                    lhs = &lhs + &(&data.z[i] * mq.get(i, j));
                }
                let rhs = if j == 0 { data.z_minus1.clone() } else { IntLaurent::zero() };
                out.push(IdentityReport::compare(format!("{name} Z system col {j}"), lhs, rhs));
            }
        }
        System::Series => {
            let mq: Matrix<RatFunc<IntLaurent>> =
                m.map(|p| RatFunc::from_poly(p.z_substitute()));
            let p: Vec<_> = (0..n as i64).map(|i| data.poincare(i)).collect::<Result<_>>()?;
            for j in 0..n {
                let mut lhs = RatFunc::from_poly(IntLaurent::zero());
                for (i, pi) in p.iter().enumerate() {
                    lhs = &lhs + &(pi * mq.get(i, j));
                }
                let rhs = if j == 0 { data.poincare(-1)? } else { RatFunc::from_poly(IntLaurent::zero()) };
                out.push(IdentityReport::compare(format!("{name} P system col {j}"), lhs, rhs));
            }
        }
    }
    Ok(out)
}

/// `Z_i H_{j0} = Z_j H_{i0}` for all pairs and `q Z_i T^# = H_{i0}(1−qᵃ)(1−qᵇ)`
/// for all `i`, with `T^#` the characteristic polynomial.
pub fn ebeling_ratios(data: &KleinGroupData) -> Vec<IdentityReport> {
    let d = data.diagram();
    let t = cofactors(&d);
    let name = data.name();
    let h: Vec<IntLaurent> = (0..=data.n).map(|i| z_of_cofactor(t.h(i, 0))).collect();
    let tsharp = t.det().z_substitute();
    let den = data.denominator();
    let mut out = Vec::new();
    for i in 0..=data.n {
        for j in i + 1..=data.n {
            out.push(IdentityReport::compare(
                format!("{name} ratio Z{i}/Z{j}"),
                &data.z[i] * &h[j],
                &data.z[j] * &h[i],
            ));
        }
        out.push(IdentityReport::compare(
            format!("{name} series P{i} from cofactor"),
            (&data.z[i] * &tsharp).shift(1),
            &h[i] * &den,
        ));
    }
    out
}

/// `q · ~A^#_{2m}(q + q⁻¹) = q^{−2m}(q^{2m+1} − 1)²` together with the
/// binomial recurrence `z^{2m+1} − Σ_{i=1}^m C(2m+1, i) L_{2m+1−2i} − 2`,
/// `L_{2k+1} = ~A^#_{2k} + 2`, `L_1 = z`.
///
/// The third report compares against the same sum with `L` replaced by the
/// bare characteristic polynomials (and `~A^#_0 = z`); it is informational
/// and fails from `m = 2` on.
pub fn a2m_closed_form(m: usize) -> Result<Vec<IdentityReport>> {
    let closed = {
        let top = &IntLaurent::monomial(1, 2 * m as i32 + 1) - &IntLaurent::one();
        (&top * &top).shift(-2 * m as i32)
    };
    let zpoly = |k: usize| -> Result<ZPoly> {
        Ok(if k == 0 {
            ZPoly::x()
        } else {
            char_poly(&Diagram::build(Family::AffA, 2 * k)?)
        })
    };
    let lucas = |k: usize| -> Result<ZPoly> {
        Ok(if k == 0 {
            ZPoly::x()
        } else {
            &zpoly(k)? + &ZPoly::constant(2)
        })
    };
    let binom = |n: usize, k: usize| -> Coeff {
        (0..k).fold(1 as Coeff, |acc, i| acc * (n - i) as Coeff / (i + 1) as Coeff)
    };
    let mut recurrence = ZPoly::monomial(1, 2 * m + 1) - ZPoly::constant(2);
    let mut literal = recurrence.clone();
    for i in 1..=m {
        let c = binom(2 * m + 1, i);
        recurrence = &recurrence - &lucas(m - i)?.scale(c);
        literal = &literal - &zpoly(m - i)?.scale(c);
    }
    let q_times = |p: &ZPoly| p.z_substitute().shift(1);
    let mut out = Vec::new();
    if m >= 1 {
        out.push(IdentityReport::compare(
            format!("~A{} closed form", 2 * m),
            q_times(&zpoly(m)?),
            closed.clone(),
        ));
    }
    out.push(IdentityReport::compare(
        format!("~A{} binomial recurrence", 2 * m),
        q_times(&recurrence),
        closed.clone(),
    ));
    out.push(IdentityReport::compare(
        format!("~A{} literal recurrence", 2 * m),
        q_times(&literal),
        closed,
    ));
    Ok(out)
}

/// `Z_i² q T^# = (1−qᵃ)(1−qᵇ)(Z_0 ~T_i − Z_{−1} T_i)`, the cleared form of
/// `P_i² = (P_0 ~T_i − q⁻¹ T_i) / (q T^#)`; `T_i`, `~T_i` are the euclidean
/// and affine diagrams with vertex `i` removed.
pub fn prop2_squares(data: &KleinGroupData, i: usize) -> Result<IdentityReport> {
    if i == 0 || i > data.n {
        return Err(Error::IndexOutOfRange(i as i64));
    }
    let d = data.diagram();
    let tsharp = char_poly(&d).z_substitute();
    let affine_minus = char_poly(&d.delete(&[i])?).z_substitute();
    let euclid_minus = char_poly(&d.delete(&[0, i])?).z_substitute();
    let zi = &data.z[i];
    let lhs = (&(zi * zi) * &tsharp).shift(1);
    let inner = &(&data.z[0] * &affine_minus) - &(&data.z_minus1 * &euclid_minus);
    Ok(IdentityReport::compare(
        format!("{} square of P{i}", data.name()),
        lhs,
        &data.denominator() * &inner,
    ))
}

/// Coefficients of `z^{−k−1}` in `q P_i = H_{i0} / T^#` against walk counts
/// `d_{i0}^k`, `k ≤ max_len`.
pub fn walk_series_check(data: &KleinGroupData, i: usize, max_len: usize) -> Result<IdentityReport> {
    if i > data.n {
        return Err(Error::IndexOutOfRange(i as i64));
    }
    let d = data.diagram();
    let t = cofactors(&d);
    let series = expansion_at_infinity(t.h(i, 0), t.det(), max_len)
        .expect("characteristic polynomial is monic");
    let walks = walk_gf(&d, i, 0, max_len)?;
    let as_poly = |v: &[Coeff]| IntLaurent::from_terms(v.iter().enumerate().map(|(k, &c)| (k as i32, c)));
    Ok(IdentityReport::compare(
        format!("{} walks from {i} to 0", data.name()),
        as_poly(&series),
        as_poly(&walks),
    ))
}

/// `s ≥ 0` with `s² = (h + 2)² − 8|B|`.
pub fn perfect_square_check(data: &KleinGroupData) -> Result<u64> {
    let v = (data.h as i128 + 2).pow(2) - 8 * data.order as i128;
    if v < 0 {
        return Err(Error::NotASquare(v));
    }
    let s = (v as f64).sqrt() as i128;
    for cand in [s - 1, s, s + 1] {
        if cand >= 0 && cand * cand == v {
            return Ok(cand as u64);
        }
    }
    Err(Error::NotASquare(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_headlines() {
        let e6 = klein_data(Family::AffE, 6).unwrap();
        assert_eq!((e6.a, e6.b), (6, 8));
        assert_eq!(e6.z[0].to_string(), "1 + q^12");
        let e8 = klein_data(Family::AffE, 8).unwrap();
        assert_eq!(e8.z[0].to_string(), "1 + q^30");
        assert_eq!(e8.order, 120);
        let a3 = klein_data(Family::AffA, 3).unwrap();
        assert_eq!(a3.z[1].to_string(), "q + q^3");
        assert!(klein_data(Family::E, 6).is_err());
    }

    #[test]
    fn e8_series_start() {
        let e8 = klein_data(Family::AffE, 8).unwrap();
        let s = poincare_series(&e8, 0, 30).unwrap();
        assert_eq!(s.to_string(), "1 + q^12 + q^20 + q^24 + q^30");
        assert_eq!(poincare_series(&e8, -1, 40).unwrap(), IntLaurent::monomial(1, -1));
        assert!(poincare_series(&e8, 9, 3).is_err());
    }

    #[test]
    fn a2_system_in_numerators() {
        let a2 = klein_data(Family::AffA, 2).unwrap();
        assert!(verify_system(&a2, System::Numerators).unwrap().iter().all(|r| r.holds));
    }

    #[test]
    fn perfect_squares() {
        assert_eq!(perfect_square_check(&klein_data(Family::AffE, 6).unwrap()).unwrap(), 2);
        assert_eq!(perfect_square_check(&klein_data(Family::AffE, 8).unwrap()).unwrap(), 8);
        assert_eq!(perfect_square_check(&klein_data(Family::AffA, 1).unwrap()).unwrap(), 0);
    }

    #[test]
    fn q_sets_on_trees() {
        let d4 = klein_data(Family::AffD, 4).unwrap();
        assert_eq!(d4.q_set(0), vec![0, 1, 2, 3, 4]);
        assert_eq!(d4.q_set(1), vec![1, 2, 3, 4]);
        assert_eq!(d4.q_set(3), vec![3]);
        assert_eq!(d4.toward_root(3), vec![1]);
    }

    #[test]
    fn opposite_vertex_on_even_cycle_has_two_parents() {
        let a5 = klein_data(Family::AffA, 5).unwrap();
        assert_eq!(a5.toward_root(3), vec![2, 4]);
        assert_eq!(a5.z[2], a5.z[4]);
    }

    #[test]
    fn small_closed_forms() {
        for m in 0..=2 {
            let r = a2m_closed_form(m).unwrap();
            let n = r.len();
            assert!(r[..n - 1].iter().all(|x| x.holds), "m={m}");
        }
    }

    #[test]
    fn all_checks_on_every_type() {
        let mut types = vec![(Family::AffE, 6), (Family::AffE, 7), (Family::AffE, 8)];
        types.extend((1..=6).map(|n| (Family::AffA, n)));
        types.extend((4..=7).map(|n| (Family::AffD, n)));
        for (f, n) in types {
            let k = klein_data(f, n).unwrap();
            let name = k.name();
            for sys in [System::Series, System::Numerators, System::Cofactors] {
                for r in verify_system(&k, sys).unwrap() {
                    assert!(r.holds, "{r}");
                }
            }
            assert_eq!(cramer_table(&k).unwrap(), k.z, "{name}");
            for r in ebeling_ratios(&k) {
                assert!(r.holds, "{r}");
            }
            for i in 1..=n {
                let r = prop2_squares(&k, i).unwrap();
                assert!(r.holds, "{r}");
            }
            for i in 0..=n {
                let r = walk_series_check(&k, i, 12).unwrap();
                assert!(r.holds, "{r}");
            }
        }
    }
}
