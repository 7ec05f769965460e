//! Christoffel–Darboux type identities: Bezoutians and Wronskians of
//! Coxeter polynomials, cofactors and Poincaré series numerators.

use num_rational::BigRational;

use crate::algebra::{
    bezoutian, det_field, wronskian, BiLaurent, IntLaurent, Matrix, RatFunc, Ring, ZPoly,
};
use crate::coxeter::{cofactors, coxeter_poly, schur_step};
use crate::diagram::{Diagram, Family};
use crate::error::{Error, Result};
use crate::kostant::KleinGroupData;
use crate::report::IdentityReport;

type Q = RatFunc<IntLaurent>;

/// `1 − (xy)⁻¹`.
pub fn structural_term() -> BiLaurent {
    &BiLaurent::monomial(1, 0, 0) - &BiLaurent::monomial(1, -1, -1)
}

/// `1 − q⁻²`.
fn structural_wr() -> IntLaurent {
    IntLaurent::from_terms([(0, 1), (-2, -1)])
}

/// A polynomial in `z` read as a Laurent polynomial in its own variable.
fn as_var(p: &ZPoly) -> IntLaurent {
    IntLaurent::from_poly(p, 0)
}

/// `Bez(G, G∖p)` against its Schur-step expansion.
pub fn cd_coxeter(d: &Diagram, pivot: usize) -> Result<IdentityReport> {
    let step = schur_step(d, pivot)?;
    let r = &step.rest;
    let mut rhs = &BiLaurent::tensor(r, r) * &structural_term();
    for b in &step.branches {
        rhs = &rhs + &bezoutian(r, &b.poly).scale(b.weight * b.weight);
    }
    for c in &step.cross {
        rhs = &rhs + &bezoutian(r, &c.twisted()).scale(c.weight);
    }
    Ok(IdentityReport::compare(
        format!("Bez expansion at vertex {pivot}"),
        bezoutian(&coxeter_poly(d), r),
        rhs,
    ))
}

/// `Wr(G, G∖p)` against its Schur-step expansion.
pub fn cd_wronskian(d: &Diagram, pivot: usize) -> Result<IdentityReport> {
    let step = schur_step(d, pivot)?;
    let r = &step.rest;
    let mut rhs = &(r * r) * &structural_wr();
    for b in &step.branches {
        rhs = &rhs + &wronskian(r, &b.poly).scale(b.weight * b.weight);
    }
    for c in &step.cross {
        rhs = &rhs + &wronskian(r, &c.twisted()).scale(c.weight);
    }
    Ok(IdentityReport::compare(
        format!("Wr expansion at vertex {pivot}"),
        wronskian(&coxeter_poly(d), r),
        rhs,
    ))
}

/// Checks that `tail = [v1, …, vk]` is a unit-weight path whose vertices
/// `v1 … v_{k−1}` have no neighbours off the path.
fn check_tail(d: &Diagram, tail: &[usize]) -> Result<()> {
    let k = tail.len();
    for &v in tail {
        if v >= d.len() {
            return Err(Error::UnknownVertex(v));
        }
    }
    let mut seen = tail.to_vec();
    seen.sort_unstable();
    seen.dedup();
    if seen.len() != k {
        return Err(Error::ShapeViolation("tail repeats a vertex".into()));
    }
    for t in 0..k.saturating_sub(1) {
        let (v, next) = (tail[t], tail[t + 1]);
        if d.weight(v, next) != 1 {
            return Err(Error::ShapeViolation(format!("no unit edge {v}-{next}")));
        }
        let allowed = |u: usize| u == next || (t > 0 && u == tail[t - 1]);
        if let Some(u) = d.neighbors(v).into_iter().find(|&u| !allowed(u)) {
            return Err(Error::ShapeViolation(format!("tail vertex {v} also meets {u}")));
        }
    }
    Ok(())
}

/// Identities for the Coxeter polynomials `C_i` of `d` with the first `i`
/// tail vertices removed: three-term recurrence, transfer matrix, telescoped
/// ratio, continued fraction, Bezoutian and Wronskian sums.
pub fn chain_identities(d: &Diagram, tail: &[usize]) -> Result<Vec<IdentityReport>> {
    check_tail(d, tail)?;
    let k = tail.len();
    let c: Vec<IntLaurent> = (0..=k)
        .map(|i| Ok(coxeter_poly(&d.delete(&tail[..i])?)))
        .collect::<Result<_>>()?;
    let z = IntLaurent::z();
    let frac = |p: &IntLaurent| Q::from_poly(p.clone());
    let mut out = Vec::new();

    for i in 1..k {
        out.push(IdentityReport::compare(
            format!("recurrence {i}"),
            &(&c[i - 1] - &(&z * &c[i])) + &c[i + 1],
            IntLaurent::zero(),
        ));
    }

    // entries of a 2x2 matrix packed as coefficients of y^0 … y^3
    let pack = |m: [&IntLaurent; 4]| {
        m.iter().enumerate().fold(BiLaurent::zero(), |acc, (e, p)| {
            &acc + &BiLaurent::tensor(p, &IntLaurent::monomial(1, e as i32))
        })
    };
    if k >= 2 {
        let step: Matrix<IntLaurent> = Matrix::from_rows(vec![
            vec![IntLaurent::zero(), IntLaurent::one()],
            vec![-IntLaurent::one(), z.clone()],
        ]);
        let start = Matrix::from_rows(vec![
            vec![c[0].clone(), c[1].clone()],
            vec![c[1].clone(), c[2].clone()],
        ]);
        let mut acc = start;
        for i in 1..k {
            out.push(IdentityReport::compare(
                format!("transfer matrix {i}"),
                pack([&c[i - 1], &c[i], &c[i], &c[i + 1]]),
                pack([acc.get(0, 0), acc.get(0, 1), acc.get(1, 0), acc.get(1, 1)]),
            ));
            acc = step.mul(&acc);
        }
    }

    if k >= 1 {
        let casoratian = if k >= 2 {
            &(&c[0] * &c[2]) - &(&c[1] * &c[1])
        } else {
            IntLaurent::zero()
        };
        let last = Q::new(c[k - 1].clone(), c[k].clone())?;
        for i in 1..=k {
            let mut sum = Q::zero();
            for j in i + 1..=k {
                sum = &sum + &frac(&(&c[j - 1] * &c[j])).recip()?;
            }
            out.push(IdentityReport::compare(
                format!("telescoped ratio {i}"),
                Q::new(c[i - 1].clone(), c[i].clone())?,
                &(&frac(&casoratian) * &sum) + &last,
            ));
        }

        for i in 1..=k {
            let mut v = last.recip()?;
            for _ in i..k {
                v = (&frac(&z) - &v).recip()?;
            }
            out.push(IdentityReport::compare(
                format!("continued fraction {i}"),
                Q::new(c[i].clone(), c[i - 1].clone())?,
                v,
            ));
        }

        let tail_bez = bezoutian(&c[k - 1], &c[k]);
        let tail_wr = wronskian(&c[k - 1], &c[k]);
        for i in 1..=k {
            let mut bez = BiLaurent::zero();
            let mut wr = IntLaurent::zero();
            for cj in &c[i..k] {
                bez = &bez + &BiLaurent::tensor(cj, cj);
                wr = &wr + &(cj * cj);
            }
            out.push(IdentityReport::compare(
                format!("Bez sum {i}"),
                bezoutian(&c[i - 1], &c[i]),
                &(&bez * &structural_term()) + &tail_bez,
            ));
            out.push(IdentityReport::compare(
                format!("Wr sum {i}"),
                wronskian(&c[i - 1], &c[i]),
                &(&wr * &structural_wr()) + &tail_wr,
            ));
        }
    }
    Ok(out)
}

/// `Bez(G^#, H_ij)(x, y) = Σ_k H_ik(x) H_jk(y)` and its diagonal
/// `Wr(G^#, H_ij) = Σ_k H_ik H_jk`, all in the variable `z`.
pub fn cd_char(d: &Diagram, i: usize, j: usize) -> Result<Vec<IdentityReport>> {
    for v in [i, j] {
        if v >= d.len() {
            return Err(Error::UnknownVertex(v));
        }
    }
    let t = cofactors(d);
    let g = as_var(t.det());
    let hij = as_var(t.h(i, j));
    let mut bez = BiLaurent::zero();
    let mut diag = IntLaurent::zero();
    for k in 0..d.len() {
        let (a, b) = (as_var(t.h(i, k)), as_var(t.h(j, k)));
        bez = &bez + &BiLaurent::tensor(&a, &b);
        diag = &diag + &(&a * &b);
    }
    Ok(vec![
        IdentityReport::compare(format!("cofactor Bez ({i},{j})"), bezoutian(&g, &hij), bez),
        IdentityReport::compare(format!("cofactor Wr ({i},{j})"), wronskian(&g, &hij), diag),
    ])
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

fn subsets(n: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(m);
    fn go(start: usize, n: usize, m: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for s in start..n {
            cur.push(s);
            go(s + 1, n, m, cur, out);
            cur.pop();
        }
    }
    go(0, n, m, &mut cur, &mut out);
    out
}

/// Matrix form at sample points: entrywise
/// `Bez(G^#, H_ij)(x_l, y_s) = Σ_k H_ik(x_l) H_jk(y_s)`, then the
/// determinant of that `m × m` matrix against the sum over `m`-subsets `K`
/// of `det(H_{i k_r}(x_l)) · det(H_{j k_r}(y_s))`.
pub fn binet_cauchy(
    d: &Diagram,
    i: usize,
    j: usize,
    xs: &[i64],
    ys: &[i64],
) -> Result<Vec<IdentityReport>> {
    let (m, n) = (xs.len(), d.len());
    if ys.len() != m || m > n {
        return Err(Error::SizeMismatch(format!(
            "{} x-values, {} y-values, {n} vertices",
            m,
            ys.len()
        )));
    }
    for v in [i, j] {
        if v >= n {
            return Err(Error::UnknownVertex(v));
        }
    }
    let t = cofactors(d);
    let bez = bezoutian(&as_var(t.det()), &as_var(t.h(i, j)));
    let at = |p: &ZPoly, v: i64| as_var(p).eval_rational(&rat(v)).expect("polynomial");
    let hx = Matrix::from_fn(m, n, |l, k| at(t.h(i, k), xs[l]));
    let hy = Matrix::from_fn(m, n, |s, k| at(t.h(j, k), ys[s]));
    let lhs = Matrix::from_fn(m, m, |l, s| {
        bez.eval_rational(&rat(xs[l]), &rat(ys[s])).expect("polynomial")
    });
    let product = hx.mul(&hy.transpose());
    let mut out = Vec::new();
    for l in 0..m {
        for s in 0..m {
            out.push(IdentityReport::compare(
                format!("matrix form ({i},{j}) entry ({l},{s})"),
                lhs.get(l, s).clone(),
                product.get(l, s).clone(),
            ));
        }
    }
    let rows: Vec<usize> = (0..m).collect();
    let mut sum = BigRational::zero();
    for cols in subsets(n, m) {
        sum += det_field(&hx.select(&rows, &cols)) * det_field(&hy.select(&rows, &cols));
    }
    out.push(IdentityReport::compare(
        format!("determinant form ({i},{j}), m={m}"),
        det_field(&lhs),
        sum,
    ));
    Ok(out)
}

/// Which Poincaré-series identity to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PoincareCd {
    /// `Bez(Z_{−1}, Z_0) = (1 − (xy)⁻¹) Σ_k Z_k(x) Z_k(y)`, any affine type.
    Root,
    /// `Bez(Z_{i→}, Z_i)` summed over the vertices behind `i`; trees only.
    Subtree(usize),
    /// `Bez(Z_{i−1}, Z_i) + Bez(Z_{j+1}, Z_j)` summed over the arc `i..=j`
    /// of the cycle, with `Z_{n+1} = Z_0`.
    Arc(usize, usize),
}

/// Bezoutian and Wronskian forms of the chosen identity, in numerator form
/// `Z_k` with `Z_{−1} = q⁻¹(1−qᵃ)(1−qᵇ)`.
pub fn poincare_cd(data: &KleinGroupData, form: PoincareCd) -> Result<Vec<IdentityReport>> {
    let n = data.n;
    let z = |k: i64| -> Result<&IntLaurent> {
        if k == n as i64 + 1 && data.family == Family::AffA {
            Ok(&data.z[0])
        } else {
            data.z_at(k)
        }
    };
    let sums = |ks: &[usize]| {
        let mut bez = BiLaurent::zero();
        let mut wr = IntLaurent::zero();
        for &k in ks {
            bez = &bez + &BiLaurent::tensor(&data.z[k], &data.z[k]);
            wr = &wr + &(&data.z[k] * &data.z[k]);
        }
        (&bez * &structural_term(), &wr * &structural_wr())
    };
    let name = data.name();
    let mut out = Vec::new();
    match form {
        PoincareCd::Root | PoincareCd::Subtree(0) => {
            let (bez, wr) = sums(&(0..=n).collect::<Vec<_>>());
            out.push(IdentityReport::compare(
                format!("{name} Bez root"),
                bezoutian(z(-1)?, z(0)?),
                bez,
            ));
            out.push(IdentityReport::compare(
                format!("{name} Wr root"),
                wronskian(z(-1)?, z(0)?),
                wr,
            ));
        }
        PoincareCd::Subtree(i) => {
            if data.family == Family::AffA {
                return Err(Error::BadType(format!("{name} is a cycle")));
            }
            if i > n {
                return Err(Error::IndexOutOfRange(i as i64));
            }
            let (bez, wr) = sums(&data.q_set(i));
            for parent in data.toward_root(i) {
                out.push(IdentityReport::compare(
                    format!("{name} Bez subtree {i} from {parent}"),
                    bezoutian(z(parent)?, z(i as i64)?),
                    bez.clone(),
                ));
                out.push(IdentityReport::compare(
                    format!("{name} Wr subtree {i} from {parent}"),
                    wronskian(z(parent)?, z(i as i64)?),
                    wr.clone(),
                ));
            }
        }
        PoincareCd::Arc(i, j) => {
            if data.family != Family::AffA {
                return Err(Error::BadType(format!("{name} is not a cycle")));
            }
            if i == 0 || i > j || j > n {
                return Err(Error::IndexOutOfRange(if i == 0 { 0 } else { j as i64 }));
            }
            let (i, j) = (i as i64, j as i64);
            let (bez, wr) = sums(&(i as usize..=j as usize).collect::<Vec<_>>());
            out.push(IdentityReport::compare(
                format!("{name} Bez arc {i}..{j}"),
                &bezoutian(z(i - 1)?, z(i)?) + &bezoutian(z(j + 1)?, z(j)?),
                bez,
            ));
            out.push(IdentityReport::compare(
                format!("{name} Wr arc {i}..{j}"),
                &wronskian(z(i - 1)?, z(i)?) + &wronskian(z(j + 1)?, z(j)?),
                wr,
            ));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kostant::klein_data;
    use crate::report::all_hold;

    fn build(f: Family, n: usize) -> Diagram {
        Diagram::build(f, n).unwrap()
    }

    #[test]
    fn structural_term_is_bez_of_z_and_one() {
        assert_eq!(bezoutian(&IntLaurent::z(), &IntLaurent::one()), structural_term());
        assert_eq!(wronskian(&IntLaurent::z(), &IntLaurent::one()), structural_wr());
    }

    #[test]
    fn small_expansions() {
        assert!(cd_coxeter(&Diagram::new(1), 0).unwrap().holds);
        assert!(cd_coxeter(&build(Family::A, 2), 1).unwrap().holds);
        assert!(cd_wronskian(&Diagram::new(1), 0).unwrap().holds);
        assert!(cd_wronskian(&build(Family::A, 3), 1).unwrap().holds);
        assert_eq!(cd_coxeter(&Diagram::new(1), 3), Err(Error::UnknownVertex(3)));
    }

    #[test]
    fn expansions_on_cycles_and_branches() {
        for d in [build(Family::AffA, 4), build(Family::AffD, 5), build(Family::AffE, 6)] {
            for p in 0..d.len() {
                assert!(cd_coxeter(&d, p).unwrap().holds);
                assert!(cd_wronskian(&d, p).unwrap().holds);
            }
        }
    }

    #[test]
    fn chains() {
        let a5 = build(Family::A, 5);
        let r = chain_identities(&a5, &[0, 1, 2, 3, 4]).unwrap();
        assert!(all_hold(&r), "{r:?}");
        let e8 = build(Family::AffE, 8);
        assert!(all_hold(&chain_identities(&e8, &[0, 1, 2, 3, 4, 5]).unwrap()));
        assert!(matches!(
            chain_identities(&e8, &[0, 1, 2, 3, 4, 5, 6]),
            Err(Error::ShapeViolation(_))
        ));
        let r = chain_identities(&a5, &[2]).unwrap();
        assert!(all_hold(&r));
    }

    #[test]
    fn cofactor_identities() {
        for d in [Diagram::new(1), build(Family::A, 2), build(Family::AffE, 6)] {
            for i in 0..d.len() {
                for j in 0..d.len() {
                    assert!(all_hold(&cd_char(&d, i, j).unwrap()));
                }
            }
        }
    }

    #[test]
    fn matrix_forms() {
        let a3 = build(Family::A, 3);
        assert!(all_hold(&binet_cauchy(&a3, 0, 2, &[2, -3], &[5, 1]).unwrap()));
        assert!(all_hold(&binet_cauchy(&a3, 1, 1, &[7], &[7]).unwrap()));
        let a2 = build(Family::A, 2);
        assert!(all_hold(&binet_cauchy(&a2, 0, 1, &[1, 4], &[-2, 3]).unwrap()));
        assert!(matches!(
            binet_cauchy(&a2, 0, 1, &[1, 2, 3], &[1, 2, 3]),
            Err(Error::SizeMismatch(_))
        ));
    }

    #[test]
    fn poincare_forms() {
        let d4 = klein_data(Family::AffD, 4).unwrap();
        assert!(all_hold(&poincare_cd(&d4, PoincareCd::Subtree(3)).unwrap()));
        let a3 = klein_data(Family::AffA, 3).unwrap();
        assert!(all_hold(&poincare_cd(&a3, PoincareCd::Arc(1, 2)).unwrap()));
        let e6 = klein_data(Family::AffE, 6).unwrap();
        assert!(all_hold(&poincare_cd(&e6, PoincareCd::Root).unwrap()));
        assert!(matches!(poincare_cd(&a3, PoincareCd::Subtree(1)), Err(Error::BadType(_))));
    }
}
