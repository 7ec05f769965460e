//! Coxeter and characteristic polynomials of diagrams, cofactors, the
//! pivot expansion, the join formula, and path/walk expansions of cofactors.

mod divide;

use crate::algebra::matrix::cofactor;
use crate::algebra::{det_exact, det_zpoly, Coeff, IntLaurent, Matrix, RatFunc, Ring, ZPoly};
use crate::diagram::Diagram;
use crate::error::{Error, Result};

pub use divide::{divide_identity, DivideReport};

/// `qS + q⁻¹Sᵗ` in diagram order.
pub fn coxeter_matrix(d: &Diagram) -> Matrix<IntLaurent> {
    let s = d.seifert();
    let n = d.len();
    Matrix::from_fn(n, n, |i, j| {
        let up = IntLaurent::monomial(*s.get(i, j), 1);
        let down = IntLaurent::monomial(*s.get(j, i), -1);
        &up + &down
    })
}

/// `det(qS + q⁻¹Sᵗ)`.
pub fn coxeter_poly(d: &Diagram) -> IntLaurent {
    det_exact(&coxeter_matrix(d))
}

/// `(−1)^n det(qS − q⁻¹Sᵗ)`, the Alexander–Conway polynomial when the
/// diagram comes from a fibred link.
pub fn alexander_conway(d: &Diagram) -> IntLaurent {
    let s = d.seifert();
    let n = d.len();
    let m = Matrix::from_fn(n, n, |i, j| {
        &IntLaurent::monomial(*s.get(i, j), 1) - &IntLaurent::monomial(*s.get(j, i), -1)
    });
    let det = det_exact(&m);
    if n % 2 == 1 {
        -det
    } else {
        det
    }
}

/// `zE − A` in index order; equals `(z−2)E + C`.
pub fn char_matrix(d: &Diagram) -> Matrix<ZPoly> {
    let n = d.len();
    Matrix::from_fn(n, n, |i, j| {
        if i == j {
            ZPoly::x()
        } else {
            ZPoly::constant(-d.weight(i, j))
        }
    })
}

/// `det((z−2)E + C)`; independent of the vertex order.
pub fn char_poly(d: &Diagram) -> ZPoly {
    det_zpoly(&char_matrix(d))
}

/// All cofactors `H_ij` of `(z−2)E + C`, indexed by vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CofactorTable {
    h: Matrix<ZPoly>,
    det: ZPoly,
}

impl CofactorTable {
    pub fn h(&self, i: usize, j: usize) -> &ZPoly {
        self.h.get(i, j)
    }

    pub fn matrix(&self) -> &Matrix<ZPoly> {
        &self.h
    }

    /// The characteristic polynomial itself.
    pub fn det(&self) -> &ZPoly {
        &self.det
    }

    pub fn len(&self) -> usize {
        self.h.rows()
    }

    pub fn is_empty(&self) -> bool {
        self.h.rows() == 0
    }
}

pub fn cofactors(d: &Diagram) -> CofactorTable {
    let m = char_matrix(d);
    let n = d.len();
    let mut h = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let c = cofactor(&m, i, j, det_zpoly);
            h.set(j, i, c.clone());
            h.set(i, j, c);
        }
    }
    CofactorTable {
        h,
        det: det_zpoly(&m),
    }
}

/// One neighbour term `a_pi² · G∖{p,i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchTerm {
    pub vertex: usize,
    pub weight: Coeff,
    pub poly: IntLaurent,
}

/// One ordered neighbour pair term `a_pi a_pj q^twist P_ij`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossTerm {
    pub i: usize,
    pub j: usize,
    pub weight: Coeff,
    pub twist: i32,
    /// Signed cofactor of entry `(i, j)` of the pivot-deleted matrix.
    pub cofactor: IntLaurent,
}

impl CrossTerm {
    /// `q^twist · P_ij`.
    pub fn twisted(&self) -> IntLaurent {
        self.cofactor.shift(self.twist)
    }
}

/// Expansion of the Coxeter polynomial along one vertex:
/// `G = z·G∖p − Σ a_pi² G∖{p,i} − Σ_{i≠j} a_pi a_pj q^twist P_ij`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurStep {
    pub pivot: usize,
    pub head: IntLaurent,
    /// `G∖p`.
    pub rest: IntLaurent,
    pub branches: Vec<BranchTerm>,
    pub cross: Vec<CrossTerm>,
}

impl SchurStep {
    pub fn reassemble(&self) -> IntLaurent {
        let mut acc = &self.head * &self.rest;
        for b in &self.branches {
            acc = &acc - &b.poly.scale(b.weight * b.weight);
        }
        for c in &self.cross {
            acc = &acc - &c.twisted().scale(c.weight);
        }
        acc
    }
}

pub fn schur_step(d: &Diagram, pivot: usize) -> Result<SchurStep> {
    if pivot >= d.len() {
        return Err(Error::UnknownVertex(pivot));
    }
    let pos = d.positions();
    let side = |v: usize| if pos[pivot] < pos[v] { 1 } else { -1 };
    let (rest_d, map) = d.delete_with_map(&[pivot])?;
    let rest_m = coxeter_matrix(&rest_d);
    let rest_pos = rest_d.positions();
    let nbrs = d.neighbors(pivot);

    let mut branches = Vec::new();
    for &i in &nbrs {
        branches.push(BranchTerm {
            vertex: i,
            weight: d.weight(pivot, i),
            poly: coxeter_poly(&d.delete(&[pivot, i])?),
        });
    }
    let mut cross = Vec::new();
    for &i in &nbrs {
        for &j in &nbrs {
            if i == j {
                continue;
            }
            let (ri, rj) = (rest_pos[map[i].unwrap()], rest_pos[map[j].unwrap()]);
            cross.push(CrossTerm {
                i,
                j,
                weight: d.weight(pivot, i) * d.weight(pivot, j),
                twist: side(j) - side(i),
                cofactor: cofactor(&rest_m, ri, rj, det_exact),
            });
        }
    }
    Ok(SchurStep {
        pivot,
        head: IntLaurent::z(),
        rest: det_exact(&rest_m),
        branches,
        cross,
    })
}

/// Coxeter polynomial of the join from the parts alone:
/// `Π T_i · (z − Σ T̄_j / T_j)`, `T̄_j` the part with its marked vertex removed.
pub fn join_poly(parts: &[(Diagram, usize)]) -> Result<IntLaurent> {
    let mut prod = RatFunc::from_poly(IntLaurent::one());
    let mut sum = RatFunc::from_poly(IntLaurent::z());
    for (d, v) in parts {
        if *v >= d.len() {
            return Err(Error::UnknownVertex(*v));
        }
        let t = coxeter_poly(d);
        let tbar = coxeter_poly(&d.delete(&[*v])?);
        let ratio = RatFunc::new(tbar, t.clone())?;
        sum = &sum - &ratio;
        prod = &prod * &RatFunc::from_poly(t);
    }
    Ok((&prod * &sum)
        .as_poly()
        .expect("join polynomial is a Laurent polynomial"))
}

/// All simple paths from `i` to `j` as vertex lists.
pub fn simple_paths(d: &Diagram, i: usize, j: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut path = vec![i];
    let mut on = vec![false; d.len()];
    on[i] = true;
    dfs_paths(d, j, &mut path, &mut on, &mut out);
    out
}

fn dfs_paths(d: &Diagram, target: usize, path: &mut Vec<usize>, on: &mut [bool], out: &mut Vec<Vec<usize>>) {
    let v = *path.last().unwrap();
    if v == target {
        out.push(path.clone());
        return;
    }
    for u in d.neighbors(v) {
        if !on[u] {
            on[u] = true;
            path.push(u);
            dfs_paths(d, target, path, on, out);
            path.pop();
            on[u] = false;
        }
    }
}

/// `Σ_paths w(P) · G^#(d∖P)` over simple paths from `i` to `j`.
pub fn path_sum_h(d: &Diagram, i: usize, j: usize) -> Result<ZPoly> {
    for v in [i, j] {
        if v >= d.len() {
            return Err(Error::UnknownVertex(v));
        }
    }
    let mut acc = ZPoly::zero();
    for p in simple_paths(d, i, j) {
        let w: Coeff = p.windows(2).map(|e| d.weight(e[0], e[1])).product();
        acc = &acc + &char_poly(&d.delete(&p)?).scale(w);
    }
    Ok(acc)
}

/// `(A^k)_ij` for `k = 0..=max_len`: weighted walk counts.
pub fn walk_gf(d: &Diagram, i: usize, j: usize, max_len: usize) -> Result<Vec<Coeff>> {
    let n = d.len();
    for v in [i, j] {
        if v >= n {
            return Err(Error::UnknownVertex(v));
        }
    }
    let a = d.adjacency();
    // row vector e_i A^k
    let mut row: Vec<Coeff> = (0..n).map(|v| (v == i) as Coeff).collect();
    let mut out = Vec::with_capacity(max_len + 1);
    for _ in 0..=max_len {
        out.push(row[j]);
        row = (0..n)
            .map(|c| (0..n).map(|k| row[k] * a.get(k, c)).sum())
            .collect();
    }
    Ok(out)
}

/// Coefficients of `z^{-k-1}`, `k = 0..=max_len`, in the expansion of
/// `num/den` at `z = ∞`.
pub fn expansion_at_infinity(num: &ZPoly, den: &ZPoly, max_len: usize) -> Option<Vec<Coeff>> {
    let dd = den.degree()? as i64;
    let Some(dn) = num.degree() else {
        return Some(vec![0; max_len + 1]);
    };
    // num/den = Σ c_t z^{dn-dd-t}; z^{-k-1} is t = dn - dd + k + 1
    let offset = dn as i64 - dd + 1;
    let need = (offset + max_len as i64 + 1).max(0) as usize;
    let c = ZPoly::expand_at_infinity(num, den, need)?;
    Some(
        (0..=max_len as i64)
            .map(|k| {
                let t = offset + k;
                if t < 0 {
                    0
                } else {
                    c[t as usize]
                }
            })
            .collect(),
    )
}

/// `H_ij² − (G∖i · G∖j − G · G∖{i,j})`, which vanishes.
pub fn identity7_check(d: &Diagram, i: usize, j: usize) -> Result<ZPoly> {
    if i == j {
        return Err(Error::SizeMismatch("identity needs two distinct vertices".into()));
    }
    let t = cofactors(d);
    let h = t.h(i, j);
    let gi = char_poly(&d.delete(&[i])?);
    let gj = char_poly(&d.delete(&[j])?);
    let gij = char_poly(&d.delete(&[i, j])?);
    let rhs = &(&gi * &gj) - &(t.det() * &gij);
    Ok(&(h * h) - &rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::Family;

    fn z(c: &[Coeff]) -> ZPoly {
        ZPoly::from_coeffs(c.to_vec())
    }

    #[test]
    fn small_coxeter_polynomials() {
        let a1 = Diagram::build(Family::A, 1).unwrap();
        assert_eq!(coxeter_poly(&a1), IntLaurent::z());
        let a2 = Diagram::build(Family::A, 2).unwrap();
        assert_eq!(coxeter_poly(&a2).to_string(), "q^-2 + 1 + q^2");
        assert_eq!(coxeter_poly(&Diagram::new(0)), IntLaurent::one());
    }

    #[test]
    fn small_characteristic_polynomials() {
        assert_eq!(char_poly(&Diagram::build(Family::A, 1).unwrap()), z(&[0, 1]));
        assert_eq!(char_poly(&Diagram::build(Family::D, 4).unwrap()), z(&[0, 0, -3, 0, 1]));
        assert_eq!(char_poly(&Diagram::build(Family::AffA, 2).unwrap()), z(&[-2, -3, 0, 1]));
    }

    #[test]
    fn schur_step_on_a2_end() {
        let a2 = Diagram::build(Family::A, 2).unwrap();
        let s = schur_step(&a2, 0).unwrap();
        assert_eq!(s.branches.len(), 1);
        assert!(s.cross.is_empty());
        assert_eq!(s.branches[0].poly, IntLaurent::one());
        assert_eq!(s.reassemble(), coxeter_poly(&a2));
    }

    #[test]
    fn schur_step_d4_center_has_no_cross_terms_left() {
        let d4 = Diagram::build(Family::D, 4).unwrap();
        let s = schur_step(&d4, 1).unwrap();
        assert_eq!(s.branches.len(), 3);
        assert!(s.cross.iter().all(|c| c.cofactor.is_zero()));
        assert_eq!(s.reassemble(), coxeter_poly(&d4));
    }

    #[test]
    fn schur_step_single_vertex() {
        let s = schur_step(&Diagram::new(1), 0).unwrap();
        assert!(s.branches.is_empty());
        assert_eq!(s.reassemble(), IntLaurent::z());
        assert!(schur_step(&Diagram::new(1), 3).is_err());
    }

    #[test]
    fn join_matches_direct_computation() {
        let p = (Diagram::new(1), 0);
        let star = join_poly(&[p.clone(), p.clone(), p]).unwrap();
        assert_eq!(ZPoly::q_to_z(&star).unwrap(), z(&[0, 0, -3, 0, 1]));
        let a2 = Diagram::build(Family::A, 2).unwrap();
        let a3 = join_poly(&[(a2, 0)]).unwrap();
        assert_eq!(ZPoly::q_to_z(&a3).unwrap(), z(&[0, -2, 0, 1]));
        assert_eq!(join_poly(&[]).unwrap(), IntLaurent::z());
    }

    #[test]
    fn cofactor_examples() {
        let t = cofactors(&Diagram::build(Family::A, 1).unwrap());
        assert_eq!(t.h(0, 0), &ZPoly::one());
        let t = cofactors(&Diagram::build(Family::A, 2).unwrap());
        assert_eq!(t.h(0, 0), &ZPoly::x());
        assert_eq!(t.h(0, 1), &ZPoly::one());
    }

    #[test]
    fn triangle_has_two_routes() {
        let tri = Diagram::build(Family::AffA, 2).unwrap();
        assert_eq!(simple_paths(&tri, 0, 1).len(), 2);
        assert_eq!(path_sum_h(&tri, 0, 1).unwrap(), cofactors(&tri).h(0, 1).clone());
        assert_eq!(walk_gf(&tri, 0, 0, 2).unwrap(), vec![1, 0, 2]);
    }

    #[test]
    fn identity7_on_a2() {
        let a2 = Diagram::build(Family::A, 2).unwrap();
        assert!(identity7_check(&a2, 0, 1).unwrap().is_zero());
    }
}
