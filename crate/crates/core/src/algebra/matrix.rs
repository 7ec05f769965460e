//! Dense matrices over a ring and exact determinants.

use std::fmt;

use super::laurent::IntLaurent;
use super::ring::{Field, Ring};
use super::zpoly::ZPoly;

/// Below this size determinants use cofactor expansion.
pub const LAPLACE_MAX: usize = 6;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: Ring> Matrix<R> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![R::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, R::one());
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<R>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix rows");
        Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.data[i * self.cols + j] = v;
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |i, j| {
            self.get(i, j).clone() + other.get(i, j).clone()
        })
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |i, j| {
            self.get(i, j).clone() - other.get(i, j).clone()
        })
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "incompatible matrix product");
        Self::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = R::zero();
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                acc = acc + a.clone() * other.get(k, j).clone();
            }
            acc
        })
    }

    pub fn scale(&self, s: &R) -> Self {
        self.map(|x| x.clone() * s.clone())
    }

    /// Keeps the listed rows and columns, in the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| {
            self.get(rows[i], cols[j]).clone()
        })
    }

    /// Deletes row `r` and column `c`.
    pub fn minor(&self, r: usize, c: usize) -> Self {
        let rows: Vec<usize> = (0..self.rows).filter(|&i| i != r).collect();
        let cols: Vec<usize> = (0..self.cols).filter(|&j| j != c).collect();
        self.select(&rows, &cols)
    }

    /// Block matrix from a grid of blocks with consistent sizes.
    pub fn block(blocks: &[Vec<Matrix<R>>]) -> Self {
        let heights: Vec<usize> = blocks.iter().map(|row| row[0].rows).collect();
        let widths: Vec<usize> = blocks[0].iter().map(|b| b.cols).collect();
        let mut out = Self::zeros(heights.iter().sum(), widths.iter().sum());
        let mut r0 = 0;
        for (bi, row) in blocks.iter().enumerate() {
            let mut c0 = 0;
            for (bj, b) in row.iter().enumerate() {
                assert_eq!((b.rows, b.cols), (heights[bi], widths[bj]), "block size");
                for i in 0..b.rows {
                    for j in 0..b.cols {
                        out.set(r0 + i, c0 + j, b.get(i, j).clone());
                    }
                }
                c0 += widths[bj];
            }
            r0 += heights[bi];
        }
        out
    }
}

/// Cofactor expansion along the first row.
pub fn det_laplace<R: Ring>(m: &Matrix<R>) -> R {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let cols: Vec<usize> = (0..m.cols).collect();
    laplace_rec(m, 0, &cols)
}

fn laplace_rec<R: Ring>(m: &Matrix<R>, row: usize, cols: &[usize]) -> R {
    match cols.len() {
        0 => R::one(),
        1 => m.get(row, cols[0]).clone(),
        _ => {
            let mut acc = R::zero();
            for (k, &c) in cols.iter().enumerate() {
                let a = m.get(row, c);
                if a.is_zero() {
                    continue;
                }
                let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                let term = a.clone() * laplace_rec(m, row + 1, &rest);
                acc = if k % 2 == 0 { acc + term } else { acc - term };
            }
            acc
        }
    }
}

/// Gaussian elimination over a field.
pub fn det_field<F: Field>(m: &Matrix<F>) -> F {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let n = m.rows;
    let mut a = m.clone();
    let mut det = F::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a.get(i, k).is_zero()) else {
            return F::zero();
        };
        if p != k {
            for j in 0..n {
                let t = a.get(p, j).clone();
                a.set(p, j, a.get(k, j).clone());
                a.set(k, j, t);
            }
            det = -det;
        }
        let piv = a.get(k, k).clone();
        det = det * piv.clone();
        let inv = piv.inv().expect("nonzero pivot is invertible");
        for i in k + 1..n {
            let f = a.get(i, k).clone() * inv.clone();
            if f.is_zero() {
                continue;
            }
            for j in k..n {
                let v = a.get(i, j).clone() - f.clone() * a.get(k, j).clone();
                a.set(i, j, v);
            }
        }
    }
    det
}

/// Inverse over a field by Gauss–Jordan elimination; `None` if singular.
pub fn inverse_field<F: Field>(m: &Matrix<F>) -> Option<Matrix<F>> {
    assert!(m.is_square(), "inverse of a non-square matrix");
    let n = m.rows;
    let mut a = m.clone();
    let mut inv = Matrix::<F>::identity(n);
    for k in 0..n {
        let p = (k..n).find(|&i| !a.get(i, k).is_zero())?;
        if p != k {
            for j in 0..n {
                let t = a.get(p, j).clone();
                a.set(p, j, a.get(k, j).clone());
                a.set(k, j, t);
                let t = inv.get(p, j).clone();
                inv.set(p, j, inv.get(k, j).clone());
                inv.set(k, j, t);
            }
        }
        let piv = a.get(k, k).inv()?;
        for j in 0..n {
            a.set(k, j, a.get(k, j).clone() * piv.clone());
            inv.set(k, j, inv.get(k, j).clone() * piv.clone());
        }
        for i in 0..n {
            if i == k || a.get(i, k).is_zero() {
                continue;
            }
            let f = a.get(i, k).clone();
            for j in 0..n {
                a.set(i, j, a.get(i, j).clone() - f.clone() * a.get(k, j).clone());
                inv.set(i, j, inv.get(i, j).clone() - f.clone() * inv.get(k, j).clone());
            }
        }
    }
    Some(inv)
}

/// Fraction-free Bareiss elimination over ℤ[z].
pub fn det_bareiss(m: &Matrix<ZPoly>) -> ZPoly {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let n = m.rows;
    if n == 0 {
        return ZPoly::one();
    }
    let mut a = m.clone();
    let mut prev = ZPoly::one();
    let mut sign = false;
    for k in 0..n - 1 {
        let Some(p) = (k..n).find(|&i| !a.get(i, k).is_zero()) else {
            return ZPoly::zero();
        };
        if p != k {
            for j in 0..n {
                let t = a.get(p, j).clone();
                a.set(p, j, a.get(k, j).clone());
                a.set(k, j, t);
            }
            sign = !sign;
        }
        let piv = a.get(k, k).clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &(a.get(i, j) * &piv) - &(a.get(i, k) * a.get(k, j));
                let v = v.div_exact(&prev).expect("Bareiss step divides exactly");
                a.set(i, j, v);
            }
            a.set(i, k, ZPoly::zero());
        }
        prev = piv;
    }
    let d = a.get(n - 1, n - 1).clone();
    if sign {
        -d
    } else {
        d
    }
}

/// Determinant over ℤ[z]: cofactor expansion for small sizes, Bareiss above.
pub fn det_zpoly(m: &Matrix<ZPoly>) -> ZPoly {
    if m.rows <= LAPLACE_MAX {
        det_laplace(m)
    } else {
        det_bareiss(m)
    }
}

/// Exact determinant over ℤ[q, q⁻¹].
///
/// Large matrices are made polynomial by shifting each row by a power of
/// `q`, reduced with Bareiss, and shifted back.
pub fn det_exact(m: &Matrix<IntLaurent>) -> IntLaurent {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let n = m.rows;
    if n <= LAPLACE_MAX {
        return det_laplace(m);
    }
    let mut total_shift = 0i32;
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let low = (0..n)
            .filter_map(|j| m.get(i, j).min_exp())
            .min()
            .unwrap_or(0);
        total_shift += low;
        rows.push(
            (0..n)
                .map(|j| {
                    let (v, p) = m.get(i, j).shift(-low).to_poly_parts();
                    shift_poly(&p, v as usize)
                })
                .collect(),
        );
    }
    let d = det_bareiss(&Matrix::from_rows(rows));
    IntLaurent::from_poly(&d, total_shift)
}

fn shift_poly(p: &ZPoly, k: usize) -> ZPoly {
    if p.is_zero() {
        return ZPoly::zero();
    }
    let mut c = vec![0; k];
    c.extend_from_slice(p.coeffs());
    ZPoly::from_coeffs(c)
}

/// Signed cofactor `(-1)^{i+j} det(minor(i, j))` using `det`.
pub fn cofactor<R: Ring>(m: &Matrix<R>, i: usize, j: usize, det: impl Fn(&Matrix<R>) -> R) -> R {
    let d = det(&m.minor(i, j));
    if (i + j).is_multiple_of(2) {
        d
    } else {
        -d
    }
}

impl<R: Ring + fmt::Display> fmt::Debug for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratfunc::RatFunc;

    fn l(t: &[(i32, i128)]) -> IntLaurent {
        IntLaurent::from_terms(t.iter().copied())
    }

    #[test]
    fn small_determinants() {
        let z = IntLaurent::z();
        assert_eq!(det_exact(&Matrix::from_rows(vec![vec![z.clone()]])), z);
        let m = Matrix::from_rows(vec![
            vec![z.clone(), l(&[(1, -1)])],
            vec![l(&[(-1, -1)]), z.clone()],
        ]);
        assert_eq!(det_exact(&m), l(&[(2, 1), (0, 1), (-2, 1)]));
        assert_eq!(det_exact(&Matrix::<IntLaurent>::zeros(0, 0)), IntLaurent::one());
    }

    #[test]
    fn bareiss_matches_laplace_on_path_matrices() {
        // tridiagonal zE - A for a path on 8 vertices
        let n = 8;
        let m = Matrix::from_fn(n, n, |i, j| {
            if i == j {
                ZPoly::x()
            } else if i.abs_diff(j) == 1 {
                ZPoly::constant(-1)
            } else {
                ZPoly::zero()
            }
        });
        assert_eq!(det_bareiss(&m), det_laplace(&m));
    }

    #[test]
    fn bareiss_handles_zero_pivot() {
        let m = Matrix::from_rows(vec![
            vec![ZPoly::zero(), ZPoly::one(), ZPoly::zero()],
            vec![ZPoly::one(), ZPoly::zero(), ZPoly::zero()],
            vec![ZPoly::zero(), ZPoly::zero(), ZPoly::x()],
        ]);
        assert_eq!(det_bareiss(&m), -ZPoly::x());
        assert_eq!(det_laplace(&m), -ZPoly::x());
    }

    #[test]
    fn large_laurent_determinant_shifts_back() {
        let n = 7;
        let m = Matrix::from_fn(n, n, |i, j| {
            if i == j {
                IntLaurent::z()
            } else if j == i + 1 {
                l(&[(1, -1)])
            } else if i == j + 1 {
                l(&[(-1, -1)])
            } else {
                IntLaurent::zero()
            }
        });
        assert_eq!(det_exact(&m), det_laplace(&m));
    }

    #[test]
    fn field_inverse_round_trip() {
        let m = Matrix::from_rows(vec![
            vec![ZPoly::x(), ZPoly::constant(-1)],
            vec![ZPoly::constant(-1), ZPoly::x()],
        ])
        .map(|p| RatFunc::from_poly(p.clone()));
        let inv = inverse_field(&m).unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2));
        let singular = Matrix::<RatFunc<ZPoly>>::zeros(2, 2);
        assert!(inverse_field(&singular).is_none());
    }

    #[test]
    fn field_determinant_agrees() {
        let m = Matrix::from_rows(vec![
            vec![ZPoly::x(), ZPoly::constant(-1)],
            vec![ZPoly::constant(-1), ZPoly::x()],
        ]);
        let mf = m.map(|p| RatFunc::from_poly(p.clone()));
        assert_eq!(det_field(&mf), RatFunc::from_poly(det_laplace(&m)));
    }
}
