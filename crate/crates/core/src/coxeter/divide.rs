//! Three-block matrices with block relation `AB = 2C`.
//!
//! The matrix is
//!
//! ```text
//! ⎡ zE      −qA      qC ⎤
//! ⎢ −q⁻¹Aᵗ  zE      −qB ⎥
//! ⎣ q⁻¹Cᵗ   −q⁻¹Bᵗ   zE ⎦
//! ```
//!
//! with `A: n1×n2`, `B: n2×n3`, `C: n1×n3`. Eliminating the middle block
//! gives `det = z^{n2} · det N` for any `A, B, C`; when `AB = 2C` this
//! simplifies to `det / (det X det Y) = z^{n2} det(E − (4z⁻² − 1) Cᵗ X⁻¹ C Y⁻¹)`
//! with `X = zE − z⁻¹AAᵗ`, `Y = zE − z⁻¹BᵗB`.

use crate::algebra::{det_exact, det_field, inverse_field, Coeff, IntLaurent, Matrix, RatFunc, Ring};
use crate::error::{Error, Result};

type Q = RatFunc<IntLaurent>;

#[derive(Clone, Debug)]
pub struct DivideReport {
    /// Determinant of the full block matrix.
    pub det: IntLaurent,
    /// `z^{n2} det N`, from eliminating the middle block.
    pub schur: Q,
    pub schur_holds: bool,
    /// `det / (det X det Y)`.
    pub lhs: Q,
    /// `z^{n2} det(E − (4z⁻² − 1) Cᵗ X⁻¹ C Y⁻¹)`.
    pub rhs: Q,
    pub equal: bool,
}

fn lift(m: &Matrix<Coeff>, unit: &IntLaurent) -> Matrix<IntLaurent> {
    m.map(|&c| unit.scale(c))
}

fn to_q(m: &Matrix<IntLaurent>) -> Matrix<Q> {
    m.map(|p| RatFunc::from_poly(p.clone()))
}

fn ident(n: usize, s: &Q) -> Matrix<Q> {
    Matrix::<Q>::identity(n).scale(s)
}

pub fn divide_identity(a: &Matrix<Coeff>, b: &Matrix<Coeff>, c: &Matrix<Coeff>) -> Result<DivideReport> {
    let (n1, n2, n3) = (a.rows(), a.cols(), b.cols());
    if b.rows() != n2 || c.rows() != n1 || c.cols() != n3 {
        return Err(Error::DimensionMismatch(format!(
            "A {}x{}, B {}x{}, C {}x{}",
            n1,
            n2,
            b.rows(),
            b.cols(),
            c.rows(),
            c.cols()
        )));
    }
    if a.mul(b) != c.scale(&2) {
        return Err(Error::PreconditionABneq2C);
    }
    let q = IntLaurent::q();
    let qi = IntLaurent::monomial(1, -1);
    let z = IntLaurent::z();
    let zeye = |n: usize| Matrix::<IntLaurent>::identity(n).scale(&z);
    let (at, bt, ct) = (a.transpose(), b.transpose(), c.transpose());
    let full = Matrix::block(&[
        vec![zeye(n1), lift(a, &-&q), lift(c, &q)],
        vec![lift(&at, &-&qi), zeye(n2), lift(b, &-&q)],
        vec![lift(&ct, &qi), lift(&bt, &-&qi), zeye(n3)],
    ]);
    let det = det_exact(&full);

    let zq: Q = RatFunc::from_poly(z.clone());
    let zinv = zq.recip()?;
    let qq: Q = RatFunc::from_poly(q.clone());
    let qiq: Q = RatFunc::from_poly(qi.clone());
    let aq = to_q(&a.map(|&x| IntLaurent::constant(x)));
    let bq = to_q(&b.map(|&x| IntLaurent::constant(x)));
    let cq = to_q(&c.map(|&x| IntLaurent::constant(x)));
    let (atq, btq, ctq) = (aq.transpose(), bq.transpose(), cq.transpose());
    let x = ident(n1, &zq).sub(&aq.mul(&atq).scale(&zinv));
    let y = ident(n3, &zq).sub(&btq.mul(&bq).scale(&zinv));
    let upper = cq.scale(&qq).sub(&aq.mul(&bq).scale(&(&(&qq * &qq) * &zinv)));
    let lower = ctq.scale(&qiq).sub(&btq.mul(&atq).scale(&(&(&qiq * &qiq) * &zinv)));
    let n = Matrix::block(&[vec![x.clone(), upper], vec![lower, y.clone()]]);
    let zpow = zq.pow(n2 as u32);
    let schur = &zpow * &det_field(&n);
    let det_q = RatFunc::from_poly(det.clone());
    let schur_holds = schur == det_q;

    let dx = det_field(&x);
    let dy = det_field(&y);
    let lhs = det_q.div(&(&dx * &dy))?;
    let four = RatFunc::from_poly(IntLaurent::constant(4));
    let factor = &(&four * &(&zinv * &zinv)) - &Q::one();
    let xi = inverse_field(&x).ok_or(Error::ZeroDenominator)?;
    let yi = inverse_field(&y).ok_or(Error::ZeroDenominator)?;
    let k = ctq.mul(&xi).mul(&cq).mul(&yi).scale(&factor);
    let rhs = &zpow * &det_field(&Matrix::identity(n3).sub(&k));
    let equal = lhs == rhs;
    Ok(DivideReport {
        det,
        schur,
        schur_holds,
        lhs,
        rhs,
        equal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: Vec<Vec<Coeff>>) -> Matrix<Coeff> {
        Matrix::from_rows(rows)
    }

    #[test]
    fn smallest_instance() {
        let r = divide_identity(&m(vec![vec![2]]), &m(vec![vec![1]]), &m(vec![vec![1]])).unwrap();
        assert!(r.schur_holds);
        assert!(r.equal);
    }

    #[test]
    fn empty_blocks() {
        let e = Matrix::<Coeff>::zeros(0, 0);
        let r = divide_identity(&e, &e, &e).unwrap();
        assert_eq!(r.det, IntLaurent::one());
        assert!(r.schur_holds && r.equal);
    }

    #[test]
    fn precondition_and_shapes_are_checked() {
        let one = m(vec![vec![1]]);
        assert_eq!(
            divide_identity(&one, &one, &one).unwrap_err(),
            Error::PreconditionABneq2C
        );
        let wide = m(vec![vec![1, 1]]);
        assert!(matches!(
            divide_identity(&one, &wide, &one),
            Err(Error::DimensionMismatch(_))
        ));
    }
}
