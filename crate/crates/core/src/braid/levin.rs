//! Alexander–Conway catalog for small closures, the Burau determinant
//! ratio against it, and the two-strand Levin formula.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::magnus::magnus;
use super::{det_ratio, longitudes, BraidWord, BurauKind};
use crate::algebra::{sqrt1p, IntLaurent, RatFunc, Ring, TruncSeries};
use crate::coxeter::alexander_conway;
use crate::diagram::{Diagram, Family};
use crate::error::{Error, Result};
use crate::report::IdentityReport;

/// Alexander–Conway polynomial of the `(2, k)` torus link, the closure of
/// `σ_1^k`: `0` for `k = 0`, the unknot for `|k| = 1`, mirrors for `k < 0`.
pub fn torus_link(k: i64) -> IntLaurent {
    match k.unsigned_abs() {
        0 => IntLaurent::zero(),
        1 => IntLaurent::one(),
        m => {
            let seifert = Diagram::build(Family::A, m as usize - 1).expect("path");
            let p = alexander_conway(&seifert);
            if k < 0 {
                p.invert_var()
            } else {
                p
            }
        }
    }
}

/// Named closures: `unknot`, `unlink`, `hopf`, `trefoil`, `T(2,k)`.
pub fn catalog(name: &str) -> Result<IntLaurent> {
    let key = name.trim().to_ascii_lowercase();
    let torus = |s: &str| -> Option<i64> {
        s.strip_prefix("t(2,")?.strip_suffix(')')?.trim().parse().ok()
    };
    Ok(match key.as_str() {
        "unknot" => IntLaurent::one(),
        "unlink" => IntLaurent::zero(),
        "hopf" => torus_link(2),
        "trefoil" => torus_link(3),
        _ => torus_link(torus(&key).ok_or_else(|| Error::UnknownClosure(name.into()))?),
    })
}

/// Closure of a braid word, when catalogued: every 2-strand word closes to
/// the torus link of its exponent sum.
pub fn closure_conway(b: &BraidWord) -> Result<IntLaurent> {
    match b.strands() {
        1 => Ok(IntLaurent::one()),
        2 => Ok(torus_link(b.exponent_sum())),
        n => Err(Error::UnknownClosure(format!("closure of a {n}-strand braid"))),
    }
}

/// `±q^k` with `a = ±q^k · b`, if any.
fn unit_between(a: &RatFunc<IntLaurent>, b: &RatFunc<IntLaurent>) -> Option<(i128, i32)> {
    if a.is_zero() || b.is_zero() {
        return (a.is_zero() && b.is_zero()).then_some((1, 0));
    }
    let r = a.div(b).ok()?;
    let (num, den) = (r.num(), r.den());
    if !num.is_monomial() || !den.is_monomial() {
        return None;
    }
    let (en, cn) = num.terms().next()?;
    let (ed, cd) = den.terms().next()?;
    (cn.abs() == cd.abs()).then_some((cn.signum() * cd.signum(), en - ed))
}

/// Burau ratio `det(E − β(L)) / det(E − β(B·L))` at `t = q²` against the
/// catalogued `A_{L̂} / A_{(BL)^}`, up to a unit `±q^k` named in the report.
pub fn conway_ratio_check(l: &BraidWord, b: &BraidWord) -> Result<IdentityReport> {
    let burau_side = det_ratio(l, b, BurauKind::Reduced)?;
    let squared = RatFunc::new(burau_side.num().subs_pow(2), burau_side.den().subs_pow(2))?;
    let catalog_side = RatFunc::new(closure_conway(l)?, closure_conway(&b.concat(l)?)?)?;
    let (sign, k) = unit_between(&squared, &catalog_side).unwrap_or((1, 0));
    let unit = RatFunc::from_poly(IntLaurent::monomial(sign, k));
    Ok(IdentityReport::compare(
        format!("Burau ratio [{l}] / [{b} {l}] (unit {}q^{k})", if sign < 0 { "-" } else { "" }),
        squared,
        &unit * &catalog_side,
    ))
}

/// Writes a polynomial invariant under `q ↦ −q⁻¹` as `Σ c_k w^k` with
/// `w = q − q⁻¹`.
pub fn conway_to_w(p: &IntLaurent) -> Option<Vec<i128>> {
    let w = &IntLaurent::q() - &IntLaurent::monomial(1, -1);
    let mut rest = p.clone();
    let mut out = Vec::new();
    while let Some(top) = rest.max_exp() {
        if top < 0 || rest.min_exp() != Some(-top) {
            return None;
        }
        let k = top as usize;
        if out.len() <= k {
            out.resize(k + 1, 0);
        }
        let c = rest.coeff(top);
        out[k] = c;
        rest = &rest - &w.pow(top as u32).scale(c);
    }
    Some(out)
}

fn rational(c: i128) -> BigRational {
    BigRational::from_integer(BigInt::from(c))
}

/// Levin's two-strand formula through `u^order` with supplied
/// Alexander–Conway polynomials of the vertical and horizontal closures:
/// `A_V / A_H = (1+u)^{1/2} Σ_k S_k u^{k+1}`, where
/// `S_k = Σ_{i_1 … i_k} μ_{i_1 … i_k, 1, 1}` and `q − q⁻¹ = u (1+u)^{−1/2}`.
pub fn levin_check_with(
    b: &BraidWord,
    order: usize,
    vertical: &IntLaurent,
    horizontal: &IntLaurent,
) -> Result<IdentityReport> {
    if b.strands() != 2 {
        return Err(Error::UnknownClosure(format!("{}-strand string link", b.strands())));
    }
    let long = longitudes(b)?;
    let m = magnus(&long[0], order);
    let mut sums = vec![0i128; order + 1];
    for (word, c) in m.terms() {
        if word.last() == Some(&1) && word.len() <= order {
            sums[word.len()] += c;
        }
    }
    let milnor_side = &sqrt1p(order) * &TruncSeries::from_ints(order, &sums);

    let not_conway = |what: &str| Error::UnknownClosure(format!("{what} closure is not a Conway polynomial"));
    let av = conway_to_w(vertical).ok_or_else(|| not_conway("vertical"))?;
    let ah = conway_to_w(horizontal).ok_or_else(|| not_conway("horizontal"))?;
    let w = &TruncSeries::var(order) * &sqrt1p(order).inverse().expect("unit constant term");
    let to_q = |v: &[i128]| v.iter().map(|&c| rational(c)).collect::<Vec<_>>();
    let ah_series = w.compose_poly(&to_q(&ah));
    let ratio = &w.compose_poly(&to_q(&av))
        * &ah_series.inverse().ok_or(Error::ZeroDenominator)?;
    Ok(IdentityReport::compare(
        format!("Levin formula for [{b}] through u^{order}"),
        ratio,
        milnor_side,
    ))
}

/// [`levin_check_with`] using the catalog: the vertical closure of `σ_1^k`
/// is the torus link `T(2, k)` and the horizontal closure is the unknot.
pub fn levin_check(b: &BraidWord, order: usize) -> Result<IdentityReport> {
    if b.strands() != 2 {
        return Err(Error::UnknownClosure(format!("{}-strand string link", b.strands())));
    }
    levin_check_with(b, order, &closure_conway(b)?, &IntLaurent::one())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BraidWord {
        BraidWord::parse(2, s).unwrap()
    }

    #[test]
    fn catalog_values() {
        assert_eq!(catalog("hopf").unwrap().to_string(), "q^-1 - q");
        assert_eq!(catalog("trefoil").unwrap(), IntLaurent::parse("q^-2 - 1 + q^2", "q").unwrap());
        assert_eq!(catalog("T(2,1)").unwrap(), IntLaurent::one());
        assert!(matches!(catalog("figure-eight"), Err(Error::UnknownClosure(_))));
        assert_eq!(conway_to_w(&catalog("trefoil").unwrap()), Some(vec![1, 0, 1]));
        assert_eq!(conway_to_w(&IntLaurent::q()), None);
    }

    #[test]
    fn burau_against_catalog() {
        assert!(conway_ratio_check(&w("s1"), &w("s1")).unwrap().holds);
        assert!(conway_ratio_check(&w("s1 s1 s1"), &w("-s1 -s1")).unwrap().holds);
        assert!(conway_ratio_check(&w("s1 s1"), &w("s1 s1 s1")).unwrap().holds);
    }

    #[test]
    fn hopf_levin() {
        assert!(levin_check(&w("s1 s1"), 16).unwrap().holds);
    }

    #[test]
    fn torus_levin() {
        for s in ["s1 s1 s1 s1", "-s1 -s1", "-s1 -s1 -s1 -s1", "s1 s1 s1 s1 s1 s1"] {
            let r = levin_check(&w(s), 12).unwrap();
            assert!(r.holds, "{r}");
        }
        let id = levin_check(&w(""), 8).unwrap();
        assert!(id.holds);
        assert_eq!(levin_check(&w("s1"), 8), Err(Error::NotPure));
    }
}
