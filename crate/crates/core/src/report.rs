//! Outcome of checking one exact identity.

use std::fmt;

use num_rational::BigRational;

use crate::algebra::{BiLaurent, IntLaurent, RatFunc, Ring, TruncSeries, ZPoly};

/// A value on one side of an identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Bi(BiLaurent),
    Laurent(IntLaurent),
    Poly(ZPoly),
    Frac(RatFunc<IntLaurent>),
    ZFrac(RatFunc<ZPoly>),
    Rational(BigRational),
    Series(TruncSeries),
}

impl Expr {
    pub fn is_zero(&self) -> bool {
        match self {
            Expr::Bi(p) => p.is_zero(),
            Expr::Laurent(p) => p.is_zero(),
            Expr::Poly(p) => p.is_zero(),
            Expr::Frac(p) => p.is_zero(),
            Expr::ZFrac(p) => p.is_zero(),
            Expr::Rational(p) => p.is_zero(),
            Expr::Series(p) => p.is_zero(),
        }
    }

    /// Number of monomials (numerator monomials for fractions).
    pub fn term_count(&self) -> usize {
        match self {
            Expr::Bi(p) => p.len(),
            Expr::Laurent(p) => p.len(),
            Expr::Poly(p) => p.coeffs().iter().filter(|c| **c != 0).count(),
            Expr::Frac(p) => p.num().len(),
            Expr::ZFrac(p) => p.num().coeffs().iter().filter(|c| **c != 0).count(),
            Expr::Rational(p) => usize::from(!p.is_zero()),
            Expr::Series(p) => p.coeffs().iter().filter(|c| !c.is_zero()).count(),
        }
    }

    fn minus(&self, other: &Expr) -> Expr {
        match (self, other) {
            (Expr::Bi(a), Expr::Bi(b)) => Expr::Bi(a - b),
            (Expr::Laurent(a), Expr::Laurent(b)) => Expr::Laurent(a - b),
            (Expr::Poly(a), Expr::Poly(b)) => Expr::Poly(a - b),
            (Expr::Frac(a), Expr::Frac(b)) => Expr::Frac(a - b),
            (Expr::ZFrac(a), Expr::ZFrac(b)) => Expr::ZFrac(a - b),
            (Expr::Rational(a), Expr::Rational(b)) => Expr::Rational(a - b),
            (Expr::Series(a), Expr::Series(b)) => Expr::Series(a - b),
            _ => panic!("identity sides live in different rings"),
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Bi(p) => write!(f, "{p}"),
            Expr::Laurent(p) => write!(f, "{p}"),
            Expr::Poly(p) => write!(f, "{p}"),
            Expr::Frac(p) => write!(f, "{p}"),
            Expr::ZFrac(p) => write!(f, "{p}"),
            Expr::Rational(p) => write!(f, "{p}"),
            Expr::Series(p) => write!(f, "{}", p.render("u")),
        }
    }
}

impl From<BiLaurent> for Expr {
    fn from(p: BiLaurent) -> Self {
        Expr::Bi(p)
    }
}

impl From<IntLaurent> for Expr {
    fn from(p: IntLaurent) -> Self {
        Expr::Laurent(p)
    }
}

impl From<ZPoly> for Expr {
    fn from(p: ZPoly) -> Self {
        Expr::Poly(p)
    }
}

impl From<RatFunc<IntLaurent>> for Expr {
    fn from(p: RatFunc<IntLaurent>) -> Self {
        Expr::Frac(p)
    }
}

impl From<RatFunc<ZPoly>> for Expr {
    fn from(p: RatFunc<ZPoly>) -> Self {
        Expr::ZFrac(p)
    }
}

impl From<TruncSeries> for Expr {
    fn from(p: TruncSeries) -> Self {
        Expr::Series(p)
    }
}

impl From<BigRational> for Expr {
    fn from(p: BigRational) -> Self {
        Expr::Rational(p)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub name: String,
    pub lhs: Expr,
    pub rhs: Expr,
    pub residual: Expr,
    pub holds: bool,
}

impl IdentityReport {
    pub fn compare(name: impl Into<String>, lhs: impl Into<Expr>, rhs: impl Into<Expr>) -> Self {
        let (lhs, rhs) = (lhs.into(), rhs.into());
        let residual = lhs.minus(&rhs);
        let holds = residual.is_zero();
        Self {
            name: name.into(),
            lhs,
            rhs,
            residual,
            holds,
        }
    }

    pub fn residual_terms(&self) -> usize {
        self.residual.term_count()
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.holds { "holds" } else { "FAILS" };
        write!(f, "{}: {status}", self.name)?;
        if !self.holds {
            write!(f, " (residual {})", self.residual)?;
        }
        Ok(())
    }
}

/// True when every report holds.
pub fn all_hold(reports: &[IdentityReport]) -> bool {
    reports.iter().all(|r| r.holds)
}
