//! Exact arithmetic: Laurent polynomials, polynomials in `z`, two-variable
//! Laurent polynomials, truncated series, fractions and determinants.

pub mod bilaurent;
pub mod laurent;
pub mod matrix;
pub mod ratfunc;
pub mod ring;
pub mod series;
pub mod text;
pub mod zpoly;

pub use bilaurent::{bezoutian, wronskian, BiLaurent};
pub use laurent::IntLaurent;
pub use matrix::{det_bareiss, det_exact, det_field, det_laplace, det_zpoly, inverse_field, Matrix};
pub use ratfunc::{GcdRing, RatFunc};
pub use ring::{Coeff, Field, Ring};
pub use series::{sqrt1p, TruncSeries, DEFAULT_ORDER};
pub use zpoly::ZPoly;
