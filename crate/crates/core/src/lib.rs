//! Exact computation with Coxeter polynomials of weighted Dynkin diagrams,
//! branching continued fractions, Christoffel–Darboux identities, Kostant
//! Poincaré series of binary polyhedral groups, and Burau/Magnus/Milnor
//! invariants of pure braids.

pub mod algebra;
pub mod braid;
pub mod cfrac;
pub mod coxeter;
pub mod diagram;
pub mod error;
pub mod identities;
pub mod kostant;
pub mod report;

pub use error::{Error, Result};
