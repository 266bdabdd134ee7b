//! Exact arithmetic: rationals, Laurent polynomials and rational functions
//! in q and t, and sparse polynomials in the x variables.

pub mod ctx;
pub mod error;
pub mod field;
mod gcd;
pub mod linalg;
pub mod qtpoly;
pub mod ratqt;
pub mod xpoly;

pub use ctx::{Ctx, PointSampler};
pub use error::AlgebraError;
pub use field::{fmt_rat, rat, BigRat, Field};
pub use qtpoly::QTPoly;
pub use ratqt::RatQT;
pub use xpoly::Poly;
