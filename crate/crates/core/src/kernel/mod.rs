//! Exact scalars, polynomials and dense complex matrices.

mod cmatrix;
mod poly;
mod qpoly;
mod ratfun;
mod ring;

pub use cmatrix::ComplexMatrix;
pub use poly::{BiPoly, Poly};
pub use qpoly::QPoly;
pub use ratfun::RatFun;
pub use ring::Ring;

pub use num_complex::Complex64;
pub use num_rational::BigRational;

/// Polynomial in `x` over rational functions in `q`.
pub type XPoly = Poly<RatFun>;
