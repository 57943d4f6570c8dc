//! Exact arithmetic: integer polynomials, polynomials over Z\[q\], dense
//! matrices, characteristic polynomials and interpolation.

mod binomial;
mod interp;
mod matrix;
mod poly;

pub use binomial::{binom, binom_i64};
pub use interp::{interpolate_i64, lagrange_interpolate};
pub use matrix::{IntMatrix, PolyMatrix, Q_SAMPLE_START};
pub use poly::{IntPoly, QPoly, XQPoly};

pub(crate) use matrix::interpolate_x_coefficients;
