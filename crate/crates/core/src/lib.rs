//! Power sums of the rows of hyperbolic Pascal triangles {4,q} and the linear
//! recurrences they satisfy.
//!
//! - [`triangle`]: row generation with vertex types and row counts.
//! - [`sums`]: power sums, pair sums, state vectors and the step oracle.
//! - [`exactalg`]: polynomials over Z and Z\[q\], matrices, characteristic polynomials.
//! - [`system`]: system matrices and recurrence extraction.
//! - [`verify`]: brute-force verification, table reproduction and conjecture probes.
//! - [`cli`]: the `hpt` command line.

pub mod cli;
pub mod error;
pub mod exactalg;
pub mod json;
pub mod sums;
pub mod system;
pub mod triangle;
pub mod verify;

pub use error::{Error, Result};
