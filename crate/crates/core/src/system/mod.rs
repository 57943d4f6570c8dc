//! Linear systems for the state vectors, their characteristic polynomials,
//! and the scalar recurrences for `(s^k)_n` derived from them.

mod builder;
mod initial;
mod orbit;
mod recurrence;
mod structured;

pub use builder::{build_full_matrix, build_reduced_matrix, build_system, LinearSystem};
pub use initial::{initial_values_numeric, initial_values_symbolic, STREAM_ENTRY_CAP};
pub use orbit::{matrix_from_orbit, RationalMatrix};
pub use recurrence::{
    derive_recurrence, derive_with_lift, lift_inhomogeneous, recurrence_for_k,
    recurrence_for_k_with, recurrence_from_polynomial, recurrence_stripping, Recurrence,
    RecurrenceSource,
};
pub use structured::{
    build_structured_charpoly, structured_addends, structured_determinant, StructuredAddends,
};
