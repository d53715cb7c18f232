//! Exact computations on numerical semigroups: Apery sets, (generalized)
//! Feng-Rao distances, the second Feng-Rao number, inductive semigroups
//! and their closed forms, recursive-tower semigroups, and the code
//! bounds they feed.

pub mod codes;
pub mod error;
pub mod inductive;
pub mod patterns;
pub mod semigroup;
pub mod tower;

pub use codes::{
    bounds_table, d2_lower_bound, default_bounds_range, delta_arf_closed, generic_dr_bound,
    griesmer_order_bound, BoundsRow, BoundsTable, Winner,
};

pub use error::{Error, Result};
pub use inductive::{
    is_inductive, is_inductive_naive, multiple_of, quotient_by, InductiveDescriptor, Partition,
};
pub use patterns::{admits_pattern, is_arf, is_saturated, Admission, Pattern};
pub use semigroup::{AperySet, NumericalSemigroup};
pub use tower::TowerParams;
