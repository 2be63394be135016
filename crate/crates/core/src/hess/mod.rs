//! The Hessenberg-condition engine: membership tests, the column test and
//! its torus constraints, torus-stable curve containment, cell coordinate
//! profiles, and sampled stabilizer bounds.

mod cell;
mod constraint;
mod curve;
mod member;
mod stabilizer;

pub use cell::{cell_profile, CellProfile, CoordStatus};
pub use constraint::{column_test, TorusConstraintReport, VacuousReason};
pub use curve::{curve_in_variety, curve_in_variety_with_samples};
pub use member::{member, member_fixed_point, member_raw};
pub use stabilizer::{stabilizer_estimate, StabilizerEstimate};
