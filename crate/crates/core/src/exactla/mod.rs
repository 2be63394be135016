//! Exact linear algebra over arbitrary-precision rationals: pivots,
//! normalized Schubert form, span membership, and the pivot/dependent
//! block decomposition of augmented column systems.

mod flag;
mod matrix;
mod system;

pub use flag::{normalize_schubert, FlagMatrix};
pub use matrix::{piv, in_span, RationalMatrix};
pub use system::{column_system, verify_constraint, ColumnSystem};
