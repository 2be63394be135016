//! Torus actions on type-A Hessenberg varieties for skeletal nilpotent
//! operators, computed in exact rational arithmetic.
//!
//! A Hessenberg variety `H(X, h)` sits inside the flag variety of `GL(n)`:
//! it is the set of flags `gB` whose columns satisfy the span conditions
//! `X g_j ∈ V_g^{h(j)}`.  For `X` skeletal nilpotent (strictly upper
//! triangular, at most one nonzero entry per row and per column) this crate
//! answers questions such as:
//!
//! * which subtorus of the diagonal torus `T` stabilizes `H(X, h)`,
//! * whether `H(F_2, h)` is `T`-stable (closed form and brute force),
//! * whether `H(F_2, h)` is GKM with respect to its canonical codimension-one
//!   subtorus, and
//! * what the moment graph of a variety with a sufficient torus action is.
//!
//! All linear algebra is over arbitrary-precision rationals; there is no
//! floating-point code path.  Row, column, and permutation indices are
//! 1-based throughout the public API, matching the usual conventions for
//! pivots and one-line notation.

pub mod classify;
pub mod combinat;
pub mod error;
pub mod exactla;
pub mod hess;
pub mod json;
pub mod sample;
pub mod torus;

pub use error::Error;

/// Exact scalar used for all matrix entries.
pub type Rat = num::BigRational;
/// Arbitrary-precision integer used for character lattices.
pub type Int = num::BigInt;

pub type Result<T> = std::result::Result<T, Error>;

/// Shorthand for building a rational from a numerator/denominator pair.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(num.into(), den.into())
}

/// Shorthand for building an integer rational.
pub fn ratint(num: i64) -> Rat {
    Rat::from_integer(num.into())
}
