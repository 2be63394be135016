//! Combinatorial ground types: permutations, Hessenberg functions, and
//! skeletal nilpotent operators, together with the two explicit
//! constructions used throughout the crate (the chain-chasing circle
//! permutation and the greedy witness flag).

mod greedy;
mod hessenberg;
mod permutation;
mod skeletal;

pub use greedy::greedy_witness;
pub use hessenberg::{enumerate_hessenberg_functions, HessenbergFunction};
pub use permutation::Permutation;
pub use skeletal::{circle_permutation, SkeletalNilpotent};
