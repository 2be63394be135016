//! Closed-form and brute-force classifiers for the `F_2` family, moment
//! graphs, union-of-Schubert certificates, and maximal-subtorus verdicts
//! for `F_k`.

mod gkm;
mod graph;
mod maxtorus;
mod schubert;
mod stability;

pub use gkm::{brute_f2_gkm, classify_f2_gkm};
pub use graph::{moment_graph, MomentEdge, MomentGraph};
pub use maxtorus::{max_subtorus_fk, MaxTorusVerdict};
pub use schubert::{union_of_schubert_check, CellStatus, CellVerdict};
pub use stability::{
    brute_f2_tstable, classify_f2_tstable, StabilityStatus, StabilityVerdict,
};
