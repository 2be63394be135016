use std::collections::BTreeSet;

use crate::classify::brute_f2_gkm;
use crate::combinat::{HessenbergFunction, Permutation, SkeletalNilpotent};
use crate::hess::{curve_in_variety, member_fixed_point};
use crate::torus::{canonical_k, Character, Subtorus};
use crate::{Error, Result};

/// One edge of a moment graph: the closure of a one-dimensional orbit
/// joining two fixed points, labeled by the character of the torus action
/// along it.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct MomentEdge {
    pub a: Permutation,
    pub b: Permutation,
    pub weight: Character,
}

/// The moment graph of `H(X, h)` under a regular subtorus `K`: vertices
/// are the permutation fixed points, edges the torus-stable curves between
/// them.  `complete = false` records that a one-parameter family of
/// one-dimensional orbits was detected (the graph misses infinitely many
/// edges), with the offending fixed point as witness.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MomentGraph {
    pub torus: Subtorus,
    pub vertices: Vec<Permutation>,
    pub edges: Vec<MomentEdge>,
    pub complete: bool,
    pub incompleteness_witness: Option<Permutation>,
}

/// Build the moment graph of `H(X, h)` for the subtorus `K`.
///
/// `K` must be regular (no root trivial on it), so its fixed flags are the
/// permutation flags and the coordinate curves are honest orbits.  Edges
/// are discovered by running the curve test from every vertex and every
/// value pair and deduplicated by unordered endpoint pair.  For the `F_2`
/// pattern under its canonical subtorus, the locked-pair scan additionally
/// detects non-GKM varieties and marks the graph incomplete.
pub fn moment_graph(
    x: &SkeletalNilpotent,
    h: &HessenbergFunction,
    k: &Subtorus,
) -> Result<MomentGraph> {
    if !k.is_regular() {
        return Err(Error::NonRegularTorus);
    }
    let n = x.n();
    let vertices: Vec<Permutation> = Permutation::all(n)
        .filter(|w| member_fixed_point(w, x, h))
        .collect();
    let mut edges: BTreeSet<MomentEdge> = BTreeSet::new();
    for w in &vertices {
        for a in 1..=n {
            for b in (a + 1)..=n {
                let other = w.swap_values(a, b);
                if other == *w {
                    continue;
                }
                if curve_in_variety(w, (a, b), x, h)? {
                    let (lo, hi) = if *w < other {
                        (w.clone(), other)
                    } else {
                        (other, w.clone())
                    };
                    edges.insert(MomentEdge {
                        a: lo,
                        b: hi,
                        weight: Character::root(n, a, b),
                    });
                }
            }
        }
    }

    let mut complete = true;
    let mut incompleteness_witness = None;
    let f2_pattern = x.nonzero_rows() == vec![1, 2]
        && x.image_col(1) == Some(n - 1)
        && x.image_col(2) == Some(n);
    if f2_pattern && n >= 4 && *k == canonical_k(x) {
        let (gkm, witness) = brute_f2_gkm(h)?;
        if !gkm {
            complete = false;
            incompleteness_witness = witness;
        }
    }
    Ok(MomentGraph {
        torus: k.clone(),
        vertices,
        edges: edges.into_iter().collect(),
        complete,
        incompleteness_witness,
    })
}
