use crate::combinat::{HessenbergFunction, Permutation, SkeletalNilpotent};
use crate::exactla::FlagMatrix;
use crate::hess::{column_test, member, member_fixed_point};
use crate::sample::{cell_point, free_positions, random_cell_point, rng_from_seed};
use crate::torus::{canonical_k, subtorus_from_characters, Character, Subtorus};
use crate::{rat, ratint, Result};

/// Sampled two-sided bounds on the maximal subtorus of the diagonal torus
/// stabilizing `H(X, h)`.
///
/// The lower bound is the canonical subtorus, which always acts.  The upper
/// bound is cut out by every monomial equality the column test produced at
/// sampled members, each of which any stabilizing torus must satisfy; with
/// no samples yielding constraints it degenerates to the full torus.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StabilizerEstimate {
    pub lower: Subtorus,
    pub upper: Subtorus,
    /// Number of member flags whose column test contributed to the upper
    /// bound.
    pub members_sampled: usize,
    /// True when the bounds coincide, pinning the maximal stabilizer.
    pub determined: bool,
    /// True when no sampled member constrained the torus at all, leaving
    /// the full torus possible.
    pub possibly_full_torus: bool,
}

/// Estimate the maximal stabilizing subtorus of `H(X, h)` by sampling.
///
/// Samples every permutation fixed point, constant fills of each member
/// cell, and `trials` random cell points; runs the column test on those
/// that pass membership; and intersects all resulting constraints into the
/// upper bound.  Deterministic given `(trials, seed)`.
pub fn stabilizer_estimate(
    x: &SkeletalNilpotent,
    h: &HessenbergFunction,
    trials: usize,
    seed: u64,
) -> Result<StabilizerEstimate> {
    let n = x.n();
    let lower = canonical_k(x);
    let member_perms: Vec<Permutation> = Permutation::all(n)
        .into_iter()
        .filter(|w| member_fixed_point(w, x, h))
        .collect();

    let mut equalities: Vec<Character> = Vec::new();
    let mut members_sampled = 0usize;
    let mut absorb = |g: &FlagMatrix| -> Result<()> {
        members_sampled += 1;
        let report = column_test(g, x, h)?;
        equalities.extend(report.equalities.iter().cloned());
        Ok(())
    };

    for w in &member_perms {
        absorb(&FlagMatrix::permutation(w))?;
        let dim = free_positions(w).len();
        for v in [ratint(1), ratint(-1), ratint(2), rat(1, 2), ratint(-3)] {
            let g = cell_point(w, &vec![v; dim])?;
            if member(g.matrix(), x, h)? {
                absorb(&g)?;
            }
        }
    }

    let mut rng = rng_from_seed(seed);
    for t in 0..trials {
        let w = &member_perms[t % member_perms.len()];
        let g = random_cell_point(w, &mut rng);
        if member(g.matrix(), x, h)? {
            absorb(&g)?;
        }
    }

    let upper = subtorus_from_characters(n, &equalities)?;
    let determined = lower == upper;
    let possibly_full_torus = upper.is_full();
    debug_assert!(lower.is_subtorus_of(&upper));
    Ok(StabilizerEstimate {
        lower,
        upper,
        members_sampled,
        determined,
        possibly_full_torus,
    })
}
