use std::collections::BTreeMap;

use num::{One, Zero};

use crate::combinat::{HessenbergFunction, Permutation, SkeletalNilpotent};
use crate::hess::{curve_in_variety, member, member_fixed_point};
use crate::sample::{cell_point, free_positions, rng_from_seed};
use crate::{rat, ratint, Error, Rat, Result};

/// Status of one free coordinate of a Schubert cell relative to `H(X, h)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CoordStatus {
    /// The coordinate axis lies in the variety: the intersection is free in
    /// this direction.
    Free,
    /// Every member of the cell intersection found has this coordinate
    /// zero, and its coordinate axis leaves the variety.
    ForcedZero,
    /// The coordinate axis leaves the variety, yet some member takes a
    /// nonzero value here: the intersection is not a coordinate subspace.
    Entangled,
}

/// Per-coordinate description of `H(X, h) ∩ C_w`, keyed by the free matrix
/// positions `(row, column)` of the cell.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CellProfile {
    pub statuses: BTreeMap<(usize, usize), CoordStatus>,
}

impl CellProfile {
    /// Whether the intersection was detected not to be a coordinate
    /// subspace of the cell.
    pub fn is_entangled(&self) -> bool {
        self.statuses.values().any(|s| *s == CoordStatus::Entangled)
    }

    pub fn free_count(&self) -> usize {
        self.statuses.values().filter(|s| **s == CoordStatus::Free).count()
    }
}

/// Profile the free coordinates of `C_w` against `H(X, h)`.
///
/// Each coordinate axis is tested exactly with [`curve_in_variety`] and
/// labeled free or forced-zero.  Structured multi-coordinate samples
/// (constant fills, pairwise fills, and seeded random fills) then hunt for
/// members with a nonzero "forced-zero" coordinate; any hit relabels that
/// coordinate entangled.  For a torus-stable variety no entangled label can
/// occur.
pub fn cell_profile(
    w: &Permutation,
    x: &SkeletalNilpotent,
    h: &HessenbergFunction,
) -> Result<CellProfile> {
    if !member_fixed_point(w, x, h) {
        return Err(Error::NotMember);
    }
    let free = free_positions(w);
    let mut statuses = BTreeMap::new();
    for &(r, c) in &free {
        // The coordinate axis at (r, c) is the torus-stable curve through
        // wB for the value pair (r, w(c)).
        let ok = curve_in_variety(w, (r, w.apply(c)), x, h)?;
        statuses.insert(
            (r, c),
            if ok { CoordStatus::Free } else { CoordStatus::ForcedZero },
        );
    }

    let mut fills: Vec<Vec<Rat>> = Vec::new();
    for v in [ratint(1), ratint(-1), ratint(2), rat(1, 2), ratint(3)] {
        fills.push(vec![v; free.len()]);
    }
    for p in 0..free.len() {
        for q in (p + 1)..free.len() {
            let mut fill = vec![Rat::zero(); free.len()];
            fill[p] = Rat::one();
            fill[q] = Rat::one();
            fills.push(fill);
        }
    }
    let mut rng = rng_from_seed(0x9e3779b97f4a7c15);
    for _ in 0..40 {
        fills.push((0..free.len()).map(|_| crate::sample::random_nonzero(&mut rng)).collect());
    }
    for fill in fills {
        let g = cell_point(w, &fill)?;
        if member(g.matrix(), x, h)? {
            for (&pos, value) in free.iter().zip(&fill) {
                if !value.is_zero() && statuses[&pos] == CoordStatus::ForcedZero {
                    statuses.insert(pos, CoordStatus::Entangled);
                }
            }
        }
    }
    Ok(CellProfile { statuses })
}
