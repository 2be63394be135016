use crate::combinat::{HessenbergFunction, Permutation, SkeletalNilpotent};
use crate::exactla::FlagMatrix;
use crate::hess::{member, member_fixed_point};
use crate::sample::{random_cell_point, rng_from_seed};
use crate::Result;

/// How a Schubert cell met by the variety relates to it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CellStatus {
    /// Every sampled point of the cell was a member; the cell appears to be
    /// fully contained (a probabilistic statement, reported with the sample
    /// count).
    FullyContained { samples: usize },
    /// Some point of the cell is not a member: an exact certificate that
    /// the variety meets the cell properly, so it is not the union of the
    /// Schubert cells it meets.
    ProperIntersection { witness: FlagMatrix },
}

/// Verdict for one permutation fixed point's cell.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CellVerdict {
    pub w: Permutation,
    pub status: CellStatus,
}

/// For every permutation fixed point of `H(X, h)`, sample `trials` random
/// points of its Schubert cell and report whether any of them leaves the
/// variety.  Verdicts are returned in lexicographic order of `w`.
pub fn union_of_schubert_check(
    x: &SkeletalNilpotent,
    h: &HessenbergFunction,
    trials: usize,
    seed: u64,
) -> Result<Vec<CellVerdict>> {
    let n = x.n();
    let mut rng = rng_from_seed(seed);
    let mut out = Vec::new();
    for w in Permutation::all(n) {
        if !member_fixed_point(&w, x, h) {
            continue;
        }
        let mut status = CellStatus::FullyContained { samples: trials };
        for _ in 0..trials {
            let g = random_cell_point(&w, &mut rng);
            if !member(g.matrix(), x, h)? {
                status = CellStatus::ProperIntersection { witness: g };
                break;
            }
        }
        out.push(CellVerdict { w, status });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::RationalMatrix;
    use crate::ratint;

    #[test]
    fn fk_with_low_h_is_a_union_of_cells() {
        for (n, k) in [(4, 2), (4, 3), (5, 2)] {
            let x = SkeletalNilpotent::fk(n, k).unwrap();
            let mut v = vec![n - 1; n];
            v[n - 1] = n;
            let h = HessenbergFunction::new(v).unwrap();
            let verdicts = union_of_schubert_check(&x, &h, 15, 3).unwrap();
            assert!(!verdicts.is_empty());
            for cv in verdicts {
                assert!(
                    matches!(cv.status, CellStatus::FullyContained { .. }),
                    "n = {n}, k = {k}, w = {:?}",
                    cv.w
                );
            }
        }
    }

    #[test]
    fn subregular_b_cell_intersects_properly() {
        let mut m = RationalMatrix::zeros(4, 4);
        m.set(2, 3, ratint(1));
        m.set(3, 4, ratint(1));
        let x = SkeletalNilpotent::from_matrix(&m).unwrap();
        let h = HessenbergFunction::identity(4);
        let verdicts = union_of_schubert_check(&x, &h, 20, 5).unwrap();
        let target = Permutation::new(vec![2, 3, 1, 4]).unwrap();
        let cv = verdicts.iter().find(|cv| cv.w == target).unwrap();
        match &cv.status {
            CellStatus::ProperIntersection { witness } => {
                assert!(!member(witness.matrix(), &x, &h).unwrap());
            }
            other => panic!("expected a proper intersection, got {other:?}"),
        }
    }

    #[test]
    fn gkm_but_unstable_f2_has_a_proper_intersection() {
        let x = SkeletalNilpotent::fk(6, 2).unwrap();
        let h = HessenbergFunction::new(vec![3, 3, 3, 4, 5, 6]).unwrap();
        assert!(crate::classify::classify_f2_gkm(&h).unwrap());
        assert!(!crate::classify::classify_f2_tstable(&h).unwrap().is_stable());
        let verdicts = union_of_schubert_check(&x, &h, 20, 7).unwrap();
        assert!(verdicts
            .iter()
            .any(|cv| matches!(cv.status, CellStatus::ProperIntersection { .. })));
    }
}
