//! Deterministic sampling helpers: seeded RNG construction, rational value
//! pools, Schubert-cell points, and random test objects.  Everything is
//! driven by a `ChaCha8Rng` so runs are reproducible from a `u64` seed.

use num::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::combinat::{Permutation, SkeletalNilpotent};
use crate::exactla::{FlagMatrix, RationalMatrix};
use crate::{rat, Rat, Result};

/// The reproducible RNG used throughout; all randomized routines take their
/// stream from a seed via this constructor.
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A pool of small nonzero rationals with varied signs and denominators,
/// suitable for generic-position sampling with exact arithmetic.
pub fn rational_pool() -> Vec<Rat> {
    let mut pool = Vec::new();
    for num in [-7i64, -3, -2, -1, 1, 2, 3, 5, 7, 11] {
        for den in [1i64, 2, 3, 5] {
            pool.push(rat(num, den));
        }
    }
    pool
}

/// A random nonzero rational drawn from the pool.
pub fn random_nonzero<R: Rng>(rng: &mut R) -> Rat {
    let num = *[-7i64, -5, -3, -2, -1, 1, 2, 3, 5, 7, 11, 13]
        .choose(rng)
        .expect("nonempty");
    let den = *[1i64, 2, 3, 5, 7].choose(rng).expect("nonempty");
    rat(num, den)
}

/// The free coordinates of the Schubert cell `C_w`, in row-major order:
/// positions `(r, c)` with `r < w(c)` and `w⁻¹(r) > c`.  Its length is the
/// dimension of the cell.
pub fn free_positions(w: &Permutation) -> Vec<(usize, usize)> {
    let n = w.n();
    let mut out = Vec::new();
    for r in 1..=n {
        for c in 1..=n {
            if r < w.apply(c) && w.preimage(r) > c {
                out.push((r, c));
            }
        }
    }
    out
}

/// The point of `C_w` with the given values at the free coordinates, in the
/// order returned by [`free_positions`].  The result is in normalized
/// Schubert form by construction.
pub fn cell_point(w: &Permutation, values: &[Rat]) -> Result<FlagMatrix> {
    let free = free_positions(w);
    if values.len() != free.len() {
        return Err(crate::Error::DimensionMismatch(format!(
            "cell of {:?} has {} free coordinates, got {} values",
            w,
            free.len(),
            values.len()
        )));
    }
    let n = w.n();
    let mut m = RationalMatrix::zeros(n, n);
    for c in 1..=n {
        m.set(w.apply(c), c, Rat::one());
    }
    for ((r, c), v) in free.iter().zip(values) {
        m.set(*r, *c, v.clone());
    }
    FlagMatrix::new(m)
}

/// A random point of `C_w` with all free coordinates nonzero.
pub fn random_cell_point<R: Rng>(w: &Permutation, rng: &mut R) -> FlagMatrix {
    let k = free_positions(w).len();
    let values: Vec<Rat> = (0..k).map(|_| random_nonzero(rng)).collect();
    cell_point(w, &values).expect("matching length")
}

/// A random nonzero skeletal nilpotent on `n ≥ 2` letters: a uniformly
/// chosen partial matching of rows to strictly larger columns, with random
/// nonzero coefficients.
pub fn random_skeletal<R: Rng>(n: usize, rng: &mut R) -> SkeletalNilpotent {
    loop {
        let mut rows: Vec<usize> = (1..n).collect();
        rows.shuffle(rng);
        let count = rng.gen_range(1..n);
        rows.truncate(count);
        let mut used_cols = vec![false; n + 1];
        let mut entries = Vec::new();
        for &i in &rows {
            let candidates: Vec<usize> = ((i + 1)..=n).filter(|&j| !used_cols[j]).collect();
            if let Some(&j) = candidates.as_slice().choose(rng) {
                used_cols[j] = true;
                entries.push((i, j, random_nonzero(rng)));
            }
        }
        if entries.is_empty() {
            continue;
        }
        let mut m = RationalMatrix::zeros(n, n);
        for (i, j, c) in entries {
            m.set(i, j, c);
        }
        return SkeletalNilpotent::from_matrix(&m).expect("constructed skeletal");
    }
}

/// A random invertible rational matrix, by rejection sampling.
pub fn random_invertible<R: Rng>(n: usize, rng: &mut R) -> RationalMatrix {
    loop {
        let mut m = RationalMatrix::zeros(n, n);
        for r in 1..=n {
            for c in 1..=n {
                let v = if rng.gen_bool(0.25) {
                    Rat::zero()
                } else {
                    random_nonzero(rng)
                };
                m.set(r, c, v);
            }
        }
        if m.is_invertible() {
            return m;
        }
    }
}

/// A random invertible upper-triangular matrix.
pub fn random_upper_triangular<R: Rng>(n: usize, rng: &mut R) -> RationalMatrix {
    let mut m = RationalMatrix::zeros(n, n);
    for r in 1..=n {
        m.set(r, r, random_nonzero(rng));
        for c in (r + 1)..=n {
            if rng.gen_bool(0.5) {
                m.set(r, c, random_nonzero(rng));
            }
        }
    }
    m
}

/// A random permutation of `1..=n`.
pub fn random_permutation<R: Rng>(n: usize, rng: &mut R) -> Permutation {
    let mut images: Vec<usize> = (1..=n).collect();
    images.shuffle(rng);
    Permutation::new(images).expect("shuffled identity")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_positions_match_cell_dimension_examples() {
        // w = [2314]: a two-dimensional cell, free at (1,1) and (1,2).
        let w = Permutation::new(vec![2, 3, 1, 4]).unwrap();
        assert_eq!(free_positions(&w), vec![(1, 1), (1, 2)]);
        let id = Permutation::identity(4);
        assert!(free_positions(&id).is_empty());
        let w0 = Permutation::new(vec![4, 3, 2, 1]).unwrap();
        assert_eq!(free_positions(&w0).len(), 6);
    }

    #[test]
    fn free_position_count_equals_inversion_number() {
        let mut rng = rng_from_seed(3);
        for _ in 0..50 {
            let w = random_permutation(5, &mut rng);
            let inversions = (1..=5)
                .flat_map(|a| ((a + 1)..=5).map(move |b| (a, b)))
                .filter(|&(a, b)| w.apply(a) > w.apply(b))
                .count();
            assert_eq!(free_positions(&w).len(), inversions, "w = {w:?}");
        }
    }

    #[test]
    fn cell_points_are_normalized_with_the_right_pivots() {
        let mut rng = rng_from_seed(11);
        for _ in 0..50 {
            let w = random_permutation(5, &mut rng);
            let g = random_cell_point(&w, &mut rng);
            assert_eq!(g.pivot_perm(), &w);
        }
    }

    #[test]
    fn random_skeletal_is_valid_and_nonzero() {
        let mut rng = rng_from_seed(5);
        for n in 2..=7 {
            for _ in 0..40 {
                let x = random_skeletal(n, &mut rng);
                assert!(!x.is_zero());
                assert!(x.rank() >= 1 && x.rank() < n);
            }
        }
    }

    #[test]
    fn random_matrices_have_the_claimed_shape() {
        let mut rng = rng_from_seed(9);
        for _ in 0..10 {
            assert!(random_invertible(4, &mut rng).is_invertible());
            let u = random_upper_triangular(4, &mut rng);
            assert!(u.is_invertible());
            for r in 1..=4 {
                for c in 1..r {
                    assert!(u.at(r, c).is_zero());
                }
            }
        }
    }

    #[test]
    fn seeded_rng_is_reproducible() {
        let a: Vec<u32> = {
            let mut r = rng_from_seed(42);
            (0..5).map(|_| r.gen()).collect()
        };
        let b: Vec<u32> = {
            let mut r = rng_from_seed(42);
            (0..5).map(|_| r.gen()).collect()
        };
        assert_eq!(a, b);
    }
}
