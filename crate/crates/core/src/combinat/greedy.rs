use num::{One, Zero};

use crate::combinat::SkeletalNilpotent;
use crate::exactla::{piv, FlagMatrix, RationalMatrix};
use crate::{Error, Rat, Result};

/// Build the witness flag whose first column is `seed_column` and whose
/// later columns follow the two-step rule: `g_{j+1} = F_k g_j` while the
/// image is nonzero, otherwise `g_{j+1} = e_i` for `i` the largest row not
/// yet used as a pivot.
///
/// The seed must have every entry nonzero and last entry 1, so the result
/// is in normalized Schubert form with pivots covering all rows, and
/// satisfies the Hessenberg conditions for `h(i) = min(i+1, n)`.
pub fn greedy_witness(n: usize, k: usize, seed_column: &[Rat]) -> Result<FlagMatrix> {
    if n < 2 || k < 1 || k >= n {
        return Err(Error::InvalidArgument(format!(
            "greedy witness requires n >= 2 and 1 <= k <= n-1; got n = {n}, k = {k}"
        )));
    }
    if seed_column.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "seed column has length {}, expected {n}",
            seed_column.len()
        )));
    }
    if let Some(i) = seed_column.iter().position(|x| x.is_zero()) {
        return Err(Error::InvalidWitness(format!(
            "seed column entry {} is zero; every entry must be nonzero",
            i + 1
        )));
    }
    if !seed_column[n - 1].is_one() {
        return Err(Error::InvalidWitness(
            "seed column must have last entry 1".into(),
        ));
    }

    let fk = SkeletalNilpotent::fk(n, k)?;
    let mut cols: Vec<Vec<Rat>> = vec![seed_column.to_vec()];
    let mut used_pivots = vec![false; n + 1];
    used_pivots[n] = true;
    for _ in 1..n {
        let image = fk.apply(cols.last().expect("nonempty"));
        let next = if piv(&image) != 0 {
            image
        } else {
            let i = (1..=n)
                .rev()
                .find(|&i| !used_pivots[i])
                .expect("fewer than n columns placed");
            let mut e = vec![Rat::zero(); n];
            e[i - 1] = Rat::one();
            e
        };
        used_pivots[piv(&next)] = true;
        cols.push(next);
    }
    let m = RationalMatrix::from_columns(cols)?;
    FlagMatrix::new(m)
}
