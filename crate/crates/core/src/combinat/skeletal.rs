use std::collections::BTreeMap;

use num::Zero;

use crate::combinat::Permutation;
use crate::exactla::RationalMatrix;
use crate::{Error, Rat, Result};

/// A skeletal nilpotent operator: a strictly upper-triangular matrix with at
/// most one nonzero entry in each row and each column, stored as the partial
/// map `row i -> (column X(i), coefficient c_i)`.
#[derive(Clone, PartialEq, Eq)]
pub struct SkeletalNilpotent {
    n: usize,
    entries: BTreeMap<usize, (usize, Rat)>,
}

impl SkeletalNilpotent {
    /// Build from an explicit entry list `(row, col, coeff)`.
    pub fn new(n: usize, entries: Vec<(usize, usize, Rat)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyDomain);
        }
        let mut map = BTreeMap::new();
        let mut used_cols = BTreeMap::new();
        for (i, j, c) in entries {
            if i >= j || j > n || i < 1 {
                return Err(Error::NotSkeletal(format!(
                    "entry at ({i}, {j}) is not strictly upper-triangular"
                )));
            }
            if c.is_zero() {
                return Err(Error::NotSkeletal(format!(
                    "entry at ({i}, {j}) has zero coefficient"
                )));
            }
            if let Some(&j0) = map.get(&i).map(|(j0, _)| j0) {
                return Err(Error::NotSkeletal(format!(
                    "row {i} has two entries, in columns {j0} and {j}"
                )));
            }
            if let Some(&i0) = used_cols.get(&j) {
                return Err(Error::NotSkeletal(format!(
                    "column {j} has two entries, in rows {i0} and {i}"
                )));
            }
            used_cols.insert(j, i);
            map.insert(i, (j, c));
        }
        Ok(Self { n, entries: map })
    }

    /// The operator `F_k`, with ones in entries `(i, n-k+i)` for `i = 1..k`.
    pub fn fk(n: usize, k: usize) -> Result<Self> {
        if k < 1 || k >= n {
            return Err(Error::InvalidArgument(format!(
                "F_k requires 1 <= k <= n-1; got k = {k}, n = {n}"
            )));
        }
        let entries = (1..=k)
            .map(|i| (i, n - k + i, Rat::from_integer(1.into())))
            .collect();
        Self::new(n, entries)
    }

    /// Extract the map form from a square matrix, verifying the skeletal
    /// invariants and naming any offending positions.
    pub fn from_matrix(m: &RationalMatrix) -> Result<Self> {
        if m.rows() != m.cols() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix is not square",
                m.rows(),
                m.cols()
            )));
        }
        let n = m.rows();
        let mut entries = Vec::new();
        for i in 1..=n {
            for j in 1..=n {
                if !m.at(i, j).is_zero() {
                    if j <= i {
                        return Err(Error::NotSkeletal(format!(
                            "nonzero entry at ({i}, {j}) on or below the diagonal"
                        )));
                    }
                    entries.push((i, j, m.at(i, j).clone()));
                }
            }
        }
        Self::new(n, entries)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The nonzero rows `𝓡`, in increasing order.
    pub fn nonzero_rows(&self) -> Vec<usize> {
        self.entries.keys().copied().collect()
    }

    /// The number of nonzero rows, written `k` throughout.
    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// `X(i)`: the column of the nonzero entry in row `i`, if any.
    pub fn image_col(&self, i: usize) -> Option<usize> {
        self.entries.get(&i).map(|&(j, _)| j)
    }

    /// The coefficient `c_i` in row `i`, if nonzero.
    pub fn coeff(&self, i: usize) -> Option<&Rat> {
        self.entries.get(&i).map(|(_, c)| c)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rat)> {
        self.entries.iter().map(|(&i, (j, c))| (i, *j, c))
    }

    pub fn to_matrix(&self) -> RationalMatrix {
        let mut m = RationalMatrix::zeros(self.n, self.n);
        for (i, j, c) in self.entries() {
            m.set(i, j, c.clone());
        }
        m
    }

    /// Apply `X` to a column vector: `(Xv)_i = c_i v_{X(i)}`.
    pub fn apply(&self, v: &[Rat]) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.n];
        for (i, j, c) in self.entries() {
            out[i - 1] = c * &v[j - 1];
        }
        out
    }

    /// Conjugate by a diagonal matrix: `t⁻¹ X t` scales the entry in row `i`
    /// by `t_{X(i)} / t_i`, and the result is again skeletal.
    pub fn conj_by_diag(&self, t: &[Rat]) -> Result<Self> {
        if t.len() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "diagonal has length {}, operator has n = {}",
                t.len(),
                self.n
            )));
        }
        if t.iter().any(|ti| ti.is_zero()) {
            return Err(Error::InvalidArgument(
                "diagonal torus element has a zero entry".into(),
            ));
        }
        let entries = self
            .entries()
            .map(|(i, j, c)| (i, j, c * &t[j - 1] / &t[i - 1]))
            .collect();
        Self::new(self.n, entries)
    }
}

impl std::fmt::Debug for SkeletalNilpotent {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "X(n={}; ", self.n)?;
        let parts: Vec<String> = self
            .entries()
            .map(|(i, j, c)| format!("{i}->{j}:{c}"))
            .collect();
        write!(f, "{})", parts.join(", "))
    }
}

/// Construct the permutation `w` for which `wSw⁻¹` acts on `H(X, H)`:
/// `w(X(i)) = w(i) + 1` for every nonzero row `i`.
///
/// Chains are chased starting from the smallest nonzero row: follow
/// `i -> X(i)` while the image is itself a nonzero row, then restart at the
/// smallest unassigned nonzero row.  Positions untouched by any chain get
/// the remaining values order-preservingly.
pub fn circle_permutation(x: &SkeletalNilpotent) -> Result<Permutation> {
    if x.is_zero() {
        return Err(Error::InvalidArgument(
            "operator has no nonzero rows".into(),
        ));
    }
    let n = x.n();
    let mut assigned: Vec<Option<usize>> = vec![None; n];
    let mut next = 1usize;
    loop {
        let start = match x
            .nonzero_rows()
            .into_iter()
            .find(|&i| assigned[i - 1].is_none())
        {
            Some(i) => i,
            None => break,
        };
        assigned[start - 1] = Some(next);
        next += 1;
        let mut cur = start;
        while let Some(img) = x.image_col(cur) {
            debug_assert!(assigned[img - 1].is_none());
            assigned[img - 1] = Some(next);
            next += 1;
            if x.image_col(img).is_none() {
                break;
            }
            cur = img;
        }
    }
    // Order-preserving extension over the untouched positions.
    let mut rest_vals: Vec<usize> = (next..=n).collect();
    rest_vals.reverse();
    let images: Vec<usize> = (1..=n)
        .map(|i| match assigned[i - 1] {
            Some(v) => v,
            None => rest_vals.pop().expect("count matches"),
        })
        .collect();
    let w = Permutation::new(images)?;
    debug_assert!(x
        .nonzero_rows()
        .iter()
        .all(|&i| w.apply(x.image_col(i).unwrap()) == w.apply(i) + 1));
    Ok(w)
}
