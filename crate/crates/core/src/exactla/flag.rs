use num::{One, Zero};

use crate::combinat::Permutation;
use crate::exactla::{piv, RationalMatrix};
use crate::{Error, Rat, Result};

/// An invertible matrix in normalized Schubert form together with its pivot
/// permutation: column `i` has a 1 in row `w(i)`, zeros below it, and row
/// `w(i)` has zeros to the right of column `i`.  This is the canonical coset
/// representative of a flag, and the pivot permutation names its Schubert
/// cell.
#[derive(Clone, PartialEq, Eq)]
pub struct FlagMatrix {
    matrix: RationalMatrix,
    pivot_perm: Permutation,
}

impl FlagMatrix {
    /// Wrap a matrix that is already in normalized Schubert form.
    pub fn new(matrix: RationalMatrix) -> Result<Self> {
        if matrix.rows() != matrix.cols() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix is not square",
                matrix.rows(),
                matrix.cols()
            )));
        }
        let n = matrix.rows();
        let mut images = Vec::with_capacity(n);
        for j in 1..=n {
            let col = matrix.column(j);
            let p = piv(&col);
            if p == 0 {
                return Err(Error::NotSchubertForm(format!("column {j} is zero")));
            }
            if !matrix.at(p, j).is_one() {
                return Err(Error::NotSchubertForm(format!(
                    "pivot entry ({p}, {j}) is not 1"
                )));
            }
            for j2 in (j + 1)..=n {
                if !matrix.at(p, j2).is_zero() {
                    return Err(Error::NotSchubertForm(format!(
                        "row {p} is nonzero at column {j2}, right of its pivot column {j}"
                    )));
                }
            }
            images.push(p);
        }
        let pivot_perm = Permutation::new(images)
            .map_err(|_| Error::NotSchubertForm("pivot rows are not distinct".into()))?;
        Ok(Self { matrix, pivot_perm })
    }

    /// The permutation flag `wB`.
    pub fn permutation(w: &Permutation) -> Self {
        let n = w.n();
        let mut m = RationalMatrix::zeros(n, n);
        for j in 1..=n {
            m.set(w.apply(j), j, Rat::one());
        }
        Self {
            matrix: m,
            pivot_perm: w.clone(),
        }
    }

    pub fn n(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.matrix
    }

    pub fn pivot_perm(&self) -> &Permutation {
        &self.pivot_perm
    }

    pub fn column(&self, j: usize) -> Vec<Rat> {
        self.matrix.column(j)
    }
}

impl std::fmt::Debug for FlagMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Flag(w = {:?}, {:?})", self.pivot_perm, self.matrix)
    }
}

/// Reduce an invertible matrix to normalized Schubert form by column
/// operations (right multiplication by an invertible upper-triangular
/// matrix), so the flag is unchanged: every prefix column span agrees with
/// the input's.  Idempotent on already-normalized input.
pub fn normalize_schubert(g: &RationalMatrix) -> Result<FlagMatrix> {
    if g.rows() != g.cols() {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} matrix is not square",
            g.rows(),
            g.cols()
        )));
    }
    let n = g.rows();
    let mut m = g.clone();
    let mut pivots: Vec<usize> = Vec::with_capacity(n);
    for j in 1..=n {
        // Clear this column in the pivot rows of all earlier columns, then
        // scale the remaining pivot to 1.
        let mut col = m.column(j);
        for (c, &p) in pivots.iter().enumerate() {
            if !col[p - 1].is_zero() {
                let f = col[p - 1].clone();
                let base = m.column(c + 1);
                for i in 0..n {
                    col[i] = &col[i] - &base[i] * &f;
                }
            }
        }
        let p = piv(&col);
        if p == 0 {
            return Err(Error::SingularMatrix);
        }
        let inv = col[p - 1].recip();
        for x in col.iter_mut() {
            *x = &*x * &inv;
        }
        m.set_column(j, &col);
        pivots.push(p);
    }
    FlagMatrix::new(m)
}
