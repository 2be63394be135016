use num::Zero;

use crate::combinat::{HessenbergFunction, SkeletalNilpotent};
use crate::exactla::{piv, FlagMatrix, RationalMatrix};
use crate::Rat;

/// The block decomposition of the augmented system
/// `⟨g_1 .. g_{h(j)} | Xg_j⟩` for a flag in normalized Schubert form.
///
/// With `ℓ = piv(Xg_j)`, the columns among the first `h(j)` whose pivots lie
/// in rows `1..ℓ` are indexed by `C` and their pivot rows by `R`.  `A` is the
/// square pivot matrix `(m_ij : i ∈ R, j ∈ C)`, `B` the dependent matrix
/// over the remaining rows `{1..ℓ} \ R`, and `v`, `v'` are the entries of
/// `Xg_j` in rows `R` and `{1..ℓ} \ R` respectively.  The system is solvable
/// exactly when `B A⁻¹ v = v'`; `A` is always invertible.
///
/// When the image `Xg_j` is zero all parts are empty and `ell = 0`.
#[derive(Clone, Debug)]
pub struct ColumnSystem {
    pub j: usize,
    pub ell: usize,
    pub a: RationalMatrix,
    pub b: RationalMatrix,
    pub v: Vec<Rat>,
    pub v_prime: Vec<Rat>,
    /// Pivot rows `R`, in increasing order.
    pub rows_r: Vec<usize>,
    /// Column indices `C` into `g`, in increasing order.
    pub cols_c: Vec<usize>,
    /// Rows `{1..ℓ} \ R`, in increasing order (the rows of `B` and `v'`).
    pub rows_b: Vec<usize>,
}

impl ColumnSystem {
    pub fn image_is_zero(&self) -> bool {
        self.ell == 0
    }

    pub fn b_is_empty(&self) -> bool {
        self.rows_b.is_empty()
    }

    pub fn b_is_zero(&self) -> bool {
        !self.b_is_empty()
            && (1..=self.b.rows()).all(|i| (1..=self.b.cols()).all(|j| self.b.at(i, j).is_zero()))
    }
}

/// Build the `ColumnSystem` for column `j` of `g` under the operator `X` and
/// Hessenberg function `h`.
pub fn column_system(
    g: &FlagMatrix,
    x: &SkeletalNilpotent,
    h: &HessenbergFunction,
    j: usize,
) -> ColumnSystem {
    let image = x.apply(&g.column(j));
    let ell = piv(&image);
    if ell == 0 {
        return ColumnSystem {
            j,
            ell,
            a: RationalMatrix::zeros(0, 0),
            b: RationalMatrix::zeros(0, 0),
            v: Vec::new(),
            v_prime: Vec::new(),
            rows_r: Vec::new(),
            cols_c: Vec::new(),
            rows_b: Vec::new(),
        };
    }
    let cols_c: Vec<usize> = (1..=h.value(j))
        .filter(|&c| {
            let p = g.pivot_perm().apply(c);
            p <= ell
        })
        .collect();
    let mut rows_r: Vec<usize> = cols_c.iter().map(|&c| g.pivot_perm().apply(c)).collect();
    rows_r.sort_unstable();
    let rows_b: Vec<usize> = (1..=ell).filter(|r| !rows_r.contains(r)).collect();
    let a = g.matrix().select_submatrix(&rows_r, &cols_c);
    let b = g.matrix().select_submatrix(&rows_b, &cols_c);
    let v = rows_r.iter().map(|&r| image[r - 1].clone()).collect();
    let v_prime = rows_b.iter().map(|&r| image[r - 1].clone()).collect();
    ColumnSystem {
        j,
        ell,
        a,
        b,
        v,
        v_prime,
        rows_r,
        cols_c,
        rows_b,
    }
}

/// Whether the system is solvable: `B A⁻¹ v = v'`, vacuously true when the
/// parts are empty.  Equivalent to `Xg_j ∈ V_g^{h(j)}`.
pub fn verify_constraint(sys: &ColumnSystem) -> bool {
    if sys.image_is_zero() {
        return true;
    }
    if sys.rows_r.len() < sys.ell && sys.cols_c.is_empty() {
        // No columns reach rows 1..ℓ but the image is nonzero there.
        return sys.v_prime.iter().all(|x| x.is_zero());
    }
    let a_inv = match sys.a.inverse() {
        Ok(inv) => inv,
        Err(_) => return false,
    };
    let coeffs = a_inv.mul_vec(&sys.v).expect("square system");
    if sys.b_is_empty() {
        return true;
    }
    let lhs = sys.b.mul_vec(&coeffs).expect("dimensions match");
    lhs == sys.v_prime
}
