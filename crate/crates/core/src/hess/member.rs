use crate::combinat::{HessenbergFunction, Permutation, SkeletalNilpotent};
use crate::exactla::{in_span, RationalMatrix};
use crate::{Error, Result};

/// Whether the flag of the invertible matrix `g` lies in `H(X, h)`: for
/// every column `j`, `X g_j` must lie in the span of the first `h(j)`
/// columns.  The answer depends only on the flag `gB`, not on the chosen
/// matrix.
pub fn member(
    g: &RationalMatrix,
    x: &SkeletalNilpotent,
    h: &HessenbergFunction,
) -> Result<bool> {
    if g.rows() != x.n() || g.rows() != h.n() {
        return Err(Error::DimensionMismatch(format!(
            "matrix is {}x{}, operator rank {}, h on {} letters",
            g.rows(),
            g.cols(),
            x.n(),
            h.n()
        )));
    }
    if !g.is_invertible() {
        return Err(Error::SingularMatrix);
    }
    let n = g.rows();
    for j in 1..=n {
        let image = x.apply(&g.column(j));
        if in_span(&g.column_prefix(h.value(j)), &image).is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Membership through the raw Hessenberg conditions with `X` an arbitrary
/// rational matrix (no skeletal structure required).  Used to check
/// conjugation invariance, where `pXp⁻¹` is generally not skeletal.
pub fn member_raw(
    g: &RationalMatrix,
    x: &RationalMatrix,
    h: &HessenbergFunction,
) -> Result<bool> {
    if g.rows() != x.rows() || x.rows() != x.cols() || g.rows() != h.n() {
        return Err(Error::DimensionMismatch(
            "matrix, operator, and h dimensions disagree".into(),
        ));
    }
    if !g.is_invertible() {
        return Err(Error::SingularMatrix);
    }
    let n = g.rows();
    for j in 1..=n {
        let image = x.mul_vec(&g.column(j))?;
        if in_span(&g.column_prefix(h.value(j)), &image).is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether the permutation flag `wB` lies in `H(X, h)`, decided purely
/// combinatorially: for every nonzero row `i` of `X`, the column of `w`
/// holding `e_i` must sit within the Hessenberg bound of the column holding
/// `e_{X(i)}`, i.e. `w⁻¹(i) ≤ h(w⁻¹(X(i)))`.
pub fn member_fixed_point(
    w: &Permutation,
    x: &SkeletalNilpotent,
    h: &HessenbergFunction,
) -> bool {
    x.nonzero_rows()
        .iter()
        .all(|&i| w.preimage(i) <= h.value(w.preimage(x.image_col(i).expect("nonzero row"))))
}
