use crate::combinat::{HessenbergFunction, Permutation, SkeletalNilpotent};
use crate::hess::member_fixed_point;
use crate::{Error, Result};

/// Closed-form test for `H(F_2, h)` being GKM with respect to the
/// canonical codimension-one subtorus `K`, for `n ≥ 4`: true iff some
/// `i ∈ {1..n-2}` has `h(i) ≤ i+2` and `h(i+1) ≤ i+2` while `h(j) = j`
/// everywhere else (all values implicitly capped at `n`).
pub fn classify_f2_gkm(h: &HessenbergFunction) -> Result<bool> {
    let n = h.n();
    if n < 4 {
        return Err(Error::UnsupportedDimension(n));
    }
    Ok((1..=(n - 2)).any(|i| {
        (1..=n).all(|j| {
            if j == i || j == i + 1 {
                h.value(j) <= (i + 2).min(n)
            } else {
                h.value(j) == j
            }
        })
    }))
}

/// Brute-force GKM test: enumerates the permutation fixed points of
/// `H(F_2, h)` and looks for the locked pair — a member `w` with
/// `w⁻¹(2) > w⁻¹(n)` and `w⁻¹(1) > w⁻¹(n-1)`, so that the unipotent
/// coordinates `u_{2,n}` and `u_{1,n-1}` are simultaneously free and sweep
/// out a one-parameter family of one-dimensional orbits.  Returns the
/// verdict with the first witness in lexicographic order, if any.
pub fn brute_f2_gkm(h: &HessenbergFunction) -> Result<(bool, Option<Permutation>)> {
    let n = h.n();
    if n < 4 {
        return Err(Error::UnsupportedDimension(n));
    }
    let x = SkeletalNilpotent::fk(n, 2)?;
    for w in Permutation::all(n) {
        if member_fixed_point(&w, &x, h)
            && w.preimage(2) > w.preimage(n)
            && w.preimage(1) > w.preimage(n - 1)
        {
            return Ok((false, Some(w)));
        }
    }
    Ok((true, None))
}
