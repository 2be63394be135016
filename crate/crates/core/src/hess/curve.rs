use crate::combinat::{HessenbergFunction, Permutation, SkeletalNilpotent};
use crate::exactla::RationalMatrix;
use crate::hess::member_fixed_point;
use crate::{ratint, Error, Rat, Result};

/// Decide whether the torus-stable curve through the fixed point `wB` in
/// the direction of the value pair `(a, b)` with `a < b` lies entirely in
/// `H(X, h)`.
///
/// The curve is the closure of `{u(s)·gB}` where `u(s)` is unitriangular
/// with a single off-diagonal entry `s`; its two limit points are `wB` and
/// `t_ab·wB` for the transposition `t_ab` of the values `a` and `b`.
/// Concretely, the base endpoint is whichever of the two has `e_b`'s column
/// left of `e_a`'s, and the family inserts `s` at row `a` of `e_b`'s column
/// — the one free coordinate of that matrix pattern.
///
/// Membership of the whole curve is decided deterministically from `n + 1`
/// sample values of `s`: every Hessenberg condition is the vanishing of
/// minors of degree ≤ `n` in `s`, so vanishing at `n + 1` points is
/// identical vanishing.
pub fn curve_in_variety(
    w: &Permutation,
    pos: (usize, usize),
    x: &SkeletalNilpotent,
    h: &HessenbergFunction,
) -> Result<bool> {
    let samples: Vec<Rat> = (0..=w.n() as i64).map(ratint).collect();
    curve_in_variety_with_samples(w, pos, x, h, &samples)
}

/// [`curve_in_variety`] with an explicit list of at least `n + 1` distinct
/// sample values; the result is independent of the choice.
pub fn curve_in_variety_with_samples(
    w: &Permutation,
    pos: (usize, usize),
    x: &SkeletalNilpotent,
    h: &HessenbergFunction,
    samples: &[Rat],
) -> Result<bool> {
    let n = w.n();
    let (a, b) = pos;
    if a >= b || b > n || a < 1 {
        return Err(Error::InvalidArgument(format!(
            "position pair must satisfy 1 <= a < b <= n; got ({a}, {b})"
        )));
    }
    if samples.len() < n + 1 {
        return Err(Error::InvalidArgument(format!(
            "need at least {} sample values, got {}",
            n + 1,
            samples.len()
        )));
    }
    if !member_fixed_point(w, x, h) {
        return Err(Error::NotMember);
    }
    // The far endpoint must itself be in the variety.
    let other = w.swap_values(a, b);
    if !member_fixed_point(&other, x, h) {
        return Ok(false);
    }
    // Base endpoint: the one whose column of e_b precedes the column of
    // e_a, so that inserting s at (a, column of e_b) stays inside its
    // Schubert cell.
    let base = if w.preimage(a) > w.preimage(b) { w } else { &other };
    let col = base.preimage(b);
    for s in samples {
        let mut m = RationalMatrix::zeros(n, n);
        for c in 1..=n {
            m.set(base.apply(c), c, ratint(1));
        }
        m.set(a, col, s.clone());
        if !crate::hess::member(&m, x, h)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn subregular() -> SkeletalNilpotent {
        let mut m = RationalMatrix::zeros(4, 4);
        m.set(2, 3, ratint(1));
        m.set(3, 4, ratint(1));
        SkeletalNilpotent::from_matrix(&m).unwrap()
    }

    #[test]
    fn whole_flag_variety_contains_every_curve() {
        let x = SkeletalNilpotent::fk(4, 2).unwrap();
        let h = HessenbergFunction::full(4);
        for w in Permutation::all(4) {
            for a in 1..=4 {
                for b in (a + 1)..=4 {
                    assert!(curve_in_variety(&w, (a, b), &x, &h).unwrap());
                }
            }
        }
    }

    #[test]
    fn subregular_identity_curves_match_expected_cells() {
        let x = subregular();
        let h = HessenbergFunction::identity(4);
        let id = Permutation::identity(4);
        assert!(curve_in_variety(&id, (1, 2), &x, &h).unwrap());
        assert!(!curve_in_variety(&id, (3, 4), &x, &h).unwrap());
    }

    #[test]
    fn non_member_endpoint_is_a_precondition_error() {
        let x = subregular();
        let h = HessenbergFunction::identity(4);
        let w = Permutation::new(vec![4, 3, 2, 1]).unwrap();
        assert!(!member_fixed_point(&w, &x, &h));
        assert!(matches!(
            curve_in_variety(&w, (1, 2), &x, &h),
            Err(Error::NotMember)
        ));
    }

    #[test]
    fn result_is_independent_of_the_sample_set() {
        let x = subregular();
        let h = HessenbergFunction::identity(4);
        let id = Permutation::identity(4);
        let alt: Vec<Rat> = (5..=10).map(|k| crate::rat(k, 7)).collect();
        for (a, b) in [(1, 2), (1, 3), (2, 3), (3, 4), (2, 4), (1, 4)] {
            assert_eq!(
                curve_in_variety(&id, (a, b), &x, &h).unwrap(),
                curve_in_variety_with_samples(&id, (a, b), &x, &h, &alt).unwrap(),
                "pos = ({a}, {b})"
            );
        }
    }

    #[test]
    fn degenerate_sample_count_is_rejected() {
        let x = subregular();
        let h = HessenbergFunction::full(4);
        let id = Permutation::identity(4);
        let too_few: Vec<Rat> = (0..3).map(ratint).collect();
        assert!(matches!(
            curve_in_variety_with_samples(&id, (1, 2), &x, &h, &too_few),
            Err(Error::InvalidArgument(_))
        ));
    }
}
