use num::One;

use crate::combinat::{greedy_witness, HessenbergFunction, SkeletalNilpotent};
use crate::hess::{column_test, stabilizer_estimate};
use crate::torus::{canonical_k, subtorus_from_characters, Character, Subtorus};
use crate::{Error, Rat, Result};

/// Verdict on the maximal subtorus acting on `H(F_k, h)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MaxTorusVerdict {
    pub lower: Subtorus,
    pub upper: Subtorus,
    /// True when the bounds coincide, so the maximal torus is known.
    pub determined: bool,
    /// True when the coinciding bounds were certified exactly by a witness
    /// flag's column test rather than found by sampling.
    pub certified: bool,
}

/// Decide the maximal subtorus acting on `H(F_k, h)`.
///
/// For `k = 1` the full torus always acts.  When `h(1) = 2` and `h`
/// dominates the banded function `h₀(i) = min(i+1, n)`, the greedy witness
/// flag's column test is a certificate: the constraints it forces cut out
/// exactly the canonical subtorus, which also acts, so the bounds coincide
/// exactly.  Otherwise sampled stabilizer bounds are returned.
pub fn max_subtorus_fk(k: usize, h: &HessenbergFunction, n: usize) -> Result<MaxTorusVerdict> {
    if k < 1 || k >= n {
        return Err(Error::InvalidArgument(format!(
            "F_k needs 1 <= k <= n-1; got k = {k}, n = {n}"
        )));
    }
    if h.n() != n {
        return Err(Error::DimensionMismatch(format!(
            "h is on {} letters, expected {n}",
            h.n()
        )));
    }
    if k == 1 {
        let t = Subtorus::full(n);
        return Ok(MaxTorusVerdict {
            lower: t.clone(),
            upper: t,
            determined: true,
            certified: true,
        });
    }
    let x = SkeletalNilpotent::fk(n, k)?;
    let lower = canonical_k(&x);
    let banded = HessenbergFunction::banded(n);
    if h.value(1) == 2 && banded.contained_in(h) {
        let seed: Vec<Rat> = vec![Rat::one(); n];
        let g = greedy_witness(n, k, &seed)?;
        let report = column_test(&g, &x, h)?;
        let chars: Vec<Character> = report.equalities.iter().cloned().collect();
        let upper = subtorus_from_characters(n, &chars)?;
        if upper == lower {
            return Ok(MaxTorusVerdict {
                lower,
                upper,
                determined: true,
                certified: true,
            });
        }
    }
    let est = stabilizer_estimate(&x, h, 60, 0)?;
    Ok(MaxTorusVerdict {
        lower: est.lower,
        upper: est.upper,
        determined: est.determined,
        certified: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn peterson_maximal_torus_is_canonical_k() {
        for n in 4..=6 {
            let h = HessenbergFunction::banded(n);
            let v = max_subtorus_fk(n - 1, &h, n).unwrap();
            assert!(v.determined && v.certified, "n = {n}");
            assert_eq!(v.upper, canonical_k(&SkeletalNilpotent::fk(n, n - 1).unwrap()));
            assert_eq!(v.upper.codim(), n - 2);
        }
    }

    #[test]
    fn f2_banded_maximal_torus_has_codim_one() {
        let h = HessenbergFunction::banded(5);
        let v = max_subtorus_fk(2, &h, 5).unwrap();
        assert!(v.determined && v.certified);
        assert_eq!(v.upper, canonical_k(&SkeletalNilpotent::fk(5, 2).unwrap()));
        assert_eq!(v.upper.codim(), 1);
    }

    #[test]
    fn f1_always_keeps_the_full_torus() {
        for h in [
            HessenbergFunction::identity(4),
            HessenbergFunction::full(4),
        ] {
            let v = max_subtorus_fk(1, &h, 4).unwrap();
            assert!(v.determined && v.upper.is_full());
        }
    }

    #[test]
    fn high_h_falls_back_to_sampled_bounds() {
        // h(1) = 3 breaks the certificate hypothesis; the sampled bounds
        // apply and leave the full torus possible for this stable variety.
        let h = HessenbergFunction::new(vec![3, 3, 3, 4]).unwrap();
        let v = max_subtorus_fk(2, &h, 4).unwrap();
        assert!(!v.certified);
        assert!(v.upper.is_full());
    }

    #[test]
    fn bad_k_is_rejected() {
        let h = HessenbergFunction::full(4);
        assert!(max_subtorus_fk(0, &h, 4).is_err());
        assert!(max_subtorus_fk(4, &h, 4).is_err());
    }
}
