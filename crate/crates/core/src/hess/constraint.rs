use std::collections::{BTreeMap, BTreeSet};

use num::Zero;
use serde::{Deserialize, Serialize};

use crate::combinat::{HessenbergFunction, SkeletalNilpotent};
use crate::exactla::{column_system, FlagMatrix};
use crate::hess::member;
use crate::torus::Character;
use crate::{Error, Result};

/// Why a column's system imposes no condition on the torus.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum VacuousReason {
    /// `X g_j = 0`: nothing to contain.
    ZeroImage,
    /// `B` has no rows, equivalently the pivot matrix `A` is square of full
    /// size `ℓ`: the pivot columns alone span the needed rows.
    EmptyB,
    /// `B = 0`: the dependent equation reads `0 = 0` for every torus point.
    ZeroB,
    /// Every interaction coefficient `(B A⁻¹)_{r,q} v_q` vanishes, so each
    /// dependent equation is `0 = 0` even though `B` itself is nonzero.
    ZeroInteraction,
}

/// The torus constraints extracted from the column systems of a member flag.
///
/// Each dependent row of a column system states
/// `Σ_q (B A⁻¹)_{r,q} s_q v_q = s'_r v'_r` for the character monomials
/// `s_i = t_{X(i)} / t_i`.  A row with no nonzero summand is vacuous; a row
/// with exactly one reduces to the monomial equality
/// `(ε_{X(i_q)} − ε_{i_q}) − (ε_{X(i_r)} − ε_{i_r}) = 0`; rows with two or
/// more summands are recorded only through the obstruction flag, since no
/// subtorus is read off from them.  Any non-vacuous row rules out the full
/// torus.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct TorusConstraintReport {
    /// Sign-normalized monomial constraints: each character must be trivial
    /// on an acting torus.
    pub equalities: BTreeSet<Character>,
    /// True when some dependent row forces a non-vacuous equation, so the
    /// full torus does not stabilize the variety.
    pub full_torus_obstructed: bool,
    /// `(column j, matrix row)` of the first non-vacuous dependent equation.
    pub obstruction_witness: Option<(usize, usize)>,
    /// Columns whose system imposes no condition, with the reason.
    pub vacuous_columns: BTreeMap<usize, VacuousReason>,
}

/// Run the column test at a member flag: build every column system and
/// classify its dependent rows into vacuous rows, monomial equalities, and
/// obstructions.  Errors with `NotMember` if the flag is not in `H(X, h)`.
pub fn column_test(
    g: &FlagMatrix,
    x: &SkeletalNilpotent,
    h: &HessenbergFunction,
) -> Result<TorusConstraintReport> {
    if !member(g.matrix(), x, h)? {
        return Err(Error::NotMember);
    }
    let n = g.n();
    let mut report = TorusConstraintReport {
        equalities: BTreeSet::new(),
        full_torus_obstructed: false,
        obstruction_witness: None,
        vacuous_columns: BTreeMap::new(),
    };
    for j in 1..=n {
        let sys = column_system(g, x, h, j);
        if sys.image_is_zero() {
            report.vacuous_columns.insert(j, VacuousReason::ZeroImage);
            continue;
        }
        if sys.b_is_empty() {
            report.vacuous_columns.insert(j, VacuousReason::EmptyB);
            continue;
        }
        if sys.b_is_zero() {
            report.vacuous_columns.insert(j, VacuousReason::ZeroB);
            continue;
        }
        let a_inv = sys.a.inverse().expect("pivot matrix is invertible");
        let interaction = sys.b.mul(&a_inv).expect("dimensions match");
        let mut any_term = false;
        for (r, &row_i) in sys.rows_b.iter().enumerate() {
            let terms: Vec<usize> = sys
                .rows_r
                .iter()
                .enumerate()
                .filter(|&(q, _)| {
                    !interaction.at(r + 1, q + 1).is_zero() && !sys.v[q].is_zero()
                })
                .map(|(q, _)| q)
                .collect();
            if terms.is_empty() {
                continue;
            }
            any_term = true;
            if !report.full_torus_obstructed {
                report.full_torus_obstructed = true;
                report.obstruction_witness = Some((j, row_i));
            }
            if terms.len() == 1 {
                let i_q = sys.rows_r[terms[0]];
                let chi_q = Character::root(n, x.image_col(i_q).expect("nonzero image row"), i_q);
                let chi_r = Character::root(n, x.image_col(row_i).expect("nonzero image row"), row_i);
                report.equalities.insert(chi_q.sub(&chi_r).normalized());
            }
        }
        if !any_term {
            report
                .vacuous_columns
                .insert(j, VacuousReason::ZeroInteraction);
        }
    }
    debug_assert!(
        report.full_torus_obstructed
            || !report.equalities.is_empty()
            || report.vacuous_columns.len() == n
    );
    Ok(report)
}
