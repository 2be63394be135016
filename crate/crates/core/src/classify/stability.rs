use num::{One, Zero};

use crate::combinat::{HessenbergFunction, Permutation, SkeletalNilpotent};
use crate::exactla::FlagMatrix;
use crate::hess::{column_test, member, member_fixed_point};
use crate::sample::{cell_point, free_positions, random_cell_point, rng_from_seed};
use crate::{Error, Rat, Result};

/// The outcome of the `T`-stability classification of `H(F_2, h)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum StabilityStatus {
    /// Stable, satisfying the numbered closed-form condition (1–4).
    TStable { condition: u8 },
    /// Not stable; `table_row` is the matching row (1–4) of the published
    /// case table and `witness` the permutation from the proof chart whose
    /// cell carries an obstructed member.
    NotTStable { table_row: u8, witness: Permutation },
}

/// A stability verdict, with the dimension and Hessenberg function echoed
/// and, in the unstable case, an explicit member flag whose column test
/// raises the full-torus obstruction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StabilityVerdict {
    pub n: usize,
    pub h: HessenbergFunction,
    pub status: StabilityStatus,
    pub certificate: Option<FlagMatrix>,
}

impl StabilityVerdict {
    pub fn is_stable(&self) -> bool {
        matches!(self.status, StabilityStatus::TStable { .. })
    }
}

/// The first of the four closed-form stability conditions satisfied by `h`:
/// 1. `h(1) = n`;
/// 2. `h(1) = n-1` and `h(n-1) = n-1`;
/// 3. `h(1) = 1` and `h(2) = n`;
/// 4. `h(1) = 1`, `h(2) = … = h(n-1) = n-1`.
fn stable_condition(h: &HessenbergFunction) -> Option<u8> {
    let n = h.n();
    if h.value(1) == n {
        Some(1)
    } else if h.value(1) == n - 1 && h.value(n - 1) == n - 1 {
        Some(2)
    } else if h.value(1) == 1 && h.value(2) == n {
        Some(3)
    } else if h.value(1) == 1 && h.value(2) == n - 1 && h.value(n - 1) == n - 1 {
        Some(4)
    } else {
        None
    }
}

/// The case-table row for a non-stable `h`, keyed exactly as printed: first
/// by `h(n-1) ∈ {n, n-1}`, then by `h(1) = 1` versus `h(1) ≥ 2`.  Returns
/// the row number together with the chart witness permutation.
fn table_row(h: &HessenbergFunction) -> (u8, Permutation) {
    let n = h.n();
    match (h.value(n - 1) == n, h.value(1) == 1) {
        (true, true) => (1, chart_witness(n, 3)),
        (true, false) => (2, chart_witness(n, 4)),
        (false, true) => (3, chart_witness(n, 1)),
        (false, false) => (4, chart_witness(n, 2)),
    }
}

/// The proof-chart permutations `w_1..w_4`: identity on `3..=n-2`, with the
/// stated images on `1, 2, n-1, n`.
fn chart_witness(n: usize, which: u8) -> Permutation {
    let mut images: Vec<usize> = (1..=n).collect();
    let (i1, i2, i3, i4) = match which {
        1 => (2, n, 1, n - 1),
        2 => (n, 2, 1, n - 1),
        3 => (2, n, n - 1, 1),
        4 => (n, 2, n - 1, 1),
        _ => unreachable!("chart has four permutations"),
    };
    images[0] = i1;
    images[1] = i2;
    images[n - 2] = i3;
    images[n - 1] = i4;
    Permutation::new(images).expect("chart images are a bijection")
}

/// The proof's explicit unstable member in the witness cell: the column
/// with pivot row 2 gets the free entry `b' = 1` in row 1, and the column
/// with pivot row `n` gets `a' = 1` in row `n - 1`, making the dependent
/// equation `b' = a'` hold while its coefficient is nonzero.
fn instability_certificate(w: &Permutation) -> Result<FlagMatrix> {
    let free = free_positions(w);
    let n = w.n();
    let targets = [(1, w.preimage(2)), (n - 1, w.preimage(n))];
    let values: Vec<Rat> = free
        .iter()
        .map(|pos| {
            if targets.contains(pos) {
                Rat::one()
            } else {
                Rat::zero()
            }
        })
        .collect();
    cell_point(w, &values)
}

/// Closed-form `T`-stability classification of `H(F_2, h)` for `n ≥ 4`.
pub fn classify_f2_tstable(h: &HessenbergFunction) -> Result<StabilityVerdict> {
    let n = h.n();
    if n < 4 {
        return Err(Error::UnsupportedDimension(n));
    }
    let status = match stable_condition(h) {
        Some(condition) => StabilityStatus::TStable { condition },
        None => {
            let (row, witness) = table_row(h);
            StabilityStatus::NotTStable {
                table_row: row,
                witness,
            }
        }
    };
    let certificate = match &status {
        StabilityStatus::NotTStable { witness, .. } => {
            Some(instability_certificate(witness)?)
        }
        StabilityStatus::TStable { .. } => None,
    };
    Ok(StabilityVerdict {
        n,
        h: h.clone(),
        status,
        certificate,
    })
}

/// Brute-force `T`-stability decision for `H(F_2, h)`, `n ≥ 4`.
///
/// Instability is certified by constructing the proof's member in the
/// keyed chart cell and checking that its column test raises the
/// obstruction.  Stability is certified by running the column test on
/// every permutation fixed point and on `trials` sampled cell members and
/// finding every one unobstructed.
pub fn brute_f2_tstable(
    h: &HessenbergFunction,
    trials: usize,
    seed: u64,
) -> Result<StabilityVerdict> {
    let n = h.n();
    if n < 4 {
        return Err(Error::UnsupportedDimension(n));
    }
    let x = SkeletalNilpotent::fk(n, 2)?;
    let (row, witness) = table_row(h);

    // A chart witness certifies instability when its flag is a member and
    // the variety misses e_1 within the first h(ℓ) columns, ℓ = w⁻¹(n).
    let violates = member_fixed_point(&witness, &x, h)
        && witness.preimage(1) > h.value(witness.preimage(n));
    if violates {
        let g = instability_certificate(&witness)?;
        if !member(g.matrix(), &x, h)? {
            return Err(Error::InvalidWitness(
                "constructed instability certificate is not a member".into(),
            ));
        }
        let report = column_test(&g, &x, h)?;
        if !report.full_torus_obstructed {
            return Err(Error::InvalidWitness(
                "instability certificate did not obstruct the full torus".into(),
            ));
        }
        return Ok(StabilityVerdict {
            n,
            h: h.clone(),
            status: StabilityStatus::NotTStable {
                table_row: row,
                witness,
            },
            certificate: Some(g),
        });
    }

    // Stability pass: no sampled member may obstruct.
    let member_perms: Vec<Permutation> = Permutation::all(n)
        .filter(|w| member_fixed_point(w, &x, h))
        .collect();
    let mut rng = rng_from_seed(seed);
    let check = |g: &FlagMatrix| -> Result<()> {
        let report = column_test(g, &x, h)?;
        if report.full_torus_obstructed {
            return Err(Error::InvalidWitness(format!(
                "sampled member in cell {:?} obstructs a variety the case table calls stable",
                g.pivot_perm()
            )));
        }
        Ok(())
    };
    for w in &member_perms {
        check(&FlagMatrix::permutation(w))?;
    }
    for t in 0..trials {
        let w = &member_perms[t % member_perms.len()];
        let g = random_cell_point(w, &mut rng);
        if member(g.matrix(), &x, h)? {
            check(&g)?;
        }
    }
    let condition = stable_condition(h).ok_or_else(|| {
        Error::InvalidWitness(
            "sampling found no obstruction but h matches no closed-form stable condition".into(),
        )
    })?;
    Ok(StabilityVerdict {
        n,
        h: h.clone(),
        status: StabilityStatus::TStable { condition },
        certificate: None,
    })
}
