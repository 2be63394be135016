//! Characters, cocharacters, and subtori of the diagonal torus, with exact
//! integer-lattice arithmetic.  A subtorus is stored as the saturated lattice
//! of characters vanishing on it, in a canonical normal form, so equality of
//! subtori is equality of representations.

pub mod lattice;

use num::{One, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::combinat::SkeletalNilpotent;
use crate::{Error, Rat, Result};

/// A character of the diagonal torus, written additively in the basis
/// `ε_1, …, ε_n`: the exponent vector of `t ↦ ∏ t_i^{e_i}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Character {
    exps: Vec<i64>,
}

impl Character {
    pub fn new(exps: Vec<i64>) -> Self {
        Self { exps }
    }

    pub fn zero(n: usize) -> Self {
        Self { exps: vec![0; n] }
    }

    /// The root `ε_a − ε_b`.
    pub fn root(n: usize, a: usize, b: usize) -> Self {
        let mut exps = vec![0; n];
        exps[a - 1] += 1;
        exps[b - 1] -= 1;
        Self { exps }
    }

    pub fn n(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[i64] {
        &self.exps
    }

    pub fn is_zero(&self) -> bool {
        self.exps.iter().all(|&x| x == 0)
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n(), other.n());
        Self {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    /// Sign-normalized copy: the first nonzero exponent is positive, so `χ`
    /// and `−χ` (which cut out the same subtorus) compare equal.
    pub fn normalized(&self) -> Self {
        match self.exps.iter().find(|&&x| x != 0) {
            Some(&x) if x < 0 => Self {
                exps: self.exps.iter().map(|&e| -e).collect(),
            },
            _ => self.clone(),
        }
    }

    /// Evaluate at a point with nonzero rational coordinates: `∏ t_i^{e_i}`.
    pub fn eval(&self, t: &[Rat]) -> Result<Rat> {
        if t.len() != self.n() {
            return Err(Error::DimensionMismatch(format!(
                "point has {} coordinates, character has {}",
                t.len(),
                self.n()
            )));
        }
        let mut acc = Rat::one();
        for (ti, &e) in t.iter().zip(&self.exps) {
            if ti.is_zero() {
                return Err(Error::InvalidArgument(
                    "character evaluated at a point with a zero coordinate".into(),
                ));
            }
            acc *= rat_pow(ti, e);
        }
        Ok(acc)
    }
}

impl std::fmt::Debug for Character {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if e > 0 && !first {
                write!(f, "+")?;
            }
            match e {
                1 => write!(f, "e{}", i + 1)?,
                -1 => write!(f, "-e{}", i + 1)?,
                _ => write!(f, "{}e{}", e, i + 1)?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// A cocharacter `s ↦ (s^{v_1}, …, s^{v_n})` of the diagonal torus.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct Cocharacter {
    exps: Vec<i64>,
}

impl Cocharacter {
    pub fn new(exps: Vec<i64>) -> Self {
        Self { exps }
    }

    pub fn n(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[i64] {
        &self.exps
    }

    /// The natural pairing `⟨χ, v⟩ = Σ e_i v_i`.
    pub fn pair(&self, chi: &Character) -> i64 {
        debug_assert_eq!(self.n(), chi.n());
        self.exps.iter().zip(chi.exps()).map(|(v, e)| v * e).sum()
    }

    /// The point `(s^{v_1}, …, s^{v_n})` for a nonzero rational `s`.
    pub fn at(&self, s: &Rat) -> Vec<Rat> {
        self.exps.iter().map(|&e| rat_pow(s, e)).collect()
    }
}

fn rat_pow(base: &Rat, e: i64) -> Rat {
    base.pow(i32::try_from(e).expect("tiny exponent"))
}

/// A subtorus of the diagonal torus, represented by the saturated lattice of
/// characters that are trivial on it, stored in row Hermite normal form.
/// Two subtori are equal iff their representations are equal, and the
/// codimension is the number of basis constraints.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Subtorus {
    n: usize,
    constraints: Vec<Vec<i64>>,
}

impl Subtorus {
    /// The full diagonal torus: no constraints.
    pub fn full(n: usize) -> Self {
        Self {
            n,
            constraints: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Canonical basis of the (saturated) constraint lattice.
    pub fn constraint_basis(&self) -> Vec<Character> {
        self.constraints
            .iter()
            .map(|r| Character::new(r.clone()))
            .collect()
    }

    pub fn codim(&self) -> usize {
        self.constraints.len()
    }

    pub fn is_full(&self) -> bool {
        self.constraints.is_empty()
    }

    /// Whether the one-parameter subgroup `v` lands inside this subtorus.
    pub fn contains_cochar(&self, v: &Cocharacter) -> bool {
        v.n() == self.n
            && self
                .constraints
                .iter()
                .all(|c| c.iter().zip(v.exps()).map(|(e, x)| e * x).sum::<i64>() == 0)
    }

    /// Whether a concrete point with nonzero coordinates lies in the
    /// subtorus: every constraint character evaluates to 1.
    pub fn contains_point(&self, t: &[Rat]) -> Result<bool> {
        for c in self.constraint_basis() {
            if !c.eval(t)?.is_one() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether `self ⊆ other` as subtori (up to finite index, i.e. on the
    /// level of Lie algebras): every constraint of `other` must vanish on
    /// `self`, i.e. lie in the rational span of `self`'s constraints.
    pub fn is_subtorus_of(&self, other: &Subtorus) -> bool {
        self.n == other.n
            && other
                .constraints
                .iter()
                .all(|c| lattice::in_rational_span(&self.constraints, c))
    }

    /// A subtorus is regular if it is contained in no root subgroup kernel:
    /// no root `ε_i − ε_j` vanishes identically on it.
    pub fn is_regular(&self) -> bool {
        for i in 1..=self.n {
            for j in 1..=self.n {
                if i != j {
                    let root = Character::root(self.n, i, j);
                    if lattice::in_rational_span(&self.constraints, root.exps()) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Cocharacter lattice basis: integer vectors pairing to zero with every
    /// constraint.  Spans the Lie algebra of the subtorus.
    pub fn cochar_basis(&self) -> Vec<Cocharacter> {
        if self.constraints.is_empty() {
            return (0..self.n)
                .map(|i| {
                    Cocharacter::new((0..self.n).map(|j| i64::from(j == i)).collect())
                })
                .collect();
        }
        lattice::integer_kernel(&self.constraints, self.n)
            .into_iter()
            .map(Cocharacter::new)
            .collect()
    }

    /// A random point of the subtorus with all coordinates nonzero, built by
    /// evaluating the cocharacter basis at random positive rational bases.
    pub fn rational_point<R: Rng>(&self, rng: &mut R) -> Vec<Rat> {
        let basis = self.cochar_basis();
        let mut t = vec![Rat::one(); self.n];
        for v in &basis {
            // Positive rationals keep every coordinate nonzero.
            let num = rng.gen_range(2..40) as i64;
            let den = rng.gen_range(1..12) as i64;
            let s = crate::rat(num, den);
            for (ti, f) in t.iter_mut().zip(v.at(&s)) {
                *ti *= f;
            }
        }
        t
    }
}

/// The subtorus cut out by a set of characters, i.e. the common kernel
/// `{t : χ(t) = 1 ∀χ}`, with the constraint lattice saturated so that `2χ`
/// and `χ` define the same subtorus.
pub fn subtorus_from_characters(n: usize, chars: &[Character]) -> Result<Subtorus> {
    let mut rows = Vec::with_capacity(chars.len());
    for c in chars {
        if c.n() != n {
            return Err(Error::DimensionMismatch(format!(
                "character on {} coordinates in a rank-{} torus",
                c.n(),
                n
            )));
        }
        rows.push(c.exps().to_vec());
    }
    Ok(Subtorus {
        n,
        constraints: lattice::saturate(&rows, n),
    })
}

/// The canonical subtorus `K` acting on every Hessenberg variety of a
/// skeletal operator `X`: for nonzero rows `i_1 < … < i_k` of `X`, the
/// constraints `(ε_{X(i_1)} − ε_{i_1}) − (ε_{X(i_m)} − ε_{i_m})`, `m ≥ 2`.
/// `K` has codimension `k − 1`; for `k ≤ 1` it is the full torus.
pub fn canonical_k(x: &SkeletalNilpotent) -> Subtorus {
    let n = x.n();
    let rows = x.nonzero_rows();
    if rows.len() <= 1 {
        return Subtorus::full(n);
    }
    let first = &rows[0];
    let chi1 = Character::root(n, x.image_col(*first).expect("nonzero row"), *first);
    let chars: Vec<Character> = rows[1..]
        .iter()
        .map(|&i| {
            let chi = Character::root(n, x.image_col(i).expect("nonzero row"), i);
            chi1.sub(&chi)
        })
        .collect();
    subtorus_from_characters(n, &chars).expect("characters share the torus rank")
}
