use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A Hessenberg function `h: {1,..,n} -> {1,..,n}`: weakly increasing with
/// `h(i) >= i`.  Doubles as the mask of the Hessenberg space `H`, whose
/// matrices vanish in entry `(i, j)` whenever `i > h(j)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HessenbergFunction {
    values: Vec<usize>,
}

impl HessenbergFunction {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        if n == 0 {
            return Err(Error::EmptyDomain);
        }
        for i in 1..=n {
            let v = values[i - 1];
            if v < i || v > n {
                return Err(Error::InvalidArgument(format!(
                    "h({i}) = {v} out of range [{i}, {n}]"
                )));
            }
            if i >= 2 && v < values[i - 2] {
                return Err(Error::InvalidArgument(format!(
                    "h({i}) = {v} decreases below h({}) = {}",
                    i - 1,
                    values[i - 2]
                )));
            }
        }
        Ok(Self { values })
    }

    /// The identity function `h(i) = i`, i.e. `H = 𝔟`.
    pub fn identity(n: usize) -> Self {
        Self {
            values: (1..=n).collect(),
        }
    }

    /// `h(i) = min(i + 1, n)`, the Peterson-type space `H_0`.
    pub fn banded(n: usize) -> Self {
        Self {
            values: (1..=n).map(|i| (i + 1).min(n)).collect(),
        }
    }

    /// `h(i) = n` for all `i`, i.e. `H = 𝔤` and the variety is all of `G/B`.
    pub fn full(n: usize) -> Self {
        Self {
            values: vec![n; n],
        }
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    /// `h(i)`, 1-based.
    pub fn value(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// Whether the mask position `(i, j)` lies inside the Hessenberg space.
    pub fn mask_contains(&self, i: usize, j: usize) -> bool {
        i <= self.value(j)
    }

    /// Pointwise containment `self ⊆ other` of the corresponding spaces.
    pub fn contained_in(&self, other: &HessenbergFunction) -> bool {
        self.n() == other.n()
            && self
                .values
                .iter()
                .zip(&other.values)
                .all(|(a, b)| a <= b)
    }

    pub fn short(&self) -> String {
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        format!("({})", parts.join(","))
    }
}

impl std::fmt::Debug for HessenbergFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "h{}", self.short())
    }
}

/// All Hessenberg functions on `{1,..,n}` in lexicographic order of their
/// value sequences.  There are Catalan-many of them.
pub fn enumerate_hessenberg_functions(n: usize) -> Result<Vec<HessenbergFunction>> {
    if n == 0 {
        return Err(Error::EmptyDomain);
    }
    let mut out = Vec::new();
    let mut values = Vec::with_capacity(n);
    fn rec(n: usize, i: usize, values: &mut Vec<usize>, out: &mut Vec<HessenbergFunction>) {
        if i > n {
            out.push(HessenbergFunction {
                values: values.clone(),
            });
            return;
        }
        let lo = values.last().copied().unwrap_or(1).max(i);
        for v in lo..=n {
            values.push(v);
            rec(n, i + 1, values, out);
            values.pop();
        }
    }
    rec(n, 1, &mut values, &mut out);
    Ok(out)
}
