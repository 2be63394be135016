use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A permutation of `{1, .., n}` in one-line notation: `images[i-1] = w(i)`.
///
/// Acting on column vectors, the associated permutation matrix sends
/// `e_i` to `e_{w(i)}`, so column `i` of the matrix is `e_{w(i)}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::EmptyDomain);
        }
        let mut seen = vec![false; n];
        for &v in &images {
            if v < 1 || v > n || seen[v - 1] {
                return Err(Error::InvalidArgument(format!(
                    "{images:?} is not a bijection on 1..={n}"
                )));
            }
            seen[v - 1] = true;
        }
        Ok(Self { images })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            images: (1..=n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// `w(i)`, 1-based.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Self { images: inv }
    }

    /// `w⁻¹(v)`, 1-based.
    pub fn preimage(&self, v: usize) -> usize {
        self.images.iter().position(|&x| x == v).expect("in range") + 1
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Left-multiplication by the transposition of values `a` and `b`:
    /// the result sends `i` to `t_{ab}(w(i))`.
    pub fn swap_values(&self, a: usize, b: usize) -> Self {
        let images = self
            .images
            .iter()
            .map(|&v| {
                if v == a {
                    b
                } else if v == b {
                    a
                } else {
                    v
                }
            })
            .collect();
        Self { images }
    }

    /// All permutations of `{1, .., n}` in lexicographic order of one-line
    /// notation.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        itertools::Itertools::permutations(1..=n, n).map(|images| Permutation { images })
    }

    pub fn one_line(&self) -> String {
        let parts: Vec<String> = self.images.iter().map(|v| v.to_string()).collect();
        format!("[{}]", parts.join(","))
    }
}

impl std::fmt::Debug for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.one_line())
    }
}
