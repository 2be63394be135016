use num::{One, Zero};

use crate::{Error, Rat, Result};

/// A dense matrix of arbitrary-precision rationals.  All arithmetic is
/// exact; there is no floating point anywhere in this module.
///
/// Indices are 1-based throughout, matching the usual matrix notation.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 1..=n {
            m.set(i, i, Rat::one());
        }
        m
    }

    /// Build from a row-major list of rows.
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self> {
        let r = rows.len();
        if r == 0 {
            return Err(Error::EmptyDomain);
        }
        let c = rows[0].len();
        if c == 0 || rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch(
                "rows must be nonempty and of equal length".into(),
            ));
        }
        Ok(Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_columns(cols: Vec<Vec<Rat>>) -> Result<Self> {
        let m = Self::from_rows(cols)?;
        Ok(m.transpose())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Rat {
        &self.data[(i - 1) * self.cols + (j - 1)]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[(i - 1) * self.cols + (j - 1)] = v;
    }

    pub fn column(&self, j: usize) -> Vec<Rat> {
        (1..=self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn set_column(&mut self, j: usize, v: &[Rat]) {
        for i in 1..=self.rows {
            self.set(i, j, v[i - 1].clone());
        }
    }

    /// The submatrix of the first `m` columns.
    pub fn column_prefix(&self, m: usize) -> Self {
        self.select_columns(&(1..=m).collect::<Vec<_>>())
    }

    pub fn select_columns(&self, js: &[usize]) -> Self {
        let mut out = Self::zeros(self.rows, js.len());
        for (c, &j) in js.iter().enumerate() {
            for i in 1..=self.rows {
                out.set(i, c + 1, self.at(i, j).clone());
            }
        }
        out
    }

    pub fn select_submatrix(&self, is: &[usize], js: &[usize]) -> Self {
        let mut out = Self::zeros(is.len(), js.len());
        for (r, &i) in is.iter().enumerate() {
            for (c, &j) in js.iter().enumerate() {
                out.set(r + 1, c + 1, self.at(i, j).clone());
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 1..=self.rows {
            for j in 1..=self.cols {
                out.set(j, i, self.at(i, j).clone());
            }
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 1..=self.rows {
            for j in 1..=other.cols {
                let mut acc = Rat::zero();
                for k in 1..=self.cols {
                    acc += self.at(i, k) * other.at(k, j);
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Result<Vec<Rat>> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix times length-{} vector",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((1..=self.rows)
            .map(|i| {
                let mut acc = Rat::zero();
                for k in 1..=self.cols {
                    acc += self.at(i, k) * &v[k - 1];
                }
                acc
            })
            .collect())
    }

    /// Multiply on the left by the diagonal matrix `diag(t)`.
    pub fn scale_rows(&self, t: &[Rat]) -> Result<Self> {
        if t.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "diagonal of length {} against {} rows",
                t.len(),
                self.rows
            )));
        }
        let mut out = self.clone();
        for i in 1..=self.rows {
            for j in 1..=self.cols {
                let v = out.at(i, j) * &t[i - 1];
                out.set(i, j, v);
            }
        }
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        let (reduced, _) = self.row_echelon();
        (1..=self.rows)
            .filter(|&i| (1..=self.cols).any(|j| !reduced.at(i, j).is_zero()))
            .count()
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch("inverse of non-square".into()));
        }
        let n = self.rows;
        // Row-reduce [self | I].
        let mut aug = Self::zeros(n, 2 * n);
        for i in 1..=n {
            for j in 1..=n {
                aug.set(i, j, self.at(i, j).clone());
            }
            aug.set(i, n + i, Rat::one());
        }
        let (red, pivots) = aug.row_echelon_reduced();
        if pivots.len() != n || pivots.iter().any(|&(_, c)| c > n) {
            return Err(Error::SingularMatrix);
        }
        let mut inv = Self::zeros(n, n);
        for &(r, c) in &pivots {
            for j in 1..=n {
                inv.set(c, j, red.at(r, n + j).clone());
            }
        }
        Ok(inv)
    }

    /// Row echelon form together with the (row, column) pivot list, in order.
    fn row_echelon(&self) -> (Self, Vec<(usize, usize)>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 1;
        for col in 1..=m.cols {
            if row > m.rows {
                break;
            }
            let Some(p) = (row..=m.rows).find(|&i| !m.at(i, col).is_zero()) else {
                continue;
            };
            if p != row {
                for j in 1..=m.cols {
                    let a = m.at(row, j).clone();
                    let b = m.at(p, j).clone();
                    m.set(row, j, b);
                    m.set(p, j, a);
                }
            }
            let inv = m.at(row, col).recip();
            for j in col..=m.cols {
                let v = m.at(row, j) * &inv;
                m.set(row, j, v);
            }
            for i in (row + 1)..=m.rows {
                if !m.at(i, col).is_zero() {
                    let f = m.at(i, col).clone();
                    for j in col..=m.cols {
                        let v = m.at(i, j) - m.at(row, j) * &f;
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push((row, col));
            row += 1;
        }
        (m, pivots)
    }

    /// Reduced row echelon form with the pivot list.
    fn row_echelon_reduced(&self) -> (Self, Vec<(usize, usize)>) {
        let (mut m, pivots) = self.row_echelon();
        for &(r, c) in pivots.iter().rev() {
            for i in 1..r {
                if !m.at(i, c).is_zero() {
                    let f = m.at(i, c).clone();
                    for j in c..=m.cols {
                        let v = m.at(i, j) - m.at(r, j) * &f;
                        m.set(i, j, v);
                    }
                }
            }
        }
        (m, pivots)
    }
}

impl std::fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for i in 1..=self.rows {
            let row: Vec<String> = (1..=self.cols).map(|j| self.at(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// The pivot of a column vector: the lowest nonzero row, or 0 for the zero
/// vector.
pub fn piv(v: &[Rat]) -> usize {
    v.iter().rposition(|x| !x.is_zero()).map_or(0, |i| i + 1)
}

/// Solve `Mc = w` exactly.  Returns the coefficients if a solution exists,
/// with free variables set to zero; `None` if the system is inconsistent.
pub fn in_span(m: &RationalMatrix, w: &[Rat]) -> Option<Vec<Rat>> {
    assert_eq!(m.rows(), w.len(), "vector length must match row count");
    let mut aug = RationalMatrix::zeros(m.rows(), m.cols() + 1);
    for i in 1..=m.rows() {
        for j in 1..=m.cols() {
            aug.set(i, j, m.at(i, j).clone());
        }
        aug.set(i, m.cols() + 1, w[i - 1].clone());
    }
    let (red, pivots) = aug.row_echelon_reduced();
    if pivots.iter().any(|&(_, c)| c == m.cols() + 1) {
        return None;
    }
    let mut coeffs = vec![Rat::zero(); m.cols()];
    for &(r, c) in &pivots {
        coeffs[c - 1] = red.at(r, m.cols() + 1).clone();
    }
    Some(coeffs)
}
