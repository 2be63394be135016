//! Small exact integer-lattice utilities: row Hermite normal form as a
//! canonical basis, integer kernels, and saturation.  Everything here works
//! on tiny matrices (n ≤ 8 in practice), so simple exact algorithms suffice.

/// Row Hermite normal form of the lattice spanned by the given rows:
/// zero rows dropped, pivots positive, entries above each pivot reduced to
/// `[0, pivot)`, rows ordered by pivot column.  Two row sets span the same
/// lattice iff their normal forms are equal.
pub fn row_hermite(rows: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let mut m: Vec<Vec<i64>> = rows.iter().filter(|r| r.iter().any(|&x| x != 0)).cloned().collect();
    if m.is_empty() {
        return Vec::new();
    }
    let ncols = m[0].len();
    let mut row0 = 0;
    for col in 0..ncols {
        // Euclid on the entries of this column at or below row0.
        loop {
            let mut nonzero: Vec<usize> = (row0..m.len()).filter(|&i| m[i][col] != 0).collect();
            if nonzero.is_empty() {
                break;
            }
            nonzero.sort_by_key(|&i| m[i][col].unsigned_abs());
            let pivot_row = nonzero[0];
            m.swap(row0, pivot_row);
            if m[row0][col] < 0 {
                for x in m[row0].iter_mut() {
                    *x = -*x;
                }
            }
            let p = m[row0][col];
            let mut reduced_any = false;
            for i in (row0 + 1)..m.len() {
                if m[i][col] != 0 {
                    let q = m[i][col].div_euclid(p);
                    for c in 0..ncols {
                        m[i][c] -= q * m[row0][c];
                    }
                    reduced_any = reduced_any || m[i][col] != 0;
                }
            }
            if !reduced_any {
                break;
            }
        }
        if row0 < m.len() && m[row0][col] != 0 {
            row0 += 1;
        }
    }
    m.truncate(row0);
    // Back-reduce entries above each pivot.
    for r in (0..m.len()).rev() {
        let col = m[r].iter().position(|&x| x != 0).expect("nonzero row");
        let p = m[r][col];
        for i in 0..r {
            let q = m[i][col].div_euclid(p);
            if q != 0 {
                for c in 0..m[i].len() {
                    m[i][c] -= q * m[r][c];
                }
            }
        }
    }
    m
}

/// A basis of the integer kernel `{v : M v = 0}` of an integer matrix given
/// by rows.  Computed by column reduction with a transform, so the result is
/// a basis of the full (automatically saturated) kernel lattice.
pub fn integer_kernel(rows: &[Vec<i64>], ncols: usize) -> Vec<Vec<i64>> {
    let nrows = rows.len();
    // Work on columns of M alongside columns of the identity transform U,
    // maintaining M·U = current; zeroed columns of the current matrix give
    // kernel vectors in U.
    let mut m: Vec<Vec<i64>> = (0..ncols)
        .map(|c| (0..nrows).map(|r| rows[r][c]).collect())
        .collect();
    let mut u: Vec<Vec<i64>> = (0..ncols)
        .map(|c| (0..ncols).map(|r| if r == c { 1 } else { 0 }).collect())
        .collect();
    let mut col0 = 0;
    for row in 0..nrows {
        loop {
            let mut nonzero: Vec<usize> = (col0..ncols).filter(|&c| m[c][row] != 0).collect();
            if nonzero.is_empty() {
                break;
            }
            nonzero.sort_by_key(|&c| m[c][row].unsigned_abs());
            let pc = nonzero[0];
            m.swap(col0, pc);
            u.swap(col0, pc);
            let p = m[col0][row];
            let mut reduced_any = false;
            for c in (col0 + 1)..ncols {
                if m[c][row] != 0 {
                    let q = m[c][row].div_euclid(p);
                    for r in 0..nrows {
                        let delta = q * m[col0][r];
                        m[c][r] -= delta;
                    }
                    for r in 0..ncols {
                        let delta = q * u[col0][r];
                        u[c][r] -= delta;
                    }
                    reduced_any = reduced_any || m[c][row] != 0;
                }
            }
            if !reduced_any {
                break;
            }
        }
        if col0 < ncols && m[col0][row] != 0 {
            col0 += 1;
        }
    }
    (col0..ncols)
        .filter(|&c| m[c].iter().all(|&x| x == 0))
        .map(|c| u[c].clone())
        .collect()
}

/// The saturation of the row lattice: all integer vectors in its rational
/// span, returned in row Hermite normal form.  Computed as the integer
/// vectors orthogonal to the rational nullspace, i.e. the kernel of the
/// kernel.
pub fn saturate(rows: &[Vec<i64>], ncols: usize) -> Vec<Vec<i64>> {
    let nullspace = integer_kernel(rows, ncols);
    if nullspace.is_empty() {
        // Full rank: the saturation is all of Z^n.
        return row_hermite(
            &(0..ncols)
                .map(|i| (0..ncols).map(|j| if i == j { 1 } else { 0 }).collect())
                .collect::<Vec<_>>(),
        );
    }
    row_hermite(&integer_kernel(&nullspace, ncols))
}

/// Rational rank of the row span.
pub fn rank(rows: &[Vec<i64>], ncols: usize) -> usize {
    ncols - integer_kernel(rows, ncols).len()
}

/// Whether `v` lies in the rational span of the rows.
pub fn in_rational_span(rows: &[Vec<i64>], v: &[i64]) -> bool {
    let base = rank(rows, v.len());
    let mut extended: Vec<Vec<i64>> = rows.to_vec();
    extended.push(v.to_vec());
    rank(&extended, v.len()) == base
}
