//! Small exact integer linear algebra: Hermite reduction for coset tags and
//! rational solves for coroot coordinates. All matrices here are tiny
//! (rank of the root system), so fraction-free elimination over i128 is plenty.

/// Row-style Hermite normal form of the lattice spanned by `rows` in Z^m.
///
/// Returns the nonzero HNF rows. Used to reduce cocharacters modulo the
/// coroot lattice when computing coset tags.
pub fn hermite_basis(rows: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let m = match rows.first() {
        Some(r) => r.len(),
        None => return Vec::new(),
    };
    let mut basis: Vec<Vec<i64>> = rows.to_vec();
    let mut out: Vec<Vec<i64>> = Vec::new();
    for col in 0..m {
        loop {
            // find row with minimal nonzero |entry| in this column
            let mut pick: Option<usize> = None;
            for (i, r) in basis.iter().enumerate() {
                if r[col] != 0
                    && pick.map_or(true, |p| basis[p][col].abs() > r[col].abs())
                {
                    pick = Some(i);
                }
            }
            let Some(p) = pick else { break };
            let pivot = basis.remove(p);
            let mut all_zero = true;
            for r in basis.iter_mut() {
                if r[col] != 0 {
                    let q = r[col].div_euclid(pivot[col]);
                    for k in 0..m {
                        r[k] -= q * pivot[k];
                    }
                    if r[col] != 0 {
                        all_zero = false;
                    }
                }
            }
            basis.push(pivot);
            if all_zero {
                let p = basis.len() - 1;
                let mut piv = basis.remove(p);
                if piv[col] < 0 {
                    for x in piv.iter_mut() {
                        *x = -*x;
                    }
                }
                out.push(piv);
                break;
            }
        }
    }
    // reduce entries above pivots
    for i in (0..out.len()).rev() {
        let (pre, rest) = out.split_at_mut(i);
        let piv = &rest[0];
        let col = piv.iter().position(|&x| x != 0).unwrap();
        for r in pre.iter_mut() {
            let q = r[col].div_euclid(piv[col]);
            if q != 0 {
                for k in 0..m {
                    r[k] -= q * piv[k];
                }
            }
        }
    }
    out.sort();
    out
}

/// Canonical representative of `v` modulo the lattice spanned by the HNF
/// basis returned by [`hermite_basis`].
pub fn reduce_mod(hnf: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    let mut v = v.to_vec();
    // rows sorted ascending; reduce from the last (largest leading column first
    // is not required: each row has a distinct pivot column)
    for row in hnf.iter().rev() {
        let col = row.iter().position(|&x| x != 0).unwrap();
        let q = v[col].div_euclid(row[col]);
        if q != 0 {
            for k in 0..v.len() {
                v[k] -= q * row[k];
            }
        }
    }
    v
}

/// Solve `sum_j c_j rows[j] = v` for integer `c`, if a (necessarily unique,
/// given independent rows) integer solution exists.
pub fn solve_integer(rows: &[Vec<i64>], v: &[i64]) -> Option<Vec<i64>> {
    let n = rows.len();
    if n == 0 {
        return if v.iter().all(|&x| x == 0) {
            Some(Vec::new())
        } else {
            None
        };
    }
    let m = rows[0].len();
    // augmented system: columns are equations, unknowns c_0..c_{n-1}
    // A[k][j] = rows[j][k], b[k] = v[k]
    let mut a: Vec<Vec<i128>> = (0..m)
        .map(|k| (0..n).map(|j| rows[j][k] as i128).collect())
        .collect();
    let mut b: Vec<i128> = v.iter().map(|&x| x as i128).collect();
    let mut c = vec![0i128; n];
    let mut used = vec![false; m];
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    for j in 0..n {
        // find pivot row
        let Some(p) = (0..m).find(|&k| !used[k] && a[k][j] != 0) else {
            return None; // rows not independent
        };
        used[p] = true;
        pivots.push((p, j));
        for k in 0..m {
            if k != p && a[k][j] != 0 {
                let (x, y) = (a[p][j], a[k][j]);
                for jj in 0..n {
                    a[k][jj] = a[k][jj] * x - a[p][jj] * y;
                }
                b[k] = b[k] * x - b[p] * y;
            }
        }
    }
    // non-pivot equations must be trivially satisfied
    for k in 0..m {
        if !used[k] && b[k] != 0 {
            return None;
        }
    }
    for &(p, j) in pivots.iter().rev() {
        let mut rhs = b[p];
        for jj in j + 1..n {
            rhs -= a[p][jj] * c[jj];
        }
        if rhs % a[p][j] != 0 {
            return None;
        }
        c[j] = rhs / a[p][j];
    }
    Some(c.into_iter().map(|x| x as i64).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hermite_and_reduce() {
        // A2 coroot lattice inside the gl-style Z^3 sum-zero sublattice
        let rows = vec![vec![1, -1, 0], vec![0, 1, -1]];
        let h = hermite_basis(&rows);
        assert_eq!(h.len(), 2);
        let r1 = reduce_mod(&h, &[1, 0, 0]);
        let r2 = reduce_mod(&h, &[0, 0, 1]);
        assert_eq!(r1, r2);
        let r3 = reduce_mod(&h, &[1, 1, 0]);
        assert_ne!(r1, r3);
    }

    #[test]
    fn integer_solve() {
        let rows = vec![vec![2, -1], vec![-1, 2]];
        assert_eq!(solve_integer(&rows, &[1, 1]), Some(vec![1, 1]));
        assert_eq!(solve_integer(&rows, &[1, 0]), None);
    }
}
