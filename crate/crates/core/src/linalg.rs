//! Small exact linear-algebra helpers over the rationals.
//!
//! Everything here works on tiny matrices (ambient dimension at most 6), so
//! plain Gaussian elimination with `BigRational` entries is both exact and
//! fast enough.

use num::{BigInt, BigRational, One, Signed, Zero};

pub type Vector = Vec<BigRational>;

pub fn zero_vector(n: usize) -> Vector {
    vec![BigRational::zero(); n]
}

pub fn sub(a: &[BigRational], b: &[BigRational]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_int(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Row-reduce in place; returns the rank. Rows may be swapped and scaled.
pub fn row_reduce(rows: &mut Vec<Vector>) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].recip();
        for c in col..cols {
            let v = &rows[rank][c] * &inv;
            rows[rank][c] = v;
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in col..cols {
                    let v = &rows[r][c] - &factor * &rows[rank][c];
                    rows[r][c] = v;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

pub fn rank(rows: &[Vector]) -> usize {
    let mut copy = rows.to_vec();
    row_reduce(&mut copy)
}

/// Greedily select indices of rows forming a basis of the row span.
pub fn independent_subset(rows: &[Vector]) -> Vec<usize> {
    let mut basis: Vec<Vector> = Vec::new();
    let mut chosen = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        let mut trial = basis.clone();
        trial.push(row.clone());
        if row_reduce(&mut trial) > basis.len() {
            basis.push(row.clone());
            let r = basis.len();
            row_reduce(&mut basis);
            debug_assert_eq!(basis.len(), r);
            chosen.push(i);
        }
    }
    chosen
}

/// Invert a square rational matrix. Panics if singular (callers guarantee
/// invertibility by construction).
pub fn invert(mat: &[Vector]) -> Vec<Vector> {
    let n = mat.len();
    let mut aug: Vec<Vector> = mat
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            for j in 0..n {
                r.push(if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                });
            }
            r
        })
        .collect();
    let rank = row_reduce(&mut aug);
    assert_eq!(rank, n, "matrix is singular");
    aug.into_iter().map(|row| row[n..].to_vec()).collect()
}

/// Multiply an `r x n` matrix by a length-`n` vector.
pub fn mat_vec(mat: &[Vector], v: &[BigRational]) -> Vector {
    mat.iter().map(|row| dot(row, v)).collect()
}

/// Basis of the left null space of an `n x r` matrix `b` (vectors `w` of
/// length `n` with `w^T b = 0`). Returns `n - rank` rows.
pub fn left_nullspace(b: &[Vector]) -> Vec<Vector> {
    let n = b.len();
    if n == 0 {
        return Vec::new();
    }
    let r = b[0].len();
    // Null space of b^T: rows of b^T are the r columns of b, each length n.
    let mut rows: Vec<Vector> = (0..r)
        .map(|j| (0..n).map(|i| b[i][j].clone()).collect())
        .collect();
    let rank = row_reduce(&mut rows);
    rows.truncate(rank);
    // Identify pivot columns of the reduced system.
    let mut pivots = Vec::with_capacity(rank);
    let mut col = 0;
    for row in &rows {
        while col < n && row[col].is_zero() {
            col += 1;
        }
        pivots.push(col);
        col += 1;
    }
    let mut basis = Vec::new();
    for free in 0..n {
        if pivots.contains(&free) {
            continue;
        }
        let mut w = zero_vector(n);
        w[free] = BigRational::one();
        for (k, &p) in pivots.iter().enumerate() {
            w[p] = -rows[k][free].clone();
        }
        basis.push(w);
    }
    basis
}

/// Least common multiple of the coordinate denominators along one axis.
pub fn denominator_lcm<'a>(values: impl Iterator<Item = &'a BigRational>) -> BigInt {
    let mut l = BigInt::one();
    for v in values {
        l = num::integer::lcm(l, v.denom().abs());
    }
    l
}
