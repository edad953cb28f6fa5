//! Exact elimination over ℚ(i): rank, kernel, determinant, Pfaffian.
//!
//! Elimination normalizes each pivot row by its leading entry and picks, in
//! every column, the candidate pivot of smallest bit height.

use crate::error::{Error, Result};
use crate::linalg::matrix::ExactMatrix;
use crate::scalar::GaussianRational as Q;

type Row = Vec<Q>;

/// In-place row reduction of `rows` (each of length `cols`). Returns the pivot
/// columns. With `reduce_above`, produces the reduced row echelon form.
fn eliminate(rows: &mut Vec<Row>, cols: usize, reduce_above: bool) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(best) = (r..rows.len())
            .filter(|&i| !rows[i][col].is_zero())
            .min_by_key(|&i| rows[i][col].height())
        else {
            continue;
        };
        rows.swap(r, best);
        let inv = rows[r][col].inv().expect("pivot is nonzero");
        {
            let pivot_row = &mut rows[r];
            pivot_row[col] = Q::one();
            for x in pivot_row.iter_mut().skip(col + 1) {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
        }
        let pivot_row = rows[r].clone();
        let targets: Box<dyn Iterator<Item = usize>> =
            if reduce_above { Box::new((0..rows.len()).filter(move |&i| i != r)) } else { Box::new(r + 1..rows.len()) };
        for i in targets {
            let factor = rows[i][col].clone();
            if factor.is_zero() {
                continue;
            }
            let row = &mut rows[i];
            row[col] = Q::zero();
            for c in col + 1..cols {
                let p = &pivot_row[c];
                if !p.is_zero() {
                    row[c] = &row[c] - &(&factor * p);
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    pivots
}

/// Exact rank over ℚ(i).
pub fn rank(m: &ExactMatrix) -> usize {
    // Eliminate along the shorter side.
    let (mut rows, cols) = if m.rows() <= m.cols() {
        (m.row_vecs(), m.cols())
    } else {
        (m.transpose().row_vecs(), m.rows())
    };
    rows.retain(|row| row.iter().any(|x| !x.is_zero()));
    eliminate(&mut rows, cols, false).len()
}

/// Reduced row echelon form and pivot columns.
pub fn rref(m: &ExactMatrix) -> (ExactMatrix, Vec<usize>) {
    let mut rows = m.row_vecs();
    let pivots = eliminate(&mut rows, m.cols(), true);
    let out = ExactMatrix::new(m.rows(), m.cols(), rows.into_iter().flatten().collect()).expect("shape preserved");
    (out, pivots)
}

/// Basis of the right kernel, one basis vector per column of the result.
///
/// The result has `cols - rank` columns (possibly zero) and `m.cols()` rows.
pub fn kernel_basis(m: &ExactMatrix) -> ExactMatrix {
    let n = m.cols();
    let (r, pivots) = rref(m);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut basis = ExactMatrix::zeros(n, free.len());
    for (k, &f) in free.iter().enumerate() {
        basis.set(f, k, Q::one());
        for (row, &pc) in pivots.iter().enumerate() {
            let v = r.get(row, f);
            if !v.is_zero() {
                basis.set(pc, k, -v);
            }
        }
    }
    basis
}

/// Exact determinant of a square matrix.
pub fn determinant(m: &ExactMatrix) -> Result<Q> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch(format!("determinant of {}x{} matrix", m.rows(), m.cols())));
    }
    let n = m.rows();
    let mut a = m.row_vecs();
    let mut det = Q::one();
    for col in 0..n {
        let Some(best) = (col..n).filter(|&i| !a[i][col].is_zero()).min_by_key(|&i| a[i][col].height()) else {
            return Ok(Q::zero());
        };
        if best != col {
            a.swap(best, col);
            det = -det;
        }
        let pivot = a[col][col].clone();
        det = &det * &pivot;
        let inv = pivot.inv().expect("nonzero pivot");
        let pivot_row = a[col].clone();
        for row in a.iter_mut().skip(col + 1) {
            if row[col].is_zero() {
                continue;
            }
            let f = &row[col] * &inv;
            for c in col + 1..n {
                if !pivot_row[c].is_zero() {
                    row[c] = &row[c] - &(&f * &pivot_row[c]);
                }
            }
            row[col] = Q::zero();
        }
    }
    Ok(det)
}

/// Inverse of a square matrix, if it exists.
pub fn inverse(m: &ExactMatrix) -> Option<ExactMatrix> {
    if !m.is_square() {
        return None;
    }
    let n = m.rows();
    let aug = ExactMatrix::from_fn(n, 2 * n, |r, c| {
        if c < n {
            m.get(r, c).clone()
        } else if c - n == r {
            Q::one()
        } else {
            Q::zero()
        }
    });
    let (red, pivots) = rref(&aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(red.block(0, n, n, 2 * n))
}

/// Pfaffian of a skew symmetric matrix of even size.
///
/// Sizes up to 6 use the defining expansion; larger matrices use
/// skew-symmetric elimination that removes two rows and columns per step.
pub fn pfaffian(m: &ExactMatrix) -> Result<Q> {
    if !m.is_square() || m.rows() % 2 != 0 {
        return Err(Error::Precondition(format!("Pfaffian needs even square size, got {}x{}", m.rows(), m.cols())));
    }
    if !m.is_skew_symmetric() {
        return Err(Error::Precondition("Pfaffian of a matrix that is not skew symmetric".into()));
    }
    if m.rows() <= 6 {
        let idx: Vec<usize> = (0..m.rows()).collect();
        Ok(pfaffian_expand(m, &idx))
    } else {
        Ok(pfaffian_eliminate(m))
    }
}

/// Expansion along the first index: Pf = Σ_j (-1)^(j+1) a_{0j} Pf(minor).
fn pfaffian_expand(m: &ExactMatrix, idx: &[usize]) -> Q {
    match idx.len() {
        0 => Q::one(),
        2 => m.get(idx[0], idx[1]).clone(),
        _ => {
            let mut acc = Q::zero();
            for j in 1..idx.len() {
                let a = m.get(idx[0], idx[j]);
                if a.is_zero() {
                    continue;
                }
                let rest: Vec<usize> = idx[1..].iter().enumerate().filter(|&(t, _)| t + 1 != j).map(|(_, &v)| v).collect();
                let term = a * &pfaffian_expand(m, &rest);
                acc = if j % 2 == 1 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    }
}

fn pfaffian_eliminate(m: &ExactMatrix) -> Q {
    let mut a = m.row_vecs();
    let n = a.len();
    let mut pf = Q::one();
    let mut k = 0;
    while k < n {
        // Bring a nonzero a[k][j] into position (k, k+1).
        let Some(j) = (k + 1..n).filter(|&j| !a[k][j].is_zero()).min_by_key(|&j| a[k][j].height()) else {
            return Q::zero();
        };
        if j != k + 1 {
            a.swap(j, k + 1);
            for row in a.iter_mut() {
                row.swap(j, k + 1);
            }
            pf = -pf;
        }
        let pivot = a[k][k + 1].clone();
        pf = &pf * &pivot;
        let inv = pivot.inv().expect("nonzero pivot");
        // Schur complement: D + (b1_i b0_j - b0_i b1_j) / pivot for i, j > k+1,
        // where b0 = row k and b1 = row k+1.
        let b0: Vec<Q> = a[k].clone();
        let b1: Vec<Q> = a[k + 1].clone();
        for i in k + 2..n {
            for jj in i + 1..n {
                let t = &(&b1[i] * &b0[jj]) - &(&b0[i] * &b1[jj]);
                if t.is_zero() {
                    continue;
                }
                let upd = &a[i][jj] + &(&t * &inv);
                a[jj][i] = -&upd;
                a[i][jj] = upd;
            }
        }
        k += 2;
    }
    pf
}

/// All `k × k` minors with row and column subsets in lexicographic order.
pub fn minors(m: &ExactMatrix, k: usize) -> Vec<Q> {
    let rows = combinations(m.rows(), k);
    let cols = combinations(m.cols(), k);
    let mut out = Vec::with_capacity(rows.len() * cols.len());
    for r in &rows {
        for c in &cols {
            out.push(determinant(&m.submatrix(r, c)).expect("square"));
        }
    }
    out
}

/// Pfaffians of all principal `k × k` submatrices (k even).
pub fn principal_pfaffians(m: &ExactMatrix, k: usize) -> Result<Vec<Q>> {
    combinations(m.rows(), k).iter().map(|s| pfaffian(&m.submatrix(s, s))).collect()
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    if k <= n {
        rec(0, n, k, &mut cur, &mut out);
    }
    out
}
