//! Dense row-major matrices over any [`Scalar`].

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{ComplexFloat, GaussianRational, Scalar};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawMatrix<T>", bound(deserialize = "T: Deserialize<'de> + Scalar"))]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

/// Exact matrix over ℚ(i).
pub type ExactMatrix = Matrix<GaussianRational>;
/// Floating matrix used only by numeric fallbacks.
pub type FloatMatrix = Matrix<ComplexFloat>;

#[derive(Deserialize)]
struct RawMatrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

impl<T: Scalar> TryFrom<RawMatrix<T>> for Matrix<T> {
    type Error = Error;
    fn try_from(raw: RawMatrix<T>) -> Result<Self> {
        Matrix::new(raw.rows, raw.cols, raw.entries)
    }
}

impl<T: Scalar> Matrix<T> {
    pub fn new(rows: usize, cols: usize, entries: Vec<T>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |r, c| if r == c { T::one() } else { T::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Self { rows, cols, entries }
    }

    /// Builds from nested rows; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn diagonal(diag: &[T]) -> Self {
        let n = diag.len();
        Self::from_fn(n, n, |r, c| if r == c { diag[r].clone() } else { T::zero() })
    }

    pub fn column_vector(v: Vec<T>) -> Self {
        let n = v.len();
        Self { rows: n, cols: 1, entries: v }
    }

    /// Matrix whose columns are the given vectors (all of equal length).
    pub fn from_columns(cols: &[Vec<T>], height: usize) -> Result<Self> {
        if cols.iter().any(|c| c.len() != height) {
            return Err(Error::DimensionMismatch("columns of unequal height".into()));
        }
        Ok(Self::from_fn(height, cols.len(), |r, c| cols[c][r].clone()))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<T> {
        self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<T> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect() }
    }

    pub fn try_map<U>(&self, f: impl Fn(&T) -> Result<U>) -> Result<Matrix<U>> {
        Ok(Matrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect::<Result<_>>()? })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |r, c| self.get(rows[r], cols[c]).clone())
    }

    /// Rows `r0..r1`, columns `c0..c1`.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Self {
        Self::from_fn(r1 - r0, c1 - c0, |r, c| self.get(r0 + r, c0 + c).clone())
    }

    /// Simultaneous row and column permutation: `out[a][b] = self[perm[a]][perm[b]]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        Self::from_fn(self.rows, self.cols, |r, c| self.get(perm[r], perm[c]).clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|r| (r + 1..self.cols).all(|c| self.get(r, c) == self.get(c, r)))
    }

    pub fn is_skew_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                self.get(r, r).is_zero() && (r + 1..self.cols).all(|c| *self.get(r, c) == self.get(c, r).negated())
            })
    }

    fn check_same_shape(&self, rhs: &Self) -> Result<()> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.check_same_shape(rhs)?;
        Ok(self.zip_with(rhs, T::plus))
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.check_same_shape(rhs)?;
        Ok(self.zip_with(rhs, T::minus))
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&T, &T) -> T) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn scale(&self, s: &T) -> Self {
        self.map(|x| x.times(s))
    }

    pub fn neg(&self) -> Self {
        self.map(T::negated)
    }

    /// Matrix product. Zero entries of `self` are skipped, which makes
    /// products with the sparse Dirac and conjugation matrices cheap.
    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = r * out.cols + c;
                    out.entries[idx] = out.entries[idx].plus(&a.times(b));
                }
            }
        }
        Ok(out)
    }

    /// Product of matrices whose shapes are known to agree; panics otherwise.
    pub fn mul(&self, rhs: &Self) -> Self {
        self.try_mul(rhs).expect("matrix shapes agree")
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.try_add(rhs).expect("matrix shapes agree")
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.try_sub(rhs).expect("matrix shapes agree")
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols, "vector length");
        (0..self.rows)
            .map(|r| {
                self.row(r).iter().zip(v).fold(T::zero(), |acc, (a, b)| {
                    if a.is_zero() || b.is_zero() {
                        acc
                    } else {
                        acc.plus(&a.times(b))
                    }
                })
            })
            .collect()
    }

    /// `self * rhs + rhs * self`.
    pub fn anticommutator(&self, rhs: &Self) -> Self {
        self.mul(rhs).add(&rhs.mul(self))
    }

    /// `self * rhs - rhs * self`.
    pub fn commutator(&self, rhs: &Self) -> Self {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    /// Kronecker product `self ⊗ rhs`.
    pub fn kron(&self, rhs: &Self) -> Self {
        Self::from_fn(self.rows * rhs.rows, self.cols * rhs.cols, |r, c| {
            self.get(r / rhs.rows, c / rhs.cols).times(rhs.get(r % rhs.rows, c % rhs.cols))
        })
    }

    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols)).fold(T::zero(), |acc, i| acc.plus(self.get(i, i)))
    }
}

impl ExactMatrix {
    /// Entrywise conversion to floating point.
    pub fn to_float(&self) -> Result<FloatMatrix> {
        self.try_map(GaussianRational::to_float)
    }

    /// Parses a matrix from rows of text scalars.
    pub fn parse_rows(rows: &[&[&str]]) -> Result<Self> {
        let parsed = rows.iter().map(|row| row.iter().map(|s| s.parse()).collect::<Result<Vec<_>>>()).collect::<Result<Vec<_>>>()?;
        Self::from_rows(parsed)
    }

    /// Integer matrix from nested arrays.
    pub fn from_int_rows<const C: usize>(rows: &[[i64; C]]) -> Self {
        Self::from_fn(rows.len(), C, |r, c| GaussianRational::from_int(rows[r][c]))
    }
}

/// Right-aligned columns, one row per line.
impl<T: Scalar + std::fmt::Display> std::fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let cells: Vec<Vec<String>> = (0..self.rows).map(|r| self.row(r).iter().map(T::to_string).collect()).collect();
        let width = cells.iter().flatten().map(|s| s.chars().count()).max().unwrap_or(1);
        let lines: Vec<String> =
            cells.iter().map(|row| row.iter().map(|s| format!("{s:>width$}")).collect::<Vec<_>>().join(" ")).collect();
        write!(f, "{}", lines.join("\n"))
    }
}
