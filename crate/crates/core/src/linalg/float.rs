//! Floating point rank via the singular value decomposition.

use nalgebra::DMatrix;

use crate::linalg::matrix::FloatMatrix;
use crate::scalar::ComplexFloat;

/// Singular values in decreasing order.
pub fn singular_values(m: &FloatMatrix) -> Vec<f64> {
    if m.rows() == 0 || m.cols() == 0 {
        return Vec::new();
    }
    let a = DMatrix::from_row_slice(m.rows(), m.cols(), m.entries());
    let mut s: Vec<f64> = a.singular_values().iter().copied().collect();
    s.sort_by(|x, y| y.total_cmp(x));
    s
}

/// Number of singular values above `rel_tol · σ_max`.
pub fn float_rank(m: &FloatMatrix, rel_tol: f64) -> usize {
    let s = singular_values(m);
    match s.first() {
        Some(&max) if max > 0.0 => s.iter().filter(|&&x| x > rel_tol * max).count(),
        _ => 0,
    }
}

/// Orthonormal basis of the column space of a full-column-rank matrix
/// (the thin Q factor).
pub fn orthonormal_columns(m: &FloatMatrix) -> FloatMatrix {
    if m.rows() == 0 || m.cols() == 0 {
        return m.clone();
    }
    let a = DMatrix::from_row_slice(m.rows(), m.cols(), m.entries());
    let q = a.qr().q();
    FloatMatrix::from_fn(q.nrows(), q.ncols(), |r, c| q[(r, c)])
}

/// Matrix exponential by scaling and squaring with a degree-12 Taylor series.
pub fn expm(a: &FloatMatrix) -> FloatMatrix {
    assert!(a.is_square());
    let n = a.rows();
    let norm = (0..n).map(|r| a.row(r).iter().map(|x| x.norm()).sum::<f64>()).fold(0.0, f64::max);
    let squarings = if norm > 0.5 { (norm / 0.5).log2().ceil() as u32 } else { 0 };
    let scaled = a.scale(&ComplexFloat::new(0.5f64.powi(squarings as i32), 0.0));
    let mut term = FloatMatrix::identity(n);
    let mut sum = FloatMatrix::identity(n);
    for j in 1..=12 {
        term = term.mul(&scaled).scale(&ComplexFloat::new(1.0 / j as f64, 0.0));
        sum = sum.add(&term);
    }
    for _ in 0..squarings {
        sum = sum.mul(&sum);
    }
    sum
}

/// Largest entry modulus.
pub fn max_abs(m: &FloatMatrix) -> f64 {
    m.entries().iter().map(|x| x.norm()).fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::matrix::ExactMatrix;

    #[test]
    fn orthonormal_columns_are_orthonormal() {
        let m = ExactMatrix::from_int_rows(&[[1, 2], [0, 1], [3, 4]]).to_float().unwrap();
        let q = orthonormal_columns(&m);
        assert_eq!((q.rows(), q.cols()), (3, 2));
        let g = q.map(|x| x.conj()).transpose().mul(&q);
        let err = g.sub(&FloatMatrix::identity(2));
        assert!(max_abs(&err) < 1e-12);
        assert_eq!(float_rank(&q, 1e-8), 2);
    }

    #[test]
    fn float_rank_agrees_with_exact_on_small_cases() {
        let m = ExactMatrix::from_int_rows(&[[1, 2, 3], [2, 4, 6], [0, 1, 1]]);
        assert_eq!(float_rank(&m.to_float().unwrap(), 1e-8), 2);
        assert_eq!(float_rank(&ExactMatrix::zeros(2, 2).to_float().unwrap(), 1e-8), 0);
    }

    #[test]
    fn exponential_of_rotation_generator() {
        // exp(t·[[0,-1],[1,0]]) = [[cos t, -sin t], [sin t, cos t]]
        let t = 2.7;
        let a = FloatMatrix::from_fn(2, 2, |r, c| match (r, c) {
            (0, 1) => ComplexFloat::new(-t, 0.0),
            (1, 0) => ComplexFloat::new(t, 0.0),
            _ => ComplexFloat::new(0.0, 0.0),
        });
        let e = expm(&a);
        assert!((e.get(0, 0).re - t.cos()).abs() < 1e-12);
        assert!((e.get(1, 0).re - t.sin()).abs() < 1e-12);
        let zero = expm(&FloatMatrix::zeros(3, 3));
        assert_eq!(zero, FloatMatrix::identity(3));
    }
}
