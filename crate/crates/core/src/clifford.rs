//! Dirac matrices in block form, momentum Dirac matrices and spin generators.
//!
//! The recursive tensor-product basis is conjugated by a permutation that
//! collects the two chirality classes of basis vectors into the two halves.
//! For `k ≤ 3` the permutation is frozen (see [`frozen_permutation`]); for
//! larger `k` the lexicographically smallest admissible one is used.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::matrix::{ExactMatrix, Matrix};
use crate::report::SuiteReport;
use crate::scalar::{FromExact, GaussianRational as Q, Scalar};

pub const DEFAULT_MAX_D: usize = 12;

#[derive(Clone, Debug, Serialize)]
pub struct DiracBasis {
    pub d: usize,
    pub k: usize,
    /// `gammas[i]` is Γ_{i+1}.
    pub gammas: Vec<ExactMatrix>,
    /// Metric signature (−1, +1, …, +1).
    pub eta: Vec<i64>,
    /// Row/column permutation applied to the recursive basis.
    pub permutation: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct SpinGenerator {
    pub j: usize,
    pub l: usize,
    pub matrix: ExactMatrix,
}

fn mat(rows: &[[(i64, i64); 2]; 2]) -> ExactMatrix {
    Matrix::from_fn(2, 2, |r, c| Q::gaussian(rows[r][c].0, rows[r][c].1))
}

/// The unpermuted recursive Dirac matrices for even `d = 2k`.
pub fn recursive_gammas(k: usize) -> Vec<ExactMatrix> {
    assert!(k >= 1);
    let g1 = mat(&[[(0, 0), (1, 0)], [(-1, 0), (0, 0)]]);
    let sx = mat(&[[(0, 0), (1, 0)], [(1, 0), (0, 0)]]);
    if k == 1 {
        return vec![g1, sx];
    }
    let sz = mat(&[[(-1, 0), (0, 0)], [(0, 0), (1, 0)]]);
    let sy = mat(&[[(0, 0), (0, -1)], [(0, 1), (0, 0)]]);
    let id = ExactMatrix::identity(1 << (k - 1));
    let mut out: Vec<ExactMatrix> = recursive_gammas(k - 1).iter().map(|g| g.kron(&sz)).collect();
    out.push(id.kron(&sx));
    out.push(id.kron(&sy));
    out
}

/// −i^{k−1} Γ₁⋯Γ_{2k}, for a list of `2k` matrices.
pub fn chirality_product(gammas: &[ExactMatrix]) -> ExactMatrix {
    let k = gammas.len() / 2;
    let n = gammas[0].rows();
    let prod = gammas.iter().fold(ExactMatrix::identity(n), |acc, g| acc.mul(g));
    prod.scale(&-Q::i().pow((k - 1) as u32))
}

/// Permutations pinned by the printed `k = 1, 2, 3` Dirac matrices.
///
/// The even-parity basis indices come first, in Gray-code order, followed by
/// the same list with the top bit flipped.
pub fn frozen_permutation(k: usize) -> Option<Vec<usize>> {
    match k {
        1 => Some(vec![0, 1]),
        2 => Some(vec![0, 3, 2, 1]),
        3 => Some(vec![0, 3, 6, 5, 4, 7, 2, 1]),
        _ => None,
    }
}

/// Lexicographically smallest permutation that puts every recursive Γ_i in
/// anti-block-diagonal form: the chirality class of index 0 in increasing
/// order, then the other class in increasing order.
pub fn structural_permutation(k: usize) -> Vec<usize> {
    let chi = chirality_product(&recursive_gammas(k));
    let sign0 = chi.get(0, 0).clone();
    let n = 1usize << k;
    let (first, second): (Vec<usize>, Vec<usize>) = (0..n).partition(|&i| *chi.get(i, i) == sign0);
    first.into_iter().chain(second).collect()
}

/// Permutation used by [`build_dirac`] for half-dimension `k`.
pub fn basis_permutation(k: usize) -> Vec<usize> {
    frozen_permutation(k).unwrap_or_else(|| structural_permutation(k))
}

pub fn build_dirac(d: usize) -> Result<DiracBasis> {
    build_dirac_with_max(d, DEFAULT_MAX_D)
}

pub fn build_dirac_with_max(d: usize, max_d: usize) -> Result<DiracBasis> {
    if d < 2 || d > max_d {
        return Err(Error::OutOfRange { what: "d", value: d, allowed: format!("2..={max_d}") });
    }
    let k = d / 2;
    let perm = basis_permutation(k);
    let mut gammas: Vec<ExactMatrix> = recursive_gammas(k).iter().map(|g| g.permuted(&perm)).collect();
    if d % 2 == 1 {
        // The extra matrix is ±diag(1,…,1,−1,…,−1); fix the sign to +.
        let chi = chirality_product(&gammas);
        let h = 1usize << (k - 1);
        let diag: Vec<Q> = (0..2 * h).map(|i| Q::from_int(if i < h { 1 } else { -1 })).collect();
        let plus = ExactMatrix::diagonal(&diag);
        debug_assert!(chi == plus || chi == plus.neg());
        gammas.push(plus);
    }
    let eta = (0..d).map(|i| if i == 0 { -1 } else { 1 }).collect();
    Ok(DiracBasis { d, k, gammas, eta, permutation: perm })
}

impl DiracBasis {
    pub fn size(&self) -> usize {
        1 << self.k
    }

    /// Γ_i with 1-based `i`.
    pub fn gamma(&self, i: usize) -> &ExactMatrix {
        &self.gammas[i - 1]
    }
}

/// Lorentzian product −x₁y₁ + x₂y₂ + … + x_d y_d.
pub fn lorentz_dot<T: Scalar>(x: &[T], y: &[T]) -> T {
    x.iter().zip(y).enumerate().fold(T::zero(), |acc, (i, (a, b))| {
        let t = a.times(b);
        if i == 0 {
            acc.minus(&t)
        } else {
            acc.plus(&t)
        }
    })
}

/// P = −p₁Γ₁ + p₂Γ₂ + … + p_dΓ_d.
pub fn momentum_dirac(basis: &DiracBasis, p: &[Q]) -> Result<ExactMatrix> {
    momentum_dirac_generic(basis, p)
}

/// [`momentum_dirac`] over any scalar type that can host the Γ entries.
pub fn momentum_dirac_generic<T: FromExact>(basis: &DiracBasis, p: &[T]) -> Result<Matrix<T>> {
    if p.len() != basis.d {
        return Err(Error::DimensionMismatch(format!("momentum of length {} for d = {}", p.len(), basis.d)));
    }
    let n = basis.size();
    let mut out = Matrix::<T>::zeros(n, n);
    for (i, (g, pi)) in basis.gammas.iter().zip(p).enumerate() {
        if pi.is_zero() {
            continue;
        }
        let coeff = if i == 0 { pi.negated() } else { pi.clone() };
        for r in 0..n {
            for c in 0..n {
                let e = g.get(r, c);
                if !e.is_zero() {
                    let v = out.get(r, c).plus(&coeff.times(&T::from_exact(e)));
                    out.set(r, c, v);
                }
            }
        }
    }
    Ok(out)
}

/// Σ_{jl} = ¼[Γ_j, Γ_l] with 1-based indices, `j < l`.
pub fn sigma(basis: &DiracBasis, j: usize, l: usize) -> Result<SpinGenerator> {
    if !(1 <= j && j < l && l <= basis.d) {
        return Err(Error::Precondition(format!("need 1 <= j < l <= {}, got ({j}, {l})", basis.d)));
    }
    let matrix = basis.gamma(j).commutator(basis.gamma(l)).scale(&Q::from_ratio(1, 4));
    Ok(SpinGenerator { j, l, matrix })
}

fn is_anti_block_diagonal(m: &ExactMatrix) -> bool {
    let h = m.rows() / 2;
    (0..m.rows()).all(|r| (0..m.cols()).all(|c| (r < h) != (c < h) || m.get(r, c).is_zero()))
}

fn is_block_diagonal(m: &ExactMatrix) -> bool {
    let h = m.rows() / 2;
    (0..m.rows()).all(|r| (0..m.cols()).all(|c| (r < h) == (c < h) || m.get(r, c).is_zero()))
}

pub(crate) fn block_shape(m: &ExactMatrix) -> (bool, bool) {
    (is_block_diagonal(m), is_anti_block_diagonal(m))
}

/// Expected transpose behaviour: Γ₁ skew, Γ₂ symmetric, then alternating
/// symmetric (odd index) and skew (even index).
pub fn expected_symmetric(i: usize) -> bool {
    match i {
        1 => false,
        2 => true,
        _ => i % 2 == 1,
    }
}

/// Exact check of the Clifford relations and structural properties.
pub fn verify_clifford(basis: &DiracBasis) -> SuiteReport {
    let mut rep = SuiteReport::new(None, Some(basis.d), None);
    let n = basis.size();
    let id = ExactMatrix::identity(n);
    for (idx, g) in basis.gammas.iter().enumerate() {
        let i = idx + 1;
        let sq = g.mul(g);
        let (target, claim) = if i == 1 { (id.neg(), "Γ1² = −Id") } else { (id.clone(), "Γj² = Id for j ≥ 2") };
        rep.check(format!("square/{i}"), claim, sq == target);
    }
    let mut anti_ok = true;
    let mut witness = String::new();
    for i in 0..basis.d {
        for j in i + 1..basis.d {
            if !basis.gammas[i].anticommutator(&basis.gammas[j]).is_zero() {
                anti_ok = false;
                witness = format!("Γ{} Γ{}", i + 1, j + 1);
            }
        }
    }
    rep.check_with("anticommute", "ΓiΓj + ΓjΓi = 0 for i ≠ j", anti_ok, witness);
    for (idx, g) in basis.gammas.iter().enumerate() {
        let i = idx + 1;
        let ok = if expected_symmetric(i) { g.is_symmetric() } else { g.is_skew_symmetric() };
        rep.check(format!("transpose/{i}"), "Γ1 skew, Γ2 symmetric, Γ(2i−1) symmetric, Γ(2i) skew", ok);
    }
    for (idx, g) in basis.gammas.iter().enumerate() {
        let i = idx + 1;
        if basis.d % 2 == 1 && i == basis.d {
            let h = n / 2;
            let diag: Vec<Q> = (0..n).map(|r| Q::from_int(if r < h { 1 } else { -1 })).collect();
            rep.check("block/last", "odd d: last Γ is diag(1,…,1,−1,…,−1)", *g == ExactMatrix::diagonal(&diag));
        } else {
            rep.check(format!("block/{i}"), "Γi anti-block-diagonal", is_anti_block_diagonal(g));
        }
    }
    rep
}

/// Checks [Σ_ij, Σ_kl] = η_jk Σ_il + η_il Σ_jk − η_jl Σ_ik − η_ik Σ_jl for all
/// index quadruples.
pub fn verify_spin_algebra(basis: &DiracBasis) -> SuiteReport {
    let d = basis.d;
    let n = basis.size();
    // Σ for every ordered pair, with Σ_ii = 0 and Σ_ji = −Σ_ij.
    let mut s = vec![vec![ExactMatrix::zeros(n, n); d]; d];
    for j in 0..d {
        for l in j + 1..d {
            let m = sigma(basis, j + 1, l + 1).expect("valid indices").matrix;
            s[l][j] = m.neg();
            s[j][l] = m;
        }
    }
    let eta = |a: usize, b: usize| -> Q {
        if a != b {
            Q::zero()
        } else {
            Q::from_int(basis.eta[a])
        }
    };
    let mut ok = true;
    let mut witness = String::new();
    for i in 0..d {
        for j in i + 1..d {
            for k in 0..d {
                for l in k + 1..d {
                    let lhs = s[i][j].commutator(&s[k][l]);
                    let rhs = s[i][l]
                        .scale(&eta(j, k))
                        .add(&s[j][k].scale(&eta(i, l)))
                        .sub(&s[i][k].scale(&eta(j, l)))
                        .sub(&s[j][l].scale(&eta(i, k)));
                    if lhs != rhs {
                        ok = false;
                        witness = format!("({},{}),({},{})", i + 1, j + 1, k + 1, l + 1);
                    }
                }
            }
        }
    }
    let mut rep = SuiteReport::new(None, Some(d), None);
    rep.check_with("spin-algebra", "Σ matrices satisfy the so(1,d−1) commutation relations", ok, witness);
    rep
}
