//! The charge conjugation matrix and its symmetry taxonomy.

use rand::Rng;
use serde::Serialize;

use crate::clifford::{block_shape, build_dirac, chirality_product, momentum_dirac, sigma, DiracBasis};
use crate::error::{Error, Result};
use crate::kinematics::SamplerConfig;
use crate::linalg::{expm, max_abs, ExactMatrix, FloatMatrix};
use crate::report::SuiteReport;
use crate::scalar::{ComplexFloat, GaussianRational as Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Symmetry {
    Symmetric,
    Skew,
    Neither,
}

impl Symmetry {
    pub fn of(m: &ExactMatrix) -> Self {
        if m.is_symmetric() {
            Symmetry::Symmetric
        } else if m.is_skew_symmetric() {
            Symmetry::Skew
        } else {
            Symmetry::Neither
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Symmetry::Symmetric => "sym",
            Symmetry::Skew => "skew",
            Symmetry::Neither => "neither",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BlockShape {
    BlockDiagonal,
    AntiBlockDiagonal,
    Other,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjugationMatrix {
    pub d: usize,
    pub k: usize,
    pub matrix: ExactMatrix,
    pub symmetry_class: Symmetry,
    pub block_shape: BlockShape,
    pub block_symmetry: Symmetry,
}

/// Expected symmetry of C for half-dimension `k`.
pub fn expected_symmetry(k: usize) -> Symmetry {
    if matches!(k % 4, 0 | 3) {
        Symmetry::Symmetric
    } else {
        Symmetry::Skew
    }
}

pub fn expected_block_shape(k: usize) -> BlockShape {
    if k % 2 == 0 {
        BlockShape::BlockDiagonal
    } else {
        BlockShape::AntiBlockDiagonal
    }
}

pub fn expected_block_symmetry(k: usize) -> Symmetry {
    if matches!(k % 4, 2 | 3) {
        Symmetry::Skew
    } else {
        Symmetry::Symmetric
    }
}

pub fn build_conjugation(d: usize) -> Result<ConjugationMatrix> {
    Ok(conjugation_from_basis(&build_dirac(d)?))
}

/// C = Γ_{d+1}Γ₄Γ₆⋯Γ_dΓ₁ for d ≡ 0 mod 4, otherwise Γ₄Γ₆⋯Γ_{2k}Γ₁,
/// with Γ_{d+1} = −i^{k−1}Γ₁⋯Γ_d.
pub fn conjugation_from_basis(basis: &DiracBasis) -> ConjugationMatrix {
    let (d, k) = (basis.d, basis.k);
    let mut factors: Vec<ExactMatrix> = Vec::new();
    if d % 4 == 0 {
        factors.push(chirality_product(&basis.gammas));
    }
    factors.extend((4..=2 * k).step_by(2).map(|i| basis.gamma(i).clone()));
    factors.push(basis.gamma(1).clone());
    let matrix = factors.iter().fold(ExactMatrix::identity(basis.size()), |acc, g| acc.mul(g));
    classify(d, matrix)
}

fn classify(d: usize, matrix: ExactMatrix) -> ConjugationMatrix {
    let k = d / 2;
    let block_shape = match block_shape(&matrix) {
        (true, _) => BlockShape::BlockDiagonal,
        (_, true) => BlockShape::AntiBlockDiagonal,
        _ => BlockShape::Other,
    };
    let h = matrix.rows() / 2;
    let (b1, b2) = match block_shape {
        BlockShape::BlockDiagonal => (matrix.block(0, h, 0, h), matrix.block(h, 2 * h, h, 2 * h)),
        _ => (matrix.block(0, h, h, 2 * h), matrix.block(h, 2 * h, 0, h)),
    };
    let block_symmetry = match (Symmetry::of(&b1), Symmetry::of(&b2)) {
        (a, b) if a == b => a,
        _ => Symmetry::Neither,
    };
    ConjugationMatrix { d, k, symmetry_class: Symmetry::of(&matrix), matrix, block_shape, block_symmetry }
}

impl ConjugationMatrix {
    /// Replaces the matrix and recomputes the classification.
    pub fn with_matrix(&self, matrix: ExactMatrix) -> Self {
        classify(self.d, matrix)
    }

    /// Sign ε in C P = ε Pᵀ C.
    pub fn intertwining_sign(&self) -> i64 {
        if self.d % 2 == 0 || self.k % 2 == 1 {
            -1
        } else {
            1
        }
    }

    /// C² as one of "Id", "-Id", "i*Id", "-i*Id", or "other".
    pub fn square_label(&self) -> &'static str {
        let sq = self.matrix.mul(&self.matrix);
        let id = ExactMatrix::identity(self.matrix.rows());
        [(Q::one(), "Id"), (-Q::one(), "-Id"), (Q::i(), "i*Id"), (-Q::i(), "-i*Id")]
            .into_iter()
            .find(|(s, _)| sq == id.scale(s))
            .map_or("other", |(_, l)| l)
    }

    fn entries_are_units(&self) -> bool {
        let units = [Q::zero(), Q::one(), -Q::one(), Q::i(), -Q::i()];
        self.matrix.entries().iter().all(|e| units.contains(e))
    }
}

/// The blocks (C′, C″): C = diag(C′, C″) for k even, and C = [[0, C″], [C′, 0]]
/// for k odd.
pub fn blocks(cm: &ConjugationMatrix) -> Result<(ExactMatrix, ExactMatrix)> {
    if cm.d % 2 == 1 {
        return Err(Error::Precondition(format!("block split needs even d, got {}", cm.d)));
    }
    let h = cm.matrix.rows() / 2;
    let m = &cm.matrix;
    Ok(if cm.k % 2 == 0 {
        (m.block(0, h, 0, h), m.block(h, 2 * h, h, 2 * h))
    } else {
        (m.block(h, 2 * h, 0, h), m.block(0, h, h, 2 * h))
    })
}

/// Exact checks of the intertwining relation at `trials` random momenta and
/// of the three structural predicates.
pub fn verify_conjugation<R: Rng + ?Sized>(
    cm: &ConjugationMatrix,
    basis: &DiracBasis,
    trials: usize,
    rng: &mut R,
) -> SuiteReport {
    let mut rep = SuiteReport::new(None, Some(cm.d), None);
    let sampler = SamplerConfig::default();
    let sign = Q::from_int(cm.intertwining_sign());
    let mut ok = true;
    for _ in 0..trials {
        let p = sampler.vector(rng, basis.d);
        let pm = momentum_dirac(basis, &p).expect("length d");
        if cm.matrix.mul(&pm) != pm.transpose().mul(&cm.matrix).scale(&sign) {
            ok = false;
        }
    }
    let claim = if cm.d % 2 == 0 { "CP = −PᵀC" } else { "CP = (−1)^k PᵀC" };
    rep.check_with("intertwining", claim, ok, format!("{trials} random momenta"));
    rep.check("invertible", "C is invertible", crate::linalg::rank(&cm.matrix) == cm.matrix.rows());
    rep.check("unit-entries", "entries of C lie in {0, ±1, ±i}", cm.entries_are_units());
    rep.check_with(
        "symmetry",
        "C symmetric iff k ≡ 0,3 mod 4, otherwise skew",
        cm.symmetry_class == expected_symmetry(cm.k),
        cm.symmetry_class.label(),
    );
    rep.check(
        "block-shape",
        "C block diagonal iff k even, otherwise anti-block-diagonal",
        cm.block_shape == expected_block_shape(cm.k),
    );
    rep.check_with(
        "block-symmetry",
        "blocks of C skew iff k ≡ 2,3 mod 4, otherwise symmetric",
        cm.block_symmetry == expected_block_symmetry(cm.k),
        cm.block_symmetry.label(),
    );
    rep
}

/// Floating point spin transformation g = exp(t Σ_jl).
pub fn spin_transformation(basis: &DiracBasis, j: usize, l: usize, t: f64) -> Result<FloatMatrix> {
    let s = sigma(basis, j, l)?.matrix.to_float()?;
    Ok(expm(&s.scale(&ComplexFloat::new(t, 0.0))))
}

/// Checks gᵀ C g = C for `trials` random one-parameter spin transformations,
/// with relative error at most `tol`.
pub fn verify_group_invariance<R: Rng + ?Sized>(
    cm: &ConjugationMatrix,
    basis: &DiracBasis,
    trials: usize,
    tol: f64,
    rng: &mut R,
) -> SuiteReport {
    let c = cm.matrix.to_float().expect("small entries");
    let scale = max_abs(&c);
    let mut worst = 0.0f64;
    for _ in 0..trials {
        let j = rng.random_range(1..basis.d);
        let l = rng.random_range(j + 1..=basis.d);
        let t = rng.random_range(-1.0..=1.0);
        let g = spin_transformation(basis, j, l, t).expect("valid indices");
        let diff = g.transpose().mul(&c).mul(&g).sub(&c);
        worst = worst.max(max_abs(&diff) / scale);
    }
    let mut rep = SuiteReport::new(None, Some(cm.d), None);
    rep.check_with("group-invariance", "gᵀCg = C for g = exp(tΣ)", worst <= tol, format!("max relative error {worst:.2e}"));
    rep
}
