//! Spinors |i⟩ = P_i z_i, spinor brackets of every order, the matrices S and
//! T_j, the tensor ST, and the angle/square split for even d.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::clifford::{build_dirac, momentum_dirac, momentum_dirac_generic, DiracBasis};
use crate::conjugation::{blocks, conjugation_from_basis, ConjugationMatrix, Symmetry};
use crate::error::{Error, Result};
use crate::kinematics::{KinematicConfiguration, SamplerConfig};
use crate::linalg::{ExactMatrix, ExactTensor3, Matrix};
use crate::scalar::{FromExact, GaussianRational as Q, Scalar};

/// Spinor parameters z_i, one vector of length 2^k per particle.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpinorParams {
    pub k: usize,
    pub z: Vec<Vec<Q>>,
}

/// Positions (0-based) of the free entries of z for half-dimension `k`:
/// the first and last 2^{k−2} slots, or just slot 0 when k = 1.
pub fn free_positions(k: usize) -> Vec<usize> {
    if k == 1 {
        return vec![0];
    }
    let size = 1usize << k;
    let q = 1usize << (k - 2);
    (0..q).chain(size - q..size).collect()
}

impl SpinorParams {
    /// Places the given free values into the sparsity pattern.
    pub fn from_free(k: usize, free: Vec<Vec<Q>>) -> Result<Self> {
        let pos = free_positions(k);
        let z = free
            .into_iter()
            .map(|vals| {
                if vals.len() != pos.len() {
                    return Err(Error::DimensionMismatch(format!("{} free values for k = {k}", vals.len())));
                }
                let mut v = vec![Q::zero(); 1 << k];
                for (p, x) in pos.iter().zip(vals) {
                    v[*p] = x;
                }
                Ok(v)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { k, z })
    }

    pub fn n(&self) -> usize {
        self.z.len()
    }

    /// True when every z_i vanishes outside the free positions.
    pub fn respects_pattern(&self) -> bool {
        let pos = free_positions(self.k);
        self.z.iter().all(|v| v.len() == 1 << self.k && v.iter().enumerate().all(|(i, x)| pos.contains(&i) || x.is_zero()))
    }
}

pub fn make_spinor_params<R: Rng + ?Sized>(k: usize, n: usize, rng: &mut R, cfg: &SamplerConfig) -> SpinorParams {
    let m = free_positions(k).len();
    let free = (0..n).map(|_| cfg.vector(rng, m)).collect();
    SpinorParams::from_free(k, free).expect("consistent lengths")
}

/// Precomputed P_i, C, kets and bras for one point, over any scalar type.
#[derive(Clone, Debug)]
pub struct BracketEngine<T> {
    pub d: usize,
    pub n: usize,
    pub ps: Vec<Matrix<T>>,
    pub c: Matrix<T>,
    /// |i⟩ = P_i z_i.
    pub kets: Vec<Vec<T>>,
    /// ⟨i| C as row vectors.
    pub bras: Vec<Vec<T>>,
}

impl<T: FromExact> BracketEngine<T> {
    pub fn new(basis: &DiracBasis, c: &ExactMatrix, momenta: &[Vec<T>], z: &[Vec<T>]) -> Result<Self> {
        if momenta.len() != z.len() {
            return Err(Error::DimensionMismatch(format!("{} momenta but {} spinor parameters", momenta.len(), z.len())));
        }
        let size = basis.size();
        if let Some(v) = z.iter().find(|v| v.len() != size) {
            return Err(Error::DimensionMismatch(format!("z of length {} for spinor size {size}", v.len())));
        }
        let c: Matrix<T> = c.map(T::from_exact);
        let ps = momenta.iter().map(|p| momentum_dirac_generic(basis, p)).collect::<Result<Vec<_>>>()?;
        let kets: Vec<Vec<T>> = ps.iter().zip(z).map(|(p, zi)| p.mul_vec(zi)).collect();
        let ct = c.transpose();
        let bras = kets.iter().map(|k| ct.mul_vec(k)).collect();
        Ok(Self { d: basis.d, n: momenta.len(), ps, c, kets, bras })
    }

    /// ⟨i₁ i₂ ⋯ i_ℓ⟩ = ⟨i₁| C P_{i₂} ⋯ P_{i_{ℓ−1}} |i_ℓ⟩ with 1-based indices.
    pub fn bracket(&self, word: &[usize]) -> Result<T> {
        if word.len() < 2 {
            return Err(Error::Precondition(format!("bracket words need length >= 2, got {}", word.len())));
        }
        if let Some(&bad) = word.iter().find(|&&i| i == 0 || i > self.n) {
            return Err(Error::OutOfRange { what: "particle index", value: bad, allowed: format!("1..={}", self.n) });
        }
        let last = word.len() - 1;
        let mut v = self.kets[word[last] - 1].clone();
        for &j in word[1..last].iter().rev() {
            v = self.ps[j - 1].mul_vec(&v);
        }
        Ok(dot(&self.bras[word[0] - 1], &v))
    }

    fn ket_matrix(&self) -> Matrix<T> {
        Matrix::from_fn(self.c.rows(), self.n, |r, i| self.kets[i][r].clone())
    }

    fn bra_matrix(&self) -> Matrix<T> {
        Matrix::from_fn(self.n, self.c.rows(), |i, r| self.bras[i][r].clone())
    }

    /// S = (⟨ij⟩).
    pub fn s_matrix(&self) -> Matrix<T> {
        self.bra_matrix().mul(&self.ket_matrix())
    }

    /// All T_j = (⟨i j k⟩)_{ik}, j = 1..n.
    pub fn t_matrices(&self) -> Vec<Matrix<T>> {
        let bra = self.bra_matrix();
        let ket = self.ket_matrix();
        self.ps.iter().map(|p| bra.mul(&p.mul(&ket))).collect()
    }
}

fn dot<T: Scalar>(a: &[T], b: &[T]) -> T {
    a.iter().zip(b).fold(T::zero(), |acc, (x, y)| if x.is_zero() || y.is_zero() { acc } else { acc.plus(&x.times(y)) })
}

/// Exact bracket engine for a configuration.
pub type SpinorSystem = BracketEngine<Q>;

pub fn spinor_system(cfg: &KinematicConfiguration, params: &SpinorParams) -> Result<SpinorSystem> {
    let basis = build_dirac(cfg.d)?;
    let cm = conjugation_from_basis(&basis);
    spinor_system_with(&basis, &cm, cfg, params)
}

pub fn spinor_system_with(
    basis: &DiracBasis,
    cm: &ConjugationMatrix,
    cfg: &KinematicConfiguration,
    params: &SpinorParams,
) -> Result<SpinorSystem> {
    if params.k != basis.k {
        return Err(Error::DimensionMismatch(format!("spinor parameters for k = {} with d = {}", params.k, cfg.d)));
    }
    let momenta: Vec<Vec<Q>> = cfg.momenta.iter().map(|m| m.p.clone()).collect();
    BracketEngine::new(basis, &cm.matrix, &momenta, &params.z)
}

/// |i⟩ = P_i z_i (1-based `i`).
pub fn ket(cfg: &KinematicConfiguration, params: &SpinorParams, i: usize) -> Result<Vec<Q>> {
    if i == 0 || i > cfg.n {
        return Err(Error::OutOfRange { what: "particle index", value: i, allowed: format!("1..={}", cfg.n) });
    }
    let basis = build_dirac(cfg.d)?;
    Ok(momentum_dirac(&basis, cfg.p(i - 1))?.mul_vec(&params.z[i - 1]))
}

/// Single bracket with 1-based word.
pub fn bracket(cfg: &KinematicConfiguration, params: &SpinorParams, word: &[usize]) -> Result<Q> {
    spinor_system(cfg, params)?.bracket(word)
}

/// Expected symmetry of S: symmetric iff k ≡ 0,3 mod 4.
pub fn expected_s_symmetry(d: usize) -> Symmetry {
    crate::conjugation::expected_symmetry(d / 2)
}

/// Expected symmetry of each T_j: symmetric iff d ≡ 1,2,3,4 mod 8.
pub fn expected_t_symmetry(d: usize) -> Symmetry {
    if matches!(d % 8, 1..=4) {
        Symmetry::Symmetric
    } else {
        Symmetry::Skew
    }
}

/// Sign ε with ⟨i₁⋯i_ℓ⟩ = ε⟨i_ℓ⋯i₁⟩ for words of length ℓ in dimension d.
///
/// Reversal transposes the chain ⟨i₁|C P⋯P|i_ℓ⟩; each P passes through C
/// with the intertwining sign and C contributes its own symmetry.
pub fn reversal_sign(d: usize, len: usize) -> i64 {
    let k = d / 2;
    let c_sign = if expected_s_symmetry(d) == Symmetry::Symmetric { 1 } else { -1 };
    let p_sign: i64 = if d % 2 == 0 || k % 2 == 1 { -1 } else { 1 };
    let inner = len.saturating_sub(2) as u32;
    c_sign * p_sign.pow(inner)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SymmetryLabels {
    #[serde(rename = "S")]
    pub s: String,
    #[serde(rename = "T")]
    pub t: String,
}

/// The slices S, T₁, …, T_n of the n × (n+1) × n tensor ST.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BracketTensor {
    pub d: usize,
    pub n: usize,
    pub symmetry: SymmetryLabels,
    #[serde(rename = "S")]
    pub s: ExactMatrix,
    #[serde(rename = "T")]
    pub t: Vec<ExactMatrix>,
}

impl BracketTensor {
    pub fn from_system(sys: &SpinorSystem) -> Self {
        let symmetry = SymmetryLabels {
            s: expected_s_symmetry(sys.d).label().to_string(),
            t: expected_t_symmetry(sys.d).label().to_string(),
        };
        Self { d: sys.d, n: sys.n, symmetry, s: sys.s_matrix(), t: sys.t_matrices() }
    }

    /// Tensor of format n × (n+1) × n with middle slices S, T₁, …, T_n.
    pub fn tensor(&self) -> ExactTensor3 {
        let mut slices = vec![self.s.clone()];
        slices.extend(self.t.iter().cloned());
        ExactTensor3::from_slices(&slices).expect("equal shapes")
    }

    /// T₁ + ⋯ + T_n.
    pub fn t_sum(&self) -> ExactMatrix {
        self.t.iter().fold(ExactMatrix::zeros(self.n, self.n), |acc, t| acc.add(t))
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}

pub fn build_bracket_tensor(cfg: &KinematicConfiguration, params: &SpinorParams) -> Result<BracketTensor> {
    Ok(BracketTensor::from_system(&spinor_system(cfg, params)?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SplitKind {
    /// ⟨i₁⋯i_ℓ⟩ with C′ and P′.
    Angle,
    /// [i₁⋯i_ℓ] with C″ and P″.
    Square,
    /// ⟨i₁⋯i_ℓ] with C″ and P″.
    MixedAs,
    /// [i₁⋯i_ℓ⟩ with C′ and P′.
    MixedSa,
}

/// Angle and square spinors and the block data for even d.
#[derive(Clone, Debug)]
pub struct SplitSystem {
    pub n: usize,
    pub c1: ExactMatrix,
    pub c2: ExactMatrix,
    /// Upper-right blocks P′_i.
    pub p1: Vec<ExactMatrix>,
    /// Lower-left blocks P″_i.
    pub p2: Vec<ExactMatrix>,
    /// |i⟩ = P′_i x_i with x_i the last half of z_i.
    pub angle: Vec<Vec<Q>>,
    /// |i] = P″_i x̃_i with x̃_i the first half of z_i.
    pub square: Vec<Vec<Q>>,
}

pub fn split_system(cfg: &KinematicConfiguration, params: &SpinorParams) -> Result<SplitSystem> {
    if cfg.d % 2 == 1 {
        return Err(Error::Precondition(format!("angle/square brackets need even d, got {}", cfg.d)));
    }
    let basis = build_dirac(cfg.d)?;
    let cm = conjugation_from_basis(&basis);
    let (c1, c2) = blocks(&cm)?;
    let h = basis.size() / 2;
    let mut sys = SplitSystem { n: cfg.n, c1, c2, p1: vec![], p2: vec![], angle: vec![], square: vec![] };
    for (i, m) in cfg.momenta.iter().enumerate() {
        let p = momentum_dirac(&basis, &m.p)?;
        let (pa, pb) = (p.block(0, h, h, 2 * h), p.block(h, 2 * h, 0, h));
        let z = &params.z[i];
        sys.angle.push(pa.mul_vec(&z[h..]));
        sys.square.push(pb.mul_vec(&z[..h]));
        sys.p1.push(pa);
        sys.p2.push(pb);
    }
    Ok(sys)
}

impl SplitSystem {
    pub fn bracket(&self, word: &[usize], kind: SplitKind) -> Result<Q> {
        if word.len() < 2 {
            return Err(Error::Precondition("bracket words need length >= 2".into()));
        }
        if let Some(&bad) = word.iter().find(|&&i| i == 0 || i > self.n) {
            return Err(Error::OutOfRange { what: "particle index", value: bad, allowed: format!("1..={}", self.n) });
        }
        let (left, right, c, ps) = match kind {
            SplitKind::Angle => (&self.angle, &self.angle, &self.c1, &self.p1),
            SplitKind::Square => (&self.square, &self.square, &self.c2, &self.p2),
            SplitKind::MixedAs => (&self.angle, &self.square, &self.c2, &self.p2),
            SplitKind::MixedSa => (&self.square, &self.angle, &self.c1, &self.p1),
        };
        let last = word.len() - 1;
        let mut v = right[word[last] - 1].clone();
        for &j in word[1..last].iter().rev() {
            v = ps[j - 1].mul_vec(&v);
        }
        let cv = c.mul_vec(&v);
        Ok(dot(&left[word[0] - 1], &cv))
    }

    /// The n × n matrix of two-particle brackets of the given kind.
    pub fn matrix(&self, kind: SplitKind) -> ExactMatrix {
        Matrix::from_fn(self.n, self.n, |i, j| self.bracket(&[i + 1, j + 1], kind).expect("valid indices"))
    }
}

pub fn split_brackets(cfg: &KinematicConfiguration, params: &SpinorParams, word: &[usize], kind: SplitKind) -> Result<Q> {
    split_system(cfg, params)?.bracket(word, kind)
}

/// Spinor parameters for d = 4 with x_i = 1 and x̃_i = 1/(p_{i1} + p_{i2}).
pub fn sh_normalized_params(cfg: &KinematicConfiguration) -> Result<SpinorParams> {
    if cfg.d != 4 {
        return Err(Error::Precondition(format!("spinor-helicity normalization needs d = 4, got {}", cfg.d)));
    }
    let free = cfg
        .momenta
        .iter()
        .map(|m| {
            let s = &m.p[0] + &m.p[1];
            Ok(vec![s.inv().map_err(|_| Error::Precondition("p_i1 + p_i2 = 0".into()))?, Q::one()])
        })
        .collect::<Result<Vec<_>>>()?;
    SpinorParams::from_free(2, free)
}

#[derive(Clone, Debug, Serialize)]
pub struct ShProductReport {
    pub angle: ExactMatrix,
    pub square: ExactMatrix,
    pub product: ExactMatrix,
    pub product_is_zero: bool,
}

/// Angle and square matrices at d = 4 under the normalization of
/// [`sh_normalized_params`], and their product.
pub fn sh_product_check(cfg: &KinematicConfiguration) -> Result<ShProductReport> {
    sh_product_with(cfg, &sh_normalized_params(cfg)?)
}

/// Same as [`sh_product_check`] with caller-chosen spinor parameters.
pub fn sh_product_with(cfg: &KinematicConfiguration, params: &SpinorParams) -> Result<ShProductReport> {
    let sys = split_system(cfg, params)?;
    let angle = sys.matrix(SplitKind::Angle);
    let square = sys.matrix(SplitKind::Square);
    let product = angle.mul(&square);
    Ok(ShProductReport { product_is_zero: product.is_zero(), angle, square, product })
}
