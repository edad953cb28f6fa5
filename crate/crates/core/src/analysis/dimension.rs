//! Dimensions of kinematic varieties from the rank of the bracket map's
//! Jacobian on the tangent space of the constraint variety.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::ad::Dual;
use crate::analysis::sample_trial;
use crate::brackets::{expected_t_symmetry, free_positions, make_spinor_params, BracketEngine, SpinorParams};
use crate::clifford::{build_dirac, lorentz_dot, momentum_dirac_generic, DiracBasis};
use crate::conjugation::{conjugation_from_basis, Symmetry};
use crate::error::{Error, Result};
use crate::kinematics::{sample_null_momentum, substream, KinematicConfiguration, SamplerConfig};
use crate::linalg::{float_rank, kernel_basis, orthonormal_columns, rank, ExactMatrix, FloatMatrix, Matrix};
use crate::scalar::{ComplexFloat, FromExact, GaussianRational as Q};

/// Relative singular value cutoff in float mode.
pub const FLOAT_RANK_TOL: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VarietyId {
    K2,
    K3,
    Mandelstam,
    SpinorImage,
}

impl VarietyId {
    /// Number of independent scalings acting on the image.
    pub fn scaling_defect(self) -> usize {
        match self {
            VarietyId::K3 => 2,
            VarietyId::K2 | VarietyId::SpinorImage => 1,
            VarietyId::Mandelstam => 0,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            VarietyId::K2 => "k2",
            VarietyId::K3 => "k3",
            VarietyId::Mandelstam => "mandelstam",
            VarietyId::SpinorImage => "spinor",
        }
    }
}

impl FromStr for VarietyId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "k2" => Ok(VarietyId::K2),
            "k3" => Ok(VarietyId::K3),
            "mandelstam" => Ok(VarietyId::Mandelstam),
            "spinor" | "spinor_image" => Ok(VarietyId::SpinorImage),
            other => Err(Error::Parse(format!("unknown variety {other:?}"))),
        }
    }
}

impl fmt::Display for VarietyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DimensionMode {
    Exact,
    Float,
    /// Exact for d ≤ 7 and n ≤ 7, float beyond.
    Auto,
}

impl DimensionMode {
    pub fn resolve(self, d: usize, n: usize) -> DimensionMode {
        match self {
            DimensionMode::Auto if d <= 7 && n <= 7 => DimensionMode::Exact,
            DimensionMode::Auto => DimensionMode::Float,
            m => m,
        }
    }
}

impl FromStr for DimensionMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(DimensionMode::Exact),
            "float" => Ok(DimensionMode::Float),
            "auto" => Ok(DimensionMode::Auto),
            other => Err(Error::Parse(format!("unknown mode {other:?}"))),
        }
    }
}

/// Exact Jacobian data at one point. Columns of `jac` and `constraint` are
/// the ambient coordinates: the n·d momentum entries, then the free spinor
/// parameters of each particle.
#[derive(Clone, Debug)]
pub struct JacobianProbe {
    pub variety: VarietyId,
    pub cfg: KinematicConfiguration,
    pub params: SpinorParams,
    pub jac: ExactMatrix,
    pub constraint: ExactMatrix,
    /// Kernel basis of `constraint`, one tangent vector per column.
    pub tangent: ExactMatrix,
}

impl JacobianProbe {
    /// rank of `jac` on the tangent space, computed as
    /// rank([constraint; jac]) − rank(constraint).
    pub fn restricted_rank(&self) -> usize {
        restricted_rank_exact(&self.constraint, &self.jac)
    }
}

fn restricted_rank_exact(constraint: &ExactMatrix, jac: &ExactMatrix) -> usize {
    let mut rows = constraint.row_vecs();
    rows.extend(jac.row_vecs());
    let stacked = ExactMatrix::from_rows(rows).expect("equal widths");
    rank(&stacked) - rank(constraint)
}

/// Map coordinates of each variety, evaluated over any scalar type.
fn coordinates<T: FromExact>(variety: VarietyId, basis: &DiracBasis, c: &ExactMatrix, p: &[Vec<T>], z: &[Vec<T>]) -> Result<Vec<T>> {
    let n = p.len();
    let mut out = vec![];
    match variety {
        VarietyId::Mandelstam => {
            for i in 0..n {
                for j in i + 1..n {
                    out.push(lorentz_dot(&p[i], &p[j]));
                }
            }
        }
        VarietyId::SpinorImage => {
            out.extend(momentum_dirac_generic(basis, &p[0])?.mul_vec(&z[0]));
        }
        VarietyId::K2 | VarietyId::K3 => {
            let engine = BracketEngine::new(basis, c, p, z)?;
            let s = engine.s_matrix();
            for i in 0..n {
                for k in i + 1..n {
                    out.push(s.get(i, k).clone());
                }
            }
            if variety == VarietyId::K3 {
                let diag = usize::from(expected_t_symmetry(basis.d) != Symmetry::Symmetric);
                for t in engine.t_matrices() {
                    for i in 0..n {
                        for k in i + diag..n {
                            out.push(t.get(i, k).clone());
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

fn ambient_size(d: usize, n: usize) -> usize {
    n * d + n * free_positions(d / 2).len()
}

/// Exact constraint Jacobian: ∂(p_i·p_i)/∂p_{ia} = 2η_a p_{ia}, and (when
/// conserving) one all-ones row per spacetime coordinate.
fn constraint_jacobian(cfg: &KinematicConfiguration) -> ExactMatrix {
    let (d, n) = (cfg.d, cfg.n);
    let cols = ambient_size(d, n);
    let rows = n + if cfg.conserves { d } else { 0 };
    let mut m = ExactMatrix::zeros(rows, cols);
    for i in 0..n {
        for a in 0..d {
            let eta = if a == 0 { -2 } else { 2 };
            m.set(i, i * d + a, &Q::from_int(eta) * &cfg.p(i)[a]);
            if cfg.conserves {
                m.set(n + a, i * d + a, Q::one());
            }
        }
    }
    m
}

/// Column `e` of the map's Jacobian by one forward-mode pass with the
/// ambient coordinate `e` seeded.
fn jacobian_generic<T: FromExact>(variety: VarietyId, basis: &DiracBasis, c: &ExactMatrix, cfg: &KinematicConfiguration, params: &SpinorParams) -> Result<Matrix<T>> {
    let (d, n) = (cfg.d, cfg.n);
    let free = free_positions(basis.k);
    let cols = ambient_size(d, n);
    let lift = |q: &Q, seed: bool| Dual::seeded(T::from_exact(q), seed);
    let columns: Vec<Result<Vec<T>>> = (0..cols)
        .into_par_iter()
        .map(|e| {
            let in_z = e >= n * d;
            if in_z && variety == VarietyId::Mandelstam {
                return Ok(vec![]);
            }
            let p: Vec<Vec<Dual<T>>> =
                (0..n).map(|i| (0..d).map(|a| lift(&cfg.p(i)[a], e == i * d + a)).collect()).collect();
            let z: Vec<Vec<Dual<T>>> = (0..n)
                .map(|i| {
                    params.z[i]
                        .iter()
                        .enumerate()
                        .map(|(r, q)| {
                            let seeded = free.iter().position(|&f| f == r).is_some_and(|b| e == n * d + i * free.len() + b);
                            lift(q, seeded)
                        })
                        .collect()
                })
                .collect();
            Ok(coordinates(variety, basis, c, &p, &z)?.into_iter().map(|v| v.tangent).collect())
        })
        .collect();
    let columns = columns.into_iter().collect::<Result<Vec<_>>>()?;
    let height = columns.iter().map(Vec::len).max().unwrap_or(0);
    Ok(Matrix::from_fn(height, cols, |r, col| columns[col].get(r).cloned().unwrap_or_else(T::zero)))
}

fn check_point(variety: VarietyId, cfg: &KinematicConfiguration, params: &SpinorParams) -> Result<()> {
    match variety {
        VarietyId::SpinorImage if cfg.n != 1 => Err(Error::Precondition("the spinor image is probed one particle at a time".into())),
        VarietyId::K2 | VarietyId::K3 | VarietyId::Mandelstam if !cfg.conserves => {
            Err(Error::Precondition(format!("{variety} needs a conserving configuration")))
        }
        _ if params.n() != cfg.n || params.k != cfg.d / 2 => Err(Error::DimensionMismatch("spinor parameters do not match the configuration".into())),
        _ => Ok(()),
    }
}

fn expected_constraint_rank(cfg: &KinematicConfiguration) -> usize {
    cfg.n + if cfg.conserves { cfg.d } else { 0 }
}

/// Exact Jacobian probe at a given point.
pub fn jacobian(variety: VarietyId, cfg: &KinematicConfiguration, params: &SpinorParams) -> Result<JacobianProbe> {
    check_point(variety, cfg, params)?;
    let basis = build_dirac(cfg.d)?;
    let c = conjugation_from_basis(&basis).matrix;
    let jac: ExactMatrix = jacobian_generic::<Q>(variety, &basis, &c, cfg, params)?;
    let constraint = constraint_jacobian(cfg);
    let r = rank(&constraint);
    if r < expected_constraint_rank(cfg) {
        return Err(Error::Degenerate { attempts: 1, reason: format!("constraint Jacobian has rank {r}") });
    }
    let tangent = kernel_basis(&constraint);
    Ok(JacobianProbe { variety, cfg: cfg.clone(), params: params.clone(), jac, constraint, tangent })
}

/// Float-mode restricted rank: float Jacobian times an orthonormalized
/// exact tangent basis, thresholded at [`FLOAT_RANK_TOL`].
fn float_restricted_rank(variety: VarietyId, cfg: &KinematicConfiguration, params: &SpinorParams) -> Result<usize> {
    check_point(variety, cfg, params)?;
    let basis = build_dirac(cfg.d)?;
    let c = conjugation_from_basis(&basis).matrix;
    let jac: FloatMatrix = jacobian_generic::<ComplexFloat>(variety, &basis, &c, cfg, params)?;
    if jac.entries().iter().any(|x| !x.is_finite()) {
        return Err(Error::FloatOverflow);
    }
    let constraint = constraint_jacobian(cfg);
    if rank(&constraint) < expected_constraint_rank(cfg) {
        return Err(Error::Degenerate { attempts: 1, reason: "constraint Jacobian drops rank".into() });
    }
    let tangent = orthonormal_columns(&kernel_basis(&constraint).to_float()?);
    Ok(float_rank(&jac.mul(&tangent), FLOAT_RANK_TOL))
}

fn restricted_rank(variety: VarietyId, cfg: &KinematicConfiguration, params: &SpinorParams, mode: DimensionMode) -> Result<usize> {
    match mode.resolve(cfg.d, cfg.n) {
        DimensionMode::Float => float_restricted_rank(variety, cfg, params),
        _ => Ok(jacobian(variety, cfg, params)?.restricted_rank()),
    }
}

/// A sample point suited to `variety`: a conserving configuration, or a
/// single null momentum for the spinor image.
fn sample_for(variety: VarietyId, d: usize, n: usize, seed: u64, trial: u64) -> Result<(KinematicConfiguration, SpinorParams)> {
    if variety == VarietyId::SpinorImage {
        let mut rng = substream(seed, trial);
        let scfg = SamplerConfig::default();
        let p = sample_null_momentum(d, &mut rng, &scfg)?;
        let cfg = KinematicConfiguration::new(d, false, vec![p])?;
        return Ok((cfg, make_spinor_params(d / 2, 1, &mut rng, &scfg)));
    }
    sample_trial(d, n, seed, trial)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionOutcome {
    pub variety: VarietyId,
    pub d: usize,
    pub n: usize,
    pub mode: DimensionMode,
    /// Restricted Jacobian rank per trial (`None` for a degenerate sample).
    pub ranks: Vec<Option<usize>>,
    pub dim: usize,
}

/// Dimension = max over trials of the restricted rank, minus the scaling
/// defect of the variety.
pub fn variety_dimension(variety: VarietyId, d: usize, n: usize, trials: usize, seed: u64, mode: DimensionMode) -> Result<DimensionOutcome> {
    if trials == 0 {
        return Err(Error::Precondition("at least one trial is needed".into()));
    }
    if d < 3 || (variety != VarietyId::SpinorImage && n < 4) {
        return Err(Error::Precondition(format!("dimension probes need d >= 3 and n >= 4, got d = {d}, n = {n}")));
    }
    let n_eff = if variety == VarietyId::SpinorImage { 1 } else { n };
    let mode = mode.resolve(d, n_eff);
    let ranks: Vec<Option<usize>> = (0..trials as u64)
        .into_par_iter()
        .map(|t| {
            let (cfg, params) = sample_for(variety, d, n, seed, t)?;
            match restricted_rank(variety, &cfg, &params, mode) {
                Ok(r) => Ok(Some(r)),
                Err(Error::Degenerate { .. } | Error::FloatOverflow) => Ok(None),
                Err(e) => Err(e),
            }
        })
        .collect::<Result<_>>()?;
    let best = ranks.iter().flatten().copied().max().ok_or(Error::Degenerate { attempts: trials, reason: "every sample was degenerate".into() })?;
    let dim = best.saturating_sub(variety.scaling_defect());
    Ok(DimensionOutcome { variety, d, n: n_eff, mode, ranks, dim })
}

/// Codimension of the projectivized image of one spinor |i⟩ in P^(2^k − 1).
pub fn spinor_codim(d: usize, trials: usize, seed: u64) -> Result<usize> {
    let out = variety_dimension(VarietyId::SpinorImage, d, 1, trials, seed, DimensionMode::Exact)?;
    Ok(((1usize << (d / 2)) - 1).saturating_sub(out.dim))
}

/// Label of spinor coordinate `pos` by subsets of {1, …, k}: bit k−e of the
/// unpermuted index marks element e.
pub fn spinor_coordinate_label(basis: &DiracBasis, pos: usize) -> String {
    let raw = basis.permutation[pos];
    let k = basis.k;
    let s: String = (1..=k).filter(|e| raw >> (k - e) & 1 == 1).map(|e| char::from_digit(e as u32, 10).unwrap_or('?')).collect();
    if s.is_empty() { "∅".into() } else { s }
}

/// |i⟩_∅|i⟩_123 − |i⟩_1|i⟩_23 + |i⟩_2|i⟩_13 − |i⟩_3|i⟩_12 for a d = 6 spinor.
pub fn spinor_quadric_residual(basis: &DiracBasis, ket: &[Q]) -> Result<Q> {
    if basis.k != 3 || ket.len() != 8 {
        return Err(Error::Precondition("the spinor quadric is for d = 6 spinors".into()));
    }
    let at = |label: &str| -> &Q {
        let pos = (0..8).find(|&p| spinor_coordinate_label(basis, p) == label).expect("every subset labels a coordinate");
        &ket[pos]
    };
    let pairs = [("∅", "123", 1), ("1", "23", -1), ("2", "13", 1), ("3", "12", -1)];
    Ok(pairs.iter().fold(Q::zero(), |acc, (a, b, s)| {
        let term = at(a) * at(b);
        if *s > 0 { &acc + &term } else { &acc - &term }
    }))
}

const PUBLISHED: [(usize, [usize; 9]); 6] = [
    (4, [8, 13, 18, 23, 28, 33, 38, 43, 48]),
    (5, [7, 13, 19, 25, 31, 37, 43, 49, 55]),
    (6, [9, 20, 30, 40, 49, 58, 67, 76, 85]),
    (7, [9, 20, 30, 40, 50, 60, 70, 80, 90]),
    (8, [10, 28, 51, 67, 82, 97, 112, 127, 142]),
    (9, [15, 33, 49, 65, 81, 97, 113, 129, 145]),
];

/// Published dim K3 for d ∈ 4..=9 and n ∈ 4..=12.
pub fn published_dimension(d: usize, n: usize) -> Option<usize> {
    let row = PUBLISHED.iter().find(|(dd, _)| *dd == d)?;
    n.checked_sub(4).and_then(|i| row.1.get(i)).copied()
}

/// The table cell whose published value breaks the linear pattern in n.
pub const FLAGGED_CELL: (usize, usize) = (8, 6);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableCell {
    pub d: usize,
    pub n: usize,
    pub computed: usize,
    pub published: Option<usize>,
    pub mode: DimensionMode,
    pub agrees: bool,
    pub flagged: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableReport {
    pub cells: Vec<TableCell>,
}

impl TableReport {
    /// Every cell agrees, the flagged cell excepted.
    pub fn passed(&self) -> bool {
        self.cells.iter().all(|c| c.agrees || c.flagged)
    }

    pub fn disagreements(&self) -> impl Iterator<Item = &TableCell> {
        self.cells.iter().filter(|c| !c.agrees)
    }
}

impl fmt::Display for TableReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut ds: Vec<usize> = self.cells.iter().map(|c| c.d).collect();
        let mut ns: Vec<usize> = self.cells.iter().map(|c| c.n).collect();
        ds.dedup();
        ns.sort_unstable();
        ns.dedup();
        write!(f, "d\\n")?;
        for n in &ns {
            write!(f, "{n:>6}")?;
        }
        writeln!(f)?;
        for d in &ds {
            write!(f, "{d:>3}")?;
            for n in &ns {
                match self.cells.iter().find(|c| c.d == *d && c.n == *n) {
                    Some(c) => {
                        let mark = if c.agrees { ' ' } else if c.flagged { '?' } else { '*' };
                        write!(f, "{:>5}{mark}", c.computed)?;
                    }
                    None => write!(f, "{:>6}", "")?,
                }
            }
            writeln!(f)?;
        }
        for c in self.disagreements() {
            let tag = if c.flagged { "flagged" } else { "MISMATCH" };
            writeln!(f, "{tag}: d = {}, n = {}: computed {}, published {:?}", c.d, c.n, c.computed, c.published)?;
        }
        Ok(())
    }
}

/// Recomputes dim K3 for d ∈ 4..=dmax, n ∈ 4..=nmax and compares with the
/// published table.
pub fn reproduce_table(dmax: usize, nmax: usize, trials: usize, seed: u64, mode: DimensionMode) -> Result<TableReport> {
    let grid: Vec<(usize, usize)> = (4..=dmax).flat_map(|d| (4..=nmax).map(move |n| (d, n))).collect();
    let cells = grid
        .into_par_iter()
        .map(|(d, n)| {
            let out = variety_dimension(VarietyId::K3, d, n, trials, seed, mode)?;
            let published = published_dimension(d, n);
            Ok(TableCell {
                d,
                n,
                computed: out.dim,
                published,
                mode: out.mode,
                agrees: published == Some(out.dim),
                flagged: (d, n) == FLAGGED_CELL,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TableReport { cells })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brackets::{ket, SpinorParams};

    #[test]
    fn k3_d5_n5_is_thirteen() {
        let out = variety_dimension(VarietyId::K3, 5, 5, 2, 1, DimensionMode::Exact).unwrap();
        assert_eq!(out.dim, 13);
    }

    #[test]
    fn k3_small_cells() {
        assert_eq!(variety_dimension(VarietyId::K3, 4, 4, 2, 2, DimensionMode::Exact).unwrap().dim, 8);
        assert_eq!(variety_dimension(VarietyId::K3, 3, 5, 2, 2, DimensionMode::Exact).unwrap().dim, 7);
    }

    #[test]
    fn k2_grassmannian() {
        assert_eq!(variety_dimension(VarietyId::K2, 3, 5, 2, 3, DimensionMode::Exact).unwrap().dim, 6);
    }

    #[test]
    fn mandelstam_d4_n6() {
        assert_eq!(variety_dimension(VarietyId::Mandelstam, 4, 6, 2, 4, DimensionMode::Exact).unwrap().dim, 8);
    }

    #[test]
    fn float_agrees_with_exact() {
        for (v, d, n) in [(VarietyId::K3, 5, 5), (VarietyId::K2, 4, 6), (VarietyId::Mandelstam, 5, 6)] {
            let e = variety_dimension(v, d, n, 2, 5, DimensionMode::Exact).unwrap().dim;
            let f = variety_dimension(v, d, n, 2, 5, DimensionMode::Float).unwrap().dim;
            assert_eq!(e, f, "{v} d={d} n={n}");
        }
    }

    #[test]
    fn restricted_rank_equals_rank_on_tangent_basis() {
        let (cfg, params) = sample_trial(4, 5, 6, 0).unwrap();
        let probe = jacobian(VarietyId::K3, &cfg, &params).unwrap();
        assert!(probe.constraint.mul(&probe.tangent).is_zero());
        assert_eq!(probe.restricted_rank(), rank(&probe.jac.mul(&probe.tangent)));
    }

    #[test]
    fn z_derivative_matches_two_point_difference() {
        // ⟨ij⟩ is affine-linear in each free entry of z_j.
        let (cfg, params) = sample_trial(5, 4, 7, 0).unwrap();
        let probe = jacobian(VarietyId::K2, &cfg, &params).unwrap();
        let free = free_positions(2);
        let (i, j) = (0, 2);
        let row = (0..i).map(|a| 4 - a - 1).sum::<usize>() + (j - i - 1);
        let col = cfg.n * cfg.d + j * free.len();
        let s_at = |zval: Q| {
            let mut p = params.clone();
            p.z[j][free[0]] = zval;
            crate::brackets::bracket(&cfg, &p, &[i + 1, j + 1]).unwrap()
        };
        let z0 = params.z[j][free[0]].clone();
        let diff = &s_at(&z0 + &Q::one()) - &s_at(z0);
        assert_eq!(probe.jac.get(row, col), &diff);
    }

    #[test]
    fn mandelstam_derivative_is_minus_first_component() {
        let (cfg, params) = sample_trial(4, 4, 8, 0).unwrap();
        let probe = jacobian(VarietyId::Mandelstam, &cfg, &params).unwrap();
        // Row 0 is s_12; column 0 is p_{11}.
        assert_eq!(probe.jac.get(0, 0), &-cfg.p(1)[0].clone());
        assert_eq!(probe.jac.get(0, 4), &-cfg.p(0)[0].clone());
    }

    #[test]
    fn spinor_codims() {
        assert_eq!(spinor_codim(6, 2, 9).unwrap(), 1);
        assert_eq!(spinor_codim(8, 2, 9).unwrap(), 2);
        assert_eq!(spinor_codim(9, 2, 9).unwrap(), 1);
    }

    #[test]
    fn d6_quadric_vanishes() {
        let basis = build_dirac(6).unwrap();
        for t in 0..4 {
            let (cfg, params) = sample_for(VarietyId::SpinorImage, 6, 1, 10, t).unwrap();
            let v = ket(&cfg, &params, 1).unwrap();
            assert!(spinor_quadric_residual(&basis, &v).unwrap().is_zero());
        }
        // A generic vector is off the quadric.
        let v: Vec<Q> = [1, 2, 3, 5, 7, 11, 13, 17].map(Q::from_int).to_vec();
        assert!(!spinor_quadric_residual(&basis, &v).unwrap().is_zero());
    }

    #[test]
    fn labels_at_d6() {
        let basis = build_dirac(6).unwrap();
        let labels: Vec<String> = (0..8).map(|p| spinor_coordinate_label(&basis, p)).collect();
        assert_eq!(labels, ["∅", "23", "12", "13", "1", "123", "2", "3"]);
    }

    #[test]
    fn published_lookup() {
        assert_eq!(published_dimension(5, 5), Some(13));
        assert_eq!(published_dimension(8, 6), Some(51));
        assert_eq!(published_dimension(9, 12), Some(145));
        assert_eq!(published_dimension(3, 5), None);
        assert_eq!(published_dimension(4, 13), None);
    }

    #[test]
    fn preconditions() {
        assert!(variety_dimension(VarietyId::K3, 5, 5, 0, 1, DimensionMode::Exact).is_err());
        let (cfg, _) = sample_trial(4, 4, 1, 0).unwrap();
        let bad = SpinorParams { k: 2, z: vec![] };
        assert!(jacobian(VarietyId::K3, &cfg, &bad).is_err());
    }
}
