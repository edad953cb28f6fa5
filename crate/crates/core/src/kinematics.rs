//! Exact massless kinematics: null momenta, momentum conservation,
//! Mandelstam matrices and constraint residuals.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::clifford::lorentz_dot;
use crate::error::{Error, Result};
use crate::linalg::matrix::{ExactMatrix, Matrix};
use crate::scalar::GaussianRational as Q;

/// Independent generator for `stream` derived from a master seed.
pub fn substream(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SamplerConfig {
    /// Numerators are drawn from `-max_numerator..=max_numerator`.
    pub max_numerator: i64,
    pub denominators: Vec<i64>,
    pub retry_budget: usize,
}

impl Default for SamplerConfig {
    fn default() -> Self {
        Self { max_numerator: 9, denominators: vec![1, 2, 3], retry_budget: 100 }
    }
}

impl SamplerConfig {
    fn ratio<R: Rng + ?Sized>(&self, rng: &mut R) -> (i64, i64) {
        let num = rng.random_range(-self.max_numerator..=self.max_numerator);
        let den = self.denominators[rng.random_range(0..self.denominators.len())];
        (num, den)
    }

    /// Random element of ℚ(i) with independent real and imaginary parts.
    pub fn scalar<R: Rng + ?Sized>(&self, rng: &mut R) -> Q {
        let (a, b) = self.ratio(rng);
        let (c, e) = self.ratio(rng);
        Q::from_parts(a, b, c, e)
    }

    pub fn nonzero_scalar<R: Rng + ?Sized>(&self, rng: &mut R) -> Q {
        loop {
            let v = self.scalar(rng);
            if !v.is_zero() {
                return v;
            }
        }
    }

    pub fn vector<R: Rng + ?Sized>(&self, rng: &mut R, len: usize) -> Vec<Q> {
        (0..len).map(|_| self.scalar(rng)).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Momentum {
    pub p: Vec<Q>,
}

impl Momentum {
    pub fn new(p: Vec<Q>) -> Self {
        Self { p }
    }

    pub fn dim(&self) -> usize {
        self.p.len()
    }

    pub fn dot(&self, other: &Momentum) -> Q {
        lorentz_dot(&self.p, &other.p)
    }

    pub fn is_null(&self) -> bool {
        self.dot(self).is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.p.iter().all(Q::is_zero)
    }

    pub fn scaled(&self, t: &Q) -> Momentum {
        Momentum::new(self.p.iter().map(|x| x * t).collect())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct KinematicConfiguration {
    pub d: usize,
    pub n: usize,
    pub conserves: bool,
    pub momenta: Vec<Momentum>,
}

impl KinematicConfiguration {
    /// Validates shapes; does not check the constraints themselves.
    pub fn new(d: usize, conserves: bool, momenta: Vec<Momentum>) -> Result<Self> {
        if let Some(m) = momenta.iter().find(|m| m.dim() != d) {
            return Err(Error::DimensionMismatch(format!("momentum of length {} in d = {d}", m.dim())));
        }
        Ok(Self { d, n: momenta.len(), conserves, momenta })
    }

    /// Momentum of particle `i` (0-based).
    pub fn p(&self, i: usize) -> &[Q] {
        &self.momenta[i].p
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    /// Parses and checks that the declared counts match the data.
    pub fn from_json(s: &str) -> Result<Self> {
        let cfg: Self = serde_json::from_str(s)?;
        if cfg.n != cfg.momenta.len() || cfg.momenta.iter().any(|m| m.dim() != cfg.d) {
            return Err(Error::DimensionMismatch("configuration counts disagree with its momenta".into()));
        }
        Ok(cfg)
    }

    pub fn total_momentum(&self) -> Vec<Q> {
        let mut sum = vec![Q::zero(); self.d];
        for m in &self.momenta {
            for (s, x) in sum.iter_mut().zip(&m.p) {
                *s = &*s + x;
            }
        }
        sum
    }
}

fn check_d(d: usize, min: usize) -> Result<()> {
    if d < min {
        return Err(Error::OutOfRange { what: "d", value: d, allowed: format!(">= {min}") });
    }
    Ok(())
}

/// The null vector with parameters `u ≠ 0` and `x₃,…,x_d`:
/// p₁ = (u + Sq/u)/2, p₂ = (Sq/u − u)/2, p_j = x_j, where Sq = Σ x_j².
pub fn null_momentum_from(u: &Q, xs: &[Q]) -> Result<Momentum> {
    let inv_u = u.inv()?;
    let sq = xs.iter().fold(Q::zero(), |acc, x| &acc + &(x * x));
    let sq_over_u = &sq * &inv_u;
    let half = Q::from_ratio(1, 2);
    let mut p = vec![&(u + &sq_over_u) * &half, &(&sq_over_u - u) * &half];
    p.extend(xs.iter().cloned());
    Ok(Momentum::new(p))
}

pub fn sample_null_momentum<R: Rng + ?Sized>(d: usize, rng: &mut R, cfg: &SamplerConfig) -> Result<Momentum> {
    check_d(d, 3)?;
    let u = cfg.nonzero_scalar(rng);
    let xs = cfg.vector(rng, d - 2);
    null_momentum_from(&u, &xs)
}

/// Samples `n` null momenta; with `conserve`, repairs them so that they sum
/// to zero by rescaling the first one and solving for the last one.
pub fn sample_configuration<R: Rng + ?Sized>(
    d: usize,
    n: usize,
    conserve: bool,
    rng: &mut R,
    cfg: &SamplerConfig,
) -> Result<KinematicConfiguration> {
    check_d(d, 3)?;
    if !conserve {
        let momenta = (0..n).map(|_| sample_null_momentum(d, rng, cfg)).collect::<Result<Vec<_>>>()?;
        return KinematicConfiguration::new(d, false, momenta);
    }
    if n < 4 {
        return Err(Error::Precondition(format!(
            "conserving samples need n >= 4 (got {n}); use the isotropic triple sampler for n = 3"
        )));
    }
    let mut reason = String::new();
    for _ in 0..cfg.retry_budget {
        let mut ps = (0..n - 1).map(|_| sample_null_momentum(d, rng, cfg)).collect::<Result<Vec<_>>>()?;
        let a = (1..n - 1).fold(Q::zero(), |acc, j| &acc + &ps[0].dot(&ps[j]));
        let mut b = Q::zero();
        for i in 1..n - 1 {
            for j in i + 1..n - 1 {
                b = &b + &ps[i].dot(&ps[j]);
            }
        }
        if a.is_zero() {
            reason = "A = 0".into();
            continue;
        }
        let t = -&(&b * &a.inv()?);
        if t.is_zero() {
            reason = "t = 0".into();
            continue;
        }
        ps[0] = ps[0].scaled(&t);
        let mut last = vec![Q::zero(); d];
        for m in &ps {
            for (s, x) in last.iter_mut().zip(&m.p) {
                *s = &*s - x;
            }
        }
        ps.push(Momentum::new(last));
        if ps.iter().any(Momentum::is_zero) {
            reason = "zero momentum".into();
            continue;
        }
        if !ps[n - 1].is_null() {
            return Err(Error::Precondition("repaired last momentum is not null".into()));
        }
        return KinematicConfiguration::new(d, true, ps);
    }
    Err(Error::Degenerate { attempts: cfg.retry_budget, reason })
}

/// Three momenta in the isotropic plane spanned by (1,1,0,…) and (0,0,1,i,0,…),
/// summing to zero.
pub fn sample_isotropic_triple<R: Rng + ?Sized>(d: usize, rng: &mut R, cfg: &SamplerConfig) -> Result<KinematicConfiguration> {
    check_d(d, 4)?;
    let combo = |a: &Q, b: &Q| {
        let mut p = vec![Q::zero(); d];
        p[0] = a.clone();
        p[1] = a.clone();
        p[2] = b.clone();
        p[3] = b * &Q::i();
        Momentum::new(p)
    };
    for _ in 0..cfg.retry_budget {
        let (a1, b1, a2, b2) = (cfg.scalar(rng), cfg.scalar(rng), cfg.scalar(rng), cfg.scalar(rng));
        let p1 = combo(&a1, &b1);
        let p2 = combo(&a2, &b2);
        let p3 = combo(&-&(&a1 + &a2), &-&(&b1 + &b2));
        if [&p1, &p2, &p3].iter().any(|m| m.is_zero()) {
            continue;
        }
        return KinematicConfiguration::new(d, true, vec![p1, p2, p3]);
    }
    Err(Error::Degenerate { attempts: cfg.retry_budget, reason: "zero momentum".into() })
}

/// The n × n matrix of Lorentzian products s_ij = p_i · p_j.
pub fn mandelstam_matrix(cfg: &KinematicConfiguration) -> ExactMatrix {
    let n = cfg.n;
    let mut s = ExactMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let v = cfg.momenta[i].dot(&cfg.momenta[j]);
            s.set(j, i, v.clone());
            s.set(i, j, v);
        }
    }
    s
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConstraintResiduals {
    /// p_i · p_i for each particle.
    pub null: Vec<Q>,
    /// Components of Σ p_i.
    pub conservation: Vec<Q>,
}

impl ConstraintResiduals {
    pub fn all_zero(&self) -> bool {
        self.null.iter().chain(&self.conservation).all(Q::is_zero)
    }

    pub fn null_all_zero(&self) -> bool {
        self.null.iter().all(Q::is_zero)
    }

    pub fn conservation_all_zero(&self) -> bool {
        self.conservation.iter().all(Q::is_zero)
    }
}

/// The n + d residues of the masslessness and conservation equations.
pub fn constraint_residuals(cfg: &KinematicConfiguration) -> ConstraintResiduals {
    ConstraintResiduals { null: cfg.momenta.iter().map(|m| m.dot(m)).collect(), conservation: cfg.total_momentum() }
}

/// Row sums of a matrix.
pub fn row_sums(m: &ExactMatrix) -> Vec<Q> {
    (0..m.rows()).map(|r| m.row(r).iter().fold(Q::zero(), |acc, x| &acc + x)).collect()
}

/// Stacks the momenta as the rows of an n × d matrix.
pub fn momentum_matrix(cfg: &KinematicConfiguration) -> ExactMatrix {
    Matrix::from_fn(cfg.n, cfg.d, |i, j| cfg.momenta[i].p[j].clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rank;

    fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    #[test]
    fn parametrization_examples() {
        let m = null_momentum_from(&Q::one(), &[Q::zero(), Q::zero()]).unwrap();
        assert_eq!(m.p, vec![Q::from_ratio(1, 2), Q::from_ratio(-1, 2), Q::zero(), Q::zero()]);
        let m = null_momentum_from(&Q::one(), &[Q::one()]).unwrap();
        assert_eq!(m.p, vec![Q::one(), Q::zero(), Q::one()]);
        assert!(null_momentum_from(&Q::zero(), &[Q::one()]).is_err());
    }

    #[test]
    fn sampled_momenta_are_null() {
        let mut r = rng(1);
        for d in 3..10 {
            assert!(sample_null_momentum(d, &mut r, &SamplerConfig::default()).unwrap().is_null());
        }
        assert!(sample_null_momentum(2, &mut r, &SamplerConfig::default()).is_err());
    }

    #[test]
    fn conserving_samples_satisfy_all_constraints() {
        let mut r = rng(2);
        for d in 3..8 {
            for n in 4..8 {
                let cfg = sample_configuration(d, n, true, &mut r, &SamplerConfig::default()).unwrap();
                let res = constraint_residuals(&cfg);
                assert_eq!(res.null.len() + res.conservation.len(), n + d);
                assert!(res.all_zero(), "d = {d}, n = {n}");
            }
        }
    }

    #[test]
    fn non_conserving_samples() {
        let cfg = sample_configuration(4, 5, false, &mut rng(3), &SamplerConfig::default()).unwrap();
        let res = constraint_residuals(&cfg);
        assert!(res.null_all_zero());
        assert!(!res.conservation_all_zero());
    }

    #[test]
    fn perturbation_breaks_two_residue_classes() {
        let mut cfg = sample_configuration(4, 4, true, &mut rng(4), &SamplerConfig::default()).unwrap();
        cfg.momenta[1].p[2] = &cfg.momenta[1].p[2] + &Q::one();
        let res = constraint_residuals(&cfg);
        let null_changed: Vec<usize> = (0..4).filter(|&i| !res.null[i].is_zero()).collect();
        let cons_changed: Vec<usize> = (0..4).filter(|&i| !res.conservation[i].is_zero()).collect();
        assert_eq!(cons_changed, vec![2]);
        assert_eq!(null_changed, vec![1]);
    }

    #[test]
    fn three_particles_need_the_isotropic_sampler() {
        assert!(matches!(
            sample_configuration(4, 3, true, &mut rng(5), &SamplerConfig::default()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn isotropic_triples() {
        let mut r = rng(6);
        for d in 4..8 {
            let cfg = sample_isotropic_triple(d, &mut r, &SamplerConfig::default()).unwrap();
            assert!(constraint_residuals(&cfg).all_zero());
            assert!(mandelstam_matrix(&cfg).is_zero());
        }
        assert!(sample_isotropic_triple(3, &mut r, &SamplerConfig::default()).is_err());
    }

    #[test]
    fn mandelstam_structure() {
        let mut r = rng(7);
        for (d, n) in [(3, 5), (4, 6), (5, 8)] {
            let cfg = sample_configuration(d, n, true, &mut r, &SamplerConfig::default()).unwrap();
            let s = mandelstam_matrix(&cfg);
            assert!(s.is_symmetric());
            assert!((0..n).all(|i| s.get(i, i).is_zero()));
            assert!(row_sums(&s).iter().all(Q::is_zero));
            assert!(rank(&s) <= d);
        }
    }

    #[test]
    fn seeds_reproduce() {
        let a = sample_configuration(5, 6, true, &mut substream(42, 3), &SamplerConfig::default()).unwrap();
        let b = sample_configuration(5, 6, true, &mut substream(42, 3), &SamplerConfig::default()).unwrap();
        let c = sample_configuration(5, 6, true, &mut substream(42, 4), &SamplerConfig::default()).unwrap();
        assert_eq!(a.to_json().unwrap(), b.to_json().unwrap());
        assert_ne!(a, c);
    }

    #[test]
    fn json_round_trip() {
        let cfg = sample_configuration(4, 4, true, &mut rng(8), &SamplerConfig::default()).unwrap();
        let back = KinematicConfiguration::from_json(&cfg.to_json().unwrap()).unwrap();
        assert_eq!(back, cfg);
        let bad = r#"{"d":3,"n":2,"conserves":false,"momenta":[["1/1","0/1","1/1"]]}"#;
        assert!(KinematicConfiguration::from_json(bad).is_err());
    }
}
