//! Numeric check that brackets are invariant under spin transformations.

use rand::Rng;

use crate::analysis::sample_trial;
use crate::brackets::BracketEngine;
use crate::clifford::build_dirac;
use crate::conjugation::{conjugation_from_basis, spin_transformation};
use crate::error::{Error, Result};
use crate::kinematics::substream;
use crate::linalg::{expm, FloatMatrix};
use crate::report::SuiteReport;
use crate::scalar::ComplexFloat;

/// Vector-representation generator matching Σ_jl (0-based `j`, `l`) acting
/// on lowered coordinates c = ηp.
fn vector_generator(eta: &[i64], j: usize, l: usize) -> FloatMatrix {
    let d = eta.len();
    let mut a = FloatMatrix::zeros(d, d);
    a.set(j, l, ComplexFloat::new(eta[l] as f64, 0.0));
    a.set(l, j, ComplexFloat::new(-eta[j] as f64, 0.0));
    a
}

fn words(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![];
    for i in 1..=n {
        for k in 1..=n {
            out.push(vec![i, k]);
            for j in 1..=n {
                out.push(vec![i, j, k]);
            }
        }
    }
    out
}

/// Applies `trials` random transformations p ↦ Λp, z ↦ gz with
/// g = exp(tΣ_jl) and compares all brackets of length 2 and 3. The check
/// passes when the worst relative error is at most `tol`.
pub fn bracket_lorentz_invariance(d: usize, n: usize, trials: usize, seed: u64, tol: f64) -> Result<SuiteReport> {
    if d < 3 || n < 4 {
        return Err(Error::Precondition(format!("invariance probe needs d >= 3, n >= 4, got d = {d}, n = {n}")));
    }
    let basis = build_dirac(d)?;
    let c = conjugation_from_basis(&basis).matrix;
    let all_words = words(n);
    let mut worst = 0.0f64;
    for trial in 0..trials as u64 {
        let (cfg, params) = sample_trial(d, n, seed, trial)?;
        let mut rng = substream(seed ^ 0x10e_e472, trial);
        let j = rng.random_range(1..d);
        let l = rng.random_range(j + 1..=d);
        let t: f64 = rng.random_range(-1.0..=1.0);
        let g = spin_transformation(&basis, j, l, t)?;
        let lambda = expm(&vector_generator(&basis.eta, j - 1, l - 1).scale(&ComplexFloat::new(t, 0.0)));

        let p: Vec<Vec<ComplexFloat>> = cfg.momenta.iter().map(|m| m.p.iter().map(|x| x.to_float()).collect::<Result<_>>()).collect::<Result<_>>()?;
        let z: Vec<Vec<ComplexFloat>> = params.z.iter().map(|v| v.iter().map(|x| x.to_float()).collect::<Result<_>>()).collect::<Result<_>>()?;
        let eta: Vec<f64> = basis.eta.iter().map(|&e| e as f64).collect();
        let p2: Vec<Vec<ComplexFloat>> = p
            .iter()
            .map(|pi| {
                let lowered: Vec<ComplexFloat> = pi.iter().zip(&eta).map(|(x, e)| x * e).collect();
                lambda.mul_vec(&lowered).iter().zip(&eta).map(|(x, e)| x * e).collect()
            })
            .collect();
        let z2: Vec<Vec<ComplexFloat>> = z.iter().map(|zi| g.mul_vec(zi)).collect();

        let before = BracketEngine::<ComplexFloat>::new(&basis, &c, &p, &z)?;
        let after = BracketEngine::<ComplexFloat>::new(&basis, &c, &p2, &z2)?;
        let mut scale = 0.0f64;
        let mut err = 0.0f64;
        for w in &all_words {
            let a = before.bracket(w)?;
            let b = after.bracket(w)?;
            scale = scale.max(a.norm());
            err = err.max((a - b).norm());
        }
        if scale > 0.0 {
            worst = worst.max(err / scale);
        }
    }
    let mut rep = SuiteReport::new(Some(seed), Some(d), Some(n));
    rep.check_with(
        "lorentz/brackets",
        "brackets of length 2 and 3 are unchanged under p ↦ Λp, z ↦ exp(tΣ_jl) z",
        worst <= tol,
        format!("max relative error {worst:.2e} over {trials} transformations"),
    );
    Ok(rep)
}
