//! Exact invariant suites over sampled points.

use std::collections::BTreeMap;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::analysis::relations::{relation_residuals, secant_membership};
use crate::analysis::sample_trial;
use crate::brackets::{expected_s_symmetry, expected_t_symmetry, reversal_sign, spinor_system_with, BracketTensor};
use crate::clifford::{build_dirac, momentum_dirac, verify_clifford, verify_spin_algebra, DiracBasis};
use crate::conjugation::{conjugation_from_basis, verify_conjugation, ConjugationMatrix, Symmetry};
use crate::error::{Error, Result};
use crate::kinematics::{constraint_residuals, mandelstam_matrix, row_sums, substream, KinematicConfiguration};
use crate::linalg::{rank, ExactMatrix};
use crate::report::SuiteReport;
use crate::scalar::GaussianRational as Q;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    All,
    Clifford,
    Brackets,
    Relations,
    Secant,
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(Suite::All),
            "clifford" => Ok(Suite::Clifford),
            "brackets" => Ok(Suite::Brackets),
            "relations" => Ok(Suite::Relations),
            "secant" => Ok(Suite::Secant),
            other => Err(Error::Parse(format!("unknown suite {other:?}"))),
        }
    }
}

/// Folds per-trial reports into one: a check passes iff it passed in every
/// trial; the witness names the first failing trial.
pub fn merge_trials(seed: u64, d: usize, n: usize, trials: Vec<SuiteReport>) -> SuiteReport {
    let mut out = SuiteReport::new(Some(seed), Some(d), Some(n));
    let mut index: BTreeMap<String, usize> = BTreeMap::new();
    for (t, rep) in trials.into_iter().enumerate() {
        for c in rep.checks {
            match index.get(&c.name) {
                Some(&i) => {
                    let slot = &mut out.checks[i];
                    if slot.passed && !c.passed {
                        slot.passed = false;
                        slot.witness = Some(format!("trial {t}{}", c.witness.map(|w| format!(": {w}")).unwrap_or_default()));
                    }
                }
                None => {
                    index.insert(c.name.clone(), out.checks.len());
                    let mut c = c;
                    if !c.passed {
                        c.witness = Some(format!("trial {t}{}", c.witness.map(|w| format!(": {w}")).unwrap_or_default()));
                    }
                    out.checks.push(c);
                }
            }
        }
    }
    out
}

/// Structural checks of a bracket tensor: symmetry classes, zero diagonal,
/// zero j-th row and column of T_j, rank bounds and (when `conserves`)
/// T₁ + ⋯ + T_n = 0.
pub fn check_bracket_tensor(bt: &BracketTensor, conserves: bool) -> SuiteReport {
    let (d, n) = (bt.d, bt.n);
    let k = d / 2;
    let mut rep = SuiteReport::new(None, Some(d), Some(n));
    rep.check("S/diagonal", "⟨ii⟩ = 0", (0..n).all(|i| bt.s.get(i, i).is_zero()));
    let s_sym = expected_s_symmetry(d);
    let s_ok = match s_sym {
        Symmetry::Symmetric => bt.s.is_symmetric(),
        _ => bt.s.is_skew_symmetric(),
    };
    rep.check_with("S/symmetry", "S symmetric iff k ≡ 0,3 mod 4, otherwise skew", s_ok, s_sym.label());
    let rs = rank(&bt.s);
    rep.check_with("S/rank", "rank S ≤ 2^k", rs <= 1 << k, format!("rank {rs}"));
    let t_sym = expected_t_symmetry(d);
    let mut sym_ok = true;
    let mut zero_ok = true;
    let mut rank_ok = true;
    let mut worst = 0;
    for (j, t) in bt.t.iter().enumerate() {
        sym_ok &= match t_sym {
            Symmetry::Symmetric => t.is_symmetric(),
            _ => t.is_skew_symmetric(),
        };
        zero_ok &= (0..n).all(|i| t.get(i, j).is_zero() && t.get(j, i).is_zero());
        let r = rank(t);
        worst = worst.max(r);
        rank_ok &= r <= 1 << (k - 1);
    }
    rep.check_with("T/symmetry", "T_j symmetric iff d ≡ 1,2,3,4 mod 8, otherwise skew", sym_ok, t_sym.label());
    rep.check("T/zero-row-column", "T_j has zero j-th row and column", zero_ok);
    rep.check_with("T/rank", "rank T_j ≤ 2^(k−1)", rank_ok, format!("max rank {worst}"));
    if conserves {
        rep.check("T/sum", "T_1 + ⋯ + T_n = 0", bt.t_sum().is_zero());
    }
    rep
}

fn kinematic_checks(cfg: &KinematicConfiguration) -> SuiteReport {
    let mut rep = SuiteReport::new(None, Some(cfg.d), Some(cfg.n));
    let res = constraint_residuals(cfg);
    rep.check("kinematics/null", "p_i · p_i = 0", res.null_all_zero());
    rep.check("kinematics/conservation", "Σ p_i = 0", res.conservation_all_zero());
    let s = mandelstam_matrix(cfg);
    rep.check("mandelstam/symmetric-zero-diagonal", "s_ij symmetric with s_ii = 0", s.is_symmetric() && (0..cfg.n).all(|i| s.get(i, i).is_zero()));
    rep.check("mandelstam/row-sums", "Σ_j s_ij = 0", row_sums(&s).iter().all(Q::is_zero));
    let r = rank(&s);
    rep.check_with("mandelstam/rank", "rank (s_ij) ≤ d", r <= cfg.d, format!("rank {r}"));
    if cfg.n == 3 {
        rep.check("mandelstam/three-particles", "all s_ij vanish for n = 3", s.is_zero());
    }
    rep
}

fn momentum_matrix_checks(basis: &DiracBasis, cfg: &KinematicConfiguration) -> SuiteReport {
    let mut rep = SuiteReport::new(None, Some(cfg.d), Some(cfg.n));
    let ps: Vec<ExactMatrix> = cfg.momenta.iter().map(|m| momentum_dirac(basis, &m.p).expect("length d")).collect();
    let half = 1 << (basis.k - 1);
    rep.check("P/nilpotent", "P_i² = 0 for null p_i", ps.iter().all(|p| p.mul(p).is_zero()));
    rep.check("P/rank", "rank P_i = 2^(k−1)", ps.iter().all(|p| rank(p) == half));
    let s = mandelstam_matrix(cfg);
    let id = ExactMatrix::identity(basis.size());
    let mut ok = true;
    for i in 0..cfg.n {
        for j in i + 1..cfg.n {
            let two_s = s.get(i, j) * &Q::from_int(2);
            ok &= ps[i].anticommutator(&ps[j]) == id.scale(&two_s);
        }
    }
    rep.check("P/anticommutator", "P_iP_j + P_jP_i = 2(p_i·p_j) Id", ok);
    rep
}

fn all_words(n: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out.into_iter().flat_map(|w| (1..=n).map(move |i| [w.clone(), vec![i]].concat())).collect();
    }
    out
}

fn bracket_checks(basis: &DiracBasis, cm: &ConjugationMatrix, cfg: &KinematicConfiguration, params: &crate::brackets::SpinorParams) -> Result<SuiteReport> {
    let (d, n) = (cfg.d, cfg.n);
    let sys = spinor_system_with(basis, cm, cfg, params)?;
    let bt = BracketTensor::from_system(&sys);
    let mut rep = check_bracket_tensor(&bt, cfg.conserves);

    let mut agree = true;
    for w in all_words(n, 2).into_iter().chain(all_words(n, 3)) {
        let v = sys.bracket(&w)?;
        let stored = if w.len() == 2 { bt.s.get(w[0] - 1, w[1] - 1) } else { bt.t[w[1] - 1].get(w[0] - 1, w[2] - 1) };
        agree &= &v == stored;
    }
    rep.check("brackets/tensor-entries", "S and T_j entries equal the bracket words of length 2 and 3", agree);

    let mut rev_ok = true;
    let mut vanish_ok = true;
    for len in 2..=4 {
        let eps = Q::from_int(reversal_sign(d, len));
        for w in all_words(n, len) {
            let v = sys.bracket(&w)?;
            let rev: Vec<usize> = w.iter().rev().copied().collect();
            rev_ok &= v == &eps * &sys.bracket(&rev)?;
            if w.windows(2).any(|p| p[0] == p[1]) {
                vanish_ok &= v.is_zero();
            }
        }
    }
    rep.check("brackets/reversal", "⟨i1⋯iℓ⟩ = ±⟨iℓ⋯i1⟩ with the sign determined by ℓ and d mod 8", rev_ok);
    rep.check("brackets/adjacent-repeat", "words with two equal adjacent indices vanish, ℓ ≤ 4", vanish_ok);

    if n == 3 {
        rep.check("brackets/three-particles", "T_1 = T_2 = T_3 = 0 for isotropic triples", bt.t.iter().all(ExactMatrix::is_zero));
        let mut iji = true;
        for i in 1..=3 {
            for j in 1..=3 {
                iji &= sys.bracket(&[i, j, i])?.is_zero();
            }
        }
        rep.check("brackets/iji", "⟨iji⟩ = 0 for isotropic triples", iji);
    }
    Ok(rep)
}

/// Every exact invariant of the Clifford, conjugation, kinematics and
/// bracket layers at `trials` sampled points.
pub fn invariant_suite(d: usize, n: usize, trials: usize, seed: u64) -> Result<SuiteReport> {
    run_suite(Suite::All, d, n, trials, seed)
}

/// Runs one suite; trials run in parallel on independent substreams.
pub fn run_suite(suite: Suite, d: usize, n: usize, trials: usize, seed: u64) -> Result<SuiteReport> {
    if d < 3 || n < 3 {
        return Err(Error::Precondition(format!("suites need d >= 3 and n >= 3, got d = {d}, n = {n}")));
    }
    if n == 3 && d < 4 {
        return Err(Error::Precondition("three-particle points need d >= 4".into()));
    }
    let basis = build_dirac(d)?;
    let cm = conjugation_from_basis(&basis);
    let mut head = SuiteReport::new(Some(seed), Some(d), Some(n));
    if matches!(suite, Suite::All | Suite::Clifford) {
        head.extend_prefixed("clifford", verify_clifford(&basis));
        head.extend_prefixed("clifford", verify_spin_algebra(&basis));
    }
    let per_trial: Vec<Result<SuiteReport>> = (0..trials as u64)
        .into_par_iter()
        .map(|t| {
            let (cfg, params) = sample_trial(d, n, seed, t)?;
            let mut rep = SuiteReport::default();
            if matches!(suite, Suite::All | Suite::Clifford) {
                let mut rng = substream(seed ^ 0x5eed_c0de, t);
                rep.extend_prefixed("conjugation", verify_conjugation(&cm, &basis, 1, &mut rng));
                rep.extend(momentum_matrix_checks(&basis, &cfg));
            }
            if matches!(suite, Suite::All | Suite::Brackets) {
                rep.extend(kinematic_checks(&cfg));
                rep.extend(bracket_checks(&basis, &cm, &cfg, &params)?);
            }
            if matches!(suite, Suite::All | Suite::Relations) && n >= 4 {
                rep.extend_prefixed("relations", relation_residuals(&cfg, &params)?);
            }
            if matches!(suite, Suite::All | Suite::Secant) {
                rep.extend_prefixed("secant", secant_membership(&cfg, &params)?);
            }
            Ok(rep)
        })
        .collect();
    let per_trial = per_trial.into_iter().collect::<Result<Vec<_>>>()?;
    head.extend(merge_trials(seed, d, n, per_trial));
    Ok(head)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::sample_trial;
    use crate::brackets::build_bracket_tensor;

    #[test]
    fn d5_n6_suite_passes() {
        let rep = invariant_suite(5, 6, 2, 11).unwrap();
        assert!(rep.all_passed(), "{rep}");
        assert!(rep.checks.len() > 20);
    }

    #[test]
    fn d8_symmetry_classes() {
        let (cfg, params) = sample_trial(8, 5, 3, 0).unwrap();
        let bt = build_bracket_tensor(&cfg, &params).unwrap();
        assert_eq!(bt.symmetry.s, "sym");
        assert_eq!(bt.symmetry.t, "skew");
        assert!(check_bracket_tensor(&bt, true).all_passed());
    }

    #[test]
    fn bumped_entry_breaks_the_sum() {
        let (cfg, params) = sample_trial(4, 5, 4, 0).unwrap();
        let mut bt = build_bracket_tensor(&cfg, &params).unwrap();
        let v = bt.t[2].get(0, 1) + &Q::one();
        bt.t[2].set(0, 1, v);
        let rep = check_bracket_tensor(&bt, true);
        assert!(!rep.find("T/sum").unwrap().passed);
    }

    #[test]
    fn isotropic_triples_suite() {
        let rep = run_suite(Suite::Brackets, 5, 3, 2, 5).unwrap();
        assert!(rep.all_passed(), "{rep}");
        assert!(rep.find("brackets/three-particles").is_some());
    }

    #[test]
    fn merge_reports_first_failure() {
        let mut a = SuiteReport::default();
        a.check("x", "claim", true);
        let mut b = SuiteReport::default();
        b.check("x", "claim", false);
        let m = merge_trials(0, 3, 4, vec![a, b]);
        assert_eq!(m.checks.len(), 1);
        assert!(!m.checks[0].passed);
        assert_eq!(m.checks[0].witness.as_deref(), Some("trial 1"));
    }

    #[test]
    fn suite_names_parse() {
        assert_eq!("secant".parse::<Suite>().unwrap(), Suite::Secant);
        assert!("bogus".parse::<Suite>().is_err());
    }
}
