//! Acceptance run: one PASS/FAIL line per criterion, with wall time and
//! budget. Exits 0 so that a failing criterion is reported without breaking
//! the workspace test run; set ACCEPTANCE_STRICT=1 to exit 1 on any failure.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use spinor_kinematics::analysis::{
    bracket_lorentz_invariance, check_bracket_tensor, relation_residuals, reproduce_table, sample_trial, spinor_codim,
    spinor_quadric_residual, strassen_scan, tucker_certify_d3, variety_dimension, DimensionMode, VarietyId,
};
use spinor_kinematics::brackets::{build_bracket_tensor, ket, make_spinor_params, sh_product_check};
use spinor_kinematics::clifford::{build_dirac, lorentz_dot, momentum_dirac, verify_clifford};
use spinor_kinematics::conjugation::{
    build_conjugation, expected_block_shape, expected_block_symmetry, expected_symmetry, verify_conjugation,
};
use spinor_kinematics::kinematics::{
    constraint_residuals, mandelstam_matrix, row_sums, sample_configuration, sample_null_momentum, substream,
    KinematicConfiguration, SamplerConfig,
};
use spinor_kinematics::linalg::{rank, ExactMatrix};
use spinor_kinematics::GaussianRational as Q;

type Outcome = Result<String, String>;

const SEED: u64 = 20_240_601;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok { Ok(()) } else { Err(msg()) }
}

fn c1_dirac_fixtures() -> Outcome {
    let mut compared = 0;
    for d in common::printed_dirac_dims() {
        let basis = build_dirac(d).map_err(|e| e.to_string())?;
        for p in common::probe_momenta(d) {
            let ours = momentum_dirac(&basis, &p).map_err(|e| e.to_string())?;
            let printed = common::printed_dirac(d, &p);
            ensure(ours == printed, || format!("P^({d}) differs at p = {p:?}"))?;
            compared += 1;
        }
    }
    Ok(format!("{compared} probe evaluations of P^(2), P^(4), P^(5), P^(6)"))
}

fn c2_conjugation() -> Outcome {
    for d in common::printed_conjugation_dims() {
        let cm = build_conjugation(d).map_err(|e| e.to_string())?;
        ensure(cm.matrix == common::printed_conjugation(d), || format!("C^({d}) differs from the printed matrix"))?;
    }
    let mut rng = substream(SEED, 2);
    for d in 2..=9 {
        let basis = build_dirac(d).map_err(|e| e.to_string())?;
        let cm = build_conjugation(d).map_err(|e| e.to_string())?;
        let rep = verify_conjugation(&cm, &basis, 10, &mut rng);
        ensure(rep.all_passed(), || format!("d = {d}: {:?}", rep.failures().map(|c| &c.name).collect::<Vec<_>>()))?;
    }
    for d in 2..=12 {
        let cm = build_conjugation(d).map_err(|e| e.to_string())?;
        let k = d / 2;
        ensure(cm.symmetry_class == expected_symmetry(k), || format!("symmetry class at d = {d}"))?;
        ensure(cm.block_shape == expected_block_shape(k), || format!("block shape at d = {d}"))?;
        ensure(cm.block_symmetry == expected_block_symmetry(k), || format!("block symmetry at d = {d}"))?;
    }
    Ok("C^(2)..C^(7) match; intertwining at 10 momenta for d = 2..9; predicates for d = 2..12".into())
}

fn c3_clifford() -> Outcome {
    let sampler = SamplerConfig::default();
    let mut rng = substream(SEED, 3);
    for d in 2..=9 {
        let basis = build_dirac(d).map_err(|e| e.to_string())?;
        let rep = verify_clifford(&basis);
        ensure(rep.all_passed(), || format!("d = {d}: {:?}", rep.failures().map(|c| &c.name).collect::<Vec<_>>()))?;
        let id = ExactMatrix::identity(basis.size());
        for _ in 0..10 {
            let (a, b) = (sampler.vector(&mut rng, d), sampler.vector(&mut rng, d));
            let (pa, pb) = (momentum_dirac(&basis, &a).unwrap(), momentum_dirac(&basis, &b).unwrap());
            let two_dot = &lorentz_dot(&a, &b) * &Q::from_int(2);
            ensure(pa.anticommutator(&pb) == id.scale(&two_dot), || format!("P_aP_b + P_bP_a ≠ 2(a·b)Id at d = {d}"))?;
        }
    }
    Ok("d = 2..9, 10 momentum pairs each".into())
}

fn c4_sampling() -> Outcome {
    let sampler = SamplerConfig::default();
    let mut count = 0;
    for d in 3..=9 {
        for n in 4..=8 {
            for s in 0..20u64 {
                let cfg = sample_configuration(d, n, true, &mut substream(SEED + s, (d * 100 + n) as u64), &sampler)
                    .map_err(|e| e.to_string())?;
                ensure(constraint_residuals(&cfg).all_zero(), || format!("residual at d = {d}, n = {n}, seed {s}"))?;
                let m = mandelstam_matrix(&cfg);
                ensure((0..n).all(|i| m.get(i, i).is_zero()), || format!("diagonal at d = {d}, n = {n}"))?;
                ensure(row_sums(&m).iter().all(Q::is_zero), || format!("row sums at d = {d}, n = {n}"))?;
                ensure(rank(&m) <= d, || format!("rank at d = {d}, n = {n}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} configurations"))
}

fn c5_bracket_invariants() -> Outcome {
    let mut count = 0;
    for d in 3..=9 {
        for n in 4..=7 {
            for s in 0..5u64 {
                let (cfg, params) = sample_trial(d, n, SEED + s, 5).map_err(|e| e.to_string())?;
                let bt = build_bracket_tensor(&cfg, &params).map_err(|e| e.to_string())?;
                let rep = check_bracket_tensor(&bt, true);
                ensure(rep.all_passed(), || {
                    format!("d = {d}, n = {n}: {:?}", rep.failures().map(|c| &c.name).collect::<Vec<_>>())
                })?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} tensors"))
}

fn c6_three_particles() -> Outcome {
    for d in 4..=7 {
        for s in 0..5u64 {
            let (cfg, params) = sample_trial(d, 3, SEED + s, 6).map_err(|e| e.to_string())?;
            let bt = build_bracket_tensor(&cfg, &params).map_err(|e| e.to_string())?;
            ensure(bt.t.iter().all(ExactMatrix::is_zero), || format!("T_j ≠ 0 at d = {d}, seed {s}"))?;
        }
    }
    Ok("d = 4..7, 5 isotropic triples each".into())
}

fn c7_relations() -> Outcome {
    let mut checks = 0;
    for (d, n) in [(3, 4), (5, 5)] {
        for s in 0..5u64 {
            let (cfg, params) = sample_trial(d, n, SEED + s, 7).map_err(|e| e.to_string())?;
            let rep = relation_residuals(&cfg, &params).map_err(|e| e.to_string())?;
            ensure(rep.all_passed(), || {
                format!("(d, n) = ({d}, {n}): {:?}", rep.failures().map(|c| &c.name).collect::<Vec<_>>())
            })?;
            checks += rep.checks.len();
        }
    }
    Ok(format!("{checks} relation checks at (3, 4) and (5, 5)"))
}

fn c8_table() -> Outcome {
    let report = reproduce_table(9, 7, 1, SEED, DimensionMode::Auto).map_err(|e| e.to_string())?;
    print!("{report}");
    let flagged: Vec<String> =
        report.cells.iter().filter(|c| c.flagged).map(|c| format!("({}, {}) = {}", c.d, c.n, c.computed)).collect();
    ensure(report.cells.len() == 24, || format!("{} cells", report.cells.len()))?;
    ensure(report.passed(), || {
        let bad: Vec<String> = report
            .disagreements()
            .filter(|c| !c.flagged)
            .map(|c| format!("({}, {}): {} vs {:?}", c.d, c.n, c.computed, c.published))
            .collect();
        bad.join(", ")
    })?;
    let exact = report.cells.iter().filter(|c| c.mode == DimensionMode::Exact).count();
    Ok(format!("24 cells agree ({exact} exact); flagged {}", flagged.join(", ")))
}

fn dim(variety: VarietyId, d: usize, n: usize) -> Result<usize, String> {
    variety_dimension(variety, d, n, 2, SEED, DimensionMode::Auto).map(|o| o.dim).map_err(|e| e.to_string())
}

fn c9_k2() -> Outcome {
    let mut cases = vec![];
    for n in [5, 6] {
        cases.push((3, n, 2 * n - 4));
        cases.push((4, n, 4 * n - 11));
        cases.push((5, n, 4 * n - 11));
    }
    cases.push((6, 7, 7 * 7 - 29));
    cases.push((7, 7, 7 * 7 - 29));
    for &(d, n, want) in &cases {
        let got = dim(VarietyId::K2, d, n)?;
        ensure(got == want, || format!("(d, n) = ({d}, {n}): {got} ≠ {want}"))?;
    }
    Ok(format!("{} cells", cases.len()))
}

fn c10_mandelstam() -> Outcome {
    for (d, n) in [(4usize, 6usize), (5, 7)] {
        let want = n * d - n - d - d * (d - 1) / 2;
        let got = dim(VarietyId::Mandelstam, d, n)?;
        ensure(got == want, || format!("(d, n) = ({d}, {n}): {got} ≠ {want}"))?;
    }
    Ok("(4, 6) = 8, (5, 7) = 13".into())
}

fn c11_spinor_image() -> Outcome {
    let basis = build_dirac(6).map_err(|e| e.to_string())?;
    let sampler = SamplerConfig::default();
    let mut rng = substream(SEED, 11);
    for _ in 0..10 {
        let p = sample_null_momentum(6, &mut rng, &sampler).map_err(|e| e.to_string())?;
        let cfg = KinematicConfiguration::new(6, false, vec![p]).map_err(|e| e.to_string())?;
        let params = make_spinor_params(3, 1, &mut rng, &sampler);
        let v = ket(&cfg, &params, 1).map_err(|e| e.to_string())?;
        let r = spinor_quadric_residual(&basis, &v).map_err(|e| e.to_string())?;
        ensure(r.is_zero(), || format!("quadric residual {r}"))?;
    }
    let c8 = spinor_codim(8, 2, SEED).map_err(|e| e.to_string())?;
    let c9 = spinor_codim(9, 2, SEED).map_err(|e| e.to_string())?;
    ensure(c8 == 2 && c9 == 1, || format!("codim(8) = {c8}, codim(9) = {c9}"))?;
    Ok("quadric vanishes at 10 spinors; codim(8) = 2, codim(9) = 1".into())
}

fn c12_multilinear() -> Outcome {
    let mut failures = vec![];
    for n in [4, 5, 6] {
        let (cfg, params) = sample_trial(3, n, SEED, 12).map_err(|e| e.to_string())?;
        let ml = build_bracket_tensor(&cfg, &params).map_err(|e| e.to_string())?.tensor().multilinear_rank();
        if ml != [2, 4, 2] {
            failures.push(format!("d = 3, n = {n}: {ml:?} ≠ [2, 4, 2]"));
        }
        let tucker = tucker_certify_d3(&cfg, &params).map_err(|e| e.to_string())?;
        if !tucker.all_passed() {
            failures.push(format!("Tucker at n = {n}: {:?}", tucker.failures().map(|c| &c.name).collect::<Vec<_>>()));
        }
    }
    let ml5 = |n: usize| -> Result<[usize; 3], String> {
        let (cfg, params) = sample_trial(5, n, SEED, 12).map_err(|e| e.to_string())?;
        Ok(build_bracket_tensor(&cfg, &params).map_err(|e| e.to_string())?.tensor().multilinear_rank())
    };
    let at5 = ml5(5)?;
    if at5 != [4, 6, 4] {
        failures.push(format!("d = 5, n = 5: {at5:?} ≠ [4, 6, 4]"));
    }
    let note = format!("supplementary d = 5, n = 6: {:?}", ml5(6)?);
    if failures.is_empty() { Ok(note) } else { Err(format!("{}; {note}", failures.join("; "))) }
}

fn c13_strassen() -> Outcome {
    let mut best = 0;
    let mut hit = None;
    for s in 0..10u64 {
        let (cfg, params) = sample_trial(5, 5, SEED + s, 13).map_err(|e| e.to_string())?;
        let st = build_bracket_tensor(&cfg, &params).map_err(|e| e.to_string())?.tensor();
        let b = strassen_scan(&st).map_err(|e| e.to_string())?;
        if b.bound > best {
            best = b.bound;
            hit = Some((s, b.witness));
        }
    }
    ensure(best >= 5, || format!("best bound {best}"))?;
    let (s, w) = hit.expect("best > 0");
    Ok(format!("bound {best} at seed offset {s}, witness {w:?}"))
}

fn c14_spinor_helicity() -> Outcome {
    let sampler = SamplerConfig::default();
    for s in 0..10u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED + s);
        let cfg = sample_configuration(4, 5, true, &mut rng, &sampler).map_err(|e| e.to_string())?;
        let rep = match sh_product_check(&cfg) {
            Ok(r) => r,
            // p_i1 + p_i2 = 0 leaves the normalization undefined; skip.
            Err(_) => continue,
        };
        ensure(rep.product_is_zero, || format!("angle · square ≠ 0 at seed {s}"))?;
        for (name, m) in [("angle", &rep.angle), ("square", &rep.square)] {
            ensure(m.is_skew_symmetric() && rank(m) == 2, || format!("{name} matrix is not skew of rank 2 at seed {s}"))?;
        }
    }
    Ok("10 conserving d = 4, n = 5 samples".into())
}

fn c15_lorentz() -> Outcome {
    for d in 3..=6 {
        let rep = bracket_lorentz_invariance(d, 4, 20, SEED, 1e-8).map_err(|e| e.to_string())?;
        ensure(rep.all_passed(), || {
            let w: Vec<String> = rep.failures().map(|c| format!("{} {}", c.name, c.witness.clone().unwrap_or_default())).collect();
            format!("d = {d}: {}", w.join(", "))
        })?;
    }
    Ok("d = 3..6, 20 transformations each, tolerance 1e-8".into())
}

struct Criterion {
    id: usize,
    title: &'static str,
    budget: Duration,
    run: fn() -> Outcome,
}

fn main() {
    let secs = Duration::from_secs;
    let criteria = [
        Criterion { id: 1, title: "Dirac matrices match the printed fixtures", budget: secs(1), run: c1_dirac_fixtures },
        Criterion { id: 2, title: "conjugation fixtures and properties", budget: secs(5), run: c2_conjugation },
        Criterion { id: 3, title: "Clifford relations", budget: secs(5), run: c3_clifford },
        Criterion { id: 4, title: "kinematic sampling", budget: secs(30), run: c4_sampling },
        Criterion { id: 5, title: "bracket tensor invariants", budget: secs(120), run: c5_bracket_invariants },
        Criterion { id: 6, title: "three-particle vanishing", budget: secs(5), run: c6_three_particles },
        Criterion { id: 7, title: "relation families", budget: secs(60), run: c7_relations },
        Criterion { id: 8, title: "dimension table", budget: secs(1800), run: c8_table },
        Criterion { id: 9, title: "K2 dimensions", budget: secs(300), run: c9_k2 },
        Criterion { id: 10, title: "Mandelstam dimensions", budget: secs(120), run: c10_mandelstam },
        Criterion { id: 11, title: "spinor image", budget: secs(120), run: c11_spinor_image },
        Criterion { id: 12, title: "multilinear ranks and Tucker certificate", budget: secs(60), run: c12_multilinear },
        Criterion { id: 13, title: "Strassen bound", budget: secs(120), run: c13_strassen },
        Criterion { id: 14, title: "spinor-helicity product", budget: secs(30), run: c14_spinor_helicity },
        Criterion { id: 15, title: "numeric Lorentz invariance", budget: secs(30), run: c15_lorentz },
    ];
    let only: Option<Vec<usize>> =
        std::env::var("ACCEPTANCE_ONLY").ok().map(|s| s.split(',').filter_map(|x| x.trim().parse().ok()).collect());
    let mut failed = 0;
    for c in &criteria {
        if only.as_ref().is_some_and(|o| !o.contains(&c.id)) {
            continue;
        }
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(c.run)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panic: {}", msg.unwrap_or_default()))
        });
        let elapsed = start.elapsed();
        let over = elapsed > c.budget;
        let (tag, detail) = match (&outcome, over) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("over budget; {d}")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if tag == "FAIL" {
            failed += 1;
        }
        println!(
            "[{tag}] criterion {:>2}: {} ({:.2} s of {} s) {detail}",
            c.id,
            c.title,
            elapsed.as_secs_f64(),
            c.budget.as_secs()
        );
    }
    println!("acceptance: {failed} failing criteria");
    if failed > 0 && std::env::var("ACCEPTANCE_STRICT").is_ok_and(|v| v == "1") {
        std::process::exit(1);
    }
}
