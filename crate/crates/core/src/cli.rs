//! The `spinkin` command line.
//!
//! Every subcommand prints a human-readable summary and, with `--json`,
//! writes an artifact `{ "manifest": …, "result": … }`. Exit codes: 0 when
//! every check passes, 1 on a failed check or runtime error, 2 on a usage
//! error. The default seed is read from `SPINKIN_SEED` when set.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::analysis::dimension::DimensionOutcome;
use crate::analysis::invariants::run_suite;
use crate::analysis::{reproduce_table, variety_dimension, DimensionMode, Suite, TableReport, VarietyId};
use crate::brackets::{build_bracket_tensor, make_spinor_params, spinor_system, SpinorParams};
use crate::clifford::{build_dirac, momentum_dirac, verify_clifford};
use crate::conjugation::{blocks, build_conjugation, verify_conjugation};
use crate::error::Error;
use crate::kinematics::{constraint_residuals, sample_configuration, sample_isotropic_triple, substream, KinematicConfiguration, SamplerConfig};
use crate::linalg::ExactMatrix;
use crate::report::SuiteReport;
use crate::scalar::GaussianRational as Q;

pub const SEED_ENV: &str = "SPINKIN_SEED";
pub const DEFAULT_SEED: u64 = 1;

#[derive(Parser, Debug)]
#[command(name = "spinkin", version, about = "Exact spinor brackets and kinematic varieties")]
struct Cli {
    /// Master seed; defaults to $SPINKIN_SEED, then 1.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Record wall-clock time in the manifest (breaks byte-for-byte reproducibility).
    #[arg(long, global = true)]
    timing: bool,
    /// Write the JSON artifact here.
    #[arg(long, global = true)]
    json: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dirac matrices, optionally the momentum matrix P of a vector.
    Dirac(DiracArgs),
    /// Charge conjugation matrix, its blocks and its properties.
    Conjugation(DimArg),
    /// Sample a kinematic configuration with spinor parameters.
    Sample(SampleArgs),
    /// Bracket tensor (S, T_1, …, T_n) or single brackets.
    Brackets(BracketArgs),
    /// Run an invariant suite.
    Verify(VerifyArgs),
    /// Dimension of a kinematic variety by Jacobian rank.
    Dimension(DimensionArgs),
    /// Recompute the K3 dimension table.
    Table(TableArgs),
    /// Summarize saved verify artifacts.
    Report(ReportArgs),
}

#[derive(Args, Debug)]
struct DimArg {
    #[arg(long)]
    d: usize,
}

#[derive(Args, Debug)]
struct DiracArgs {
    #[arg(long)]
    d: usize,
    /// Comma-separated momentum entries, e.g. "1,1,0,0".
    #[arg(long, allow_hyphen_values = true)]
    momentum: Option<String>,
}

#[derive(Args, Debug)]
struct SampleArgs {
    #[arg(long)]
    d: usize,
    #[arg(long)]
    n: usize,
    /// Three momenta spanning a totally isotropic plane (n must be 3).
    #[arg(long)]
    isotropic: bool,
    /// Skip momentum conservation.
    #[arg(long)]
    no_conserve: bool,
}

#[derive(Args, Debug)]
struct BracketArgs {
    /// A sample artifact to read; otherwise a point is sampled from --d, --n and the seed.
    #[arg(long, conflicts_with_all = ["d", "n"])]
    input: Option<PathBuf>,
    #[arg(long, requires = "n")]
    d: Option<usize>,
    #[arg(long, requires = "d")]
    n: Option<usize>,
    /// Evaluate single words instead, e.g. --word 1,2 --word 1,3,2.
    #[arg(long)]
    word: Vec<String>,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum SuiteArg {
    All,
    Clifford,
    Brackets,
    Relations,
    Secant,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::All => Suite::All,
            SuiteArg::Clifford => Suite::Clifford,
            SuiteArg::Brackets => Suite::Brackets,
            SuiteArg::Relations => Suite::Relations,
            SuiteArg::Secant => Suite::Secant,
        }
    }
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long)]
    d: usize,
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value = "all")]
    suite: SuiteArg,
    #[arg(long, default_value_t = 3)]
    trials: usize,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum VarietyArg {
    K2,
    K3,
    Mandelstam,
    Spinor,
}

impl From<VarietyArg> for VarietyId {
    fn from(v: VarietyArg) -> Self {
        match v {
            VarietyArg::K2 => VarietyId::K2,
            VarietyArg::K3 => VarietyId::K3,
            VarietyArg::Mandelstam => VarietyId::Mandelstam,
            VarietyArg::Spinor => VarietyId::SpinorImage,
        }
    }
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum ModeArg {
    Exact,
    Float,
    Auto,
}

impl From<ModeArg> for DimensionMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Exact => DimensionMode::Exact,
            ModeArg::Float => DimensionMode::Float,
            ModeArg::Auto => DimensionMode::Auto,
        }
    }
}

#[derive(Args, Debug)]
struct DimensionArgs {
    #[arg(long, value_enum)]
    variety: VarietyArg,
    #[arg(long)]
    d: usize,
    /// Particle count (ignored for the spinor image).
    #[arg(long, default_value_t = 1)]
    n: usize,
    #[arg(long, value_enum, default_value = "auto")]
    mode: ModeArg,
    #[arg(long, default_value_t = 3)]
    trials: usize,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum TableName {
    PropDimensions,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[arg(long, value_enum)]
    reproduce: TableName,
    #[arg(long, default_value_t = 9)]
    dmax: usize,
    #[arg(long, default_value_t = 7)]
    nmax: usize,
    #[arg(long, value_enum, default_value = "auto")]
    mode: ModeArg,
    #[arg(long, default_value_t = 3)]
    trials: usize,
}

#[derive(Args, Debug)]
struct ReportArgs {
    /// Artifacts written by `verify --json`.
    files: Vec<PathBuf>,
}

/// Provenance embedded in every artifact.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub command: String,
    pub version: String,
    pub seed: u64,
    pub d: Option<usize>,
    pub n: Option<usize>,
    pub mode: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_seconds: Option<f64>,
    pub checks_passed: usize,
    pub checks_failed: usize,
}

struct Outcome {
    text: String,
    result: Value,
    d: Option<usize>,
    n: Option<usize>,
    mode: Option<String>,
    passed: usize,
    failed: usize,
}

impl Outcome {
    fn plain(text: String, result: Value, d: Option<usize>, n: Option<usize>) -> Self {
        Self { text, result, d, n, mode: None, passed: 0, failed: 0 }
    }

    fn from_report(text: String, rep: &SuiteReport, result: Value) -> Self {
        let passed = rep.passed_count();
        Self { text, result, d: rep.d, n: rep.n, mode: None, passed, failed: rep.checks.len() - passed }
    }
}

enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Precondition(_) | Error::OutOfRange { .. } | Error::Parse(_) | Error::DimensionMismatch(_) => Failure::Usage(e.to_string()),
            _ => Failure::Runtime(e.to_string()),
        }
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

fn matrix_text(m: &ExactMatrix) -> String {
    m.to_string()
}

fn parse_momentum(s: &str) -> Result<Vec<Q>, Failure> {
    s.split(',').map(|x| x.trim().parse::<Q>().map_err(Failure::from)).collect()
}

fn parse_word(s: &str) -> Result<Vec<usize>, Failure> {
    s.split(',').map(|x| x.trim().parse::<usize>().map_err(|e| Failure::Usage(format!("bad word {s:?}: {e}")))).collect()
}

/// Sample artifact body.
#[derive(Serialize, Deserialize)]
struct SampleBody {
    configuration: KinematicConfiguration,
    params: SpinorParams,
}

fn cmd_dirac(a: &DiracArgs) -> Result<Outcome, Failure> {
    let basis = build_dirac(a.d)?;
    let mut text = format!("d = {}, k = {}, size {}\npermutation {:?}\n", basis.d, basis.k, basis.size(), basis.permutation);
    for (i, g) in basis.gammas.iter().enumerate() {
        text += &format!("Γ{}:\n{}\n", i + 1, matrix_text(g));
    }
    let mut result = json!({ "d": basis.d, "k": basis.k, "eta": basis.eta, "permutation": basis.permutation, "gammas": basis.gammas });
    let rep = verify_clifford(&basis);
    if let Some(m) = &a.momentum {
        let p = parse_momentum(m)?;
        let pm = momentum_dirac(&basis, &p)?;
        text += &format!("P:\n{}\n", matrix_text(&pm));
        result["momentum"] = serde_json::to_value(&p)?;
        result["P"] = serde_json::to_value(&pm)?;
    }
    text += &rep.to_string();
    result["checks"] = serde_json::to_value(&rep)?;
    Ok(Outcome::from_report(text, &rep, result))
}

fn cmd_conjugation(a: &DimArg, seed: u64) -> Result<Outcome, Failure> {
    let cm = build_conjugation(a.d)?;
    let basis = build_dirac(a.d)?;
    let rep = verify_conjugation(&cm, &basis, 10, &mut substream(seed, 0));
    let mut text = format!(
        "C for d = {}:\n{}\nsymmetry {}, C² = {}, CP = {}PᵀC\n",
        a.d,
        matrix_text(&cm.matrix),
        cm.symmetry_class.label(),
        cm.square_label(),
        if cm.intertwining_sign() > 0 { "+" } else { "−" }
    );
    let mut result = json!({
        "d": a.d,
        "C": cm.matrix,
        "symmetry": cm.symmetry_class.label(),
        "square": cm.square_label(),
        "intertwining_sign": cm.intertwining_sign(),
    });
    if a.d % 2 == 0 {
        let (c1, c2) = blocks(&cm)?;
        text += &format!("C′:\n{}\nC″:\n{}\n", matrix_text(&c1), matrix_text(&c2));
        result["C_prime"] = serde_json::to_value(&c1)?;
        result["C_double_prime"] = serde_json::to_value(&c2)?;
    }
    text += &rep.to_string();
    result["checks"] = serde_json::to_value(&rep)?;
    let mut out = Outcome::from_report(text, &rep, result);
    out.d = Some(a.d);
    Ok(out)
}

fn sample(d: usize, n: usize, isotropic: bool, conserve: bool, seed: u64) -> Result<SampleBody, Failure> {
    if n == 3 && !isotropic {
        return Err(Failure::Usage("n = 3 needs --isotropic: three conserving null momenta span an isotropic plane".into()));
    }
    if isotropic && n != 3 {
        return Err(Failure::Usage(format!("--isotropic samples exactly three momenta, got n = {n}")));
    }
    let cfg = SamplerConfig::default();
    let mut rng = substream(seed, 0);
    let configuration = if isotropic { sample_isotropic_triple(d, &mut rng, &cfg)? } else { sample_configuration(d, n, conserve, &mut rng, &cfg)? };
    let params = make_spinor_params(d / 2, n, &mut rng, &cfg);
    Ok(SampleBody { configuration, params })
}

fn cmd_sample(a: &SampleArgs, seed: u64) -> Result<Outcome, Failure> {
    if a.d < 3 {
        return Err(Failure::Usage(format!("sampling needs d >= 3, got {}", a.d)));
    }
    let body = sample(a.d, a.n, a.isotropic, !a.no_conserve, seed)?;
    let res = constraint_residuals(&body.configuration);
    let mut text = String::new();
    for (i, m) in body.configuration.momenta.iter().enumerate() {
        let entries: Vec<String> = m.p.iter().map(Q::to_string).collect();
        text += &format!("p{} = ({})\n", i + 1, entries.join(", "));
    }
    let ok = if body.configuration.conserves { res.all_zero() } else { res.null_all_zero() };
    text += &format!("constraints {}\n", if ok { "satisfied exactly" } else { "VIOLATED" });
    let result = serde_json::to_value(&body)?;
    let mut out = Outcome::plain(text, result, Some(a.d), Some(a.n));
    (out.passed, out.failed) = if ok { (1, 0) } else { (0, 1) };
    Ok(out)
}

fn cmd_brackets(a: &BracketArgs, seed: u64) -> Result<Outcome, Failure> {
    let body = match (&a.input, a.d, a.n) {
        (Some(path), _, _) => {
            let v: Value = serde_json::from_str(&std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?)?;
            let inner = v.get("result").cloned().unwrap_or(v);
            serde_json::from_value::<SampleBody>(inner)?
        }
        (None, Some(d), Some(n)) => sample(d, n, n == 3, true, seed)?,
        _ => return Err(Failure::Usage("give --input or both --d and --n".into())),
    };
    let (cfg, params) = (&body.configuration, &body.params);
    if !a.word.is_empty() {
        let sys = spinor_system(cfg, params)?;
        let mut text = String::new();
        let mut values = BTreeMap::new();
        for w in &a.word {
            let word = parse_word(w)?;
            let v = sys.bracket(&word)?;
            text += &format!("⟨{}⟩ = {v}\n", word.iter().map(usize::to_string).collect::<Vec<_>>().join(" "));
            values.insert(w.clone(), v);
        }
        return Ok(Outcome::plain(text, json!({ "brackets": values }), Some(cfg.d), Some(cfg.n)));
    }
    let bt = build_bracket_tensor(cfg, params)?;
    let mut text = format!("S ({}):\n{}\n", bt.symmetry.s, matrix_text(&bt.s));
    for (j, t) in bt.t.iter().enumerate() {
        text += &format!("T{} ({}):\n{}\n", j + 1, bt.symmetry.t, matrix_text(t));
    }
    Ok(Outcome::plain(text, serde_json::to_value(&bt)?, Some(cfg.d), Some(cfg.n)))
}

fn cmd_verify(a: &VerifyArgs, seed: u64) -> Result<Outcome, Failure> {
    let rep = run_suite(a.suite.into(), a.d, a.n, a.trials, seed)?;
    Ok(Outcome::from_report(rep.to_string(), &rep, serde_json::to_value(&rep)?))
}

fn cmd_dimension(a: &DimensionArgs, seed: u64) -> Result<Outcome, Failure> {
    let out: DimensionOutcome = variety_dimension(a.variety.into(), a.d, a.n, a.trials, seed, a.mode.into())?;
    let text = format!("{}\n", out.dim);
    let mut o = Outcome::plain(text, serde_json::to_value(&out)?, Some(out.d), Some(out.n));
    o.mode = Some(format!("{:?}", out.mode).to_lowercase());
    Ok(o)
}

fn cmd_table(a: &TableArgs, seed: u64) -> Result<Outcome, Failure> {
    let TableName::PropDimensions = a.reproduce;
    if a.dmax < 4 || a.nmax < 4 {
        return Err(Failure::Usage("the table starts at d = 4, n = 4".into()));
    }
    let rep: TableReport = reproduce_table(a.dmax, a.nmax, a.trials, seed, a.mode.into())?;
    let failed = rep.cells.iter().filter(|c| !(c.agrees || c.flagged)).count();
    let mut o = Outcome::plain(rep.to_string(), serde_json::to_value(&rep)?, Some(a.dmax), Some(a.nmax));
    o.passed = rep.cells.len() - failed;
    o.failed = failed;
    o.mode = Some(format!("{:?}", DimensionMode::from(a.mode)).to_lowercase());
    Ok(o)
}

/// Groups checks by family (the name before the first '/') and lays out a
/// pass/fail grid over (d, n).
pub fn summarize(reports: &[SuiteReport]) -> (String, Value, usize, usize) {
    let mut families: BTreeMap<String, BTreeMap<(usize, usize), (usize, usize)>> = BTreeMap::new();
    let mut points = std::collections::BTreeSet::new();
    let (mut passed, mut failed) = (0, 0);
    for rep in reports {
        let key = (rep.d.unwrap_or(0), rep.n.unwrap_or(0));
        points.insert(key);
        for c in &rep.checks {
            let family = c.name.split('/').next().unwrap_or(&c.name).to_string();
            let cell = families.entry(family).or_default().entry(key).or_default();
            if c.passed {
                cell.0 += 1;
                passed += 1;
            } else {
                cell.1 += 1;
                failed += 1;
            }
        }
    }
    let mut text = String::new();
    if !points.is_empty() {
        text += &format!("{:<16}", "family");
        for (d, n) in &points {
            text += &format!("{:>10}", format!("d{d} n{n}"));
        }
        text += "\n";
        for (family, cells) in &families {
            text += &format!("{family:<16}");
            for p in &points {
                let s = match cells.get(p) {
                    Some((_, 0)) => "pass",
                    Some(_) => "FAIL",
                    None => "-",
                };
                text += &format!("{s:>10}");
            }
            text += "\n";
        }
    }
    text += &format!("{passed} passed, {failed} failed across {} report(s)\n", reports.len());
    let grid: BTreeMap<String, BTreeMap<String, Value>> = families
        .iter()
        .map(|(f, cells)| (f.clone(), cells.iter().map(|((d, n), (p, x))| (format!("d{d}_n{n}"), json!({ "passed": p, "failed": x }))).collect()))
        .collect();
    (text, json!({ "families": grid, "passed": passed, "failed": failed, "reports": reports.len() }), passed, failed)
}

fn cmd_report(a: &ReportArgs) -> Result<Outcome, Failure> {
    let mut reports = vec![];
    for path in &a.files {
        let raw = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        let v: Value = serde_json::from_str(&raw)?;
        let inner = v.get("result").cloned().unwrap_or(v);
        reports.push(serde_json::from_value::<SuiteReport>(inner).map_err(|e| Failure::Usage(format!("{}: not a suite report: {e}", path.display())))?);
    }
    let (text, result, passed, failed) = summarize(&reports);
    let mut o = Outcome::plain(text, result, None, None);
    (o.passed, o.failed) = (passed, failed);
    Ok(o)
}

fn seed_from_env() -> Result<u64, Failure> {
    match std::env::var(SEED_ENV) {
        Ok(s) => s.trim().parse().map_err(|_| Failure::Usage(format!("{SEED_ENV}={s:?} is not an unsigned integer"))),
        Err(_) => Ok(DEFAULT_SEED),
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Dirac(_) => "dirac",
        Command::Conjugation(_) => "conjugation",
        Command::Sample(_) => "sample",
        Command::Brackets(_) => "brackets",
        Command::Verify(_) => "verify",
        Command::Dimension(_) => "dimension",
        Command::Table(_) => "table",
        Command::Report(_) => "report",
    }
}

fn execute(cli: &Cli) -> Result<(Outcome, RunManifest), Failure> {
    let seed = match cli.seed {
        Some(s) => s,
        None => seed_from_env()?,
    };
    let start = Instant::now();
    let outcome = match &cli.command {
        Command::Dirac(a) => cmd_dirac(a)?,
        Command::Conjugation(a) => cmd_conjugation(a, seed)?,
        Command::Sample(a) => cmd_sample(a, seed)?,
        Command::Brackets(a) => cmd_brackets(a, seed)?,
        Command::Verify(a) => cmd_verify(a, seed)?,
        Command::Dimension(a) => cmd_dimension(a, seed)?,
        Command::Table(a) => cmd_table(a, seed)?,
        Command::Report(a) => cmd_report(a)?,
    };
    let manifest = RunManifest {
        command: command_name(&cli.command).to_string(),
        version: env!("CARGO_PKG_VERSION").to_string(),
        seed,
        d: outcome.d,
        n: outcome.n,
        mode: outcome.mode.clone(),
        timing_seconds: cli.timing.then(|| start.elapsed().as_secs_f64()),
        checks_passed: outcome.passed,
        checks_failed: outcome.failed,
    };
    Ok((outcome, manifest))
}

fn emit(cli: &Cli, outcome: &Outcome, manifest: &RunManifest, out: &mut dyn Write) -> Result<i32, Failure> {
    let io = |e: std::io::Error| Failure::Runtime(e.to_string());
    write!(out, "{}", outcome.text).map_err(io)?;
    if !outcome.text.ends_with('\n') {
        writeln!(out).map_err(io)?;
    }
    if let Some(t) = manifest.timing_seconds {
        writeln!(out, "elapsed {t:.3} s").map_err(io)?;
    }
    if let Some(path) = &cli.json {
        let artifact = json!({ "manifest": manifest, "result": outcome.result });
        std::fs::write(path, serde_json::to_string_pretty(&artifact)? + "\n").map_err(|e| Failure::Runtime(format!("{}: {e}", path.display())))?;
    }
    Ok(if outcome.failed == 0 { 0 } else { 1 })
}

/// Runs the CLI on `args` (program name first), writing the summary to
/// `out` and diagnostics to stderr. Returns the exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.jobs.unwrap_or(0)).build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let done = pool.install(|| execute(&cli)).and_then(|(o, m)| emit(&cli, &o, &m, out));
    match done {
        Ok(code) => code,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            2
        }
        Err(Failure::Runtime(m)) => {
            eprintln!("error: {m}");
            1
        }
    }
}

/// Entry point for the binary.
pub fn run() -> i32 {
    run_with(std::env::args_os(), &mut std::io::stdout().lock())
}
