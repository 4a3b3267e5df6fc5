//! Command-line front end: verification reports and CSV exports.
//!
//! Exit codes: `0` every check passed, `1` operational error, `2` at least
//! one check failed. Complex numbers are written as `[re,im]`.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::frobenius::{self, Prepotential};
use crate::fuchsian::{painleve_y, pvi_residuals, reduce_a, reduce_b, PainleveSample, PainleveVariant};
use crate::hurwitz_examples::{self as hx, a3, elliptic, Example};
use crate::lift4d::{self, A3Lift};
use crate::C64;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_FAIL: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("prepotential: {0}")]
    Frobenius(#[from] frobenius::FrobeniusError),
    #[error("painleve: {0}")]
    Fuchsian(#[from] crate::fuchsian::FuchsianError),
    #[error("lift: {0}")]
    Lift(#[from] lift4d::LiftError),
    #[error("example: {0}")]
    Hurwitz(#[from] hx::HurwitzError),
}

type Result<T> = std::result::Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(name = "trifrob", version, about = "Tri-hamiltonian Frobenius manifolds: verification and lifts")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// WDVV, unit, homogeneity, tri-hamiltonian and flat-pencil checks of a prepotential.
    VerifyPrepotential(VerifyArgs),
    /// Lift the A3 example to four dimensions on a chart grid and verify it.
    Lift(LiftArgs),
    /// Extract y(s) from the A3 reduced systems and evaluate Painleve VI residuals.
    Painleve(PainleveArgs),
    /// Genus-one checks on sampled or supplied four-point charts.
    Elliptic(EllipticArgs),
}

#[derive(Debug, Args)]
struct Common {
    /// Output path (file, or directory for `lift`); stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Tolerance override: `VALUE` for every check or `NAME=VALUE` for one.
    #[arg(long, num_args = 1..)]
    tol: Vec<String>,
    /// Random seed.
    #[arg(long, default_value_t = 42)]
    seed: u64,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Bundled prepotential: pavlyk, pavlyk-perturbed, nonsplit, cubic.
    #[arg(long)]
    example: Option<String>,
    /// Prepotential document (JSON).
    #[arg(long)]
    input: Option<PathBuf>,
    /// Number of sample points.
    #[arg(long)]
    charts: Option<usize>,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Args)]
struct LiftArgs {
    #[arg(long, default_value = "a3")]
    example: String,
    /// Chart list (CSV with columns v1..v4); replaces the grid.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Grid specs `NAME=START:END:COUNT` for v1..v4.
    #[arg(long, num_args = 1..)]
    grid: Vec<String>,
    /// Sign of the lift (+1 or -1).
    #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
    sign: i8,
    /// Marked column (1-based) used to reconstruct the product.
    #[arg(long, default_value_t = 1)]
    marked_column: usize,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Args)]
struct PainleveArgs {
    #[arg(long, default_value = "a3")]
    example: String,
    /// pvimu, okamoto or both.
    #[arg(long, default_value = "both")]
    variant: String,
    /// Grid spec `s=START:END:COUNT`.
    #[arg(long, num_args = 1..)]
    grid: Vec<String>,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Args)]
struct EllipticArgs {
    #[arg(long, default_value = "elliptic4")]
    example: String,
    /// Number of random charts.
    #[arg(long, default_value_t = 5)]
    charts: usize,
    /// Chart list (CSV with columns v1..v4).
    #[arg(long)]
    input: Option<PathBuf>,
    #[command(flatten)]
    common: Common,
}

/// Parses `args` (including the program name) and runs; returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_PASS };
            let _ = e.print();
            return code;
        }
    };
    match run(cli.command) {
        Ok(true) => EXIT_PASS,
        Ok(false) => EXIT_FAIL,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_ERROR
        }
    }
}

fn run(cmd: Command) -> Result<bool> {
    match cmd {
        Command::VerifyPrepotential(a) => cmd_verify_prepotential(&a),
        Command::Lift(a) => cmd_lift(&a),
        Command::Painleve(a) => cmd_painleve(&a),
        Command::Elliptic(a) => cmd_elliptic(&a),
    }
}

/// Named tolerances with command-specific defaults.
#[derive(Debug, Clone)]
pub struct Tolerances(BTreeMap<&'static str, f64>);

impl Tolerances {
    pub fn new(defaults: &[(&'static str, f64)], overrides: &[String]) -> Result<Self> {
        let mut map: BTreeMap<&'static str, f64> = defaults.iter().copied().collect();
        for o in overrides {
            let (name, value) = match o.split_once('=') {
                Some((n, v)) => (Some(n.trim()), v),
                None => (None, o.as_str()),
            };
            let v: f64 = value.trim().parse().map_err(|_| CliError::Usage(format!("bad tolerance {o:?}")))?;
            if !(v > 0.0) || !v.is_finite() {
                return Err(CliError::Usage(format!("tolerance must be positive: {o:?}")));
            }
            match name {
                None => map.values_mut().for_each(|x| *x = v),
                Some(n) => {
                    let key = map
                        .keys()
                        .copied()
                        .find(|k| *k == n)
                        .ok_or_else(|| CliError::Usage(format!("unknown tolerance {n:?}; known: {:?}", map.keys().collect::<Vec<_>>())))?;
                    map.insert(key, v);
                }
            }
        }
        Ok(Tolerances(map))
    }

    pub fn get(&self, name: &str) -> f64 {
        self.0[name]
    }
}

/// A grid spec `NAME=START:END:COUNT`.
#[derive(Debug, Clone, PartialEq)]
pub struct GridSpec {
    pub name: String,
    pub values: Vec<f64>,
}

pub fn parse_grid(spec: &str) -> Result<GridSpec> {
    let bad = || CliError::Usage(format!("grid spec {spec:?} is not NAME=START:END:COUNT"));
    let (name, range) = spec.split_once('=').ok_or_else(bad)?;
    let parts: Vec<&str> = range.split(':').collect();
    if parts.len() != 3 {
        return Err(bad());
    }
    let start: f64 = parts[0].trim().parse().map_err(|_| bad())?;
    let end: f64 = parts[1].trim().parse().map_err(|_| bad())?;
    let count: usize = parts[2].trim().parse().map_err(|_| bad())?;
    if count == 0 || (count > 1 && start == end) || !start.is_finite() || !end.is_finite() {
        return Err(CliError::Usage(format!("grid spec {spec:?} is degenerate")));
    }
    let values = if count == 1 {
        vec![start]
    } else {
        (0..count).map(|k| start + (end - start) * k as f64 / (count - 1) as f64).collect()
    };
    Ok(GridSpec { name: name.trim().to_string(), values })
}

fn fmt_c(z: C64) -> String {
    format!("[{:e},{:e}]", z.re, z.im)
}

/// Parses `[re,im]` or a plain real number.
pub fn parse_complex(s: &str) -> Option<C64> {
    let s = s.trim();
    if let Some(inner) = s.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
        let (a, b) = inner.split_once(',')?;
        return Some(C64::new(a.trim().parse().ok()?, b.trim().parse().ok()?));
    }
    s.parse::<f64>().ok().map(|x| C64::new(x, 0.0))
}

fn read_charts(path: &Path) -> Result<Vec<[C64; 4]>> {
    let mut rd = csv::Reader::from_path(path)?;
    let headers = rd.headers()?.clone();
    let idx: Vec<usize> = ["v1", "v2", "v3", "v4"]
        .iter()
        .map(|h| {
            headers
                .iter()
                .position(|x| x.trim() == *h)
                .ok_or_else(|| CliError::Usage(format!("{}: missing column {h}", path.display())))
        })
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    for (line, rec) in rd.records().enumerate() {
        let rec = rec?;
        let mut v = [C64::new(0.0, 0.0); 4];
        for (k, &i) in idx.iter().enumerate() {
            v[k] = rec
                .get(i)
                .and_then(parse_complex)
                .ok_or_else(|| CliError::Usage(format!("{}: bad value on data row {}", path.display(), line + 1)))?;
        }
        out.push(v);
    }
    Ok(out)
}

/// Accumulates check lines and the final summary.
#[derive(Debug, Default)]
struct Report {
    text: String,
    pass: usize,
    fail: usize,
}

impl Report {
    fn info(&mut self, line: impl AsRef<str>) {
        let _ = writeln!(self.text, "info {}", line.as_ref());
    }

    fn check(&mut self, name: &str, value: f64, tol: f64) -> bool {
        let ok = value.is_finite() && value < tol;
        self.record(name, value, tol, ok)
    }

    fn record(&mut self, name: &str, value: f64, tol: f64, ok: bool) -> bool {
        if ok {
            self.pass += 1;
        } else {
            self.fail += 1;
        }
        let status = if ok { "PASS" } else { "FAIL" };
        let _ = writeln!(self.text, "check name={name} value={value:.3e} tol={tol:.1e} status={status}");
        ok
    }

    fn finish(mut self, out: Option<&Path>) -> Result<bool> {
        let ok = self.fail == 0;
        let status = if ok { "PASS" } else { "FAIL" };
        let _ = writeln!(self.text, "summary pass={} fail={} status={status}", self.pass, self.fail);
        emit(out, &self.text)?;
        Ok(ok)
    }

    /// Writes the report to `path` and echoes it on stdout.
    fn finish_tee(self, path: &Path) -> Result<bool> {
        let ok = self.fail == 0;
        let status = if ok { "PASS" } else { "FAIL" };
        let text = format!("{}summary pass={} fail={} status={status}\n", self.text, self.pass, self.fail);
        emit(Some(path), &text)?;
        print!("{text}");
        Ok(ok)
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|source| CliError::Io { path: p.to_path_buf(), source }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load_prepotential(args: &VerifyArgs) -> Result<(String, Prepotential)> {
    if let Some(path) = &args.input {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.clone(), source })?;
        return Ok((path.display().to_string(), Prepotential::from_json(&text)?));
    }
    let name = args.example.clone().unwrap_or_else(|| "pavlyk".into());
    let f = match name.as_str() {
        "pavlyk" => hx::pavlyk_prepotential(),
        // the t4^5 coefficient changed by one percent
        "pavlyk-perturbed" => hx::pavlyk_prepotential().with_scaled_monomial(5, 1.01),
        "nonsplit" => hx::nonsplit_prepotential(),
        "cubic" => hx::trivial_cubic(num_rational::Rational64::new(1, 2)),
        other => {
            return Err(CliError::Usage(format!(
                "unknown prepotential {other:?}; expected pavlyk, pavlyk-perturbed, nonsplit, cubic"
            )))
        }
    };
    Ok((name, f))
}

/// Finite-difference step for the curvature of the third metric.
pub const CURVATURE_STEP: f64 = 2e-4;

pub const VERIFY_TOLERANCES: [(&str, f64); 8] = [
    ("wdvv", 1e-9),
    ("unit", 1e-12),
    ("homogeneity", 1e-10),
    ("pencil_d1", 1e-6),
    ("pencil_d2", 1e-6),
    ("pencil_u", 1e-6),
    ("curvature", 1e-6),
    ("shift", 1e-9),
];

fn cmd_verify_prepotential(args: &VerifyArgs) -> Result<bool> {
    let tol = Tolerances::new(&VERIFY_TOLERANCES, &args.common.tol)?;
    let (name, f) = load_prepotential(args)?;
    let mut rng = ChaCha8Rng::seed_from_u64(args.common.seed);
    let count = args.charts.unwrap_or(100);
    let samples = frobenius::sample_points(&f, &mut rng, count);
    if samples.is_empty() {
        return Err(CliError::Usage("no admissible sample points found".into()));
    }
    let mut rep = Report::default();
    rep.info(format!("prepotential={name} dim={} charge={} samples={}", f.dim(), f.charge(), samples.len()));
    for m in f.term_degree_mismatches() {
        rep.info(format!("degree-mismatch {m}"));
    }

    let (mut wdvv, mut unit, mut hom) = (0.0f64, 0.0f64, 0.0f64);
    for t in &samples {
        let p = frobenius::evaluate_point(&f, t)?;
        wdvv = wdvv.max(frobenius::wdvv_residual(&p));
        unit = unit.max(frobenius::check_unit(&p));
        hom = hom.max(frobenius::check_quasihomogeneity(&f, 2.0, t)?);
    }
    rep.check("wdvv", wdvv, tol.get("wdvv"));
    rep.check("unit", unit, tol.get("unit"));
    rep.check("homogeneity", hom, tol.get("homogeneity"));

    match frobenius::check_trihamiltonian(&f) {
        Ok(th) => {
            let mu_hat: Vec<String> = th.mu_hat.iter().map(|m| m.to_string()).collect();
            rep.info(format!("mu={} mu_hat=[{}]", th.mu, mu_hat.join(",")));
            rep.record("trihamiltonian", if th.is_trihamiltonian { 0.0 } else { 1.0 }, 0.5, th.is_trihamiltonian);
        }
        Err(e) => {
            rep.info(format!("trihamiltonian: {e}"));
            rep.record("trihamiltonian", 1.0, 0.5, false);
        }
    }

    let pencil_points = &samples[..samples.len().min(20)];
    let (mut d1, mut d2, mut du, mut curv, mut shift) = (0.0f64, 0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for t in pencil_points {
        let r = frobenius::check_flat_pencil(&f, t)?;
        d1 = d1.max(r.d1_eta_tilde);
        d2 = d2.max(r.d2_eta_tilde);
        du = du.max(r.d1_u);
        curv = curv.max(frobenius::third_metric_curvature(&f, t, CURVATURE_STEP)?.max_abs());
        shift = shift.max(frobenius::pencil_shift_residual(&f, t, 0.1)?);
    }
    rep.check("pencil_d1", d1, tol.get("pencil_d1"));
    rep.check("pencil_d2", d2, tol.get("pencil_d2"));
    rep.check("pencil_u", du, tol.get("pencil_u"));
    rep.check("curvature", curv, tol.get("curvature"));
    rep.check("shift", shift, tol.get("shift"));
    rep.finish(args.common.out.as_deref())
}

pub const LIFT_TOLERANCES: [(&str, f64); 5] =
    [("linear", 1e-6), ("e_tilde", 1e-6), ("gram", 1e-8), ("wdvv", 1e-6), ("closure", 1e-6)];

fn lift_charts(args: &LiftArgs) -> Result<Vec<[C64; 4]>> {
    if let Some(p) = &args.input {
        return read_charts(p);
    }
    let mut axes: Vec<Vec<f64>> = vec![vec![0.0], vec![1.0], vec![2.1], vec![3.3]];
    for g in &args.grid {
        let spec = parse_grid(g)?;
        let k = match spec.name.as_str() {
            "v1" => 0,
            "v2" => 1,
            "v3" => 2,
            "v4" => 3,
            other => return Err(CliError::Usage(format!("unknown grid axis {other:?}; expected v1..v4"))),
        };
        axes[k] = spec.values;
    }
    let mut out = Vec::new();
    for &a in &axes[0] {
        for &b in &axes[1] {
            for &c in &axes[2] {
                for &d in &axes[3] {
                    out.push([a, b, c, d].map(|x| C64::new(x, 0.0)));
                }
            }
        }
    }
    Ok(out)
}

fn create_csv(dir: &Path, name: &str) -> Result<csv::Writer<std::fs::File>> {
    let path = dir.join(name);
    Ok(csv::Writer::from_path(path)?)
}

fn cmd_lift(args: &LiftArgs) -> Result<bool> {
    let example: Example = args.example.parse()?;
    if example != Example::A3 {
        return Err(CliError::Usage(format!(
            "lift needs closed-form solutions of the 2x2 system, available for a3 only (got {})",
            example.name()
        )));
    }
    if args.sign != 1 && args.sign != -1 {
        return Err(CliError::Usage(format!("--sign must be 1 or -1, got {}", args.sign)));
    }
    if args.marked_column == 0 || args.marked_column > 4 {
        return Err(CliError::Usage("--marked-column must be in 1..=4".into()));
    }
    let marked = args.marked_column - 1;
    let tol = Tolerances::new(&LIFT_TOLERANCES, &args.common.tol)?;
    let charts = lift_charts(args)?;
    let dir = args.common.out.clone().unwrap_or_else(|| PathBuf::from("lift_out"));
    std::fs::create_dir_all(&dir).map_err(|source| CliError::Io { path: dir.clone(), source })?;

    let mut res = create_csv(&dir, "residuals.csv")?;
    res.write_record(["chart", "v1", "v2", "v3", "v4", "s", "eps", "linear", "e_tilde", "kappa", "gram_off", "wdvv", "closure"])?;
    let mut psi_csv = create_csv(&dir, "psi_hat.csv")?;
    psi_csv.write_record(["chart", "row", "col", "value"])?;
    let mut c_csv = create_csv(&dir, "c_tensor.csv")?;
    c_csv.write_record(["chart", "a", "b", "c", "value"])?;

    let mut rep = Report::default();
    rep.info(format!("example=a3 charts={} sign={} marked_column={}", charts.len(), args.sign, args.marked_column));
    let mut worst = [0.0f64; 5];
    for (k, v) in charts.iter().enumerate() {
        let lift = A3Lift::new(v, args.sign, C64::new(2.0, 0.0))?;
        let p = lift.evaluate(v)?;
        let frame = |u: &[C64]| lift.evaluate(&[u[0], u[1], u[2], u[3]]).map(|q| q.psi_hat);
        let linear = lift4d::check_linear_system(&frame, &p.w, v, 1e-5)?;
        let e_tilde = lift4d::e_tilde_residual(&frame, &p.w, v, 1e-5)?;
        let (kappa, off) = lift4d::antidiagonal_pattern(&lift4d::gram(&p.psi_hat));
        let rec = lift4d::reconstruct(&p.psi_hat, marked)?;
        let wdvv = frobenius::wdvv_residual_tensor(&rec.c, &rec.eta)?;
        let closure = lift4d::closure_residual(&frame, v, marked, 1e-5)?;
        for (w, x) in worst.iter_mut().zip([linear, e_tilde, off, wdvv, closure]) {
            *w = w.max(x);
        }
        let mut row = vec![k.to_string()];
        row.extend(v.iter().map(|z| fmt_c(*z)));
        row.extend([fmt_c(p.params.s), fmt_c(p.params.eps)]);
        row.extend([linear, e_tilde].map(|x| format!("{x:e}")));
        row.push(fmt_c(kappa));
        row.extend([off, wdvv, closure].map(|x| format!("{x:e}")));
        res.write_record(&row)?;
        for i in 0..4 {
            for j in 0..4 {
                psi_csv.write_record([k.to_string(), (i + 1).to_string(), (j + 1).to_string(), fmt_c(p.psi_hat[(i, j)])])?;
            }
        }
        for a in 0..4 {
            for b in a..4 {
                for c in b..4 {
                    c_csv.write_record([
                        k.to_string(),
                        (a + 1).to_string(),
                        (b + 1).to_string(),
                        (c + 1).to_string(),
                        fmt_c(rec.c.get(a, b, c)),
                    ])?;
                }
            }
        }
    }
    res.flush().map_err(|source| CliError::Io { path: dir.join("residuals.csv"), source })?;
    psi_csv.flush().map_err(|source| CliError::Io { path: dir.join("psi_hat.csv"), source })?;
    c_csv.flush().map_err(|source| CliError::Io { path: dir.join("c_tensor.csv"), source })?;
    for (name, value) in ["linear", "e_tilde", "gram", "wdvv", "closure"].iter().zip(worst) {
        rep.check(name, value, tol.get(name));
    }
    rep.finish_tee(&dir.join("report.txt")).inspect(|_| eprintln!("wrote {}", dir.display()))
}

fn parse_variant(s: &str) -> Result<Vec<PainleveVariant>> {
    match s {
        "pvimu" => Ok(vec![PainleveVariant::PviMu]),
        "okamoto" => Ok(vec![PainleveVariant::Okamoto]),
        "both" => Ok(vec![PainleveVariant::PviMu, PainleveVariant::Okamoto]),
        other => Err(CliError::Usage(format!("unknown variant {other:?}; expected pvimu, okamoto, both"))),
    }
}

/// `y(s)` from the kind-A (`PviMu`) or kind-B (`Okamoto`) system of the A3 example.
pub fn a3_painleve_curve(grid: &[C64], variant: PainleveVariant) -> std::result::Result<PainleveSample, hx::HurwitzError> {
    let mu = C64::new(a3::A3_MU, 0.0);
    let mut guess = C64::new(2.0, 0.0);
    let mut ys = Vec::with_capacity(grid.len());
    for &s in grid {
        let t = a3::t_of_s(s, guess)?;
        guess = t;
        let phi = a3::a3_phi(t)?;
        let sys = match variant {
            PainleveVariant::PviMu => reduce_a(&phi, mu, s)?,
            PainleveVariant::Okamoto => reduce_b(&phi, mu, s)?,
        };
        ys.push(painleve_y(&sys)?);
    }
    Ok(PainleveSample { s: grid.to_vec(), y: ys })
}

/// Fixed spectral point for the isomonodromy check.
const ISO_EPS: C64 = C64::new(0.3, 0.7);

/// Worst isomonodromy residual over a few grid points. With `frozen`, the
/// solution is held at its value at the first point (a negative control).
fn a3_isomonodromy_check(grid: &[C64], frozen: bool) -> Result<f64> {
    let picks: Vec<C64> = (0..5).map(|k| grid[k * (grid.len() - 1) / 4]).collect();
    let t_first = a3::t_of_s(picks[0], C64::new(2.0, 0.0))?;
    let frozen_chi = a3::a3_chi_checked(t_first, ISO_EPS, 1e-6)?.chi;
    let mut worst: f64 = 0.0;
    for s in picks {
        let t0 = a3::t_of_s(s, t_first)?;
        let reference = a3::a3_chi_checked(t0, ISO_EPS, 1e-6)?.roots;
        let family = |z: C64| {
            a3::a3_isomonodromic_pair(z, ISO_EPS, t0, &reference)
                .map(|(m3, chi)| (m3, if frozen { frozen_chi.clone() } else { chi }))
                .map_err(|e| crate::numkit::NumError::NonFinite(format!(" in isomonodromic family: {e}")))
        };
        worst = worst.max(crate::fuchsian::isomonodromy_residual(family, s, ISO_EPS, 1e-5)?);
    }
    Ok(worst)
}

fn cmd_painleve(args: &PainleveArgs) -> Result<bool> {
    // `a3-frozen` keeps the 2x2 solution fixed in s: the isomonodromy check must fail.
    let frozen = args.example == "a3-frozen";
    let example: Example = if frozen { Example::A3 } else { args.example.parse()? };
    if example != Example::A3 {
        return Err(CliError::Usage(format!("painleve is available for a3 and a3-frozen only (got {})", example.name())));
    }
    let variants = parse_variant(&args.variant)?;
    let tol = Tolerances::new(&[("pvi", 1e-4), ("isomonodromy", 1e-6)], &args.common.tol)?;
    let mut grid = parse_grid("s=1.2:2.0:801")?;
    for g in &args.grid {
        let spec = parse_grid(g)?;
        if spec.name != "s" {
            return Err(CliError::Usage(format!("unknown grid axis {:?}; expected s", spec.name)));
        }
        grid = spec;
    }
    let s: Vec<C64> = grid.values.iter().map(|x| C64::new(*x, 0.0)).collect();
    let mu = C64::new(a3::A3_MU, 0.0);

    let mut columns: Vec<(PainleveVariant, PainleveSample, Vec<f64>)> = Vec::new();
    for v in &variants {
        let sample = a3_painleve_curve(&s, *v)?;
        let res = pvi_residuals(&sample, mu, *v)?;
        columns.push((*v, sample, res));
    }

    let mut wtr = match &args.common.out {
        Some(p) => csv::Writer::from_writer(Box::new(
            std::fs::File::create(p).map_err(|source| CliError::Io { path: p.clone(), source })?,
        ) as Box<dyn std::io::Write>),
        None => csv::Writer::from_writer(Box::new(std::io::stdout()) as Box<dyn std::io::Write>),
    };
    let mut header = vec!["s".to_string()];
    for (v, _, _) in &columns {
        let tag = match v {
            PainleveVariant::PviMu => "pvimu",
            PainleveVariant::Okamoto => "okamoto",
        };
        header.push(format!("y_{tag}"));
        header.push(format!("residual_{tag}"));
    }
    wtr.write_record(&header)?;
    for k in 0..s.len() {
        let mut row = vec![fmt_c(s[k])];
        for (_, sample, res) in &columns {
            row.push(fmt_c(sample.y[k]));
            row.push(if k == 0 || k + 1 == s.len() { String::new() } else { format!("{:e}", res[k - 1]) });
        }
        wtr.write_record(&row)?;
    }
    wtr.flush().map_err(|source| CliError::Io { path: args.common.out.clone().unwrap_or_default(), source })?;

    let mut ok = true;
    for (v, _, res) in &columns {
        let worst = res.iter().copied().fold(0.0, f64::max);
        let pass = worst < tol.get("pvi");
        ok &= pass;
        eprintln!(
            "check name=pvi_{:?} value={worst:.3e} tol={:.1e} status={}",
            v,
            tol.get("pvi"),
            if pass { "PASS" } else { "FAIL" }
        );
    }
    let iso = a3_isomonodromy_check(&s, frozen)?;
    let pass = iso < tol.get("isomonodromy");
    ok &= pass;
    eprintln!(
        "check name=isomonodromy value={iso:.3e} tol={:.1e} status={}",
        tol.get("isomonodromy"),
        if pass { "PASS" } else { "FAIL" }
    );
    Ok(ok)
}

pub const ELLIPTIC_TOLERANCES: [(&str, f64); 4] = [("w", 1e-5), ("period_identity", 1e-6), ("barj1", 1e-6), ("symmetry", 1e-9)];

/// Random four-point charts in the unit square satisfying the domain rule.
pub fn random_elliptic_charts<R: Rng>(rng: &mut R, count: usize) -> Vec<[C64; 4]> {
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let v = [(); 4].map(|_| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
        if elliptic::genus_one_chart(&v).is_ok() {
            out.push(v);
        }
    }
    out
}

fn cmd_elliptic(args: &EllipticArgs) -> Result<bool> {
    let example: Example = args.example.parse()?;
    if example == Example::A3 {
        return Err(CliError::Usage("elliptic expects elliptic3 or elliptic4".into()));
    }
    let tol = Tolerances::new(&ELLIPTIC_TOLERANCES, &args.common.tol)?;
    let charts = match &args.input {
        Some(p) => read_charts(p)?,
        None => random_elliptic_charts(&mut ChaCha8Rng::seed_from_u64(args.common.seed), args.charts),
    };
    let mut rep = Report::default();
    rep.info(format!("example={} charts={} seed={}", example.name(), charts.len(), args.common.seed));
    for (k, v) in charts.iter().enumerate() {
        let r = elliptic::elliptic_w_check(v, 1e-5)?;
        let other = elliptic::elliptic_period_data(1.0 - r.s)?.ibar;
        let sym = (r.ibar + other - 1.0).norm();
        rep.info(format!(
            "chart={k} v=[{}] s={} eps={}",
            v.iter().map(|z| fmt_c(*z)).collect::<Vec<_>>().join(","),
            fmt_c(r.s),
            fmt_c(r.eps)
        ));
        if example == Example::Elliptic3 {
            let u = [v[0], v[1], v[2]];
            rep.check(&format!("v3_chart{k}"), elliptic::elliptic3_v_check(&u, 1e-5)?, tol.get("w"));
        } else {
            rep.check(&format!("w_chart{k}"), r.w_residual, tol.get("w"));
            rep.check(&format!("period_identity_chart{k}"), r.period_identity, tol.get("period_identity"));
            rep.check(&format!("barj1_chart{k}"), r.bar_j1, tol.get("barj1"));
        }
        rep.check(&format!("symmetry_chart{k}"), sym, tol.get("symmetry"));
    }
    rep.finish(args.common.out.as_deref())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_specs() {
        let g = parse_grid("s=1.2:2.0:5").unwrap();
        assert_eq!(g.name, "s");
        assert_eq!(g.values.len(), 5);
        assert!((g.values[1] - 1.4).abs() < 1e-15);
        assert_eq!(parse_grid("v3=2.1:2.1:1").unwrap().values, vec![2.1]);
        for bad in ["s", "s=1:2", "s=1:2:0", "s=1:1:3", "s=a:2:3"] {
            assert!(parse_grid(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn tolerance_overrides() {
        let defaults = [("wdvv", 1e-9), ("unit", 1e-12)];
        let t = Tolerances::new(&defaults, &["unit=1e-3".into()]).unwrap();
        assert_eq!(t.get("wdvv"), 1e-9);
        assert_eq!(t.get("unit"), 1e-3);
        let all = Tolerances::new(&defaults, &["0.5".into()]).unwrap();
        assert_eq!(all.get("wdvv"), 0.5);
        assert!(Tolerances::new(&defaults, &["nope=1".into()]).is_err());
        assert!(Tolerances::new(&defaults, &["-1".into()]).is_err());
    }

    #[test]
    fn complex_values() {
        assert_eq!(parse_complex("[1.5, -2]"), Some(C64::new(1.5, -2.0)));
        assert_eq!(parse_complex(" 3 "), Some(C64::new(3.0, 0.0)));
        assert_eq!(parse_complex("[1]"), None);
        assert_eq!(fmt_c(C64::new(0.5, 0.0)), "[5e-1,0e0]");
    }

    #[test]
    fn seeded_charts_are_reproducible() {
        let a = random_elliptic_charts(&mut ChaCha8Rng::seed_from_u64(7), 3);
        let b = random_elliptic_charts(&mut ChaCha8Rng::seed_from_u64(7), 3);
        assert_eq!(a, b);
    }
}
