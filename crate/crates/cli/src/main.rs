//! `qinv`: evaluate quantum invariants of shadow-colored links from fixtures
//! or slice-word files, tabulate them, and run the self-checks.

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64 as C64;
use qinv::dilog::{d_function, li2, lifted_dilog, phi_n, q_function, CoverPoint, QlfTable, RootOfUnity};
use qinv::error::Error;
use qinv::evaluator::{cs_link, link_invariant, modified_dimension, InvariantResult, Normalization};
use qinv::fixtures::{build, ColoringSpec, Fixture, FixtureParams, NAMES};
use qinv::verify::{run, Config, Report, Suite};
use serde_json::{json, Value};
use std::process::ExitCode;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

/// `println!` that exits quietly when the reader has gone away.
macro_rules! out {
    ($($t:tt)*) => { emit(format_args!($($t)*)) };
}

fn emit(line: std::fmt::Arguments) {
    use std::io::Write;
    if let Err(e) = writeln!(std::io::stdout().lock(), "{line}") {
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            eprintln!("qinv: {e}");
        }
        std::process::exit(if e.kind() == std::io::ErrorKind::BrokenPipe { 0 } else { 1 });
    }
}

#[derive(Parser)]
#[command(name = "qinv", version, about = "Quantum holonomy invariants of shadow-colored links")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the link invariant at one or more levels N.
    Eval(EvalArgs),
    /// Evaluate the Chern–Simons invariant.
    Cs(SourceArgs),
    /// Tabulate N, value and log(value)/N over a range of levels.
    Table(TableArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Print a fixture as a diagram word plus a coloring file.
    Fixture(SourceArgs),
    /// Quantum dilogarithm utilities.
    Dilog {
        #[command(subcommand)]
        command: DilogCommand,
    },
}

#[derive(Args, Clone)]
struct SourceArgs {
    /// Built-in fixture name.
    #[arg(long, conflicts_with = "diagram")]
    fixture: Option<String>,
    /// File holding a closed slice word.
    #[arg(long, requires = "coloring")]
    diagram: Option<String>,
    /// JSON coloring file (as printed by `qinv fixture`).
    #[arg(long)]
    coloring: Option<String>,
    /// Comma-separated log-meridians, one per component (e.g. -0.5,0.3+0.1i).
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    mu: Vec<String>,
    /// Comma-separated log-longitudes, one per component.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    lambda: Vec<String>,
    #[arg(long, allow_hyphen_values = true, hide = true)]
    mu1: Option<String>,
    #[arg(long, allow_hyphen_values = true, hide = true)]
    mu2: Option<String>,
    /// Fixture cut word index.
    #[arg(long, default_value_t = 0)]
    word: usize,
    /// Seed for fixture randomness and admissibility repair.
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Level for commands that need one.
    #[arg(long, default_value_t = 2)]
    level: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Significant digits in the output.
    #[arg(long, default_value_t = 12)]
    digits: usize,
}

#[derive(Args)]
struct EvalArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Level range A..B (inclusive); overrides --level.
    #[arg(long)]
    levels: Option<String>,
    #[arg(long, value_enum, default_value_t = Norm::Raw)]
    normalization: Norm,
    /// Also report d(μ_K)·𝒵′ for component K.
    #[arg(long)]
    component: Option<usize>,
}

#[derive(Args)]
struct TableArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[arg(long, default_value = "2..6")]
    levels: String,
    #[arg(long, value_enum, default_value_t = Norm::Raw)]
    normalization: Norm,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name, or `all`.
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long)]
    level: Option<usize>,
    #[arg(long)]
    levels: Option<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Tsv)]
    format: Format,
}

#[derive(Subcommand)]
enum DilogCommand {
    /// Emit a TSV table of one function.
    Tab(DilogArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum DilogFn {
    /// Li₂(x + i·imag) for x on the grid.
    Li2,
    /// e^{L̂} over ζ⁰ on the grid, sheet --branch.
    Ldil,
    /// Φ_N(ζ).
    Phi,
    /// D_N(ζ).
    D,
    /// Q_N(ζ).
    Q,
    /// qlf(ζ⁰, ζ¹; n) for n = 0..N−1 at ζ⁰ = --zeta0.
    Qlf,
}

#[derive(Args)]
struct DilogArgs {
    #[arg(value_enum)]
    function: DilogFn,
    #[arg(long, default_value_t = 2)]
    level: usize,
    #[arg(long, default_value_t = -1.0, allow_hyphen_values = true)]
    from: f64,
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    to: f64,
    #[arg(long, default_value_t = 21)]
    steps: usize,
    /// Imaginary part added to every grid point.
    #[arg(long, default_value_t = 0.1, allow_hyphen_values = true)]
    imag: f64,
    #[arg(long, default_value = "0.3+0.1i", allow_hyphen_values = true)]
    zeta0: String,
    /// Sheet of the cover: ζ¹ = −log(1 − e^{2πiζ⁰})/(2πi) + branch.
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    branch: i64,
    #[arg(long, default_value_t = 12)]
    digits: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Norm {
    Raw,
    Shifted,
}

impl From<Norm> for Normalization {
    fn from(n: Norm) -> Self {
        match n {
            Norm::Raw => Normalization::Raw,
            Norm::Shifted => Normalization::Shifted,
        }
    }
}

/// Failure with its exit code.
struct Failure {
    code: u8,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Syntax { .. }
            | Error::Arity { .. }
            | Error::Orientation { .. }
            | Error::Boundary(_)
            | Error::Coloring(_)
            | Error::Unreachable(_)
            | Error::Invalid(_) => 2,
            Error::Inadmissible(_) => 3,
            Error::NotScalar { .. } => 4,
            _ => 1,
        };
        Failure { code, msg: e.to_string() }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure { code: 2, msg: msg.into() }
}

type Out<T> = std::result::Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Eval(a) => eval(a),
        Command::Cs(a) => cs(a),
        Command::Table(a) => table(a),
        Command::Verify(a) => verify(a),
        Command::Fixture(a) => fixture(a),
        Command::Dilog { command: DilogCommand::Tab(a) } => dilog_tab(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("qinv: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}

// ---------------------------------------------------------------- input

fn complex(s: &str) -> Out<C64> {
    let t = s.trim().replace(' ', "");
    t.parse::<C64>().map_err(|_| usage(format!("not a complex number: {s}")))
}

fn complexes(v: &[String]) -> Out<Vec<C64>> {
    v.iter().map(|s| complex(s)).collect()
}

/// `A..B` or `A..=B`, inclusive either way.
fn level_range(s: &str) -> Out<Vec<usize>> {
    let (a, b) = s.split_once("..").ok_or_else(|| usage(format!("level range must look like A..B: {s}")))?;
    let b = b.trim_start_matches('=');
    let parse = |x: &str| x.trim().parse::<usize>().map_err(|_| usage(format!("bad level: {x}")));
    let (a, b) = (parse(a)?, parse(b)?);
    if a > b {
        return Err(usage(format!("empty level range {s}")));
    }
    Ok((a..=b).collect())
}

fn check_levels(levels: &[usize]) -> Out<()> {
    match levels.iter().find(|&&n| !(2..=RootOfUnity::MAX_LEVEL).contains(&n)) {
        Some(n) => Err(usage(format!("level {n} outside 2..={}", RootOfUnity::MAX_LEVEL))),
        None => Ok(()),
    }
}

impl SourceArgs {
    fn mu(&self) -> Out<Vec<C64>> {
        let mut mu = complexes(&self.mu)?;
        for (i, m) in [&self.mu1, &self.mu2].into_iter().enumerate() {
            if let Some(m) = m {
                if mu.len() <= i {
                    mu.resize(i + 1, C64::new(f64::NAN, 0.0));
                }
                mu[i] = complex(m)?;
            }
        }
        if mu.iter().any(|z| z.re.is_nan()) {
            return Err(usage("--mu2 needs --mu1"));
        }
        Ok(mu)
    }

    fn params(&self, n: usize) -> Out<FixtureParams> {
        Ok(FixtureParams { n, mu: self.mu()?, lambda: complexes(&self.lambda)?, seed: self.seed, word: self.word })
    }

    /// The colored diagram at level `n`; decoration overrides replace the
    /// leading components.
    fn fixture(&self, n: usize) -> Out<Fixture> {
        match (&self.fixture, &self.diagram) {
            (Some(name), None) => Ok(build(name, &self.params(n)?)?),
            (None, Some(path)) => {
                let word = read(path)?;
                let coloring = self.coloring.as_deref().ok_or_else(|| usage("--diagram needs --coloring"))?;
                let mut fx = Fixture::from_word(path, word.trim(), coloring_spec(&read(coloring)?)?)?;
                for (i, m) in self.mu()?.into_iter().enumerate() {
                    *fx.decoration.mu.get_mut(i).ok_or_else(|| usage("more --mu values than components"))? = m;
                }
                for (i, l) in complexes(&self.lambda)?.into_iter().enumerate() {
                    *fx.decoration.lambda.get_mut(i).ok_or_else(|| usage("more --lambda values than components"))? = l;
                }
                Ok(fx)
            }
            _ => Err(usage(format!("give exactly one of --fixture NAME or --diagram FILE (fixtures: {})", NAMES.join(", ")))),
        }
    }
}

fn read(path: &str) -> Out<String> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("{path}: {e}")))
}

/// Either a bare coloring or the object printed by `qinv fixture`.
fn coloring_spec(text: &str) -> Out<ColoringSpec> {
    let v: Value = serde_json::from_str(text).map_err(|e| usage(format!("coloring file: {e}")))?;
    let v = v.get("coloring").cloned().unwrap_or(v);
    serde_json::from_value(v).map_err(|e| usage(format!("coloring file: {e}")))
}

// ---------------------------------------------------------------- output

fn round_sig(x: f64, digits: usize) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{:.*e}", digits.max(1) - 1, x).parse().unwrap_or(x)
}

fn round_json(v: &mut Value, digits: usize) {
    match v {
        Value::Number(n) if n.is_f64() => {
            if let Some(x) = n.as_f64() {
                *v = json!(round_sig(x, digits));
            }
        }
        Value::Array(a) => a.iter_mut().for_each(|x| round_json(x, digits)),
        Value::Object(o) => o.values_mut().for_each(|x| round_json(x, digits)),
        _ => {}
    }
}

/// Plain notation with `digits` significant digits, scientific outside
/// [1e-4, 1e12).
fn fmt(x: f64, digits: usize) -> String {
    let x = round_sig(x, digits);
    if x == 0.0 {
        return "0".into();
    }
    let mag = x.abs().log10().floor() as i64;
    if !(-4..12).contains(&mag) {
        return format!("{:.*e}", digits.max(1) - 1, x);
    }
    let decimals = (digits as i64 - 1 - mag).max(0) as usize;
    format!("{x:.decimals$}")
}

fn print_json(mut v: Value, digits: usize) {
    round_json(&mut v, digits);
    out!("{v}");
}

// ---------------------------------------------------------------- commands

/// Worker count: QINV_THREADS if set, else the machine's parallelism.
fn threads() -> usize {
    std::env::var("QINV_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .filter(|&t| t > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

/// Runs `f` over `levels` in parallel and returns results in level order.
fn per_level<T: Send>(levels: &[usize], f: impl Fn(usize) -> Out<T> + Sync) -> Out<Vec<T>> {
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<Out<T>>>> = Mutex::new((0..levels.len()).map(|_| None).collect());
    std::thread::scope(|s| {
        for _ in 0..threads().min(levels.len()) {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::SeqCst);
                let Some(&n) = levels.get(i) else { break };
                let r = f(n);
                slots.lock().expect("worker panicked")[i] = Some(r);
            });
        }
    });
    slots.into_inner().expect("worker panicked").into_iter().map(|r| r.expect("every level ran")).collect()
}

fn invariant(src: &SourceArgs, n: usize, how: Normalization) -> Out<InvariantResult> {
    let col = src.fixture(n)?.realize(src.seed)?;
    let mut r = link_invariant(RootOfUnity::new(n)?, &col.sc, &col.lc)?;
    r.provenance.gauge = col.gauge.map(|(h, k)| (serde_json::to_string(&h).expect("matrix serializes"), k));
    Ok(r.normalized(how))
}

fn eval(a: EvalArgs) -> Out<()> {
    let levels = match &a.levels {
        Some(r) => level_range(r)?,
        None => vec![a.source.level],
    };
    check_levels(&levels)?;
    let src = &a.source;
    let results = per_level(&levels, |n| {
        let r = invariant(src, n, a.normalization.into())?;
        let renormalized = match a.component {
            Some(k) => {
                let mu = *r.decoration.mu.get(k).ok_or_else(|| usage(format!("no component {k}")))?;
                Some(modified_dimension(RootOfUnity::new(n)?, mu)? * r.shifted)
            }
            None => None,
        };
        Ok((r, renormalized))
    })?;
    for (r, ren) in results {
        match src.format {
            Format::Json => {
                let mut v = r.to_json();
                if let (Some(z), Some(k)) = (ren, a.component) {
                    v["renormalized"] = json!({ "component": k, "value": [z.re, z.im] });
                }
                print_json(v, src.digits);
            }
            Format::Tsv => {
                let mut row = vec![r.n.to_string(), fmt(r.value.re, src.digits), fmt(r.value.im, src.digits)];
                if let Some(z) = ren {
                    row.extend([fmt(z.re, src.digits), fmt(z.im, src.digits)]);
                }
                out!("{}", row.join("\t"));
            }
        }
    }
    Ok(())
}

fn cs(src: SourceArgs) -> Out<()> {
    let col = src.fixture(src.level)?.realize(src.seed)?;
    let z = cs_link(&col.sc, &col.lc)?;
    let l = z.ln();
    match src.format {
        Format::Json => print_json(
            json!({
                "cs": [z.re, z.im],
                "log": [l.re, l.im],
                "two_pi_re_log": 2.0 * std::f64::consts::PI * l.re,
                "decoration": { "mu": pairs(&col.lc.induced_decoration(&col.sc.comb).mu),
                                "lambda": pairs(&col.lc.induced_decoration(&col.sc.comb).lambda) },
            }),
            src.digits,
        ),
        Format::Tsv => out!("{}\t{}\t{}", fmt(z.re, src.digits), fmt(z.im, src.digits), fmt(2.0 * std::f64::consts::PI * l.re, src.digits)),
    }
    Ok(())
}

fn pairs(v: &[C64]) -> Vec<[f64; 2]> {
    v.iter().map(|z| [z.re, z.im]).collect()
}

fn table(a: TableArgs) -> Out<()> {
    let levels = level_range(&a.levels)?;
    check_levels(&levels)?;
    let src = &a.source;
    // Tables default to the six digits of the published tables.
    let digits = if src.digits == 12 { 6 } else { src.digits };
    let rows = per_level(&levels, |n| invariant(src, n, a.normalization.into()))?;
    out!("N\tRe\tIm\tRe(log/N)\tIm(log/N)");
    for r in rows {
        let l = r.value.ln() / r.n as f64;
        out!(
            "{}\t{}\t{}\t{}\t{}",
            r.n,
            fmt(r.value.re, digits),
            fmt(r.value.im, digits),
            fmt(l.re, digits),
            fmt(l.im, digits)
        );
    }
    Ok(())
}

fn verify(a: VerifyArgs) -> Out<()> {
    let suites: Vec<Suite> = if a.suite == "all" {
        Suite::ALL.to_vec()
    } else {
        let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
        vec![Suite::from_name(&a.suite).ok_or_else(|| usage(format!("unknown suite {}; known: all, {}", a.suite, names.join(", "))))?]
    };
    let levels = match (&a.levels, a.level) {
        (Some(r), _) => Some(level_range(r)?),
        (None, Some(n)) => Some(vec![n]),
        (None, None) => None,
    };
    if let Some(l) = &levels {
        check_levels(l)?;
    }
    let cfg = Config { levels, seed: a.seed, trials: a.trials };
    let reports: Vec<Report> = suites.iter().map(|&s| run(s, &cfg)).collect();
    for r in &reports {
        match a.format {
            Format::Json => out!("{}", serde_json::to_string(r).expect("report serializes")),
            Format::Tsv => {
                for c in &r.checks {
                    let status = if c.passed() { "PASS" } else { "FAIL" };
                    let err = c.error.as_deref().unwrap_or("");
                    out!("{}\t{}\t{status}\t{:.3e}\t{:.0e}\t{}\t{err}", r.suite.name(), c.name, c.residual, c.tol, c.samples);
                }
            }
        }
    }
    let failed: Vec<&str> = reports.iter().filter(|r| !r.passed()).map(|r| r.suite.name()).collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure { code: 5, msg: format!("failing suites: {}", failed.join(", ")) })
    }
}

fn fixture(src: SourceArgs) -> Out<()> {
    let fx = src.fixture(src.level)?;
    let v = json!({
        "name": fx.name,
        "word": fx.comb.word,
        "linking_matrix": fx.comb.linking_matrix(),
        "coloring": serde_json::to_value(fx.coloring()).expect("coloring serializes"),
    });
    // Full precision so the file round-trips through --coloring.
    out!("{}", serde_json::to_string_pretty(&v).expect("json"));
    Ok(())
}

fn dilog_tab(a: DilogArgs) -> Out<()> {
    let ctx = RootOfUnity::new(a.level)?;
    let d = a.digits;
    let row = |x: String, z: C64| out!("{x}\t{}\t{}", fmt(z.re, d), fmt(z.im, d));
    if let DilogFn::Qlf = a.function {
        let p = CoverPoint::over(complex(&a.zeta0)?, a.branch);
        let t = QlfTable::new(ctx, p)?;
        out!("n\tRe\tIm");
        for k in 0..a.level as i64 {
            row(k.to_string(), t.get(k));
        }
        return Ok(());
    }
    out!("x\tRe\tIm");
    let steps = a.steps.max(2);
    for i in 0..steps {
        let x = a.from + (a.to - a.from) * i as f64 / (steps - 1) as f64;
        let z = C64::new(x, a.imag);
        let v = match a.function {
            DilogFn::Li2 => li2(z),
            DilogFn::Ldil => lifted_dilog(CoverPoint::over(z, a.branch)).map(|l| l.exp()),
            DilogFn::Phi => phi_n(ctx, z),
            DilogFn::D => d_function(ctx, z),
            DilogFn::Q => Ok(q_function(ctx, z)),
            DilogFn::Qlf => unreachable!("handled above"),
        };
        match v {
            Ok(v) => row(fmt(x, d), v),
            Err(e) => out!("{}\tNaN\tNaN\t# {e}", fmt(x, d)),
        }
    }
    Ok(())
}
