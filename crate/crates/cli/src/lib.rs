//! Command-line front end: parses exact parameters, dispatches to the
//! library and renders text or JSON with stable exit codes.

use std::fmt::Write as _;

use bethe_pineiro::bethe::{is_generic, scan_counterexamples, solve_bae, y_tuple, BaeOutcome};
use bethe_pineiro::exactmath::{default_precision, parse_rational, Poly, Rational};
use bethe_pineiro::orthogonality::{
    adjointness_residuals, check_norm_formulas, orthogonality_residuals,
};
use bethe_pineiro::pineiro::{pineiro_recursive_params, pineiro_rodrigues_params};
use bethe_pineiro::spaces::{build_u, build_v, Params};
use bethe_pineiro::verify::verify_all;
use bethe_pineiro::Error;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_NO_SOLUTION: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "bp", version, about = "Exact Jacobi-Pineiro polynomials and Bethe ansatz checks")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Root isolation precision as an exact rational `p/q`.
    #[arg(long, global = true, value_parser = rational)]
    precision: Option<Rational>,
    /// Worker threads; falls back to BP_JOBS, then to all cores.
    #[arg(long, global = true, env = "BP_JOBS")]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Polynomial spaces.
    Space {
        #[command(subcommand)]
        action: SpaceAction,
    },
    /// Jacobi-Pineiro polynomials.
    Pineiro {
        #[command(subcommand)]
        action: PineiroAction,
    },
    /// The y-tuple of a space with its genericity report.
    Ytuple(ParamArgs),
    /// Bethe ansatz equations.
    Bethe {
        #[command(subcommand)]
        action: BetheAction,
    },
    /// Orthogonality, norms and adjointness at admissible parameters.
    Orth {
        #[command(subcommand)]
        action: OrthAction,
    },
    /// Identity suites.
    Verify {
        #[command(subcommand)]
        action: VerifyAction,
    },
}

#[derive(Subcommand, Debug)]
enum SpaceAction {
    /// Basis, degrees and root orders at 0 and 1 of V or U.
    Build {
        #[command(flatten)]
        params: ParamArgs,
        /// Which space to build.
        #[arg(long, value_enum, default_value = "v")]
        kind: SpaceKind,
    },
}

#[derive(Subcommand, Debug)]
enum PineiroAction {
    /// The monic polynomial P(m, l, k).
    Compute {
        #[command(flatten)]
        params: ParamArgs,
        /// Rodrigues formula or the three-term recursion.
        #[arg(long, value_enum, default_value = "rodrigues")]
        route: Route,
    },
}

#[derive(Subcommand, Debug)]
enum BetheAction {
    /// Solve the Bethe equations or report why no solution exists.
    Solve(ParamArgs),
    /// List rank-two consistent points with l = (2, 1) and no solution.
    Scan {
        /// Largest m_1.
        #[arg(long, default_value_t = 5)]
        m1_max: i64,
        /// Largest m_2.
        #[arg(long, default_value_t = 5)]
        m2_max: i64,
        /// Largest k.
        #[arg(long, default_value_t = 100)]
        k_max: i64,
    },
}

#[derive(Subcommand, Debug)]
enum OrthAction {
    /// Run one exact suite at a parameter point.
    Check {
        /// Rank; must match the length of `--m` when given.
        #[arg(long)]
        r: Option<usize>,
        #[command(flatten)]
        params: ParamArgs,
        /// Which suite to run.
        #[arg(long, value_enum, default_value = "orthogonality")]
        suite: OrthSuite,
    },
}

#[derive(Subcommand, Debug)]
enum VerifyAction {
    /// Every identity suite on the built-in grids.
    All,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SpaceKind {
    V,
    U,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Route {
    Rodrigues,
    Recursive,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OrthSuite {
    Orthogonality,
    Norms,
    Adjointness,
}

#[derive(Args, Debug)]
struct ParamArgs {
    /// Comma-separated exact rationals.
    #[arg(long, allow_hyphen_values = true, value_parser = rational_list)]
    m: Vec<Vec<Rational>>,
    /// Comma-separated non-negative integers.
    #[arg(long, value_delimiter = ',')]
    l: Vec<i64>,
    /// Exact rational.
    #[arg(long, allow_hyphen_values = true, value_parser = rational)]
    k: Rational,
}

impl ParamArgs {
    fn params(&self) -> Result<Params, Error> {
        Params::new(self.m.concat(), self.l.clone(), self.k.clone())
    }
}

fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

/// One `--m` occurrence may carry a comma-separated list; clap collects
/// them into a vector of vectors, flattened in `ParamArgs::params`.
fn rational_list(s: &str) -> Result<Vec<Rational>, String> {
    s.split(',').map(rational).collect()
}

/// Resolved settings shared by every subcommand.
#[derive(Clone, Debug, PartialEq)]
pub struct CliConfig {
    pub precision: Rational,
    pub json: bool,
    pub parallelism: usize,
}

impl Default for CliConfig {
    fn default() -> Self {
        CliConfig {
            precision: default_precision(),
            json: false,
            parallelism: std::thread::available_parallelism().map_or(1, |n| n.get()),
        }
    }
}

/// Result of one invocation: exit code with buffered standard output and
/// standard error.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InternalExponentMismatch(_) | Error::NotPolynomial(_) | Error::NonExactDivision(_) => {
            EXIT_INTERNAL
        }
        _ => EXIT_INPUT,
    }
}

/// Parses `argv` (program name first) and runs the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code, stdout: String::new(), stderr: text }
            } else {
                Outcome { code, stdout: text, stderr: String::new() }
            };
        }
    };
    let mut cfg = CliConfig { json: cli.json, ..Default::default() };
    if let Some(p) = cli.precision.clone() {
        cfg.precision = p;
    }
    if let Some(j) = cli.jobs {
        if j == 0 {
            return Outcome {
                code: EXIT_INPUT,
                stdout: String::new(),
                stderr: "--jobs must be positive\n".into(),
            };
        }
        cfg.parallelism = j;
    }
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cfg.parallelism).build() {
        Ok(p) => p,
        Err(e) => {
            return Outcome { code: EXIT_INTERNAL, stdout: String::new(), stderr: format!("{e}\n") }
        }
    };
    pool.install(|| match dispatch(&cli.command, &cfg) {
        Ok((code, out)) => Outcome { code, stdout: out, stderr: String::new() },
        Err(e) => Outcome { code: exit_code(&e), stdout: String::new(), stderr: format!("error: {e}\n") },
    })
}

fn poly_json(p: &Poly) -> Value {
    serde_json::to_value(p).expect("polynomials serialize")
}

fn render(cfg: &CliConfig, value: &Value, text: impl FnOnce() -> String) -> String {
    if cfg.json {
        format!("{value}\n")
    } else {
        text()
    }
}

fn dispatch(cmd: &Command, cfg: &CliConfig) -> Result<(i32, String), Error> {
    match cmd {
        Command::Space { action: SpaceAction::Build { params, kind } } => {
            let p = params.params()?;
            let space = match kind {
                SpaceKind::V => build_v(&p)?,
                SpaceKind::U => build_u(&p)?,
            };
            let mut value = space.to_json();
            value["degrees"] = json!(space.degrees());
            let out = render(cfg, &value, || {
                let mut s = format!("{:?}({})\ndegrees {:?}\n", space.kind, p.describe(), space.degrees());
                for b in &space.basis {
                    let _ = writeln!(s, "  {b}");
                }
                s
            });
            Ok((EXIT_OK, out))
        }
        Command::Pineiro { action: PineiroAction::Compute { params, route } } => {
            let p = params.params()?;
            let (poly, name) = match route {
                Route::Rodrigues => (pineiro_rodrigues_params(&p)?, "rodrigues"),
                Route::Recursive => (pineiro_recursive_params(&p)?, "recursive"),
            };
            let value = json!({ "P": poly_json(&poly), "route": name, "params": p });
            Ok((EXIT_OK, render(cfg, &value, || format!("P = {poly}\n"))))
        }
        Command::Ytuple(params) => {
            let p = params.params()?;
            let yt = y_tuple(&p)?;
            let report = is_generic(&yt, &p);
            let value = json!({ "y": yt.ys, "generic": report.generic, "report": report });
            let out = render(cfg, &value, || {
                let mut s = String::new();
                for (i, y) in yt.ys.iter().enumerate() {
                    let _ = writeln!(s, "y{} = {y}", i + 1);
                }
                let _ = writeln!(s, "generic: {}", report.generic);
                if let Some(w) = &report.witness {
                    let _ = writeln!(s, "witness: {w}");
                }
                s
            });
            Ok((EXIT_OK, out))
        }
        Command::Bethe { action: BetheAction::Solve(params) } => {
            let p = params.params()?;
            p.require_consistent()?;
            let outcome = solve_bae(&p, &cfg.precision)?;
            let code = match outcome {
                BaeOutcome::NoSolution { .. } => EXIT_NO_SOLUTION,
                _ => EXIT_OK,
            };
            let value = serde_json::to_value(&outcome).expect("outcomes serialize");
            let out = render(cfg, &value, || match &outcome {
                BaeOutcome::Solution { point, residual } => {
                    let mut s = String::from("solution\n");
                    for (j, g) in point.t.iter().enumerate() {
                        let coords: Vec<String> = g.iter().map(|c| format!("{:.15}", c.approx())).collect();
                        let _ = writeln!(s, "  t({}) = [{}]", j + 1, coords.join(", "));
                    }
                    let _ = writeln!(s, "residual {residual:e}");
                    s
                }
                BaeOutcome::NoSolution { witness, .. } => format!("no solution: {witness}\n"),
                BaeOutcome::ComplexRoots { level, real_roots, degree } => format!(
                    "level {level} has {real_roots} real roots out of {degree}; the solution is not real\n"
                ),
            });
            Ok((code, out))
        }
        Command::Bethe { action: BetheAction::Scan { m1_max, m2_max, k_max } } => {
            if *m1_max < 0 || *m2_max < 0 || *k_max < 0 {
                return Err(Error::InvalidInput("scan bounds must be non-negative".into()));
            }
            let found = scan_counterexamples(*m1_max, *m2_max, *k_max);
            let value = json!({ "counterexamples": found });
            let out = render(cfg, &value, || {
                let mut s = format!("{} counterexamples\n", found.len());
                for c in &found {
                    let _ = writeln!(s, "  m = ({}, {}), k = {}", c.m1, c.m2, c.k);
                }
                s
            });
            Ok((EXIT_OK, out))
        }
        Command::Orth { action: OrthAction::Check { r, params, suite } } => {
            let p = params.params()?;
            if let Some(r) = r {
                if *r != p.r() {
                    return Err(Error::InvalidInput(format!("--r {r} but --m has {} entries", p.r())));
                }
            }
            if !p.l_is_partition() {
                return Err(Error::InvalidInput(format!("l = {:?} is not a partition", p.l)));
            }
            orth_check(&p, *suite, cfg)
        }
        Command::Verify { action: VerifyAction::All } => {
            let report = verify_all();
            let code = if report.ok() { EXIT_OK } else { EXIT_INTERNAL };
            let value = serde_json::to_value(&report).expect("reports serialize");
            let out = render(cfg, &value, || {
                let mut s = String::new();
                for suite in &report.suites {
                    let mark = if suite.ok() { "ok" } else { "FAILED" };
                    let _ = writeln!(s, "{:<22} {:>4}/{:<4} {mark}", suite.name, suite.passed, suite.cases);
                    for f in suite.failures.iter().take(5) {
                        let _ = writeln!(s, "    {f}");
                    }
                }
                s
            });
            Ok((code, out))
        }
    }
}

fn orth_check(p: &Params, suite: OrthSuite, cfg: &CliConfig) -> Result<(i32, String), Error> {
    let (name, named): (&str, Vec<(String, Rational)>) = match suite {
        OrthSuite::Orthogonality => (
            "orthogonality",
            orthogonality_residuals(p)?
                .into_iter()
                .enumerate()
                .map(|(i, v)| (format!("condition_{}", i + 1), v))
                .collect(),
        ),
        OrthSuite::Norms => ("norms", check_norm_formulas(p)?.into_iter().collect()),
        OrthSuite::Adjointness => {
            let mut out = Vec::new();
            for i in 0..=p.r() {
                let res = adjointness_residuals(p, i, 6)?;
                let worst = res.into_iter().find(|v| *v != Rational::default()).unwrap_or_default();
                out.push((format!("D_{i}"), worst));
            }
            ("adjointness", out)
        }
    };
    let ok = named.iter().all(|(_, v)| *v == Rational::default());
    let residuals: serde_json::Map<String, Value> =
        named.iter().map(|(k, v)| (k.clone(), json!(v.to_string()))).collect();
    let value = json!({ "suite": name, "ok": ok, "residuals": residuals, "params": p });
    let out = render(cfg, &value, || {
        let mut s = format!("{name}: {}\n", if ok { "all residuals vanish" } else { "FAILED" });
        for (k, v) in &named {
            let _ = writeln!(s, "  {k} = {v}");
        }
        s
    });
    Ok((if ok { EXIT_OK } else { EXIT_INTERNAL }, out))
}
