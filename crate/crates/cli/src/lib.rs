//! Command-line front end. Everything is reachable through [`run`], which maps
//! an argument vector to an exit code and the text for stdout/stderr, so the
//! binary is a thin wrapper and tests can call it in-process.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use macbranch::combinat::Signature;
use macbranch::intertwiner::{
    c_squared_chain, diag_coeff_sum, ek_denominator, mat_elt, psi_qnum, trace_quotient, trace_reconstruct,
};
use macbranch::macops::{macdonald_branch, macdonald_eigen, macdonald_gt, psi_branch};
use macbranch::qfield::{CoeffRat, UnitMono};
use macbranch::suites::{list_suites, run_suite, SuiteParams};
use macbranch::sympoly::SymLaurent;
use macbranch::Error;

/// Exit status of a verification run with at least one failing check.
pub const EXIT_FAILURE: i32 = 1;
/// Exit status for malformed input.
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "macbranch", version, about = "Exact Macdonald polynomials, branching coefficients and identity checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute a Macdonald polynomial in the monomial symmetric basis.
    Poly {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// Number of variables (defaults to the length of lambda).
        #[arg(long)]
        vars: Option<usize>,
        #[arg(long, value_enum, default_value_t = Method::Eigen)]
        method: Method,
        #[command(flatten)]
        spec: Specialization,
    },
    /// Branching coefficient psi_{λ/μ}.
    Psi {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        mu: String,
        #[command(flatten)]
        spec: Specialization,
    },
    /// Diagonal intertwiner matrix element c(μ, λ) at t = q^k.
    Matelt {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        mu: String,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[arg(long, value_enum, default_value_t = Route::MatElt)]
        route: Route,
    },
    /// Trace over Gelfand-Tsetlin chains, its denominator and their quotient.
    Trace {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true, default_value_t = 2)]
        k: i64,
    },
    /// Run verification suites and report every check.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
#[group(required = false, multiple = false)]
struct Specialization {
    /// Specialize to t = q^k.
    #[arg(long, allow_hyphen_values = true)]
    k: Option<i64>,
    /// Keep q and t independent (the default).
    #[arg(long)]
    generic: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Suite name, or `all`.
    #[arg(long, default_value = "all")]
    suite: String,
    /// Print the suite catalog instead of running anything.
    #[arg(long)]
    list: bool,
    #[arg(long, default_value_t = 2)]
    n: usize,
    #[arg(long, default_value_t = 2)]
    l: usize,
    #[arg(long, allow_hyphen_values = true, default_value_t = 2)]
    k: i64,
    #[arg(long, default_value_t = 4)]
    maxdeg: i64,
    #[arg(long, default_value_t = 10)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// JSON is the only output format; accepted for explicitness.
    #[arg(long)]
    json: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Method {
    Eigen,
    Branch,
    Gt,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Route {
    #[value(name = "mat_elt")]
    MatElt,
    #[value(name = "diag_sum")]
    DiagSum,
    #[value(name = "cg_sq")]
    CgSq,
}

impl Route {
    fn name(self) -> &'static str {
        match self {
            Route::MatElt => "mat_elt",
            Route::DiagSum => "diag_sum",
            Route::CgSq => "cg_sq",
        }
    }
}

/// The result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn json(code: i32, v: &Value) -> Self {
        Outcome { code, stdout: format!("{}\n", serde_json::to_string_pretty(v).expect("json value")), stderr: String::new() }
    }

    fn usage(msg: impl std::fmt::Display) -> Self {
        let line = msg.to_string().lines().find(|l| !l.trim().is_empty()).unwrap_or("usage error").trim().to_string();
        Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {}\n", line.trim_start_matches("error: ")) }
    }
}

/// Parses `argv` (including the program name) and executes the command.
pub fn run<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Outcome { code: 0, stdout: e.to_string(), stderr: String::new() }
                }
                _ => Outcome::usage(e),
            }
        }
    };
    match execute(cli.command) {
        Ok(out) => out,
        Err(e) => Outcome::usage(e),
    }
}

fn signature(s: &str, what: &str) -> Result<Signature, Error> {
    s.parse::<Signature>().map_err(|e| match e {
        Error::Parse(m) => Error::Parse(format!("--{what}: {m}")),
        other => other,
    })
}

fn require_k(k: i64) -> Result<i64, Error> {
    if k < 1 {
        Err(Error::Domain(format!("k must be a positive integer, got {k}")))
    } else {
        Ok(k)
    }
}

/// `(q, t) ↦ (q, q^k)` on the `(q², t²)` parametrization, i.e. `P(x; q², q^{2k})`.
fn at_k(p: &SymLaurent, k: i64) -> Result<SymLaurent, Error> {
    p.subst(&UnitMono::q(1), &UnitMono::q(k))
}

fn params_json(spec: &Specialization) -> Result<Value, Error> {
    Ok(match spec.k {
        Some(k) => json!({"k": require_k(k)?}),
        None => json!("generic"),
    })
}

fn value(c: &CoeffRat) -> Value {
    json!(c.to_string())
}

fn execute(cmd: Command) -> Result<Outcome, Error> {
    match cmd {
        Command::Poly { lambda, vars, method, spec } => {
            let lam = signature(&lambda, "lambda")?;
            let n = vars.unwrap_or(lam.len());
            if n < lam.len() || n == 0 {
                return Err(Error::Domain(format!("--vars {n} cannot hold {lam}")));
            }
            let mut parts = lam.0.clone();
            parts.resize(n, 0);
            let lam = Signature(parts);
            if !lam.is_dominant() {
                return Err(Error::NotDominant(lam.to_string()));
            }
            let params = params_json(&spec)?;
            let p = match method {
                Method::Eigen => macdonald_eigen(&lam, n)?,
                Method::Branch => macdonald_branch(&lam, n)?,
                Method::Gt => macdonald_gt(&lam, n)?,
            };
            let p = match spec.k {
                Some(k) => at_k(&p, k)?,
                None => p,
            };
            let method = match method {
                Method::Eigen => "eigen",
                Method::Branch => "branch",
                Method::Gt => "gt",
            };
            Ok(Outcome::json(
                0,
                &json!({"lambda": lam.to_string(), "vars": n, "method": method, "params": params, "poly": p.to_json()}),
            ))
        }
        Command::Psi { lambda, mu, spec } => {
            let lam = signature(&lambda, "lambda")?;
            let mu = signature(&mu, "mu")?;
            let params = params_json(&spec)?;
            let v = match spec.k {
                Some(k) => psi_qnum(&lam, &mu, k)?,
                None => psi_branch(&lam, &mu)?,
            };
            Ok(Outcome::json(
                0,
                &json!({"value": value(&v), "lambda": lam.to_string(), "mu": mu.to_string(), "params": params}),
            ))
        }
        Command::Matelt { lambda, mu, k, route } => {
            let lam = signature(&lambda, "lambda")?;
            let mu = signature(&mu, "mu")?;
            let k = require_k(k)?;
            macbranch::combinat::require_interlacing(&mu, &lam)?;
            let v = match route {
                Route::MatElt => mat_elt(&mu, &lam, k)?,
                Route::DiagSum => diag_coeff_sum(&mu, &lam, k)?,
                Route::CgSq => c_squared_chain(&mu, &lam, k)?,
            };
            Ok(Outcome::json(
                0,
                &json!({"value": value(&v), "route": route.name(), "lambda": lam.to_string(), "mu": mu.to_string(), "k": k}),
            ))
        }
        Command::Trace { lambda, k } => {
            let lam = signature(&lambda, "lambda")?;
            let k = require_k(k)?;
            if !lam.is_dominant() {
                return Err(Error::NotDominant(lam.to_string()));
            }
            let n = lam.len();
            let trace = trace_reconstruct(&lam, n, k)?;
            let den = ek_denominator(n, k)?;
            let quotient = trace_quotient(&lam, k)?;
            Ok(Outcome::json(
                0,
                &json!({
                    "lambda": lam.to_string(),
                    "k": k,
                    "trace": trace.to_json(),
                    "denominator": den.to_json(),
                    "quotient": quotient.to_json(),
                }),
            ))
        }
        Command::Verify(a) => {
            if a.list {
                let suites: Vec<Value> =
                    list_suites().iter().map(|s| json!({"name": s.name, "description": s.description})).collect();
                return Ok(Outcome::json(0, &json!({"suites": suites})));
            }
            if a.n == 0 {
                return Err(Error::Domain("--n must be positive".into()));
            }
            if a.l == 0 {
                return Err(Error::Domain("--l must be positive".into()));
            }
            let p = SuiteParams { n: a.n, l: a.l, k: require_k(a.k)?, maxdeg: a.maxdeg, samples: a.samples, seed: a.seed };
            let report = run_suite(&a.suite, &p)?;
            let code = if report.passed() { 0 } else { EXIT_FAILURE };
            let mut v = report.to_json();
            v["pass"] = json!(report.passed());
            Ok(Outcome::json(code, &v))
        }
    }
}
