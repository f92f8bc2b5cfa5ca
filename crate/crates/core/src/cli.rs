//! Command-line front end. [`run`] does all the work and returns the text
//! instead of printing it, so tests can drive it in-process.
//!
//! Exit codes: 0 on success, 1 for usage and parse errors, 2 when a
//! well-formed request has no mathematical answer (degenerate form, zero
//! divisor, ...).

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand};

use crate::audit;
use crate::calculus::{self, Axis, GridSpec, HyperFunction};
use crate::error::{Error, Result};
use crate::expr;
use crate::format;
use crate::forms::{self, FormKind};
use crate::powers::{self, PowMethod};
use crate::quaternion::Quaternion;

#[derive(Debug, Parser)]
#[command(
    name = "quatforms",
    version,
    about = "Quaternion arithmetic, representation forms, powers and regularity checks",
    after_help = "Expressions use i, j, k, the variable z, + - * / ^ and conj/norm/mod/inv.\n\
                  Products keep their written order; x / y means x * inv(y) (right division).\n\
                  ^ takes a nonnegative integer literal."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate a constant expression
    Eval(ExprArg),
    /// Print a quaternion in another representation
    Convert {
        #[command(flatten)]
        expr: ExprArg,
        /// vector, pair, matrix, trig, cjs, exp, log, spherical or trigmatrix
        #[arg(long = "to", value_name = "FORM")]
        to: FormKind,
    },
    /// Raise a quaternion to a nonnegative integer power
    Pow {
        #[command(flatten)]
        expr: ExprArg,
        #[arg(short = 'n', value_name = "N")]
        n: u32,
        /// oracle, cjs, binomial or factored
        #[arg(long, default_value = "oracle", value_name = "METHOD")]
        method: PowMethod,
        /// Also print the largest componentwise deviation from the oracle
        #[arg(long)]
        compare: bool,
    },
    /// Check the Cauchy-Riemann chains of a function of z
    Analytic {
        #[command(flatten)]
        expr: ExprArg,
        /// Point "a,b,c,d"; with --grid, the values of the unscanned axes
        #[arg(long, value_name = "A,B,C,D", allow_hyphen_values = true)]
        at: String,
        /// Central difference step
        #[arg(long, default_value_t = 1e-5)]
        h: f64,
        /// Relative tolerance on the chain residuals
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        /// Scan an axis, e.g. b=-1:1:0.1 (repeatable); prints CSV
        #[arg(long, value_name = "AXIS=START:END:STEP", allow_hyphen_values = true)]
        grid: Vec<String>,
    },
    /// Sample every cataloged identity and report PASS/FAIL
    Audit {
        #[arg(long, default_value_t = 10_000)]
        samples: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

#[derive(Debug, Args)]
struct ExprArg {
    /// Quaternion expression, e.g. "1+2i-3j+4k" or "z^2+5"
    #[arg(value_name = "EXPR", allow_hyphen_values = true)]
    text: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }

    fn error(e: &Error) -> Self {
        let stderr = if e.is_usage() {
            format!("error: {}: {e}\n", e.name())
        } else {
            format!("error: {}\n", e.name())
        };
        Outcome { code: if e.is_usage() { 1 } else { 2 }, stdout: String::new(), stderr }
    }
}

/// Runs one invocation. `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 1, stdout: String::new(), stderr: text }
            } else {
                Outcome::ok(text)
            };
        }
    };
    match execute(cli.command) {
        Ok(text) => Outcome::ok(text),
        Err(e) => Outcome::error(&e),
    }
}

fn execute(command: Command) -> Result<String> {
    match command {
        Command::Eval(e) => Ok(format!("{}\n", format::quaternion(expr::eval_str(&e.text)?))),
        Command::Convert { expr: e, to } => {
            let q = expr::eval_str(&e.text)?;
            Ok(format!("{}\n", forms::convert(q, to)?))
        }
        Command::Pow { expr: e, n, method, compare } => {
            let q = expr::eval_str(&e.text)?;
            let result = powers::power(q, n, method)?;
            let mut out = format!("{}\n", format::quaternion(result));
            if compare {
                let dev = result.max_abs_diff(powers::pow_oracle(q, n));
                out.push_str(&format!("max deviation from oracle: {}\n", format::real(dev)));
            }
            Ok(out)
        }
        Command::Analytic { expr: e, at, h, tol, grid } => {
            let f = HyperFunction::parse(&e.text)?;
            let base = parse_point(&at)?;
            if grid.is_empty() {
                analytic_report(&f, base, h, tol)
            } else {
                let mut spec = GridSpec::at(base, h, tol);
                for g in &grid {
                    let (index, axis) = parse_grid_axis(g)?;
                    spec = spec.with_axis(index, axis);
                }
                Ok(calculus::grid_scan(&f, &spec)?.to_csv())
            }
        }
        Command::Audit { samples, seed } => Ok(audit::audit(&audit::catalog(), samples, seed)?.to_text()),
    }
}

fn analytic_report(f: &HyperFunction, q: Quaternion, h: f64, tol: f64) -> Result<String> {
    let r = calculus::regularity(f, q, h, tol)?;
    let mut out = String::new();
    for (name, d) in ["D_a", "D_b", "D_c", "D_d"].iter().zip(r.candidates.as_array()) {
        out.push_str(&format!("{name} = {}\n", format::quaternion(d)));
    }
    for (m, chain) in r.residuals.chains.iter().enumerate() {
        let cells: Vec<String> = chain.iter().map(|&x| format::real(x)).collect();
        out.push_str(&format!("chain {}: {}\n", calculus::COMPONENT_NAMES[m], cells.join(" ")));
    }
    out.push_str(&format!(
        "max residual {} (threshold {})\n",
        format::real(r.residuals.max_residual),
        format::real(r.threshold)
    ));
    out.push_str(if r.regular { "REGULAR\n" } else { "NOT-REGULAR\n" });
    Ok(out)
}

fn parse_number(text: &str) -> Result<f64> {
    let text = text.trim();
    text.parse::<f64>()
        .ok()
        .filter(|x| x.is_finite())
        .ok_or_else(|| Error::InvalidArgument(format!("not a finite number: {text:?}")))
}

/// `"a,b,c,d"`, spaces allowed around the commas.
pub fn parse_point(text: &str) -> Result<Quaternion> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 4 {
        return Err(Error::InvalidArgument(format!("expected a,b,c,d, got {text:?}")));
    }
    let mut v = [0.0; 4];
    for (slot, part) in v.iter_mut().zip(parts) {
        *slot = parse_number(part)?;
    }
    Ok(Quaternion::from_array(v))
}

/// `AXIS=START:END:STEP` or `AXIS=VALUE`, with AXIS one of a, b, c, d.
pub fn parse_grid_axis(text: &str) -> Result<(usize, Axis)> {
    let bad = || Error::InvalidArgument(format!("expected AXIS=START:END:STEP, got {text:?}"));
    let (name, range) = text.split_once('=').ok_or_else(bad)?;
    let index = match name.trim() {
        "a" => 0,
        "b" => 1,
        "c" => 2,
        "d" => 3,
        _ => return Err(bad()),
    };
    let parts: Vec<&str> = range.split(':').collect();
    let axis = match parts[..] {
        [v] => Axis::Fixed(parse_number(v)?),
        [s, e, st] => Axis::Range { start: parse_number(s)?, end: parse_number(e)?, step: parse_number(st)? },
        _ => return Err(bad()),
    };
    Ok((index, axis))
}
