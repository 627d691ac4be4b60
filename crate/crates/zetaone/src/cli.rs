//! Command-line front end: one report per invocation, as text, JSON or CSV.
//!
//! Exit codes: 0 success, 1 domain/validation error, 2 numeric or capacity
//! error (a failing selftest criterion counts as a numeric error).

use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::bernoulli::{bernoulli, zeta_even_exact};
use crate::closed::{
    zeta_minus_one_even, zeta_minus_one_real, zeta_plus_one_even, zeta_plus_one_real,
};
use crate::error::{Error, Result};
use crate::report::{ContourReport, EvalResult, IdentityId, IdentityReport, Kernel, Method};
use crate::residue::verify;
use crate::selftest::{run_all, run_criterion, CriterionReport};
use crate::series::{
    euler_goldbach_partial, even_sum_partial, shallit_zikan_partial, zeta_int_series_with_cap,
    zeta_minus_one_series_with_cap, zeta_mod_sum_partial, zeta_plus_one_series_with_cap,
    DEFAULT_TERM_CAP,
};

pub const SCHEMA_VERSION: &str = "1";

/// Run configuration parsed from the command line.
#[derive(Debug, Parser)]
#[command(
    name = "zetaone",
    version,
    about = "Zeta-plus-one and zeta-minus-one functions at even integers: closed forms, series oracles, residue verification"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format (csv is available for `table` and `bernoulli`).
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the report to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate zeta, zp1 or zm1 at an integer argument s >= 2.
    Eval {
        #[arg(long = "fn", value_enum)]
        func: Func,
        #[arg(long)]
        s: u32,
        #[arg(long, value_enum)]
        method: MethodArg,
        /// Series tolerance (series method only).
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Both functions, closed form and series side by side, over even s.
    Table {
        #[arg(long, default_value_t = 2)]
        s_min: u32,
        #[arg(long, default_value_t = 12)]
        s_max: u32,
        #[arg(long, default_value_t = 1e-7)]
        tol: f64,
    },
    /// Check a summation identity at a finite limit.
    Identity {
        #[arg(long, value_enum)]
        id: IdentityArg,
        /// K for the zeta sums, P for euler_goldbach.
        #[arg(long)]
        limit: u64,
        /// Half-order m (zeta2mk_sum only).
        #[arg(long)]
        m: Option<u32>,
    },
    /// Verify the residue theorem for one kernel on the square contour C(N).
    Verify {
        #[arg(long = "fn", value_enum)]
        func: KernelArg,
        #[arg(long)]
        m: u32,
        #[arg(long = "N")]
        n: u32,
    },
    /// Print Bernoulli numbers (one index or a range from 0).
    Bernoulli {
        #[arg(long, conflicts_with = "upto")]
        n: Option<u32>,
        #[arg(long)]
        upto: Option<u32>,
    },
    /// Run the acceptance grid (all criteria, or one).
    Selftest {
        #[arg(long)]
        criterion: Option<u32>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Func {
    Zeta,
    Zp1,
    Zm1,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MethodArg {
    Closed,
    Real,
    Series,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KernelArg {
    F,
    G,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum IdentityArg {
    #[value(name = "euler_goldbach")]
    EulerGoldbach,
    #[value(name = "shallit_zikan")]
    ShallitZikan,
    #[value(name = "even_sum_3_4")]
    EvenSum34,
    #[value(name = "zeta4k_sum")]
    Zeta4kSum,
    #[value(name = "zeta2mk_sum")]
    Zeta2mkSum,
}

/// Every JSON report is a single object with this envelope.
#[derive(Debug, Serialize, Deserialize)]
pub struct Envelope<T> {
    pub schema_version: String,
    pub kind: String,
    pub report: T,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct EvalReport {
    pub function: String,
    pub s: u32,
    pub result: EvalResult,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct TableRow {
    pub s: u32,
    pub zp1_closed: f64,
    pub zp1_series: f64,
    pub zm1_closed: f64,
    pub zm1_series: f64,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct TableReport {
    pub tol: f64,
    pub rows: Vec<TableRow>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct BernoulliEntry {
    pub n: u32,
    pub value: String,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct BernoulliReport {
    pub entries: Vec<BernoulliEntry>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct SelftestReport {
    pub passed: bool,
    pub criteria: Vec<CriterionReport>,
}

/// Entry point; returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(outcome) => {
            if let Err(io) = emit(cli.out.as_deref(), &outcome.rendered) {
                eprintln!("error: cannot write output: {io}");
                return 2;
            }
            outcome.exit_code
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

struct Outcome {
    rendered: String,
    exit_code: i32,
}

fn ok(rendered: String) -> Result<Outcome> {
    Ok(Outcome {
        rendered,
        exit_code: 0,
    })
}

fn emit(out: Option<&std::path::Path>, rendered: &str) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, rendered),
        None => {
            print!("{rendered}");
            Ok(())
        }
    }
}

fn term_cap() -> u64 {
    std::env::var("ZETAONE_TERM_CAP")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_TERM_CAP)
}

/// Fixed 12 significant digits for text output.
fn sig12(v: f64) -> String {
    format!("{v:.11e}")
}

fn sig12_complex(z: num_complex::Complex64) -> String {
    let sign = if z.im.is_sign_negative() { '-' } else { '+' };
    format!("{} {} {}i", sig12(z.re), sign, sig12(z.im.abs()))
}

fn to_json<T: Serialize>(kind: &str, report: T) -> String {
    let envelope = Envelope {
        schema_version: SCHEMA_VERSION.to_string(),
        kind: kind.to_string(),
        report,
    };
    let mut s = serde_json::to_string_pretty(&envelope).expect("reports serialize");
    s.push('\n');
    s
}

fn csv_unsupported(command: &str) -> Error {
    Error::Domain(format!(
        "csv output is only available for table and bernoulli, not {command}"
    ))
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Eval {
            func,
            s,
            method,
            tol,
        } => {
            let result = evaluate(*func, *s, *method, *tol)?;
            let name = func_name(*func);
            match cli.format {
                Format::Text => ok(format!(
                    "{name}({s})  method={}  value={}  error_bound={:.3e}  terms_used={}  residual_imag={:.3e}\n",
                    method_name(result.method),
                    sig12(result.value),
                    result.error_bound,
                    result.terms_used,
                    result.residual_imag,
                )),
                Format::Json => ok(to_json(
                    "eval",
                    EvalReport {
                        function: name.to_string(),
                        s: *s,
                        result,
                    },
                )),
                Format::Csv => Err(csv_unsupported("eval")),
            }
        }
        Command::Table { s_min, s_max, tol } => {
            let report = build_table(*s_min, *s_max, *tol)?;
            match cli.format {
                Format::Text => {
                    let mut text = format!(
                        "{:>4}  {:>20}  {:>20}  {:>20}  {:>20}\n",
                        "s", "zp1_closed", "zp1_series", "zm1_closed", "zm1_series"
                    );
                    for row in &report.rows {
                        text.push_str(&format!(
                            "{:>4}  {:>20}  {:>20}  {:>20}  {:>20}\n",
                            row.s,
                            sig12(row.zp1_closed),
                            sig12(row.zp1_series),
                            sig12(row.zm1_closed),
                            sig12(row.zm1_series)
                        ));
                    }
                    ok(text)
                }
                Format::Json => ok(to_json("table", report)),
                Format::Csv => {
                    let mut text = String::from("s,zp1_closed,zp1_series,zm1_closed,zm1_series\n");
                    for row in &report.rows {
                        text.push_str(&format!(
                            "{},{},{},{},{}\n",
                            row.s, row.zp1_closed, row.zp1_series, row.zm1_closed, row.zm1_series
                        ));
                    }
                    ok(text)
                }
            }
        }
        Command::Identity { id, limit, m } => {
            let report = run_identity(*id, *limit, *m)?;
            match cli.format {
                Format::Text => ok(format!(
                    "identity={}  partial_sum={}  target={}  residual={:.3e}  tail_bound={:.3e}\n",
                    identity_name(report.identity_id),
                    sig12(report.partial_sum),
                    sig12(report.target),
                    report.residual,
                    report.tail_bound,
                )),
                Format::Json => ok(to_json("identity", report)),
                Format::Csv => Err(csv_unsupported("identity")),
            }
        }
        Command::Verify { func, m, n } => {
            let kernel = match func {
                KernelArg::F => Kernel::F,
                KernelArg::G => Kernel::G,
            };
            let report: ContourReport = verify(kernel, *m, *n)?;
            match cli.format {
                Format::Text => ok(format!(
                    "fn={}  m={}  N={}  passed={}  integral={}  residue_sum_times_2pi_i={}  integral_bound={}\n",
                    report.function_id,
                    report.m,
                    report.n,
                    report.passed,
                    sig12_complex(report.integral),
                    sig12_complex(report.residue_sum_times_2pi_i),
                    sig12(report.integral_bound),
                )),
                Format::Json => ok(to_json("contour", report)),
                Format::Csv => Err(csv_unsupported("verify")),
            }
        }
        Command::Bernoulli { n, upto } => {
            let indices: Vec<u32> = match (n, upto) {
                (Some(n), None) => vec![*n],
                (None, Some(hi)) => (0..=*hi).collect(),
                (None, None) => {
                    return Err(Error::Domain(
                        "bernoulli needs either --n <index> or --upto <max>".into(),
                    ))
                }
                (Some(_), Some(_)) => unreachable!("clap conflicts_with"),
            };
            let mut entries = Vec::with_capacity(indices.len());
            for i in indices {
                entries.push(BernoulliEntry {
                    n: i,
                    value: bernoulli(i)?.to_string(),
                });
            }
            let report = BernoulliReport { entries };
            match cli.format {
                Format::Text => {
                    let mut text = String::new();
                    for e in &report.entries {
                        text.push_str(&format!("B_{} = {}\n", e.n, e.value));
                    }
                    ok(text)
                }
                Format::Json => ok(to_json("bernoulli", report)),
                Format::Csv => {
                    let mut text = String::from("n,value\n");
                    for e in &report.entries {
                        text.push_str(&format!("{},{}\n", e.n, e.value));
                    }
                    ok(text)
                }
            }
        }
        Command::Selftest { criterion } => {
            let criteria = match criterion {
                Some(id) => vec![run_criterion(*id)],
                None => run_all(),
            };
            let passed = criteria.iter().all(|c| c.passed);
            let exit_code = if passed { 0 } else { 2 };
            let rendered = match cli.format {
                Format::Text => {
                    let mut text = String::new();
                    for c in &criteria {
                        text.push_str(&c.line());
                        text.push('\n');
                    }
                    text.push_str(if passed {
                        "all criteria passed\n"
                    } else {
                        "FAILED\n"
                    });
                    text
                }
                Format::Json => to_json("selftest", SelftestReport { passed, criteria }),
                Format::Csv => return Err(csv_unsupported("selftest")),
            };
            Ok(Outcome {
                rendered,
                exit_code,
            })
        }
    }
}

fn func_name(func: Func) -> &'static str {
    match func {
        Func::Zeta => "zeta",
        Func::Zp1 => "zp1",
        Func::Zm1 => "zm1",
    }
}

fn method_name(method: Method) -> &'static str {
    match method {
        Method::ClosedForm => "closed_form",
        Method::RealForm => "real_form",
        Method::Series => "series",
    }
}

fn identity_name(id: IdentityId) -> &'static str {
    match id {
        IdentityId::EulerGoldbach => "euler_goldbach",
        IdentityId::ShallitZikan => "shallit_zikan",
        IdentityId::EvenSum34 => "even_sum_3_4",
        IdentityId::Zeta4kSum => "zeta4k_sum",
        IdentityId::Zeta2mkSum => "zeta2mk_sum",
    }
}

fn even_half(s: u32) -> Result<u32> {
    if s < 2 || s % 2 != 0 {
        return Err(Error::Domain(format!(
            "closed and real forms exist at even s >= 2 only, got s={s}; use --method series"
        )));
    }
    Ok(s / 2)
}

fn evaluate(func: Func, s: u32, method: MethodArg, tol: f64) -> Result<EvalResult> {
    let cap = term_cap();
    match (func, method) {
        (Func::Zeta, MethodArg::Closed) => {
            let exact = zeta_even_exact(even_half(s)?)?;
            let value = exact.value();
            Ok(EvalResult {
                value,
                method: Method::ClosedForm,
                error_bound: 4.0 * f64::EPSILON * value,
                terms_used: 0,
                residual_imag: 0.0,
            })
        }
        (Func::Zeta, MethodArg::Real) => Err(Error::Unsupported(
            "zeta has no separate real form; use --method closed".into(),
        )),
        (Func::Zeta, MethodArg::Series) => zeta_int_series_with_cap(s, tol, cap),
        (Func::Zp1, MethodArg::Closed) => zeta_plus_one_even(even_half(s)?),
        (Func::Zp1, MethodArg::Real) => zeta_plus_one_real(even_half(s)?),
        (Func::Zp1, MethodArg::Series) => zeta_plus_one_series_with_cap(s, tol, cap),
        (Func::Zm1, MethodArg::Closed) => zeta_minus_one_even(even_half(s)?),
        (Func::Zm1, MethodArg::Real) => zeta_minus_one_real(even_half(s)?),
        (Func::Zm1, MethodArg::Series) => zeta_minus_one_series_with_cap(s, tol, cap),
    }
}

fn build_table(s_min: u32, s_max: u32, tol: f64) -> Result<TableReport> {
    if s_min > s_max {
        return Err(Error::Domain(format!(
            "empty range: s_min={s_min} > s_max={s_max}"
        )));
    }
    let cap = term_cap();
    let mut rows = Vec::new();
    let mut s = s_min + s_min % 2;
    while s <= s_max {
        if s >= 2 {
            rows.push(TableRow {
                s,
                zp1_closed: zeta_plus_one_even(s / 2)?.value,
                zp1_series: zeta_plus_one_series_with_cap(s, tol, cap)?.value,
                zm1_closed: zeta_minus_one_even(s / 2)?.value,
                zm1_series: zeta_minus_one_series_with_cap(s, tol, cap)?.value,
            });
        }
        s += 2;
    }
    if rows.is_empty() {
        return Err(Error::Domain(format!(
            "no even s >= 2 in {s_min}..={s_max}"
        )));
    }
    Ok(TableReport { tol, rows })
}

fn run_identity(id: IdentityArg, limit: u64, m: Option<u32>) -> Result<IdentityReport> {
    let as_k = |limit: u64| -> Result<u32> {
        u32::try_from(limit).map_err(|_| Error::Domain(format!("limit {limit} is out of range")))
    };
    match id {
        IdentityArg::EulerGoldbach => euler_goldbach_partial(limit),
        IdentityArg::ShallitZikan => shallit_zikan_partial(as_k(limit)?),
        IdentityArg::EvenSum34 => even_sum_partial(as_k(limit)?),
        IdentityArg::Zeta4kSum => zeta_mod_sum_partial(2, as_k(limit)?),
        IdentityArg::Zeta2mkSum => {
            let m = m.ok_or_else(|| {
                Error::Domain("zeta2mk_sum needs --m to pick the half-order".into())
            })?;
            zeta_mod_sum_partial(m, as_k(limit)?)
        }
    }
}
