//! The `qbe` command line: `table`, `verify` and `limit`.
//!
//! Every command writes one JSON document `{ "meta": {...}, "payload": ... }`
//! (or CSV/LaTeX for tables). Rationals are always strings `"p/q"`.
//!
//! Exit codes: 0 success, 1 failed identity checks, 2 argument errors,
//! 3 domain errors such as `q = 1`.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::identities::{self, ledger, Grid, IdentityReport, StirlingVerdict, Suite, Verifier};
use crate::limit::{classical_limit, LimitStudy};
use crate::poly::Poly2;
use crate::qcore::{Deformation, QParam};
use crate::qspecial::{build_table, classical_stirling2, q_bernstein, q_stirling2, Family};
use crate::rational::{format_rational, parse_rational, serde_rational_opt, Rational};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED_CHECKS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "qbe",
    version,
    about = "Exact q-Bernoulli and q-Euler polynomials"
)]
pub struct Cli {
    /// Omit the metadata block so output is byte-for-byte reproducible.
    #[arg(long, global = true)]
    pub no_meta: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a table of one family.
    Table(TableArgs),
    /// Run identity checks over a parameter grid.
    Verify(VerifyArgs),
    /// Compare a q-polynomial with its classical limit along a q sequence.
    Limit(LimitArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TableFamily {
    Qbernoulli,
    Qeuler,
    Qstirling,
    Qbernstein,
    ClassicalBernoulli,
    ClassicalEuler,
    Stirling2,
}

impl TableFamily {
    fn needs_q(self) -> bool {
        matches!(
            self,
            TableFamily::Qbernoulli
                | TableFamily::Qeuler
                | TableFamily::Qstirling
                | TableFamily::Qbernstein
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Json,
    Csv,
    Latex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum JsonFormat {
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LimitFamily {
    Qbernoulli,
    Qeuler,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, value_enum)]
    pub family: TableFamily,
    /// Order of the polynomials; for `qbernstein`, the basis index `k`.
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: Option<i64>,
    #[arg(long, default_value_t = 8)]
    pub n_max: usize,
    #[arg(long, value_parser = rational_arg)]
    pub q: Option<Rational>,
    #[arg(long, value_enum, default_value_t = TableFormat::Json)]
    pub format: TableFormat,
    #[arg(long)]
    pub out: Option<String>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value = "all")]
    pub suite: Suite,
    #[arg(long, default_value_t = 8)]
    pub n_max: usize,
    #[arg(
        long,
        value_delimiter = ',',
        allow_negative_numbers = true,
        default_value = "1,2,3"
    )]
    pub alpha_set: Vec<i64>,
    #[arg(long, value_delimiter = ',', default_value = "1,2,3")]
    pub m_set: Vec<u32>,
    #[arg(long, value_delimiter = ',', value_parser = rational_arg, default_value = "1/2,1/3,3/4")]
    pub q_set: Vec<Rational>,
    #[arg(long, value_enum, default_value_t = JsonFormat::Json)]
    pub format: JsonFormat,
    #[arg(long)]
    pub out: Option<String>,
}

#[derive(Debug, Args)]
pub struct LimitArgs {
    #[arg(long, value_enum)]
    pub family: LimitFamily,
    #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
    pub alpha: i64,
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_parser = rational_arg, default_value = "0", allow_negative_numbers = true)]
    pub x: Rational,
    #[arg(long, value_delimiter = ',', value_parser = rational_arg, default_value = "9/10,99/100,999/1000")]
    pub q_seq: Vec<Rational>,
    #[arg(long, value_enum, default_value_t = JsonFormat::Json)]
    pub format: JsonFormat,
    #[arg(long)]
    pub out: Option<String>,
}

fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

/// A command failure, mapped onto an exit code.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Domain(_) => EXIT_DOMAIN,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Domain(m) => m,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidGrid(_) | Error::ParseRational(_) | Error::NegativeArgument { .. } => {
                CliError::Usage(e.to_string())
            }
            _ => CliError::Domain(e.to_string()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Meta {
    pub version: String,
    pub command: String,
    /// Seconds since the Unix epoch.
    pub timestamp: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputDocument<P> {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub meta: Option<Meta>,
    pub payload: P,
}

/// One row of a table: a polynomial entry, or a single number.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableRow {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub poly: Option<Poly2>,
    #[serde(
        with = "serde_rational_opt",
        skip_serializing_if = "Option::is_none",
        default
    )]
    pub value: Option<Rational>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TablePayload {
    pub family: TableFamily,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub alpha: Option<i64>,
    #[serde(
        with = "serde_rational_opt",
        skip_serializing_if = "Option::is_none",
        default
    )]
    pub q: Option<Rational>,
    pub n_max: usize,
    pub rows: Vec<TableRow>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridSummary {
    pub n_max: usize,
    pub alpha_set: Vec<i64>,
    pub m_set: Vec<u32>,
    pub q_set: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifySummary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub verdict_only: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyPayload {
    pub suite: String,
    pub grid: GridSummary,
    pub summary: VerifySummary,
    /// Ledger entries behind every `correction_applied` in `reports`.
    pub corrections: Vec<ledger::Correction>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub stirling_verdicts: Vec<StirlingVerdict>,
    pub reports: Vec<IdentityReport>,
}

/// Runs `qbe` with `args` (including the program name), writing the result
/// to `stdout` (or `--out`) and diagnostics to `stderr`. Returns the exit
/// code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                return EXIT_USAGE;
            }
            let _ = write!(stdout, "{text}");
            return EXIT_OK;
        }
    };
    let command_line = args
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect::<Vec<_>>()
        .join(" ");
    let meta = (!cli.no_meta).then(|| Meta {
        version: env!("CARGO_PKG_VERSION").to_string(),
        command: command_line,
        timestamp: SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0),
    });

    let result = match &cli.command {
        Command::Table(a) => cmd_table(a, meta, stderr).map(|text| (text, EXIT_OK, a.out.clone())),
        Command::Verify(a) => {
            cmd_verify(a, meta, stderr).map(|(text, code)| (text, code, a.out.clone()))
        }
        Command::Limit(a) => cmd_limit(a, meta, stderr).map(|text| (text, EXIT_OK, a.out.clone())),
    };
    match result {
        Ok((text, code, out)) => match emit(&text, out.as_deref(), stdout) {
            Ok(()) => code,
            Err(e) => {
                let _ = writeln!(stderr, "error: {e}");
                EXIT_USAGE
            }
        },
        Err(e) => {
            let _ = writeln!(stderr, "error: {}", e.message());
            e.code()
        }
    }
}

fn emit(text: &str, out: Option<&str>, stdout: &mut dyn Write) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text),
        None => stdout.write_all(text.as_bytes()),
    }
}

fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("payload serialises");
    s.push('\n');
    s
}

fn qparam(value: &Rational, stderr: &mut dyn Write) -> Result<QParam, CliError> {
    let q = QParam::new(value.clone())?;
    if !q.in_analytic_range() {
        let _ = writeln!(
            stderr,
            "warning: q = {q} lies outside (0, 1); series identities are formal only"
        );
    }
    Ok(q)
}

pub fn cmd_table(
    a: &TableArgs,
    meta: Option<Meta>,
    stderr: &mut dyn Write,
) -> Result<String, CliError> {
    let q = match (&a.q, a.family.needs_q()) {
        (Some(v), true) => Some(qparam(v, stderr)?),
        (None, true) => {
            return Err(CliError::Usage(format!(
                "--q is required for --family {}",
                a.family.to_possible_value().expect("named").get_name()
            )))
        }
        (_, false) => None,
    };
    let payload = build_table_payload(a.family, a.alpha, a.n_max, q.as_ref())?;
    Ok(match a.format {
        TableFormat::Json => to_json(&OutputDocument { meta, payload }),
        TableFormat::Csv => table_csv(&payload),
        TableFormat::Latex => table_latex(&payload),
    })
}

/// Builds the rows for `family`. `alpha` is the order for the polynomial
/// families (default 1) and the basis index `k` for `qbernstein` (default 0).
pub fn build_table_payload(
    family: TableFamily,
    alpha: Option<i64>,
    n_max: usize,
    q: Option<&QParam>,
) -> Result<TablePayload, CliError> {
    let poly_rows = |d: Deformation, kind: Family, alpha: i64| -> Result<Vec<TableRow>, CliError> {
        let t = build_table(&d, kind, alpha, n_max)?;
        Ok((0..=n_max)
            .map(|n| TableRow {
                n,
                k: None,
                poly: Some(t.entry(n).clone()),
                value: Some(t.number(n)),
            })
            .collect())
    };
    let triangle = |f: &dyn Fn(usize, usize) -> Rational| -> Vec<TableRow> {
        (0..=n_max)
            .flat_map(|n| (0..=n).map(move |k| (n, k)))
            .map(|(n, k)| TableRow {
                n,
                k: Some(k),
                poly: None,
                value: Some(f(n, k)),
            })
            .collect()
    };
    let q_def = || Deformation::Q(q.expect("checked by caller").clone());
    let (alpha_out, rows) = match family {
        TableFamily::Qbernoulli => {
            let al = alpha.unwrap_or(1);
            (Some(al), poly_rows(q_def(), Family::Bernoulli, al)?)
        }
        TableFamily::Qeuler => {
            let al = alpha.unwrap_or(1);
            (Some(al), poly_rows(q_def(), Family::Euler, al)?)
        }
        TableFamily::ClassicalBernoulli => {
            let al = alpha.unwrap_or(1);
            (
                Some(al),
                poly_rows(Deformation::Classical, Family::Bernoulli, al)?,
            )
        }
        TableFamily::ClassicalEuler => {
            let al = alpha.unwrap_or(1);
            (
                Some(al),
                poly_rows(Deformation::Classical, Family::Euler, al)?,
            )
        }
        TableFamily::Qstirling => {
            let q = q.expect("checked by caller");
            (None, triangle(&|n, k| q_stirling2(q, n, k)))
        }
        TableFamily::Stirling2 => (None, triangle(&|n, k| classical_stirling2(n, k))),
        TableFamily::Qbernstein => {
            let q = q.expect("checked by caller");
            let k = alpha.unwrap_or(0);
            if k < 0 {
                return Err(CliError::Usage(format!(
                    "--alpha is the basis index k for qbernstein and must be >= 0, got {k}"
                )));
            }
            let k = k as usize;
            let rows = (k..=n_max)
                .map(|n| {
                    Ok(TableRow {
                        n,
                        k: Some(k),
                        poly: Some(q_bernstein(q, n, k)?),
                        value: None,
                    })
                })
                .collect::<Result<Vec<_>, Error>>()?;
            (Some(k as i64), rows)
        }
    };
    Ok(TablePayload {
        family,
        alpha: alpha_out,
        q: q.map(|q| q.value().clone()),
        n_max,
        rows,
    })
}

/// Polynomial rows flatten to `n,[k,]dx,dy,coeff`; number rows to `n,[k,]value`.
pub fn table_csv(p: &TablePayload) -> String {
    let has_k = p.rows.iter().any(|r| r.k.is_some());
    let has_poly = p.rows.iter().any(|r| r.poly.is_some());
    let mut out = String::new();
    let lead = if has_k { "n,k" } else { "n" };
    let _ = writeln!(
        out,
        "{lead},{}",
        if has_poly { "dx,dy,coeff" } else { "value" }
    );
    for r in &p.rows {
        let key = match r.k {
            Some(k) if has_k => format!("{},{}", r.n, k),
            _ => r.n.to_string(),
        };
        match &r.poly {
            Some(poly) if poly.is_zero() => {
                let _ = writeln!(out, "{key},0,0,0");
            }
            Some(poly) => {
                for (dx, dy, c) in poly.terms() {
                    let _ = writeln!(out, "{key},{dx},{dy},{}", format_rational(c));
                }
            }
            None => {
                let v = r.value.as_ref().map(format_rational).unwrap_or_default();
                let _ = writeln!(out, "{key},{v}");
            }
        }
    }
    out
}

fn latex_rational_mag(r: &Rational) -> String {
    let r = r.abs();
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom())
    }
}

fn latex_rational(r: &Rational) -> String {
    if r.is_negative() {
        format!("-{}", latex_rational_mag(r))
    } else {
        latex_rational_mag(r)
    }
}

/// LaTeX for a polynomial, terms in the same order as its plain-text form.
pub fn latex_poly(p: &Poly2) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let var = |v: &str, d: u32| match d {
        0 => String::new(),
        1 => v.to_string(),
        _ => format!("{v}^{{{d}}}"),
    };
    let mut out = String::new();
    for (i, (dx, dy, c)) in p.terms().enumerate() {
        let neg = c.is_negative();
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mono = format!("{}{}", var("x", dx), var("y", dy));
        let mag = c.abs();
        if mono.is_empty() {
            out.push_str(&latex_rational_mag(&mag));
        } else {
            if mag != Rational::from_integer(1.into()) {
                out.push_str(&latex_rational_mag(&mag));
            }
            out.push_str(&mono);
        }
    }
    out
}

pub fn table_latex(p: &TablePayload) -> String {
    let order = p.alpha.map(|a| format!("^{{({a})}}")).unwrap_or_default();
    let lhs = |r: &TableRow| -> String {
        let n = r.n;
        let k = r.k.unwrap_or(0);
        match p.family {
            TableFamily::Qbernoulli => format!("\\mathfrak{{B}}_{{{n},q}}{order}(x,y)"),
            TableFamily::Qeuler => format!("\\mathfrak{{E}}_{{{n},q}}{order}(x,y)"),
            TableFamily::ClassicalBernoulli => format!("B_{{{n}}}{order}(x+y)"),
            TableFamily::ClassicalEuler => format!("E_{{{n}}}{order}(x+y)"),
            TableFamily::Qstirling => format!("S_{{2,q}}({n},{k})"),
            TableFamily::Stirling2 => format!("S_{{2}}({n},{k})"),
            TableFamily::Qbernstein => format!("b_{{{n},{k}}}(q;x)"),
        }
    };
    let mut out = String::new();
    if let Some(q) = &p.q {
        let _ = writeln!(out, "% q = {}", format_rational(q));
    }
    out.push_str("\\begin{align*}\n");
    let last = p.rows.len().saturating_sub(1);
    for (i, r) in p.rows.iter().enumerate() {
        let rhs = match (&r.poly, &r.value) {
            (Some(poly), _) => latex_poly(poly),
            (None, Some(v)) => latex_rational(v),
            (None, None) => String::new(),
        };
        let end = if i == last { "" } else { " \\\\" };
        let _ = writeln!(out, "{} &= {}{}", lhs(r), rhs, end);
    }
    out.push_str("\\end{align*}\n");
    out
}

/// Runs the suite and returns the JSON text plus the exit code.
pub fn cmd_verify(
    a: &VerifyArgs,
    meta: Option<Meta>,
    stderr: &mut dyn Write,
) -> Result<(String, i32), CliError> {
    let q_set = a
        .q_set
        .iter()
        .map(|v| qparam(v, stderr))
        .collect::<Result<Vec<_>, _>>()?;
    let grid = Grid::new(a.n_max, a.alpha_set.clone(), a.m_set.clone(), q_set)?;
    let payload = verify_payload(a.suite, grid)?;
    let code = if payload.summary.failed == 0 {
        EXIT_OK
    } else {
        let _ = writeln!(
            stderr,
            "{} identity check(s) failed",
            payload.summary.failed
        );
        EXIT_FAILED_CHECKS
    };
    Ok((to_json(&OutputDocument { meta, payload }), code))
}

pub fn verify_payload(suite: Suite, grid: Grid) -> Result<VerifyPayload, Error> {
    let grid_summary = GridSummary {
        n_max: grid.n_max,
        alpha_set: grid.alpha_set.clone(),
        m_set: grid.m_set.clone(),
        q_set: grid.q_set.iter().map(|q| q.to_string()).collect(),
    };
    let reports = Verifier::new(grid).run(suite)?;
    let failed = reports.iter().filter(|r| r.is_failure()).count();
    let verdict_only = reports.iter().filter(|r| r.verdict_only).count();
    let passed = reports.iter().filter(|r| r.pass && !r.verdict_only).count();
    let mut used: Vec<&str> = reports
        .iter()
        .filter_map(|r| r.correction_applied.as_deref())
        .flat_map(|s| s.split(','))
        .collect();
    used.sort_unstable();
    used.dedup();
    let corrections = ledger::TYPO_LEDGER
        .iter()
        .filter(|c| used.contains(&c.id))
        .copied()
        .collect();
    Ok(VerifyPayload {
        suite: suite.to_string(),
        grid: grid_summary,
        summary: VerifySummary {
            total: reports.len(),
            passed,
            failed,
            verdict_only,
        },
        corrections,
        stirling_verdicts: identities::stirling_verdicts(&reports),
        reports,
    })
}

pub fn cmd_limit(
    a: &LimitArgs,
    meta: Option<Meta>,
    stderr: &mut dyn Write,
) -> Result<String, CliError> {
    if a.q_seq.is_empty() {
        return Err(CliError::Usage("--q-seq must not be empty".into()));
    }
    let q_seq = a
        .q_seq
        .iter()
        .map(|v| qparam(v, stderr))
        .collect::<Result<Vec<_>, _>>()?;
    let kind = match a.family {
        LimitFamily::Qbernoulli => Family::Bernoulli,
        LimitFamily::Qeuler => Family::Euler,
    };
    let payload: LimitStudy = classical_limit(kind, a.alpha, a.n, &a.x, &q_seq)?;
    Ok(to_json(&OutputDocument { meta, payload }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("qbe").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn latex_poly_rendering() {
        let p = Poly2::from_terms([
            (0, 0, Rational::new((-2).into(), 3.into())),
            (2, 1, Rational::from_integer(1.into())),
        ]);
        assert_eq!(latex_poly(&p), "-\\frac{2}{3} + x^{2}y");
    }

    #[test]
    fn missing_q_is_usage_error() {
        let (code, _, err) = run_args(&["table", "--family", "qbernoulli"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("--q"));
    }

    #[test]
    fn q_one_is_domain_error() {
        let (code, _, _) = run_args(&["table", "--family", "qeuler", "--q", "1"]);
        assert_eq!(code, EXIT_DOMAIN);
    }

    #[test]
    fn q_outside_unit_interval_warns() {
        let (code, _, err) = run_args(&[
            "--no-meta",
            "table",
            "--family",
            "qeuler",
            "--n-max",
            "2",
            "--q",
            "2",
        ]);
        assert_eq!(code, EXIT_OK);
        assert!(err.contains("warning"));
    }

    #[test]
    fn meta_is_present_by_default() {
        let (_, out, _) = run_args(&["table", "--family", "stirling2", "--n-max", "2"]);
        assert!(out.contains("\"meta\""));
        let (_, out, _) = run_args(&[
            "--no-meta",
            "table",
            "--family",
            "stirling2",
            "--n-max",
            "2",
        ]);
        assert!(!out.contains("\"meta\""));
    }
}
