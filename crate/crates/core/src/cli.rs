//! Command-line front end: `eval`, `table` and `verify`.
//!
//! Exit status: 0 success, 1 verification failure, 2 usage error,
//! 3 evaluation error. Results go to `out`, diagnostics to `err`.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::airy_quad::{airy_cos_integral, airy_series, airy_sin_integral, xi_form_cos, xi_form_xsin, QuadSpec};
use crate::error::{Error, Result};
use crate::eval::Evaluation;
use crate::special::{bessel_i, bessel_j, bessel_k, bessel_k_oracle, gamma, parse_real, Order, SeriesOptions};
use crate::verifier::{run_suite, GridSpec, IdentityId, Spacing, SuiteConfig, SuiteVerdict, Tolerance};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_EVAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "airy-bessel", version, about = "Airy integrals and fractional-order Bessel functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate one function at one point: `eval K 1/3 1.0`, `eval airy 0`.
    Eval {
        /// K, I, J, K-oracle (need an order), gamma, airy, airy-sin, airy-series, xi-cos, xi-xsin, K13, K23
        function: String,
        /// Order for K, I, J, K-oracle, otherwise the point; accepts p/q.
        #[arg(allow_hyphen_values = true)]
        first: String,
        /// The point, when an order was given.
        #[arg(allow_hyphen_values = true)]
        second: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Tabulate a function over a grid.
    Table(TableArgs),
    /// Run the identity verification suite.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
struct TableArgs {
    function: String,
    /// Order, for K, I, J and K-oracle.
    #[arg(allow_hyphen_values = true)]
    order: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    from: String,
    #[arg(long, allow_hyphen_values = true)]
    to: String,
    #[arg(long)]
    n: usize,
    /// Logarithmic spacing.
    #[arg(long)]
    log: bool,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Restrict to one identity; repeatable.
    #[arg(long, value_parser = parse_identity)]
    only: Vec<IdentityId>,
    #[arg(long)]
    atol: Option<f64>,
    /// Alone, also sets atol = 1e-4·rtol.
    #[arg(long)]
    rtol: Option<f64>,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Print every report, not only the per-identity summary (table format).
    #[arg(long)]
    full: bool,
}

fn parse_identity(s: &str) -> std::result::Result<IdentityId, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Csv,
    Json,
}

/// Functions reachable from `eval` and `table`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Function {
    K,
    KOracle,
    I,
    J,
    Gamma,
    Airy,
    AirySin,
    AirySeries,
    XiCos,
    XiXsin,
    K13,
    K23,
}

impl Function {
    const NAMES: [(&'static str, Function); 12] = [
        ("K", Function::K),
        ("K-oracle", Function::KOracle),
        ("I", Function::I),
        ("J", Function::J),
        ("gamma", Function::Gamma),
        ("airy", Function::Airy),
        ("airy-sin", Function::AirySin),
        ("airy-series", Function::AirySeries),
        ("xi-cos", Function::XiCos),
        ("xi-xsin", Function::XiXsin),
        ("K13", Function::K13),
        ("K23", Function::K23),
    ];

    fn parse(name: &str) -> Option<Function> {
        Function::NAMES.iter().find(|(n, _)| n.eq_ignore_ascii_case(name)).map(|&(_, f)| f)
    }

    fn needs_order(self) -> bool {
        matches!(self, Function::K | Function::KOracle | Function::I | Function::J)
    }

    /// Column name of the abscissa in tables.
    fn variable(self) -> &'static str {
        match self {
            Function::Airy | Function::AirySin | Function::AirySeries => "rho",
            Function::XiCos | Function::XiXsin => "xi",
            _ => "x",
        }
    }

    fn eval(self, order: Option<Order>, x: f64) -> Result<Evaluation> {
        let spec = QuadSpec::default();
        let opts = SeriesOptions::default();
        let nu = || order.ok_or_else(|| Error::InvalidArgument("missing order".into()));
        match self {
            Function::K => bessel_k(nu()?, x),
            Function::KOracle => bessel_k_oracle(nu()?, x),
            Function::I => bessel_i(nu()?, x, opts),
            Function::J => bessel_j(nu()?, x, opts),
            Function::Gamma => gamma(x),
            Function::Airy => airy_cos_integral(x, &spec),
            Function::AirySin => airy_sin_integral(x, &spec),
            Function::AirySeries => airy_series(x, 400),
            Function::XiCos => xi_form_cos(x, &spec),
            Function::XiXsin => xi_form_xsin(x, &spec),
            Function::K13 => bessel_k(Order::one_third(), x),
            Function::K23 => bessel_k(Order::two_thirds(), x),
        }
    }
}

struct Usage(String);

impl From<Error> for Usage {
    fn from(e: Error) -> Self {
        Usage(e.to_string())
    }
}

fn function_and_order(name: &str, order: Option<&str>) -> std::result::Result<(Function, Option<Order>), Usage> {
    let f = Function::parse(name).ok_or_else(|| {
        let known: Vec<&str> = Function::NAMES.iter().map(|(n, _)| *n).collect();
        Usage(format!("unknown function '{name}'; known: {}", known.join(", ")))
    })?;
    match (f.needs_order(), order) {
        (true, Some(o)) => Ok((f, Some(o.parse()?))),
        (true, None) => Err(Usage(format!("{name} needs an order, e.g. 1/3"))),
        (false, None) => Ok((f, None)),
        (false, Some(o)) => Err(Usage(format!("{name} takes no order, got '{o}'"))),
    }
}

/// 12 significant digits, fixed notation where that stays readable.
fn sig12(v: f64) -> String {
    let a = v.abs();
    if v == 0.0 || (1e-4..1e6).contains(&a) {
        let digits = 11 - a.log10().floor().max(-4.0) as i32;
        let digits = if v == 0.0 { 11 } else { digits.max(0) as usize };
        format!("{v:.digits$}")
    } else {
        format!("{v:.11e}")
    }
}

/// 17 significant digits, enough to round-trip any double.
fn sig17(v: f64) -> String {
    format!("{v:.16e}")
}

/// Parses `args` with clap and runs the command.
pub fn run<I, T, O, E>(args: I, out: &mut O, err: &mut E) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
    O: Write,
    E: Write,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    let result = match cli.command {
        Command::Eval { function, first, second, format } => {
            let args: Vec<String> = std::iter::once(first).chain(second).collect();
            cmd_eval(&function, &args, format, out)
        }
        Command::Table(t) => cmd_table(&t, out),
        Command::Verify(v) => cmd_verify(&v, out),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_USAGE
        }
        Err(Failure::Eval(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_EVAL
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_EVAL
        }
    }
}

enum Failure {
    Usage(String),
    Eval(Error),
    Io(String),
}

impl From<Usage> for Failure {
    fn from(u: Usage) -> Self {
        Failure::Usage(u.0)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

fn parse_point(s: &str) -> std::result::Result<f64, Usage> {
    Ok(parse_real(s)?)
}

fn cmd_eval<W: Write>(name: &str, args: &[String], format: Format, out: &mut W) -> std::result::Result<i32, Failure> {
    let f = Function::parse(name).ok_or_else(|| function_and_order(name, None).err().unwrap())?;
    let (order, point) = match (f.needs_order(), args) {
        (true, [o, p]) => (Some(o.as_str()), p),
        (false, [p]) => (None, p),
        (true, _) => return Err(Failure::Usage(format!("usage: eval {name} <order> <point>"))),
        (false, _) => return Err(Failure::Usage(format!("usage: eval {name} <point>"))),
    };
    let (f, order) = function_and_order(name, order)?;
    let x = parse_point(point)?;
    let e = f.eval(order, x).map_err(Failure::Eval)?;
    match format {
        Format::Table => writeln!(out, "{}  (abs_err {:.1e})", sig12(e.value), e.abs_error)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record([f.variable(), "value", "abs_err"])?;
            w.write_record([sig17(x), sig17(e.value), sig17(e.abs_error)])?;
            w.flush()?;
        }
        Format::Json => {
            let mut row = BTreeMap::new();
            row.insert(f.variable(), x);
            row.insert("value", e.value);
            row.insert("abs_err", e.abs_error);
            if let Some(o) = order {
                row.insert("order", o.nu());
            }
            writeln!(out, "{}", serde_json::to_string(&row)?)?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_table<W: Write>(t: &TableArgs, out: &mut W) -> std::result::Result<i32, Failure> {
    let (f, order) = function_and_order(&t.function, t.order.as_deref())?;
    let spacing = if t.log { Spacing::Logarithmic } else { Spacing::Linear };
    let grid = GridSpec::new(parse_point(&t.from)?, parse_point(&t.to)?, t.n, spacing).map_err(Usage::from)?;
    let var = f.variable();
    let mut rows = Vec::with_capacity(grid.count);
    for x in grid.points() {
        rows.push((x, f.eval(order, x).map_err(Failure::Eval)?));
    }
    match t.format {
        Format::Table => {
            writeln!(out, "{var:>20}  {:>20}  {:>10}", "value", "abs_err")?;
            for (x, e) in &rows {
                writeln!(out, "{:>20}  {:>20}  {:>10.1e}", sig12(*x), sig12(e.value), e.abs_error)?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record([var, "value", "abs_err"])?;
            for (x, e) in &rows {
                w.write_record([sig17(*x), sig17(e.value), sig17(e.abs_error)])?;
            }
            w.flush()?;
        }
        Format::Json => {
            let objs: Vec<BTreeMap<&str, f64>> = rows
                .iter()
                .map(|(x, e)| BTreeMap::from([(var, *x), ("value", e.value), ("abs_err", e.abs_error)]))
                .collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&objs)?)?;
        }
    }
    Ok(EXIT_OK)
}

fn suite_config(v: &VerifyArgs) -> std::result::Result<SuiteConfig, Usage> {
    let tol = match (v.atol, v.rtol) {
        (None, None) => Tolerance::default(),
        (None, Some(r)) => Tolerance::from_rtol(r)?,
        (Some(a), None) => Tolerance::new(a, Tolerance::default().rtol)?,
        (Some(a), Some(r)) => Tolerance::new(a, r)?,
    };
    Ok(SuiteConfig::default().with_tolerance(tol).with_only(&v.only))
}

fn write_summary<W: Write>(v: &SuiteVerdict, full: bool, out: &mut W) -> std::io::Result<()> {
    writeln!(out, "{:<26} {:>6} {:>6} {:>12} {:>12}", "identity", "total", "failed", "worst_abs", "worst_rel")?;
    for s in &v.summaries {
        writeln!(
            out,
            "{:<26} {:>6} {:>6} {:>12.3e} {:>12.3e}",
            s.identity_id.as_str(),
            s.total,
            s.failed,
            s.worst_abs_err,
            s.worst_rel_err
        )?;
    }
    if full {
        writeln!(out)?;
        writeln!(
            out,
            "{:<26} {:>8} {:>14} {:>22} {:>22} {:>10} {:>10}  pass",
            "identity", "order", "point", "lhs", "rhs", "abs_err", "rel_err"
        )?;
        for r in &v.reports {
            let order = r.order.map(|o| format!("{o:.6}")).unwrap_or_else(|| "-".into());
            writeln!(
                out,
                "{:<26} {:>8} {:>14.6e} {:>22.15e} {:>22.15e} {:>10.2e} {:>10.2e}  {}",
                r.identity_id.as_str(),
                order,
                r.point,
                r.lhs,
                r.rhs,
                r.abs_err,
                r.rel_err,
                if r.pass { "yes" } else { "NO" }
            )?;
            if let Some(note) = &r.note {
                writeln!(out, "    {note}")?;
            }
        }
    }
    writeln!(out)?;
    writeln!(out, "{}: {} of {} checks passed", if v.pass { "PASS" } else { "FAIL" }, v.total - v.failed, v.total)
}

fn cmd_verify<W: Write>(v: &VerifyArgs, out: &mut W) -> std::result::Result<i32, Failure> {
    let config = suite_config(v)?;
    let verdict = run_suite(&config).map_err(|e| Failure::Usage(e.to_string()))?;
    match v.format {
        Format::Table => write_summary(&verdict, v.full, out)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            for r in &verdict.reports {
                w.serialize(r)?;
            }
            w.flush()?;
        }
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&verdict)?)?,
    }
    Ok(if verdict.pass { EXIT_OK } else { EXIT_VERIFY_FAILED })
}
