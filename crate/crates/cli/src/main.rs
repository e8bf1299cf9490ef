use std::fmt::Display;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use finsum::exact::{LaurentSeries, Rational, RationalFunction, Scalar};
use finsum::genfun::{series_g, series_g_hypergeometric, series_g_special, SpecialG};
use finsum::identities::{run_all, run_identity, Family, SweepConfig};
use finsum::volkenborn::{convergence_report, Integrand};
use finsum::ynum::{oeis_a025529, y_algorithm1, y_direct, y_factored, y_recurrence_sequence, y_symbolic};

/// Exact finite-sum numbers y(n,λ) and the identities around them.
#[derive(Parser)]
#[command(name = "finsum", version)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// A single value y(n,λ).
    Y {
        #[arg(long)]
        n: usize,
        /// A rational p/q, or "symbolic".
        #[arg(long, value_parser = parse_lambda, allow_hyphen_values = true)]
        lambda: Option<LambdaArg>,
        #[arg(long, value_enum, default_value_t = Method::Direct)]
        method: Method,
    },
    /// y(0..=max, λ) as factored rational functions.
    Table {
        #[arg(long, default_value_t = 4)]
        max: usize,
    },
    /// Coefficients of a generating function through z^order.
    Series {
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long, default_value_t = 10)]
        order: i64,
        /// Required for G and 2f1; a rational p/q or "symbolic".
        #[arg(long, value_parser = parse_lambda, allow_hyphen_values = true)]
        lambda: Option<LambdaArg>,
    },
    /// Run the identity catalog.
    Verify {
        #[arg(long)]
        id: Option<String>,
        #[arg(long)]
        family: Option<Family>,
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Partial sums of a Volkenborn integral.
    Volkenborn {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        max_level: u32,
        #[arg(long)]
        integrand: Integrand,
        #[arg(long)]
        index: usize,
    },
    /// Terms of A025529 checked against y(n-1,λ).
    Oeis {
        #[arg(long, default_value_t = 11)]
        terms: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Direct,
    Alg1,
    Recurrence,
    Symbolic,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    #[value(name = "G")]
    G,
    G1,
    G2,
    G3,
    #[value(name = "2f1")]
    TwoF1,
}

#[derive(Clone)]
enum LambdaArg {
    Value(Rational),
    Symbolic,
}

impl Display for LambdaArg {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LambdaArg::Value(q) => q.fmt(f),
            LambdaArg::Symbolic => f.write_str("symbolic"),
        }
    }
}

fn parse_lambda(s: &str) -> Result<LambdaArg, String> {
    if s == "symbolic" {
        return Ok(LambdaArg::Symbolic);
    }
    let q: Rational = s.parse().map_err(|e| format!("{e}"))?;
    if q == 0 || q == 1 {
        return Err(format!("λ = {q} is a pole of y(n,λ)"));
    }
    Ok(LambdaArg::Value(q))
}

/// A tabular result: column names and rows of text cells.
struct Table {
    columns: Vec<&'static str>,
    rows: Vec<Vec<String>>,
}

impl Table {
    fn new(columns: &[&'static str]) -> Self {
        Table { columns: columns.to_vec(), rows: Vec::new() }
    }

    fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    fn json(&self) -> Value {
        let rows = self.rows.iter().map(|r| {
            let obj = self.columns.iter().zip(r).map(|(c, v)| (c.to_string(), Value::from(v.as_str())));
            Value::Object(obj.collect())
        });
        Value::Array(rows.collect())
    }

    fn csv(&self) -> Result<String, csv::Error> {
        let mut w = csv::WriterBuilder::new()
            .quote_style(csv::QuoteStyle::Always)
            .from_writer(Vec::new());
        w.write_record(&self.columns)?;
        for r in &self.rows {
            w.write_record(r)?;
        }
        Ok(String::from_utf8(w.into_inner().map_err(|e| e.into_error())?).expect("utf-8"))
    }
}

enum Output {
    Text(String),
    Rows { plain: String, table: Table, json: Option<Value> },
}

struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Display) -> Failure {
    let mut cmd = Cli::command();
    let err = cmd.error(ErrorKind::ValueValidation, message);
    Failure { code: 2, message: err.render().to_string() }
}

fn y_value<F: Scalar>(n: usize, lambda: &F, method: Method) -> Result<F, String> {
    let r = match method {
        Method::Direct => y_direct(n, lambda),
        Method::Alg1 => y_algorithm1(n, lambda),
        Method::Recurrence => y_recurrence_sequence(n, lambda).map(|mut v| v.pop().expect("n+1 terms")),
        Method::Symbolic => unreachable!("handled by the caller"),
    };
    r.map_err(|e| e.to_string())
}

fn cmd_y(n: usize, lambda: Option<LambdaArg>, method: Method) -> Result<Output, Failure> {
    let value = match (method, &lambda) {
        (Method::Symbolic, None | Some(LambdaArg::Symbolic)) => y_symbolic(n).to_string(),
        (Method::Symbolic, Some(LambdaArg::Value(q))) => {
            y_symbolic(n).eval(q).ok_or_else(|| usage("λ is a pole"))?.to_string()
        }
        (_, None) => return Err(usage("--lambda is required unless --method symbolic")),
        (_, Some(LambdaArg::Value(q))) => y_value(n, q, method).map_err(usage)?.to_string(),
        (_, Some(LambdaArg::Symbolic)) => {
            y_value(n, &RationalFunction::var(), method).map_err(usage)?.to_string()
        }
    };
    let lambda = lambda.map_or("symbolic".to_string(), |l| l.to_string());
    let method = Method::to_possible_value(&method).expect("not skipped").get_name().to_string();
    let mut table = Table::new(&["n", "lambda", "method", "value"]);
    table.push(vec![n.to_string(), lambda, method, value.clone()]);
    Ok(Output::Rows { plain: value + "\n", table, json: None })
}

fn cmd_table(max: usize) -> Output {
    let mut table = Table::new(&["n", "y"]);
    let mut plain = String::new();
    for n in 0..=max {
        let y = y_factored(n);
        plain += &format!("y({n},L) = {y}\n");
        table.push(vec![n.to_string(), y]);
    }
    Output::Rows { plain, table, json: None }
}

fn series_rows<F: Scalar>(s: &LaurentSeries<F>, order: i64) -> Output {
    let mut table = Table::new(&["k", "coefficient"]);
    let mut plain = String::new();
    let from = s.valuation().unwrap_or(0).min(0);
    for k in from..=order.min(s.order()) {
        let c = s.coeff(k).expect("within precision");
        plain += &format!("z^{k}: {c}\n");
        table.push(vec![k.to_string(), c.to_string()]);
    }
    Output::Rows { plain, table, json: None }
}

fn cmd_series(which: Which, order: i64, lambda: Option<LambdaArg>) -> Result<Output, Failure> {
    if order < 0 {
        return Err(usage("--order must be non-negative"));
    }
    let special = match which {
        Which::G1 => Some(SpecialG::G1),
        Which::G2 => Some(SpecialG::G2),
        Which::G3 => Some(SpecialG::G3),
        Which::G | Which::TwoF1 => None,
    };
    if let Some(s) = special {
        if lambda.is_some() {
            return Err(usage("--lambda does not apply to g1, g2, g3"));
        }
        return Ok(series_rows(&series_g_special(s, order), order));
    }
    let hyper = which == Which::TwoF1;
    match lambda {
        None => Err(usage("--lambda is required for G and 2f1")),
        Some(LambdaArg::Value(q)) => {
            let s = if hyper { series_g_hypergeometric(&q, order) } else { series_g(&q, order) };
            Ok(series_rows(&s.map_err(usage)?, order))
        }
        Some(LambdaArg::Symbolic) => {
            let l = RationalFunction::var();
            let s = if hyper { series_g_hypergeometric(&l, order) } else { series_g(&l, order) };
            Ok(series_rows(&s.map_err(usage)?, order))
        }
    }
}

fn cmd_verify(
    id: Option<String>,
    family: Option<Family>,
    max_n: Option<usize>,
    format: Format,
) -> Result<(Output, bool), Failure> {
    let config = SweepConfig { max_n, family, ..SweepConfig::default() };
    let report = match id {
        Some(id) => run_identity(&id, &config).map_err(usage)?,
        None => run_all(&config),
    };
    let ok = report.all_passed();
    let out = match format {
        Format::Json => Output::Text(report.to_json() + "\n"),
        Format::Plain => Output::Text(report.to_table()),
        Format::Csv => {
            let mut table = Table::new(&["id", "family", "status", "swept", "passed"]);
            for r in &report.records {
                table.push(vec![
                    r.id.clone(),
                    r.family.to_string(),
                    r.status.to_string(),
                    r.swept.to_string(),
                    r.passed.to_string(),
                ]);
            }
            Output::Rows { plain: String::new(), table, json: None }
        }
    };
    Ok((out, ok))
}

fn cmd_volkenborn(p: u64, max_level: u32, integrand: Integrand, index: usize) -> Result<Output, Failure> {
    if max_level == 0 {
        return Err(usage("--max-level must be at least 1"));
    }
    let report = convergence_report(integrand, index, p, 1..=max_level).map_err(usage)?;
    let cols = ["p", "N", "integrand", "index", "partial_sum", "limit", "valuation"];
    let mut table = Table::new(&cols);
    let mut plain = format!("{:>2}  {:>9}  partial sum / limit\n", "N", "valuation");
    for s in &report.samples {
        plain += &format!("{:>2}  {:>9}  {} / {}\n", s.level, s.error_valuation, s.partial_sum, s.limit);
        table.push(vec![
            s.p.to_string(),
            s.level.to_string(),
            s.integrand.to_string(),
            s.index.to_string(),
            s.partial_sum.to_string(),
            s.limit.to_string(),
            s.error_valuation.to_string(),
        ]);
    }
    // JSON rows keep the library's own serialization, with numeric p, N and valuation.
    let json = serde_json::to_value(&report.samples).expect("samples serialize");
    Ok(Output::Rows { plain, table, json: Some(json) })
}

fn cmd_oeis(terms: usize) -> Result<Output, Failure> {
    let list = oeis_a025529(terms).map_err(|e| Failure { code: 1, message: e.to_string() })?;
    let mut table = Table::new(&["n", "term", "leading"]);
    for t in &list {
        table.push(vec![t.n.to_string(), t.formula.to_string(), t.leading.to_string()]);
    }
    let plain: Vec<String> = list.iter().map(|t| t.formula.to_string()).collect();
    Ok(Output::Rows { plain: plain.join(" ") + "\n", table, json: None })
}

fn render(out: Output, format: Format) -> Result<String, Failure> {
    Ok(match out {
        Output::Text(s) => s,
        Output::Rows { plain, table, json } => match format {
            Format::Plain => plain,
            Format::Json => {
                let v = json.unwrap_or_else(|| table.json());
                serde_json::to_string_pretty(&v).expect("json") + "\n"
            }
            Format::Csv => table.csv().map_err(|e| Failure { code: 1, message: e.to_string() })?,
        },
    })
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(v) = std::env::var("FINSUM_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| usage(format!("FINSUM_THREADS must be a positive integer, got {v:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Failure { code: 1, message: e.to_string() })
}

fn run(cli: Cli) -> Result<bool, Failure> {
    configure_threads()?;
    let format = cli.format;
    let (out, ok) = match cli.command {
        Command::Y { n, lambda, method } => (cmd_y(n, lambda, method)?, true),
        Command::Table { max } => (cmd_table(max), true),
        Command::Series { which, order, lambda } => (cmd_series(which, order, lambda)?, true),
        Command::Verify { id, family, max_n } => cmd_verify(id, family, max_n, format)?,
        Command::Volkenborn { p, max_level, integrand, index } => {
            (cmd_volkenborn(p, max_level, integrand, index)?, true)
        }
        Command::Oeis { terms } => (cmd_oeis(terms)?, true),
    };
    let text = render(out, format)?;
    let io_err = |e: io::Error| Failure { code: 1, message: e.to_string() };
    match &cli.output {
        Some(path) => File::create(path).and_then(|mut f| f.write_all(text.as_bytes())).map_err(io_err)?,
        None => io::stdout().lock().write_all(text.as_bytes()).map_err(io_err)?,
    }
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let text = e.render().to_string();
            eprint!("{text}");
            if !text.contains("Usage:") {
                eprintln!("\n{}", Cli::command().render_usage());
            }
            return ExitCode::from(2);
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprint!("{}", f.message);
            if !f.message.ends_with('\n') {
                eprintln!();
            }
            ExitCode::from(f.code)
        }
    }
}
