//! The `hpt` command line.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactalg::QPoly;
use crate::json::{big_to_value, poly_to_value};
use crate::sums::{power_sum, state_vector, ReducedForm, SystemVariant};
use crate::system::{recurrence_for_k_with, Recurrence};
use crate::triangle::{generate_rows, Row, TriangleParams, DEFAULT_ENTRY_CAP};
use crate::verify::{
    probe_conjecture, reproduce_tables, verify_grid, ConjectureFinding, FixtureStatus, GridConfig,
    TableReport, DEFAULT_CAP, DEFAULT_Q_LIST,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Form {
    /// Equations obtained by folding the full system.
    Folded,
    /// Reference equations transcribed verbatim.
    AsPrinted,
}

impl From<Form> for ReducedForm {
    fn from(f: Form) -> Self {
        match f {
            Form::Folded => ReducedForm::Folded,
            Form::AsPrinted => ReducedForm::AsPrinted,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "hpt",
    version,
    about = "Power sums of hyperbolic Pascal triangle rows and their recurrences"
)]
pub struct Cli {
    /// Write output to a file instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print one row of HPT_{4,q}.
    Row {
        #[arg(long)]
        q: i64,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_ENTRY_CAP)]
        cap: usize,
    },
    /// Print (s^k)_n for rows 1..=n-max.
    Sums {
        #[arg(long)]
        q: i64,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n_max: usize,
        /// Also print the state vectors [(a^k), (a^{k-1}b), ..., (b^k), u].
        #[arg(long)]
        state_vectors: bool,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_ENTRY_CAP)]
        cap: usize,
    },
    /// Derive the recurrence for (s^k)_n.
    Recurrence {
        #[arg(long)]
        k: u32,
        /// Use the reduced system.
        #[arg(long)]
        reduced: bool,
        #[arg(long, value_enum, default_value_t = Form::Folded, requires = "reduced")]
        form: Form,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Check recurrences and system equations against generated rows.
    Verify {
        /// Inclusive range `a..b`, or a single k.
        #[arg(long, default_value = "2..8", value_parser = parse_k_range)]
        k_range: (u32, u32),
        #[arg(long, value_delimiter = ',', default_values_t = DEFAULT_Q_LIST)]
        q_list: Vec<i64>,
        /// Largest row (in entries) to generate.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        /// Test the recurrence of the reduced system and check its equations too.
        #[arg(long)]
        reduced: bool,
        #[arg(long, value_enum, default_value_t = Form::Folded, requires = "reduced")]
        form: Form,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Reproduce the coefficient table and compare it with the reference table.
    Table {
        #[arg(long, default_value_t = 11)]
        k_max: u32,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Orders and q-degrees of the recurrences.
    Conjecture {
        #[arg(long, default_value_t = 2)]
        k_min: u32,
        #[arg(long, default_value_t = 11)]
        k_max: u32,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
}

fn parse_k_range(s: &str) -> std::result::Result<(u32, u32), String> {
    let bad = || format!("expected a..b or a single integer, got {s:?}");
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (a, b.strip_prefix('=').unwrap_or(b)),
        None => (s, s),
    };
    let a: u32 = a.trim().parse().map_err(|_| bad())?;
    let b: u32 = b.trim().parse().map_err(|_| bad())?;
    if a > b {
        return Err(format!("empty range {s:?}"));
    }
    Ok((a, b))
}

/// What a command produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    /// Diagnostics printed to standard error.
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: 0,
        }
    }
}

/// Exit status for a library error: 2 for bad input, 1 otherwise.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidQ(_)
        | Error::InvalidK { .. }
        | Error::InvalidArgument(_)
        | Error::DimensionMismatch { .. } => 2,
        _ => 1,
    }
}

pub fn execute(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Row { q, n, format, cap } => cmd_row(*q, *n, *format, *cap),
        Command::Sums {
            q,
            k,
            n_max,
            state_vectors,
            format,
            cap,
        } => cmd_sums(*q, *k, *n_max, *state_vectors, *format, *cap),
        Command::Recurrence {
            k,
            reduced,
            form,
            format,
        } => cmd_recurrence(*k, *reduced, *form, *format),
        Command::Verify {
            k_range,
            q_list,
            cap,
            reduced,
            form,
            format,
        } => cmd_verify(*k_range, q_list, *cap, reduced.then_some(*form), *format),
        Command::Table { k_max, format } => cmd_table(*k_max, *format),
        Command::Conjecture {
            k_min,
            k_max,
            format,
        } => cmd_conjecture(*k_min, *k_max, *format),
    }
}

/// Parses arguments, runs the command and returns what to print and the exit code.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome::ok(text)
            } else {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code,
                }
            };
        }
    };
    let outcome = match execute(&cli) {
        Ok(o) => o,
        Err(e) => {
            return Outcome {
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
                code: exit_code(&e),
            }
        }
    };
    match &cli.output {
        Some(path) => match std::fs::write(path, &outcome.stdout) {
            Ok(()) => Outcome {
                stdout: String::new(),
                ..outcome
            },
            Err(e) => Outcome {
                stdout: String::new(),
                stderr: format!("error: cannot write {}: {e}\n", path.display()),
                code: 2,
            },
        },
        None => outcome,
    }
}

fn to_json(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report serializes");
    s.push('\n');
    s
}

fn csv_string(header: &[String], rows: &[Vec<String>]) -> String {
    let mut w = csv::WriterBuilder::new()
        .flexible(false)
        .from_writer(Vec::new());
    w.write_record(header).expect("in-memory csv");
    for r in rows {
        w.write_record(r).expect("in-memory csv");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8")
}

fn generate(q: i64, n: usize, cap: usize) -> Result<Vec<Row>> {
    let params = TriangleParams::new(q)?;
    let generated = generate_rows(params, n, cap)?;
    match generated.truncated {
        Some(t) => Err(Error::Truncated {
            n: t.last_generated + 1,
            len: t.next_len.to_string(),
            cap: t.cap,
        }),
        None => Ok(generated.rows),
    }
}

fn cmd_row(q: i64, n: usize, format: Format, cap: usize) -> Result<Outcome> {
    let rows = generate(q, n, cap)?;
    let row = &rows[n];
    let text = match format {
        Format::Plain => format!("{}\n", row.display_plain()),
        Format::Json => to_json(&json!({
            "q": q,
            "n": n,
            "entries": row.entries().iter().map(|e| json!({
                "value": big_to_value(&e.value.clone().into()),
                "tag": e.tag.to_string(),
            })).collect::<Vec<_>>(),
        })),
        Format::Csv => csv_string(
            &["position".into(), "value".into(), "tag".into()],
            &row.entries()
                .iter()
                .enumerate()
                .map(|(i, e)| vec![i.to_string(), e.value.to_string(), e.tag.to_string()])
                .collect::<Vec<_>>(),
        ),
    };
    Ok(Outcome::ok(text))
}

fn cmd_sums(
    q: i64,
    k: u32,
    n_max: usize,
    with_vectors: bool,
    format: Format,
    cap: usize,
) -> Result<Outcome> {
    if n_max == 0 {
        return Err(Error::InvalidArgument("--n-max must be at least 1".into()));
    }
    let rows = generate(q, n_max, cap)?;
    let rows = &rows[1..];
    let sums: Vec<_> = rows.iter().map(|r| power_sum(r, k)).collect();
    let vectors = if with_vectors {
        Some(
            rows.iter()
                .map(|r| state_vector(r, k))
                .collect::<Result<Vec<_>>>()?,
        )
    } else {
        None
    };
    let text = match format {
        Format::Plain => {
            let mut s = sums
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(", ");
            s.push('\n');
            for (row, g) in rows.iter().zip(vectors.iter().flatten()) {
                let coords = g
                    .coords
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(", ");
                writeln!(s, "g_{} = [{coords}]", row.index()).unwrap();
            }
            s
        }
        Format::Json => to_json(
            &rows
                .iter()
                .enumerate()
                .map(|(i, r)| {
                    let mut o = json!({ "n": r.index(), "power_sum": big_to_value(&sums[i]) });
                    if let Some(v) = &vectors {
                        o["state_vector"] =
                            Value::Array(v[i].coords.iter().map(big_to_value).collect());
                    }
                    o
                })
                .collect::<Vec<_>>(),
        ),
        Format::Csv => {
            let mut header = vec!["n".to_string(), "power_sum".to_string()];
            if let Some(v) = &vectors {
                header.extend((0..v[0].coords.len()).map(|i| format!("g{i}")));
            }
            let body: Vec<Vec<String>> = rows
                .iter()
                .enumerate()
                .map(|(i, r)| {
                    let mut line = vec![r.index().to_string(), sums[i].to_string()];
                    if let Some(v) = &vectors {
                        line.extend(v[i].coords.iter().map(|c| c.to_string()));
                    }
                    line
                })
                .collect();
            csv_string(&header, &body)
        }
    };
    Ok(Outcome::ok(text))
}

/// The recurrence in the documented JSON layout.
pub fn recurrence_json(rec: &Recurrence, reduced: bool) -> Value {
    json!({
        "k": rec.k,
        "order": rec.order,
        "coefficients": rec.coefficients.iter().map(poly_to_value).collect::<Vec<_>>(),
        "x_strip_count": rec.x_strip_count,
        "initial_values": rec.initial_values.iter().map(poly_to_value).collect::<Vec<_>>(),
        "variant": if reduced { "reduced" } else { "full" },
    })
}

fn coeff_header(n: usize) -> Vec<String> {
    std::iter::once("k".to_string())
        .chain((1..=n).map(|j| format!("c{j}")))
        .collect()
}

fn cmd_recurrence(k: u32, reduced: bool, form: Form, format: Format) -> Result<Outcome> {
    let variant = if reduced {
        SystemVariant::Reduced(form.into())
    } else {
        SystemVariant::Full
    };
    let rec = recurrence_for_k_with(k, variant)?;
    let text = match format {
        Format::Json => to_json(&recurrence_json(&rec, reduced)),
        Format::Csv => {
            let mut line = vec![k.to_string()];
            line.extend(rec.coefficients.iter().map(QPoly::to_string));
            csv_string(&coeff_header(rec.order), &[line])
        }
        Format::Plain => {
            let term = format!("(s^{k})");
            let rhs = rec
                .coefficients
                .iter()
                .enumerate()
                .map(|(j, c)| format!("({c}){term}_{{n-{}}}", j + 1))
                .collect::<Vec<_>>()
                .join(" + ");
            let initial = rec
                .initial_values
                .iter()
                .map(QPoly::to_string)
                .collect::<Vec<_>>()
                .join(", ");
            format!(
                "k={k} order={} x_strip_count={} system={variant}\n{term}_n = {rhs}\ninitial values n=1..{}: {initial}\n",
                rec.order, rec.x_strip_count, rec.order
            )
        }
    };
    Ok(Outcome::ok(text))
}

fn cmd_verify(
    (k_min, k_max): (u32, u32),
    q_list: &[i64],
    cap: usize,
    reduced: Option<Form>,
    format: Format,
) -> Result<Outcome> {
    let config = GridConfig {
        k_min,
        k_max,
        q_list: q_list.to_vec(),
        cap,
        variant: reduced.map_or(SystemVariant::Full, |f| SystemVariant::Reduced(f.into())),
    };
    let report = verify_grid(&config)?;
    let text = match format {
        Format::Json => to_json(&report),
        _ => report.summary(),
    };
    Ok(Outcome {
        stdout: text,
        stderr: String::new(),
        code: if report.all_exact { 0 } else { 1 },
    })
}

fn status_label(s: FixtureStatus) -> &'static str {
    match s {
        FixtureStatus::Matches => "matches",
        FixtureStatus::Differs => "DIFFERS",
        FixtureStatus::Exploratory => "no fixture (exploratory)",
    }
}

/// CSV with header `k,c1,c2,...,fixture`; coefficients in printed form.
pub fn table_csv(report: &TableReport) -> String {
    let width = report
        .rows
        .iter()
        .map(|r| r.printed_coefficients.len())
        .max()
        .unwrap_or(0);
    let mut header = coeff_header(width);
    header.push("fixture".into());
    let body: Vec<Vec<String>> = report
        .rows
        .iter()
        .map(|r| {
            let mut line = vec![r.k.to_string()];
            line.extend((0..width).map(|j| {
                r.printed_coefficients
                    .get(j)
                    .map_or(String::new(), QPoly::to_string)
            }));
            line.push(status_label(r.status).into());
            line
        })
        .collect();
    csv_string(&header, &body)
}

fn cmd_table(k_max: u32, format: Format) -> Result<Outcome> {
    let report = reproduce_tables(k_max)?;
    let text = match format {
        Format::Json => to_json(&report),
        Format::Csv => table_csv(&report),
        Format::Plain => {
            let mut s = String::new();
            for r in &report.rows {
                let cells = r
                    .printed_coefficients
                    .iter()
                    .map(QPoly::to_string)
                    .collect::<Vec<_>>()
                    .join(", ");
                writeln!(s, "k={:<2} {cells}  [{}]", r.k, status_label(r.status)).unwrap();
            }
            s
        }
    };
    let mut stderr = String::new();
    for m in &report.diff {
        writeln!(
            stderr,
            "k={} c{}: reference {} computed {}",
            m.k, m.j, m.expected, m.computed
        )
        .unwrap();
    }
    Ok(Outcome {
        stdout: text,
        code: if report.is_clean() { 0 } else { 1 },
        stderr,
    })
}

fn conjecture_plain(f: &ConjectureFinding) -> String {
    let mut s = format!(
        "k={} conjectured={} printed={} minimal={} max_q_degree={} fixture={}",
        f.k,
        f.conjectured_order,
        f.printed_order,
        f.minimal_order,
        f.max_q_degree,
        status_label(f.fixture)
    );
    let verdict = if f.printed_order_matches && f.linear_in_q {
        "agrees"
    } else {
        "DISAGREES"
    };
    write!(s, " {verdict}").unwrap();
    for a in &f.anomalies {
        write!(s, "; anomaly: {a}").unwrap();
    }
    s.push('\n');
    s
}

fn cmd_conjecture(k_min: u32, k_max: u32, format: Format) -> Result<Outcome> {
    let findings = probe_conjecture(k_min, k_max)?;
    let text = match format {
        Format::Json => to_json(&findings),
        Format::Plain => findings.iter().map(conjecture_plain).collect(),
        Format::Csv => csv_string(
            &[
                "k",
                "conjectured_order",
                "printed_order",
                "minimal_order",
                "max_q_degree",
                "fixture",
                "anomalies",
            ]
            .map(String::from),
            &findings
                .iter()
                .map(|f| {
                    vec![
                        f.k.to_string(),
                        f.conjectured_order.to_string(),
                        f.printed_order.to_string(),
                        f.minimal_order.to_string(),
                        f.max_q_degree.to_string(),
                        status_label(f.fixture).into(),
                        f.anomalies.join("; "),
                    ]
                })
                .collect::<Vec<_>>(),
        ),
    };
    Ok(Outcome::ok(text))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k_ranges() {
        assert_eq!(parse_k_range("2..4"), Ok((2, 4)));
        assert_eq!(parse_k_range("2..=4"), Ok((2, 4)));
        assert_eq!(parse_k_range("3"), Ok((3, 3)));
        assert!(parse_k_range("4..2").is_err());
        assert!(parse_k_range("x").is_err());
    }

    #[test]
    fn clap_definition() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
