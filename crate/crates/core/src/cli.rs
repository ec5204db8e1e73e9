//! `dickson` command-line front end.
//!
//! Exit status: 0 on success, 1 on contract/overflow/invariant errors, 2 on
//! usage errors (bad flags, malformed sequence literals, sweep guard rails).

use std::ffi::OsString;
use std::fs::File;
use std::io::BufWriter;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::oracle::{self, BoundReport, DicksonWitness};
use crate::seq::{parse_seq, Seq};

#[derive(Debug, Parser)]
#[command(
    name = "dickson",
    version,
    about = "Certified bounds for Dickson's lemma on two sequences"
)]
pub struct Cli {
    /// Emit one flat JSON object instead of text lines.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Guessed,
    Extracted,
    Both,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the guessed and/or extracted bound with its I-trace.
    Bound {
        #[arg(long, value_parser = seq_arg)]
        f: Seq,
        #[arg(long, value_parser = seq_arg)]
        g: Seq,
        #[arg(long, value_enum, default_value = "both")]
        method: Method,
    },
    /// Search for the least Dickson witness below n.
    Witness {
        #[arg(long, value_parser = seq_arg)]
        f: Seq,
        #[arg(long, value_parser = seq_arg)]
        g: Seq,
        #[arg(long)]
        n: u64,
    },
    /// Least bound, by brute force.
    Oracle {
        #[arg(long, value_parser = seq_arg)]
        f: Seq,
        #[arg(long, value_parser = seq_arg)]
        g: Seq,
    },
    /// Compare all three bounds over a finite family and write CSV.
    Sweep {
        #[arg(long, default_value_t = 3)]
        max_prefix: usize,
        #[arg(long, default_value_t = 2)]
        max_value: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check the three-function counterexample to the descent step.
    Counterexample3,
}

fn seq_arg(text: &str) -> std::result::Result<Seq, String> {
    parse_seq(text).map_err(|e| e.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunOutput {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> RunOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                RunOutput {
                    code: 2,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                RunOutput {
                    code: 0,
                    stdout: rendered,
                    stderr: String::new(),
                }
            };
        }
    };
    match execute(&cli) {
        Ok(report) => RunOutput {
            code: 0,
            stdout: report.render(cli.json),
            stderr: String::new(),
        },
        Err(Failure { error, partial }) => RunOutput {
            code: if error.is_usage() { 2 } else { 1 },
            stdout: partial.map(|r| r.render(cli.json)).unwrap_or_default(),
            stderr: format!("error: {error}\n"),
        },
    }
}

/// Ordered facts printed one per line, or as a JSON object.
#[derive(Debug, Default)]
struct Report {
    facts: Vec<(String, Value, String)>,
}

impl Report {
    fn new(command: &str) -> Self {
        let mut r = Report::default();
        r.json_only("command", json!(command));
        r
    }

    fn push(&mut self, key: impl Into<String>, value: Value, text: impl Into<String>) {
        self.facts.push((key.into(), value, text.into()));
    }

    fn json_only(&mut self, key: &str, value: Value) {
        self.push(key, value, String::new());
    }

    fn number(&mut self, key: &str, value: u64) {
        self.push(key, json!(value), value.to_string());
    }

    fn seq(&mut self, key: &str, s: &Seq) {
        self.push(key, json!(s.render()), s.render());
    }

    fn witness(&mut self, key: &str, w: Option<DicksonWitness>) {
        let value = w.map_or(Value::Null, |w| json!([w.i(), w.j()]));
        let text = w.map_or("none".to_string(), |w| w.to_string());
        self.push(key, value, text);
    }

    fn bound(&mut self, report: &BoundReport) -> Result<()> {
        let name = report.method.name();
        self.number(name, report.bound);
        if report.method != oracle::BoundMethod::OracleMin {
            let text = report
                .trace
                .iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(" ");
            self.push(format!("{name}_trace"), json!(report.trace), text);
        }
        let witness = report.verified_witness()?;
        self.witness(&format!("{name}_witness"), Some(witness));
        Ok(())
    }

    fn render(&self, as_json: bool) -> String {
        if as_json {
            let map: Map<String, Value> = self
                .facts
                .iter()
                .map(|(k, v, _)| (k.clone(), v.clone()))
                .collect();
            format!("{}\n", Value::Object(map))
        } else {
            self.facts
                .iter()
                .filter(|(k, _, _)| k != "command")
                .map(|(k, _, text)| format!("{k}: {text}\n"))
                .collect()
        }
    }
}

struct Failure {
    error: Error,
    partial: Option<Report>,
}

impl From<Error> for Failure {
    fn from(error: Error) -> Self {
        Failure {
            error,
            partial: None,
        }
    }
}

fn execute(cli: &Cli) -> std::result::Result<Report, Failure> {
    match &cli.command {
        Command::Bound { f, g, method } => {
            let mut r = Report::new("bound");
            r.seq("f", f);
            r.seq("g", g);
            if matches!(method, Method::Guessed | Method::Both) {
                r.bound(&BoundReport::guessed(f, g)?)?;
            }
            if matches!(method, Method::Extracted | Method::Both) {
                r.bound(&BoundReport::extracted(f, g, 0)?)?;
            }
            Ok(r)
        }
        Command::Witness { f, g, n } => {
            let mut r = Report::new("witness");
            r.seq("f", f);
            r.seq("g", g);
            r.number("n", *n);
            r.witness("witness", oracle::holds_d(f, g, *n));
            Ok(r)
        }
        Command::Oracle { f, g } => {
            let mut r = Report::new("oracle");
            r.seq("f", f);
            r.seq("g", g);
            let report = BoundReport::oracle_min(f, g)?;
            r.number("oracle_min", report.bound);
            r.witness("witness", Some(report.verified_witness()?));
            Ok(r)
        }
        Command::Sweep {
            max_prefix,
            max_value,
            out,
        } => {
            let rows = oracle::sweep(*max_prefix, *max_value)?;
            let io = |e: std::io::Error| Error::Contract(format!("writing {}: {e}", out.display()));
            let file = File::create(out).map_err(io)?;
            oracle::write_sweep_csv(&rows, BufWriter::new(file)).map_err(io)?;
            let mut r = Report::new("sweep");
            r.push(
                "out",
                json!(out.display().to_string()),
                out.display().to_string(),
            );
            r.number("rows", rows.len() as u64);
            Ok(r)
        }
        Command::Counterexample3 => {
            let report = oracle::verify_counterexample3()?;
            let mut r = Report::new("counterexample3");
            for c in &report.clauses {
                let verdict = if c.passed { "pass" } else { "FAIL" };
                r.push(
                    c.name,
                    json!(c.passed),
                    format!("expected {}, got {}: {verdict}", c.expected, c.actual),
                );
            }
            r.push(
                "passed",
                json!(report.all_passed()),
                report.all_passed().to_string(),
            );
            match report.check() {
                Ok(()) => Ok(r),
                Err(error) => Err(Failure {
                    error,
                    partial: Some(r),
                }),
            }
        }
    }
}
