//! The `runcount` command line.
//!
//! Every subcommand renders its whole output into a buffer before anything
//! is written, so an error never leaves partial output behind.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::counts::{
    count_all_words, count_all_words_success, count_exact_runs, count_success_runs, pmf,
    CountTriple, DyadicProb,
};
use crate::error::Error;
use crate::oracle::Oracle;
use crate::series::w_series;
use crate::verify::{verify_sweep, FormulaCounter, RunCounter};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFY_FAILED: i32 = 2;

pub const CSV_HEADER: &str = "k,count,prob_num,prob_den_exp,prob_float";

#[derive(Debug, Parser)]
#[command(
    name = "runcount",
    version,
    about = "Exact counts of maximal runs in binary words"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Number of words of length n with exactly k maximal runs of length r.
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        k: usize,
        /// Which words to count: those starting with 0, or all of them.
        #[arg(long, value_enum, default_value_t = Scope::Prefix0)]
        scope: Scope,
        /// Count runs of 1s only.
        #[arg(long)]
        success: bool,
    },
    /// Exact distribution of the number of length-r runs in a random word.
    Pmf {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        k_min: Option<usize>,
        #[arg(long)]
        k_max: Option<usize>,
    },
    /// Coefficients W(0,r) .. W(order,r), one per line.
    Series {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        order: usize,
    },
    /// Compare every formula against exhaustive enumeration up to n-max.
    Verify {
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        r_max: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Scope {
    Prefix0,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

/// One row of `pmf` output.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OutputRecord {
    pub k: usize,
    pub count: String,
    pub prob_num: String,
    pub prob_den_exp: u64,
    pub prob_float: String,
}

#[derive(Serialize)]
struct JsonRecord<'a> {
    k: usize,
    count: &'a str,
    prob_num: &'a str,
    prob_den_exp: u64,
    prob_float: f64,
}

impl OutputRecord {
    fn new(k: usize, p: &DyadicProb) -> Self {
        let count = p.numerator.to_string();
        OutputRecord {
            k,
            prob_num: count.clone(),
            count,
            prob_den_exp: p.denominator_exponent,
            prob_float: render_float(p.to_f64()),
        }
    }
}

/// Shortest round-trip decimal; scientific notation outside `[1e-5, 1e16)`.
pub fn render_float(x: f64) -> String {
    if x == 0.0 || (1e-5..1e16).contains(&x.abs()) {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

/// Runs the command line `args` (program name first), writing to `out` and
/// `err`, and returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with_counter(args, &FormulaCounter, out, err)
}

/// [`run`] with the counters used by `verify` replaced.
pub fn run_with_counter<I, T>(
    args: I,
    counter: &dyn RunCounter,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    let (code, text) = match execute(cli.command, counter) {
        Ok(done) => done,
        Err(f) => {
            let _ = writeln!(err, "runcount: {}", f.message);
            return f.code;
        }
    };
    if let Err(e) = out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        let _ = writeln!(err, "runcount: {e}");
        return EXIT_USAGE;
    }
    code
}

fn execute(command: Command, counter: &dyn RunCounter) -> Result<(i32, String), Failure> {
    match command {
        Command::Count {
            n,
            r,
            k,
            scope,
            success,
        } => {
            let q = CountTriple::new(n, r, k)?;
            let value = match (scope, success) {
                (Scope::Prefix0, false) => count_exact_runs(q),
                (Scope::Prefix0, true) => count_success_runs(q),
                (Scope::All, false) => count_all_words(q),
                (Scope::All, true) => count_all_words_success(q),
            };
            Ok((EXIT_OK, format!("{value}\n")))
        }
        Command::Pmf {
            n,
            r,
            format,
            k_min,
            k_max,
        } => {
            let dist = pmf(n, r)?;
            let top = dist.max_k();
            let hi = k_max.unwrap_or(top);
            let lo = k_min.unwrap_or(0);
            if hi > top {
                return Err(usage(format!("--k-max {hi} exceeds n/r = {top}")));
            }
            if lo > hi {
                return Err(usage(format!("--k-min {lo} exceeds --k-max {hi}")));
            }
            let records: Vec<OutputRecord> = (lo..=hi)
                .map(|k| OutputRecord::new(k, &dist.entries[k]))
                .collect();
            let text = match format {
                Format::Csv => render_csv(&records),
                Format::Json => render_json(&records, &dist.entries[lo..=hi]),
            };
            Ok((EXIT_OK, text))
        }
        Command::Series { r, order } => {
            let s = w_series(r, order)?;
            let mut text = String::new();
            for c in s.coeffs() {
                text.push_str(&c.to_string());
                text.push('\n');
            }
            Ok((EXIT_OK, text))
        }
        Command::Verify { n_max, r_max } => {
            let report = verify_sweep(&Oracle::default(), n_max, r_max, counter)?;
            let mut text = String::new();
            if report.passed() {
                text.push_str(&format!(
                    "all checks passed ({} comparisons, n <= {n_max})\n",
                    report.comparisons
                ));
                Ok((EXIT_OK, text))
            } else {
                for m in &report.mismatches {
                    text.push_str(&format!("MISMATCH {m}\n"));
                }
                text.push_str(&format!(
                    "{} of {} comparisons failed\n",
                    report.mismatches.len(),
                    report.comparisons
                ));
                Ok((EXIT_VERIFY_FAILED, text))
            }
        }
    }
}

fn render_csv(records: &[OutputRecord]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for rec in records {
        w.serialize(rec).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("flushing to memory")).expect("ascii output")
}

fn render_json(records: &[OutputRecord], probs: &[DyadicProb]) -> String {
    let rows: Vec<JsonRecord> = records
        .iter()
        .zip(probs)
        .map(|(rec, p)| JsonRecord {
            k: rec.k,
            count: &rec.count,
            prob_num: &rec.prob_num,
            prob_den_exp: rec.prob_den_exp,
            prob_float: p.to_f64(),
        })
        .collect();
    let mut text = serde_json::to_string_pretty(&rows).expect("serializable rows");
    text.push('\n');
    text
}
