//! Command-line front end: statistics, shuffle sets, compatibility and
//! lifting verification, and pattern-avoidance counting, with
//! machine-readable JSON output.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use cyclic_shuffle::compatibility::{
    check_cyclic_compat, check_linear_compat, check_lifting_a, check_lifting_b, CompatReport,
    LiftVerdict, LiftingReport, Verdict,
};
use cyclic_shuffle::patterns::{avoidance_poly, avoiders, PatternSet};
use cyclic_shuffle::shuffles::{cyclic_shuffles, linear_shuffles};
use cyclic_shuffle::statistics::{
    cycle_distribution, cyclic_stat, linear_stat, word_distribution,
};
use cyclic_shuffle::{Cycle, StatisticId, Word};

#[derive(Parser)]
#[command(
    name = "cshuffle",
    about = "Cyclic and linear permutation statistics, shuffles, and exhaustive compatibility checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Condition {
    A,
    B,
}

#[derive(Args)]
struct JobsArg {
    /// Worker threads for the search engines (default: available processors)
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a statistic on one permutation
    Stat {
        /// Statistic name (Des, des, Pk, pk, maj, bru, cDes, cdes, cPk, cpk, cbru)
        #[arg(long)]
        kind: String,
        /// Permutation: comma-separated entries, or a bare digit string
        #[arg(long)]
        perm: String,
        /// Treat the permutation as a cyclic one
        #[arg(long)]
        cyclic: bool,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Generate a shuffle set, or the distribution of a statistic over it
    Shuffle {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long)]
        cyclic: bool,
        /// Print the distribution of this statistic instead of the set
        #[arg(long)]
        stat: Option<String>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Exhaustively check (cyclic) shuffle compatibility of a statistic
    Verify {
        #[arg(long)]
        stat: String,
        /// Maximum total length of the two shuffle operands
        #[arg(long)]
        max: u32,
        #[command(flatten)]
        jobs: JobsArg,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Check a lifting hypothesis for a (cyclic, linear) statistic pair
    Lifting {
        /// Cyclic statistic
        #[arg(long)]
        cstat: String,
        /// Linear statistic
        #[arg(long)]
        stat: String,
        /// Which hypothesis to check
        #[arg(long)]
        cond: Condition,
        #[arg(long)]
        max: u32,
        #[command(flatten)]
        jobs: JobsArg,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Count cyclic permutations avoiding a set of patterns
    Avoid {
        #[arg(long)]
        n: u32,
        /// Patterns, one permutation per argument
        #[arg(long, num_args = 0..)]
        patterns: Vec<String>,
        /// Print the cdes generating polynomial (coefficients low to high)
        #[arg(long)]
        poly: bool,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
}

/// Failure that should map to exit code 2.
struct UsageError(String);

impl From<cyclic_shuffle::Error> for UsageError {
    fn from(e: cyclic_shuffle::Error) -> Self {
        UsageError(e.to_string())
    }
}

fn parse_word(text: &str) -> Result<Word, UsageError> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Word::empty());
    }
    let entries: Vec<u32> = if text.contains(',') {
        text.split(',')
            .map(|tok| {
                let tok = tok.trim();
                tok.parse::<u32>()
                    .map_err(|_| UsageError(format!("invalid entry {tok:?}")))
            })
            .collect::<Result<_, _>>()?
    } else {
        text.chars()
            .map(|ch| {
                ch.to_digit(10)
                    .ok_or_else(|| UsageError(format!("invalid entry {ch:?}")))
            })
            .collect::<Result<_, _>>()?
    };
    Ok(Word::new(entries)?)
}

fn parse_cycle(text: &str) -> Result<Cycle, UsageError> {
    Ok(Cycle::from_word(&parse_word(text)?)?)
}

fn parse_stat(name: &str) -> Result<StatisticId, UsageError> {
    Ok(name.parse::<StatisticId>()?)
}

fn emit(envelope: &Value) {
    println!("{}", serde_json::to_string(envelope).expect("serializable"));
}

fn elapsed_ms(start: Instant) -> u64 {
    start.elapsed().as_millis() as u64
}

fn in_pool<T: Send>(jobs: &JobsArg, f: impl FnOnce() -> T + Send) -> Result<T, UsageError> {
    match jobs.jobs {
        None => Ok(f()),
        Some(threads) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .map_err(|e| UsageError(e.to_string()))?;
            Ok(pool.install(f))
        }
    }
}

fn run_stat(kind: &str, perm: &str, cyclic: bool, format: Format) -> Result<ExitCode, UsageError> {
    let start = Instant::now();
    let id = parse_stat(kind)?;
    let (value, inputs) = if cyclic {
        let c = parse_cycle(perm)?;
        let inputs = json!({ "kind": id, "perm": c, "cyclic": true });
        (cyclic_stat(id, &c)?, inputs)
    } else {
        let w = parse_word(perm)?;
        let inputs = json!({ "kind": id, "perm": w, "cyclic": false });
        (linear_stat(id, &w)?, inputs)
    };
    match format {
        Format::Table => println!("{value}"),
        Format::Json => emit(&json!({
            "command": "stat",
            "inputs": inputs,
            "result": value,
            "elapsed_ms": elapsed_ms(start),
        })),
    }
    Ok(ExitCode::SUCCESS)
}

fn run_shuffle(
    left: &str,
    right: &str,
    cyclic: bool,
    stat: Option<&str>,
    format: Format,
) -> Result<ExitCode, UsageError> {
    let start = Instant::now();
    let stat = stat.map(parse_stat).transpose()?;
    let (inputs, result) = if cyclic {
        let l = parse_cycle(left)?;
        let r = parse_cycle(right)?;
        let set: BTreeSet<Cycle> = cyclic_shuffles(&l, &r)?;
        let inputs = json!({ "left": l, "right": r, "cyclic": true, "stat": stat });
        let result = match stat {
            Some(id) => serde_json::to_value(cycle_distribution(id, set.iter())?),
            None => serde_json::to_value(&set),
        }
        .expect("serializable");
        if format == Format::Table {
            match stat {
                Some(id) => println!("{}", cycle_distribution(id, set.iter())?),
                None => {
                    for c in &set {
                        println!("{c}");
                    }
                }
            }
        }
        (inputs, result)
    } else {
        let l = parse_word(left)?;
        let r = parse_word(right)?;
        let set: BTreeSet<Word> = linear_shuffles(&l, &r)?;
        let inputs = json!({ "left": l, "right": r, "cyclic": false, "stat": stat });
        let result = match stat {
            Some(id) => serde_json::to_value(word_distribution(id, set.iter())?),
            None => serde_json::to_value(&set),
        }
        .expect("serializable");
        if format == Format::Table {
            match stat {
                Some(id) => println!("{}", word_distribution(id, set.iter())?),
                None => {
                    for w in &set {
                        println!("{w}");
                    }
                }
            }
        }
        (inputs, result)
    };
    if format == Format::Json {
        emit(&json!({
            "command": "shuffle",
            "inputs": inputs,
            "result": result,
            "elapsed_ms": elapsed_ms(start),
        }));
    }
    Ok(ExitCode::SUCCESS)
}

fn print_compat_table(report: &CompatReport) {
    println!("statistic: {}", report.statistic);
    println!("mode: {}", report.mode);
    println!("max_total_length: {}", report.max_total_length);
    println!("pairs_checked: {}", report.pairs_checked);
    println!(
        "verdict: {}",
        match report.verdict {
            Verdict::Compatible => "compatible",
            Verdict::Counterexample => "counterexample",
        }
    );
    if let Some(cex) = &report.counterexample {
        println!(
            "counterexample: {}",
            serde_json::to_string(cex).expect("serializable")
        );
    }
}

fn run_verify(stat: &str, max: u32, jobs: &JobsArg, format: Format) -> Result<ExitCode, UsageError> {
    let start = Instant::now();
    let id = parse_stat(stat)?;
    let report = in_pool(jobs, || {
        if id.is_cyclic() {
            check_cyclic_compat(id, max)
        } else {
            check_linear_compat(id, max)
        }
    })??;
    match format {
        Format::Table => print_compat_table(&report),
        Format::Json => {
            let mut envelope = json!({
                "command": "verify",
                "inputs": { "stat": id, "max": max },
                "result": report,
                "verdict": report.verdict,
            });
            if let Some(cex) = &report.counterexample {
                envelope["counterexample"] =
                    serde_json::to_value(cex).expect("serializable");
            }
            envelope["elapsed_ms"] = json!(elapsed_ms(start));
            emit(&envelope);
        }
    }
    Ok(match report.verdict {
        Verdict::Compatible => ExitCode::SUCCESS,
        Verdict::Counterexample => ExitCode::from(1),
    })
}

fn print_lifting_table(report: &LiftingReport) {
    println!("cyclic_statistic: {}", report.cyclic_statistic);
    println!("linear_statistic: {}", report.linear_statistic);
    println!("condition: {}", report.condition);
    println!("bound: {}", report.bound);
    println!(
        "verdict: {}",
        match report.verdict {
            LiftVerdict::Holds => "holds",
            LiftVerdict::Violation => "violation",
        }
    );
    if let Some(v) = &report.violation {
        println!("violation: {} vs {}", v.first, v.second);
    }
}

fn run_lifting(
    cstat: &str,
    stat: &str,
    cond: Condition,
    max: u32,
    jobs: &JobsArg,
    format: Format,
) -> Result<ExitCode, UsageError> {
    let start = Instant::now();
    let cid = parse_stat(cstat)?;
    let lid = parse_stat(stat)?;
    let report = in_pool(jobs, || match cond {
        Condition::A => check_lifting_a(cid, lid, max),
        Condition::B => check_lifting_b(cid, lid, max),
    })??;
    match format {
        Format::Table => print_lifting_table(&report),
        Format::Json => {
            let cond_name = match cond {
                Condition::A => "a",
                Condition::B => "b",
            };
            let mut envelope = json!({
                "command": "lifting",
                "inputs": { "cstat": cid, "stat": lid, "cond": cond_name, "max": max },
                "result": report,
                "verdict": report.verdict,
            });
            if let Some(v) = &report.violation {
                envelope["counterexample"] = serde_json::to_value(v).expect("serializable");
            }
            envelope["elapsed_ms"] = json!(elapsed_ms(start));
            emit(&envelope);
        }
    }
    Ok(match report.verdict {
        LiftVerdict::Holds => ExitCode::SUCCESS,
        LiftVerdict::Violation => ExitCode::from(1),
    })
}

fn run_avoid(
    n: u32,
    patterns: &[String],
    poly: bool,
    format: Format,
) -> Result<ExitCode, UsageError> {
    let start = Instant::now();
    let parsed: Vec<Cycle> = patterns
        .iter()
        .map(|p| parse_cycle(p))
        .collect::<Result<_, _>>()?;
    let ps = PatternSet::new(parsed)?;
    let inputs = json!({
        "n": n,
        "patterns": ps.patterns().collect::<Vec<_>>(),
        "poly": poly,
    });
    if poly {
        let d = avoidance_poly(n, &ps)?;
        match format {
            Format::Table => {
                let parts: Vec<String> = d.coeffs().iter().map(|c| c.to_string()).collect();
                println!("[{}]", parts.join(","));
            }
            Format::Json => emit(&json!({
                "command": "avoid",
                "inputs": inputs,
                "result": d,
                "elapsed_ms": elapsed_ms(start),
            })),
        }
    } else {
        let count = avoiders(n, &ps)?.len();
        match format {
            Format::Table => println!("{count}"),
            Format::Json => emit(&json!({
                "command": "avoid",
                "inputs": inputs,
                "result": count,
                "elapsed_ms": elapsed_ms(start),
            })),
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Stat {
            kind,
            perm,
            cyclic,
            format,
        } => run_stat(kind, perm, *cyclic, *format),
        Command::Shuffle {
            left,
            right,
            cyclic,
            stat,
            format,
        } => run_shuffle(left, right, *cyclic, stat.as_deref(), *format),
        Command::Verify {
            stat,
            max,
            jobs,
            format,
        } => run_verify(stat, *max, jobs, *format),
        Command::Lifting {
            cstat,
            stat,
            cond,
            max,
            jobs,
            format,
        } => run_lifting(cstat, stat, *cond, *max, jobs, *format),
        Command::Avoid {
            n,
            patterns,
            poly,
            format,
        } => run_avoid(*n, patterns, *poly, *format),
    };
    match outcome {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
