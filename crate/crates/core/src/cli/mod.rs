//! Command-line front end.
//!
//! Exit codes: 0 success, 1 a cross-check failed, 2 invalid input.

pub mod json;
pub mod verify;

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::correspondence::{phi, HatQuiver};
use crate::counting::{catalan, CountReport};
use crate::finite::{enumerate_maximal_rigid_finite_capped, LinearQuiver, DEFAULT_MAX_M};
use crate::type_alpha::{
    addable_summands, enumerate_type_alpha_capped, is_rigid_cont, is_type_alpha, validate_rep, Alpha, SweepConfig,
    DEFAULT_MAX_N,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "rigid-quiver", version, about = "Maximal rigid representations of the continuous type-A quiver")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Formula,
    Enumerate,
    Both,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List every maximal rigid representation of type alpha for n segments.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: usize,
    },
    /// Compare the closed-form counts with enumeration.
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Mode::Both)]
        mode: Mode,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: usize,
    },
    /// Maximal rigid (basic tilting) sets of the linear quiver with m vertices.
    Finite {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        enumerate: bool,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_MAX_M)]
        max_m: usize,
    },
    /// Run the correspondence, oracle and count cross-checks.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: usize,
    },
    /// Validate a JSON-encoded representation and report its properties.
    Check {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
}

/// Parses `argv` (program name first) and runs the command.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let result = match cli.command {
        Command::Enumerate { n, format, max_n } => enumerate(n, format, max_n, out),
        Command::Count { n, mode, format, max_n } => count(n, mode, format, max_n, out),
        Command::Finite { m, enumerate, format, max_m } => finite(m, enumerate, format, max_m, out),
        Command::Verify { n, seed, format, max_n } => verify(n, seed, format, max_n, out),
        Command::Check { file, format } => check(&file, format, out),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Invalid(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INVALID
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INVALID
        }
    }
}

enum Failure {
    Invalid(String),
    Io(std::io::Error),
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

fn invalid(e: impl std::fmt::Display) -> Failure {
    Failure::Invalid(e.to_string())
}

fn require_segments(n: usize) -> Result<(), Failure> {
    if n == 0 {
        Err(Failure::Invalid("--n must be at least 1".into()))
    } else {
        Ok(())
    }
}

fn print_json(out: &mut dyn Write, value: &serde_json::Value) -> Result<(), Failure> {
    writeln!(out, "{}", serde_json::to_string_pretty(value).expect("json values serialize"))?;
    Ok(())
}

fn enumerate(n: usize, format: Format, max_n: usize, out: &mut dyn Write) -> Result<i32, Failure> {
    require_segments(n)?;
    let reps = enumerate_type_alpha_capped(&Alpha::uniform(n), max_n).map_err(invalid)?;
    match format {
        Format::Table => {
            writeln!(out, "# n={n} maximal_rigid={}", reps.len())?;
            for (k, r) in reps.iter().enumerate() {
                writeln!(out, "{}\t{}", k + 1, r.notation())?;
            }
        }
        Format::Json => {
            let list: Vec<_> = reps.iter().map(json::rep_to_json).collect();
            print_json(out, &serde_json::Value::Array(list))?;
        }
    }
    Ok(EXIT_OK)
}

fn count(n: usize, mode: Mode, format: Format, max_n: usize, out: &mut dyn Write) -> Result<i32, Failure> {
    require_segments(n)?;
    let mut report = CountReport::formula(n as u64);
    if mode != Mode::Formula {
        let reps = enumerate_type_alpha_capped(&Alpha::uniform(n), max_n).map_err(invalid)?;
        let hats = enumerate_maximal_rigid_finite_capped(HatQuiver::new(n).quiver(), DEFAULT_MAX_M).map_err(invalid)?;
        report = report.with_enumeration(reps.len() as u64, hats.len() as u64);
    }
    match format {
        Format::Table => {
            let show = |v: &Option<num_bigint::BigUint>| v.as_ref().map_or("-".to_string(), |x| x.to_string());
            let (formula, hat_formula) = if mode == Mode::Enumerate {
                ("-".to_string(), "-".to_string())
            } else {
                (report.formula_count.to_string(), report.hat_formula_count.to_string())
            };
            let matched = match (mode, report.count_match, report.hat_match) {
                (Mode::Both, Some(a), Some(b)) => (a && b).to_string(),
                _ => "-".to_string(),
            };
            writeln!(out, "n\tformula\tenumerated\that_formula\that_enumerated\tmatch")?;
            writeln!(
                out,
                "{n}\t{formula}\t{}\t{hat_formula}\t{}\t{matched}",
                show(&report.enumerated_count),
                show(&report.enumerated_hat_count)
            )?;
        }
        Format::Json => print_json(out, &serde_json::to_value(&report).expect("report serializes"))?,
    }
    Ok(if report.all_match() { EXIT_OK } else { EXIT_MISMATCH })
}

fn finite(m: usize, list: bool, format: Format, max_m: usize, out: &mut dyn Write) -> Result<i32, Failure> {
    let q = LinearQuiver::new(m).map_err(invalid)?;
    let expected = catalan(m as u64);
    let sets = if list { Some(enumerate_maximal_rigid_finite_capped(&q, max_m).map_err(invalid)?) } else { None };
    let matched = sets.as_ref().map(|s| num_bigint::BigUint::from(s.len()) == expected);
    match format {
        Format::Table => {
            match (&sets, matched) {
                (Some(s), Some(ok)) => writeln!(out, "m={m} catalan={expected} enumerated={} match={ok}", s.len())?,
                _ => writeln!(out, "m={m} catalan={expected}")?,
            }
            for s in sets.iter().flatten() {
                writeln!(out, "{}", s.show())?;
            }
        }
        Format::Json => {
            let listed: Option<Vec<Vec<[usize; 2]>>> = sets
                .as_ref()
                .map(|s| s.iter().map(|r| r.summands.iter().map(|i| [i.a, i.b]).collect()).collect());
            print_json(
                out,
                &json!({
                    "m": m,
                    "catalan": expected.to_string(),
                    "enumerated": sets.as_ref().map(Vec::len),
                    "match": matched,
                    "sets": listed,
                }),
            )?;
        }
    }
    Ok(if matched == Some(false) { EXIT_MISMATCH } else { EXIT_OK })
}

fn verify(n: usize, seed: u64, format: Format, max_n: usize, out: &mut dyn Write) -> Result<i32, Failure> {
    require_segments(n)?;
    if n > max_n {
        return Err(Failure::Invalid(format!("resource limit exceeded: n = {n} is above the cap {max_n}")));
    }
    let checks = verify::run_suite(n, seed, max_n);
    let all = checks.iter().all(|c| c.passed);
    match format {
        Format::Table => {
            for c in &checks {
                writeln!(out, "{} {} ({})", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail)?;
            }
            writeln!(out, "{}", if all { "all checks passed" } else { "verification FAILED" })?;
        }
        Format::Json => {
            let list: Vec<_> = checks
                .iter()
                .map(|c| json!({"name": c.name, "passed": c.passed, "detail": c.detail}))
                .collect();
            print_json(out, &json!({"n": n, "seed": seed, "passed": all, "checks": list}))?;
        }
    }
    Ok(if all { EXIT_OK } else { EXIT_MISMATCH })
}

fn check(file: &PathBuf, format: Format, out: &mut dyn Write) -> Result<i32, Failure> {
    let text = std::fs::read_to_string(file).map_err(|e| Failure::Invalid(format!("{}: {e}", file.display())))?;
    let rep = json::parse_rep(&text).map_err(invalid)?;
    validate_rep(&rep).map_err(invalid)?;
    let type_alpha = is_type_alpha(&rep);
    let rigid = is_rigid_cont(&rep);
    let addable: Vec<String> = if rigid {
        addable_summands(&rep, &SweepConfig::default()).iter().map(|i| i.to_string()).collect()
    } else {
        Vec::new()
    };
    let maximal = rigid && addable.is_empty();
    let hat = HatQuiver::new(rep.n());
    let image: Vec<String> = phi(&rep).iter().map(|i| hat.quiver().show(i)).collect();
    match format {
        Format::Table => {
            writeln!(out, "rep:         {}", rep.notation())?;
            writeln!(out, "type_alpha:  {type_alpha}")?;
            writeln!(out, "rigid:       {rigid}")?;
            writeln!(out, "maximal:     {maximal}")?;
            if !addable.is_empty() {
                writeln!(out, "addable:     {}", addable.join(" "))?;
            }
            writeln!(out, "phi:         {{{}}}", image.join(", "))?;
        }
        Format::Json => print_json(
            out,
            &json!({
                "rep": json::rep_to_json(&rep),
                "type_alpha": type_alpha,
                "rigid": rigid,
                "maximal": maximal,
                "addable": addable,
                "phi": image,
            }),
        )?,
    }
    Ok(EXIT_OK)
}
