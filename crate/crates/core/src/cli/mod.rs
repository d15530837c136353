//! Command-line front end: argument definitions, output formatting and
//! dispatch. `main.rs` only parses arguments and maps errors to exit codes.

mod bfile;
mod generate;
mod verify;

use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::analysis::{
    check_witness, excluded_fixed_quarters, first_divergence, fixed_points, model_t1, model_t2,
    unbounded_witness, Divergence, TrajectoryIter, DEFAULT_COMPARE_LIMIT, TRAJECTORY_MAX,
};
use crate::closed_forms::s_inverse;
use crate::{Error, Int, Natural};

pub use bfile::{bfile_diff, BFile, DiffReport, Mismatch};
pub use generate::{generate, SequenceId, Terms, DEFAULT_LIMIT_BITS, GEN_INDEX_MAX, GEN_MAX_COUNT};
pub use verify::{verify, CheckOutcome, Report, Suite, VERIFY_LIMIT_MAX};

const GEN_AFTER_HELP: &str = "\
Sequences and first indices:
  s         A102370  from 0   upward diagonal reading
  t         A102371  from 1   missing numbers
  d         A105033  from 0   downward diagonal reading
  sinv      A103122  from 0   inverse of s (may be negative)
  sigma     A105027  from 0   upward block permutation
  delta     A105025  from 0   downward reading, repeats removed
  leftdown  A105029  from 0   left-adjusted downward reading
  f         A103318  from 1   term count of the sum for t
  fprime    A104234  from 0   term count of the sum for s
  R         A103529  from 1   records of s
  gap       A103530  from 1   2^(k+1) - R(k)
  fixed     A104235  from 1   fixed points of s, first one is 0
  g         A034797  from 1   least n with f(n) = m (exact up to m = 5)
  t1hat     A103127  from 0   numbers congruent to -1, 1, 3, 5 mod 16

The A-number may be used in place of the short name.";

#[derive(Debug, Parser)]
#[command(
    name = "sloping",
    version,
    about = "Diagonal readings of the binary number array"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print terms of a sequence.
    #[command(after_help = GEN_AFTER_HELP)]
    Gen(GenArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Iterate n -> s(n), optionally against a model sequence.
    Traj(TrajArgs),
    /// Print the integer n with s(n) = m.
    Inverse {
        m: Natural,
        #[arg(long, value_enum, default_value_t = Base::Ten)]
        base: Base,
    },
    /// List the fixed points of s up to a limit.
    Fixed {
        #[arg(long)]
        limit: u64,
        /// List the m <= limit for which 4m is not fixed instead.
        #[arg(long)]
        quarters: bool,
    },
    /// Build n = a j + b with s(n) - n >= 2^(2^m - b).
    Witness {
        #[arg(long)]
        a: Natural,
        #[arg(long, allow_hyphen_values = true)]
        b: Int,
        #[arg(long)]
        m: u32,
    },
    /// Compare a b-file against freshly generated terms.
    BfileDiff {
        sequence: String,
        path: PathBuf,
        #[arg(long, default_value_t = DEFAULT_LIMIT_BITS)]
        limit_bits: u64,
    },
}

#[derive(Debug, Args)]
pub struct GenArgs {
    /// Sequence name or A-number.
    pub sequence: String,
    /// First index; defaults to the sequence's offset.
    #[arg(long)]
    pub start: Option<u64>,
    #[arg(long, default_value_t = 10)]
    pub count: u64,
    #[arg(long, value_enum, default_value_t = Base::Ten)]
    pub base: Base,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
    /// Refuse values wider than this many bits.
    #[arg(long, default_value_t = DEFAULT_LIMIT_BITS)]
    pub limit_bits: u64,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    /// Sweep bound.
    #[arg(long, default_value_t = 1 << 14)]
    pub limit: u64,
}

#[derive(Debug, Args)]
pub struct TrajArgs {
    pub m: Natural,
    /// Number of terms; defaults to 20, or 1000000 when comparing.
    #[arg(long)]
    pub count: Option<usize>,
    #[arg(long, value_enum, default_value_t = Compare::None)]
    pub compare: Compare,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Base {
    #[value(name = "2")]
    Two,
    #[value(name = "10")]
    Ten,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Bfile,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Compare {
    None,
    T1hat,
    T2hat,
}

/// Why a command did not succeed.
#[derive(Debug)]
pub enum Failure {
    /// A check failed or a mismatch was found; the report is already printed.
    Check,
    Error(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl Failure {
    /// 1 for failed checks and exhausted budgets, 2 for bad input.
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Check => 1,
            Failure::Error(Error::Budget { .. } | Error::Invariant(_)) => 1,
            Failure::Error(_) => 2,
            Failure::Io(_) => 1,
        }
    }
}

/// Renders `v` in base 2 or 10; negative values get a leading `-`.
pub fn render(v: &Int, base: Base) -> String {
    match base {
        Base::Two => v.to_str_radix(2),
        Base::Ten => v.to_string(),
    }
}

/// Formats generated terms.
pub fn format_terms(terms: &Terms, base: Base, format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Plain => {
            let line: Vec<String> = terms.values.iter().map(|v| render(v, base)).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        Format::Bfile => {
            for (i, v) in terms.indexed() {
                out.push_str(&format!("{i} {}\n", render(v, base)));
            }
        }
        Format::Csv => {
            out.push_str("n,value\n");
            for (i, v) in terms.indexed() {
                out.push_str(&format!("{i},{}\n", render(v, base)));
            }
        }
    }
    out
}

pub fn run(cli: Cli, out: &mut dyn Write) -> Result<(), Failure> {
    match cli.command {
        Command::Gen(args) => {
            let id: SequenceId = args.sequence.parse()?;
            if args.format == Format::Bfile && args.base == Base::Two {
                return Err(Error::domain("b-files are decimal; drop --base 2").into());
            }
            let start = args.start.unwrap_or(id.offset());
            let terms = generate(id, start, args.count, args.limit_bits)?;
            out.write_all(format_terms(&terms, args.base, args.format).as_bytes())?;
        }
        Command::Verify(args) => {
            let report = verify(args.suite, args.limit)?;
            for check in &report.checks {
                writeln!(out, "{check}")?;
            }
            if !report.passed() {
                return Err(Failure::Check);
            }
        }
        Command::Traj(args) => traj(&args, out)?,
        Command::Inverse { m, base } => {
            writeln!(out, "{}", render(&s_inverse(&m), base))?;
        }
        Command::Fixed { limit, quarters } => {
            let list = if quarters {
                excluded_fixed_quarters(limit)?
            } else {
                fixed_points(limit)?
            };
            let line: Vec<String> = list.iter().map(u64::to_string).collect();
            writeln!(out, "{}", line.join(" "))?;
        }
        Command::Witness { a, b, m } => {
            let w = unbounded_witness(&a, &b, m)?;
            writeln!(out, "n {}", w.n)?;
            writeln!(out, "j {}", w.j)?;
            writeln!(out, "k {}", w.k)?;
            if !check_witness(&w, &a, &b) {
                writeln!(out, "check failed")?;
                return Err(Failure::Check);
            }
            writeln!(out, "s(n) - n >= 2^{}", w.k)?;
        }
        Command::BfileDiff {
            sequence,
            path,
            limit_bits,
        } => {
            let id: SequenceId = sequence.parse()?;
            let text = std::fs::read_to_string(&path)
                .map_err(|e| Error::Domain(format!("cannot read {}: {e}", path.display())))?;
            let file = BFile::parse(&text)?;
            let report = bfile_diff(id, &file, limit_bits)?;
            match report.mismatch {
                None => writeln!(out, "match: {} terms of {id}", report.compared)?,
                Some(m) => {
                    writeln!(
                        out,
                        "mismatch at index {}: expected {}, found {}",
                        m.index, m.expected, m.found
                    )?;
                    return Err(Failure::Check);
                }
            }
        }
    }
    Ok(())
}

fn traj(args: &TrajArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let count = args.count.unwrap_or(match args.compare {
        Compare::None => 20,
        _ => DEFAULT_COMPARE_LIMIT,
    });
    if count == 0 || count > TRAJECTORY_MAX {
        return Err(Error::budget("trajectory length", TRAJECTORY_MAX as u64).into());
    }
    let model: fn(u64) -> u64 = match args.compare {
        Compare::None => {
            let terms: Vec<String> = TrajectoryIter::new(args.m.clone())
                .take(count)
                .map(|v| v.to_string())
                .collect();
            writeln!(out, "{}", terms.join(" "))?;
            return Ok(());
        }
        Compare::T1hat => model_t1,
        Compare::T2hat => model_t2,
    };
    let orbit: Vec<Natural> = TrajectoryIter::new(args.m.clone()).take(count).collect();
    let modelled = (0..count as u64).map(|n| Natural::from(model(n)));
    let report = first_divergence(orbit.iter().cloned(), modelled, count)?;

    // rows 0..3, then the neighbourhood of the divergence or the last row
    let focus = report.first_divergence_index().unwrap_or(count - 1);
    let mut rows: Vec<usize> = (0..3.min(count)).collect();
    for i in focus.saturating_sub(1)..=(focus + 1).min(count - 1) {
        if !rows.contains(&i) {
            rows.push(i);
        }
    }
    writeln!(out, "n\tT(n)\tmodel(n)\tdifference")?;
    let mut previous = None;
    for i in rows {
        if previous.is_some_and(|p: usize| i > p + 1) {
            writeln!(out, "...\t...\t...\t...")?;
        }
        let a = Int::from(orbit[i].clone());
        let b = Int::from(model(i as u64));
        writeln!(out, "{i}\t{a}\t{b}\t{}", &a - &b)?;
        previous = Some(i);
    }
    match report.divergence {
        Some(Divergence {
            index,
            value_a,
            value_b,
        }) => writeln!(out, "divergence at {index}: {value_a} vs {value_b}")?,
        None => writeln!(out, "no divergence in {} terms", report.agree_count)?,
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (Result<(), Failure>, String) {
        let cli =
            Cli::try_parse_from(std::iter::once("sloping").chain(args.iter().copied())).unwrap();
        let mut out = Vec::new();
        let result = run(cli, &mut out);
        (result, String::from_utf8(out).unwrap())
    }

    #[test]
    fn gen_examples() {
        let (r, out) = run_args(&["gen", "s", "--start", "0", "--count", "7"]);
        assert!(r.is_ok());
        assert_eq!(out, "0 3 6 5 4 15 10\n");
        let (_, out) = run_args(&["gen", "s", "--count", "5", "--base", "2"]);
        assert_eq!(out, "0 11 110 101 100\n");
        let (_, out) = run_args(&[
            "gen", "t", "--start", "1", "--count", "5", "--format", "bfile",
        ]);
        assert_eq!(out, "1 1\n2 2\n3 7\n4 12\n5 29\n");
        let (_, out) = run_args(&[
            "gen", "sinv", "--count", "3", "--format", "csv", "--base", "2",
        ]);
        assert_eq!(out, "n,value\n0,0\n1,-1\n2,-10\n");
    }

    #[test]
    fn traj_tables() {
        let (_, out) = run_args(&["traj", "0", "--count", "5"]);
        assert_eq!(out, "0 0 0 0 0\n");
        let (_, out) = run_args(&["traj", "1", "--count", "600", "--compare", "t1hat"]);
        assert!(out.contains("511\t4095\t2047\t2048\n"));
        assert!(out.contains("512\t4097\t2049\t2048\n"));
        assert!(out.ends_with("divergence at 511: 4095 vs 2047\n"));
        let (_, out) = run_args(&["traj", "2", "--count", "20", "--compare", "t2hat"]);
        assert!(out.ends_with("no divergence in 20 terms\n"));
    }

    #[test]
    fn failures_map_to_codes() {
        let (r, _) = run_args(&["gen", "g", "--start", "6", "--count", "1"]);
        assert_eq!(r.unwrap_err().exit_code(), 1);
        let (r, _) = run_args(&["gen", "bogus"]);
        assert_eq!(r.unwrap_err().exit_code(), 2);
        let (r, _) = run_args(&["witness", "--a", "8", "--b", "0", "--m", "2"]);
        assert_eq!(r.unwrap_err().exit_code(), 2);
    }

    #[test]
    fn witness_output() {
        let (r, out) = run_args(&["witness", "--a", "1", "--b", "0", "--m", "2"]);
        assert!(r.is_ok());
        assert_eq!(out, "n 12\nj 12\nk 4\ns(n) - n >= 2^4\n");
        let (r, _) = run_args(&["witness", "--a", "3", "--b", "-5", "--m", "3"]);
        assert!(r.is_ok());
    }

    #[test]
    fn render_bases() {
        assert_eq!(render(&Int::from(0), Base::Two), "0");
        assert_eq!(render(&Int::from(-3), Base::Two), "-11");
        assert_eq!(render(&Int::from(-3), Base::Ten), "-3");
    }
}
