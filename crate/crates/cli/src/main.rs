//! `tourney`: generate tournaments, count cycles, check bounds and run the
//! verification suites.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use tourney_core::acyclic::{count_acyclic, f_lower, g_expected};
use tourney_core::census::{census5, class_table, count_k_cycles_bruteforce, CENSUS_MAX_N};
use tourney_core::edge_scores::{
    c3_closed, c5_exact, expected_c5, lower_bound_c5, score_variance, upper_bound_c5,
};
use tourney_core::rational::fmt_exact;
use tourney_core::scan::{mean_c5, scan, ScanRecord};
use tourney_core::verify::{run_suite, Suite};
use tourney_core::{exec, Exec, Seed, Tournament};

/// Largest order accepted by `count --method brute`.
const BRUTE_MAX_N: usize = 100;

#[derive(Parser)]
#[command(
    name = "tourney",
    version,
    about = "Exact cycle counting on tournaments"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a tournament in `<n>:<bits>` form
    Gen {
        #[arg(long, value_enum)]
        kind: Kind,
        /// Vertex count (the prime q for `qr`)
        #[arg(long)]
        n: usize,
        /// Probability of orienting i → j for i < j (`random` only)
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Comma-separated residues (`circulant` only)
        #[arg(long, value_delimiter = ',')]
        offsets: Vec<usize>,
    },
    /// Count directed k-cycles
    Count {
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Method::Formula)]
        method: Method,
        #[command(flatten)]
        input: Input,
    },
    /// Exact 5-cycle count with its lower and upper bounds
    Bounds {
        #[command(flatten)]
        input: Input,
    },
    /// Counts of the twelve 5-vertex subtournament classes
    Census {
        #[command(flatten)]
        input: Input,
    },
    /// Acyclic k-subtournaments against their lower bound and mean
    Acyclic {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        input: Input,
    },
    /// Run a property suite on random cases
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 200)]
        cases: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Sample random tournaments and write one CSV row per sample
    Scan {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// CSV destination; stdout when omitted
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(clap::Args)]
struct Input {
    /// Read the tournament from a file instead of stdin
    #[arg(long = "in")]
    path: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Random,
    Transitive,
    Circulant,
    Qr,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Formula,
    Brute,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Identities,
    Matrix,
    Acyclic,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Identities => Suite::Identities,
            SuiteArg::Matrix => Suite::Matrix,
            SuiteArg::Acyclic => Suite::Acyclic,
            SuiteArg::All => Suite::All,
        }
    }
}

impl Input {
    fn read(&self) -> Result<Tournament> {
        let text = match &self.path {
            Some(path) => {
                fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
            }
            None => {
                let mut buf = String::new();
                io::stdin()
                    .read_to_string(&mut buf)
                    .context("reading stdin")?;
                buf
            }
        };
        Ok(Tournament::parse(&text)?)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Ok(threads) = std::env::var("TOURNEY_THREADS") {
        match threads.parse::<usize>() {
            Ok(t) if t > 0 => {
                exec::configure_threads(t);
            }
            _ => {
                eprintln!("error: TOURNEY_THREADS must be a positive integer");
                return ExitCode::from(2);
            }
        }
    }
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match command {
        Command::Gen {
            kind,
            n,
            p,
            seed,
            offsets,
        } => {
            let t = match kind {
                Kind::Random => Tournament::random(n, p, Seed(seed))?,
                Kind::Transitive => Tournament::transitive(n),
                Kind::Circulant => Tournament::circulant(n, &offsets)?,
                Kind::Qr => Tournament::quadratic_residue(n)?,
            };
            writeln!(out, "{t}")?;
        }
        Command::Count { k, method, input } => {
            let t = input.read()?;
            let count = match (method, k) {
                (Method::Formula, 3) => c3_closed(&t),
                (Method::Formula, 5) => c5_exact(&t).c5,
                (Method::Formula, _) => bail!("--method formula supports k = 3 or 5"),
                (Method::Brute, 3..=5) => {
                    if t.n() > BRUTE_MAX_N {
                        bail!("--method brute is limited to n <= {BRUTE_MAX_N}");
                    }
                    count_k_cycles_bruteforce(&t, k) as i128
                }
                (Method::Brute, _) => bail!("--method brute supports k = 3, 4 or 5"),
            };
            writeln!(out, "{count}")?;
        }
        Command::Bounds { input } => {
            let t = input.read()?;
            let n = t.n();
            if n < 2 {
                bail!("bounds need at least 2 vertices");
            }
            let b = c5_exact(&t);
            writeln!(out, "n: {n}")?;
            writeln!(out, "c5: {}", b.c5)?;
            writeln!(out, "s1: {}", b.s1)?;
            writeln!(out, "s2: {}", b.s2)?;
            writeln!(out, "expected: {}", fmt_exact(&expected_c5(n)))?;
            writeln!(out, "lower_bound: {}", fmt_exact(&lower_bound_c5(&t)))?;
            writeln!(out, "upper_bound: {}", fmt_exact(&upper_bound_c5(n)))?;
            writeln!(out, "score_variance: {}", fmt_exact(&score_variance(&t)))?;
        }
        Command::Census { input } => {
            let t = input.read()?;
            if t.n() > CENSUS_MAX_N {
                bail!("census is limited to n <= {CENSUS_MAX_N}");
            }
            let census = census5(&t);
            let table = class_table();
            writeln!(out, "class\thamiltonian\tcanonical\tcount")?;
            for (j, count) in census.counts.iter().enumerate() {
                writeln!(
                    out,
                    "{j}\t{}\t{}\t{count}",
                    table.ham_counts[j],
                    table.canonical(j)
                )?;
            }
            writeln!(out, "total: {}", census.total())?;
            writeln!(out, "five_cycles: {}", census.five_cycles(table))?;
        }
        Command::Acyclic { k, input } => {
            let t = input.read()?;
            if k == 0 {
                bail!("--k must be at least 1");
            }
            let n = t.n() as u64;
            writeln!(out, "count: {}", count_acyclic(&t, k))?;
            writeln!(out, "f_lower: {}", fmt_exact(&f_lower(n, k as u32)))?;
            writeln!(out, "g_expected: {}", fmt_exact(&g_expected(n, k as u32)))?;
        }
        Command::Verify { suite, cases, seed } => {
            let reports = run_suite(suite.into(), cases, seed);
            let passed = reports.iter().all(|r| r.passed());
            for r in &reports {
                writeln!(out, "{r}")?;
            }
            let name = Suite::from(suite).name();
            writeln!(
                out,
                "verify {name}: {}",
                if passed { "PASS" } else { "FAIL" }
            )?;
            if !passed {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Scan {
            n,
            samples,
            seed,
            out: path,
        } => {
            let rows = scan(n, samples, seed, Exec::default());
            if let Some(bad) = rows.iter().find(|r| !r.bounds_hold()) {
                // unreachable unless the bounds are wrong; report like verify does
                eprintln!("bound sandwich violated for seed {}", bad.seed);
                return Ok(ExitCode::from(1));
            }
            match path {
                Some(path) => {
                    let file = fs::File::create(&path)
                        .with_context(|| format!("creating {}", path.display()))?;
                    write_csv(file, &rows)?;
                }
                None => write_csv(&mut out, &rows)?,
            }
            eprintln!(
                "samples: {samples}, mean c5: {:.4}, expected c5: {}",
                mean_c5(&rows),
                fmt_exact(&expected_c5(n))
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn write_csv(sink: impl Write, rows: &[ScanRecord]) -> Result<()> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(sink);
    w.write_record(ScanRecord::HEADER)?;
    for r in rows {
        w.write_record(r.fields())?;
    }
    w.flush()?;
    Ok(())
}
