//! Command line front end: corpus validation, per-record analysis, exact
//! determinants, the block factorization pipeline, parallel scanning, and
//! the bundled acceptance suite.
//!
//! Exit codes: 0 success, 1 input error, 2 internal assertion (a structural
//! guarantee of the engine failed), 3 conjecture counterexample found.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use ecomdet::cayley::{self, CayleyError, SYMBOLIC_LIMIT};
use ecomdet::corpus::{parse_corpus, CorpusRecord};
use ecomdet::det::{bareiss, laplace, probe_nonzero, PolyMatrix};
use ecomdet::factor::{factor_central_idempotent, factor_main_theorem, FactorError};
use ecomdet::suite::run_acceptance;
use ecomdet::DEFAULT_SEED;

const EXIT_INTERNAL: u8 = 2;
const EXIT_COUNTEREXAMPLE: u8 = 3;

#[derive(Parser)]
#[command(name = "ecomdet", version, about = "Exact determinants of finite semigroup tables")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Parse a corpus file and summarize its records.
    Validate {
        /// Corpus file, or - for stdin.
        file: PathBuf,
    },
    /// Run the full pipeline per record and print one JSON line each.
    Analyze {
        /// Corpus file, or - for stdin.
        file: PathBuf,
        /// Base seed for the randomized determinant probe.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Print the determinant of each record's multiplication table.
    Det {
        /// Corpus file, or - for stdin.
        file: PathBuf,
        /// Drop the absorbing element's row and column first.
        #[arg(long)]
        contracted: bool,
        /// Force an engine instead of choosing by size and sparsity.
        #[arg(long, value_enum)]
        method: Option<MethodArg>,
        /// Seed for the probe method.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Factor each record's star determinant into unit-class blocks.
    Factor {
        /// Corpus file, or - for stdin.
        file: PathBuf,
        /// Compare against a product formula instead of the block pipeline.
        #[arg(long, value_enum)]
        baseline: Option<Baseline>,
        /// Seed for the direct-verdict probe.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Analyze a whole corpus and write one JSON line per record.
    Scan {
        /// Corpus file, or - for stdin.
        file: PathBuf,
        /// Worker count; 0 means one per core.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Output path; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Base seed for the randomized determinant probe.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Run the bundled acceptance criteria and report each one.
    Selftest,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Laplace,
    Bareiss,
    Probe,
}

#[derive(Clone, Copy, ValueEnum)]
enum Baseline {
    Central,
}

fn main() -> ExitCode {
    // Dying quietly on a closed pipe beats a backtrace from println.
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    match cli.cmd {
        Cmd::Validate { file } => validate(&file),
        Cmd::Analyze { file, seed } => analyze(&file, seed),
        Cmd::Det { file, contracted, method, seed } => det(&file, contracted, method, seed),
        Cmd::Factor { file, baseline, seed } => factor(&file, baseline, seed),
        Cmd::Scan { file, jobs, out, seed } => scan(&file, jobs, out.as_deref(), seed),
        Cmd::Selftest => selftest(),
    }
}

fn read_records(file: &Path) -> anyhow::Result<Vec<CorpusRecord>> {
    let text = if file.as_os_str() == "-" {
        let mut buf = String::new();
        io::stdin().read_to_string(&mut buf).context("reading stdin")?;
        buf
    } else {
        fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?
    };
    Ok(parse_corpus(&text)?)
}

fn validate(file: &Path) -> anyhow::Result<u8> {
    let records = read_records(file)?;
    for rec in &records {
        println!("{} n={} zero={}", rec.id, rec.table.n(), rec.table.zero().is_some());
    }
    println!("ok: {} records", records.len());
    Ok(0)
}

fn analyze(file: &Path, seed: u64) -> anyhow::Result<u8> {
    let records = read_records(file)?;
    let results = ecomdet::analyze::scan(&records, 1, seed);
    ecomdet::analyze::write_jsonl(&results, io::stdout().lock()).context("writing results")?;
    Ok(0)
}

fn det(file: &Path, contracted: bool, method: Option<MethodArg>, seed: u64) -> anyhow::Result<u8> {
    let records = read_records(file)?;
    for rec in &records {
        let table = &rec.table;
        let m = if contracted {
            match cayley::contracted_cayley(table) {
                Ok(m) => m,
                Err(e @ CayleyError::NoZeroElement) => bail!("{}: {e}", rec.id),
                Err(e) => bail!("{}: {e}", rec.id),
            }
        } else {
            cayley::cayley(table)
        };
        let line = match method {
            Some(MethodArg::Probe) => verdict_word(probe_nonzero(&m, seed)?).to_string(),
            Some(MethodArg::Laplace) => {
                require_symbolic_size(&rec.id, &m)?;
                laplace(&m)?.display(table.labels(), "x")
            }
            Some(MethodArg::Bareiss) => {
                require_symbolic_size(&rec.id, &m)?;
                bareiss(&m)?.display(table.labels(), "x")
            }
            None => match cayley::exact_det(&m) {
                Ok(d) => d.display(table.labels(), "x"),
                Err(e @ CayleyError::TooLarge { .. }) => {
                    bail!("{}: {e}; use --method=probe for a randomized verdict", rec.id)
                }
                Err(e) => bail!("{}: {e}", rec.id),
            },
        };
        println!("{} {line}", rec.id);
    }
    Ok(0)
}

fn require_symbolic_size(id: &str, m: &PolyMatrix) -> anyhow::Result<()> {
    if m.rows() > SYMBOLIC_LIMIT {
        bail!("{id}: matrix of size {} exceeds the exact symbolic determinant limit", m.rows());
    }
    Ok(())
}

fn verdict_word(nonzero: bool) -> &'static str {
    if nonzero {
        "NONZERO"
    } else {
        "ZERO"
    }
}

fn factor(file: &Path, baseline: Option<Baseline>, seed: u64) -> anyhow::Result<u8> {
    let records = read_records(file)?;
    let mut code = 0u8;
    for rec in &records {
        let table = &rec.table;
        match baseline {
            Some(Baseline::Central) => match factor_central_idempotent(table) {
                Ok(product) => {
                    println!("{} central {}", rec.id, product.display(table.labels(), "x"));
                }
                Err(FactorError::NotCentral { e, s }) => {
                    println!(
                        "{} SKIPPED idempotent {} does not commute with element {}",
                        rec.id,
                        table.label(e),
                        table.label(s),
                    );
                }
                Err(e @ FactorError::Profile(_)) => {
                    println!("{} SKIPPED {e}", rec.id);
                }
                Err(e @ FactorError::BlockTooLarge { .. }) => bail!("{}: {e}", rec.id),
                Err(e) => {
                    eprintln!("{}: {e}", rec.id);
                    return Ok(EXIT_INTERNAL);
                }
            },
            None => match factor_main_theorem(table, seed) {
                Ok(report) => {
                    if !report.orthogonal {
                        let (a, b) = report.witness.expect("failing pair recorded");
                        println!(
                            "{} orthogonality fails at ({}, {}); direct {} by {}",
                            rec.id,
                            table.label(a),
                            table.label(b),
                            verdict_word(report.direct_nonzero),
                            report.direct_method.name(),
                        );
                        if report.direct_nonzero {
                            code = EXIT_COUNTEREXAMPLE;
                        }
                        continue;
                    }
                    for block in &report.blocks {
                        println!(
                            "{} block {} size {} det {}",
                            rec.id,
                            table.label(block.e),
                            block.rows.len(),
                            block.det_x.display(table.labels(), "x"),
                        );
                    }
                    let overall = report.overall_nonzero.expect("blocks computed");
                    println!(
                        "{} overall {} sign {:+} direct {} agrees",
                        rec.id,
                        verdict_word(overall),
                        report.perm_sign,
                        report.direct_method.name(),
                    );
                }
                Err(e @ (FactorError::Precondition(_) | FactorError::Profile(_))) => {
                    println!("{} SKIPPED {e}", rec.id);
                }
                Err(e @ FactorError::BlockTooLarge { .. }) => bail!("{}: {e}", rec.id),
                Err(e) => {
                    eprintln!("{}: {e}", rec.id);
                    return Ok(EXIT_INTERNAL);
                }
            },
        }
    }
    Ok(code)
}

fn scan(file: &Path, jobs: usize, out: Option<&Path>, seed: u64) -> anyhow::Result<u8> {
    let records = read_records(file)?;
    let results = ecomdet::analyze::scan(&records, jobs, seed);
    match out {
        Some(path) => {
            let f = fs::File::create(path)
                .with_context(|| format!("creating {}", path.display()))?;
            ecomdet::analyze::write_jsonl(&results, io::BufWriter::new(f))
                .context("writing results")?;
        }
        None => {
            ecomdet::analyze::write_jsonl(&results, io::stdout().lock())
                .context("writing results")?;
        }
    }
    let summary = ecomdet::analyze::summarize(&results);
    eprintln!(
        "scanned {} records: {} consistent, {} skipped, {} counterexamples",
        summary.total,
        summary.consistent,
        summary.skipped,
        summary.counterexamples.len(),
    );
    if summary.counterexamples.is_empty() {
        Ok(0)
    } else {
        eprintln!("counterexamples: {}", summary.counterexamples.join(" "));
        Ok(EXIT_COUNTEREXAMPLE)
    }
}

fn selftest() -> anyhow::Result<u8> {
    let mut stdout = io::stdout().lock();
    let mut all_pass = true;
    for report in run_acceptance() {
        writeln!(stdout, "{}", report.line()).context("writing report")?;
        all_pass &= report.passed;
    }
    Ok(if all_pass { 0 } else { EXIT_INTERNAL })
}
