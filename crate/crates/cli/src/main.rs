//! `polyalg`: rook polynomials, Hilbert series and oracle checks for polyominoes.

mod report;

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use polyalg_core::enumerate::{enumerate_fixed, scan_record, ScanRecord, ScanSummary};
use polyalg_core::hilbert::{hilbert_series_recursive, hilbert_series_thin, krull_dimension};
use polyalg_core::oracle::run_oracle;
use polyalg_core::{
    a_invariant, find_collapse, has_s_property, is_gorenstein, multiplicity, parse_polyomino,
    regularity, rook_polynomial_bruteforce, rook_polynomial_recursive, verify_conjecture,
    verify_main_theorem, Error, InputFormat, Polyomino, ResourceLimits,
};

use report::{big_value, Report, Timings, Verdict};

#[derive(Parser)]
#[command(
    name = "polyalg",
    version,
    about = "Rook polynomials and Hilbert series of polyominoes"
)]
struct Cli {
    /// Record wall-clock timings in the report (makes output non-reproducible).
    #[arg(long, global = true)]
    timings: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Auto,
    Ascii,
    Coords,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Theorem,
    Conjecture,
}

#[derive(clap::Args)]
struct Input {
    /// Input file, or `-` for stdin.
    file: PathBuf,

    #[arg(long, value_enum, default_value = "auto")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Structural flags only.
    Classify(Input),
    /// Rook polynomial, Hilbert series and invariants of a simple thin polyomino.
    Invariants(Input),
    /// Compare against the Gröbner-basis oracle.
    Verify {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        depth: usize,
        #[arg(long, value_enum, default_value = "theorem")]
        mode: Mode,
        /// Write generators and Gröbner basis as plain text.
        #[arg(long)]
        dump_gb: Option<PathBuf>,
    },
    /// Conjecture scan over every fixed polyomino up to a rank.
    Scan {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_rank: u32,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        jobs: u32,
        /// JSON-lines output, one record per polyomino.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Input error distinct from [`Error::Parse`] so the exit code stays 2.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::Parse(_) | Error::Empty) => 2,
        Some(
            Error::Precondition(_)
            | Error::NotALeaf(_)
            | Error::InvalidStep(_)
            | Error::InsufficientDepth(_),
        ) => 3,
        Some(Error::ResourceLimit(_)) => 4,
        Some(Error::Falsification(_)) => 5,
        None => 2,
    }
}

fn limits_from_env() -> Result<ResourceLimits> {
    let mut limits = ResourceLimits::default();
    for (name, slot) in [
        ("POLYALG_MAX_VARS", &mut limits.max_vars),
        ("POLYALG_MAX_DEGREE", &mut limits.max_degree),
    ] {
        if let Ok(raw) = std::env::var(name) {
            *slot = raw.trim().parse().map_err(|_| {
                Usage(format!(
                    "{name} must be a non-negative integer, got {raw:?}"
                ))
            })?;
        }
    }
    Ok(limits)
}

fn read_input(input: &Input) -> Result<Polyomino> {
    let text = if input.file == Path::new("-") {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .context("reading stdin")?;
        s
    } else {
        fs::read_to_string(&input.file)
            .map_err(|e| Usage(format!("cannot read {}: {e}", input.file.display())))?
    };
    let format = match input.format {
        Format::Auto => InputFormat::detect(&text),
        Format::Ascii => InputFormat::AsciiGrid,
        Format::Coords => InputFormat::CoordinateList,
    };
    Ok(parse_polyomino(&text, format)?)
}

fn elapsed_ms(t: Instant) -> f64 {
    (t.elapsed().as_secs_f64() * 1e6).round() / 1e3
}

fn print_json<T: serde::Serialize>(value: &T) -> Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

fn falsified(what: &str, a: impl std::fmt::Display, b: impl std::fmt::Display) -> anyhow::Error {
    Error::Falsification(format!("{what}: {a} vs {b}")).into()
}

fn invariants(p: &Polyomino, report: &mut Report) -> Result<()> {
    if !p.is_connected() || !p.is_simple() || !p.is_thin() {
        return Err(Error::Precondition(format!(
            "invariants need a simple thin polyomino (simple = {}, thin = {}); \
             hint: use `polyalg verify --mode conjecture` for other shapes",
            p.is_simple(),
            p.is_thin()
        ))
        .into());
    }
    let rook = rook_polynomial_bruteforce(p);
    let recursive = rook_polynomial_recursive(p)?;
    if rook != recursive {
        return Err(falsified("rook polynomials disagree", &rook, &recursive));
    }
    let series = hilbert_series_thin(p)?;
    let by_recursion = hilbert_series_recursive(p)?;
    if series != by_recursion {
        return Err(falsified("Hilbert series disagree", &series, &by_recursion));
    }
    debug_assert_eq!(series.denom_power, krull_dimension(p)?);
    report.rook_number = rook.degree();
    report.rook_polynomial = Some(rook);
    report.hilbert_series = Some(series);
    report.regularity = Some(regularity(p)?);
    report.multiplicity = Some(big_value(&multiplicity(p)?));
    report.a_invariant = Some(a_invariant(p)?);
    report.s_property = Some(has_s_property(p));
    report.gorenstein = Some(is_gorenstein(p)?);
    if !p.is_cell_interval() {
        report.collapse = Some(find_collapse(p)?);
    }
    Ok(())
}

fn single(
    cli_timings: bool,
    command: &'static str,
    input: &Input,
    run: impl FnOnce(&Polyomino, &mut Report) -> Result<bool>,
) -> Result<u8> {
    let t0 = Instant::now();
    let p = read_input(input)?;
    let parse_ms = elapsed_ms(t0);
    let mut report = Report::new(command, &p);
    let t1 = Instant::now();
    let falsification = run(&p, &mut report)?;
    if cli_timings {
        report.timings = Some(Timings {
            parse_ms,
            compute_ms: elapsed_ms(t1),
        });
    }
    print_json(&report)?;
    Ok(if falsification { 5 } else { 0 })
}

fn scan(max_rank: usize, jobs: usize, out: Option<&Path>, limits: &ResourceLimits) -> Result<u8> {
    let corpus: Vec<Polyomino> = enumerate_fixed(max_rank)?.collect();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build()?;
    let records: Vec<ScanRecord> =
        pool.install(|| corpus.par_iter().map(|p| scan_record(p, limits)).collect());
    if let Some(path) = out {
        let mut w = io::BufWriter::new(
            fs::File::create(path)
                .map_err(|e| Usage(format!("cannot create {}: {e}", path.display())))?,
        );
        for r in &records {
            serde_json::to_writer(&mut w, r)?;
            writeln!(w)?;
        }
        w.flush()?;
    }
    let summary = ScanSummary::from_records(&records);
    print_json(&summary)?;
    Ok(0)
}

fn run(cli: Cli) -> Result<u8> {
    let limits = limits_from_env()?;
    match &cli.command {
        Command::Classify(input) => single(cli.timings, "classify", input, |_, _| Ok(false)),
        Command::Invariants(input) => single(cli.timings, "invariants", input, |p, r| {
            invariants(p, r)?;
            Ok(false)
        }),
        Command::Verify {
            input,
            depth,
            mode,
            dump_gb,
        } => single(cli.timings, "verify", input, |p, r| {
            let falsification = match mode {
                Mode::Theorem => {
                    let v = verify_main_theorem(p, *depth, &limits)?;
                    let bad = !v.matches;
                    r.rook_polynomial = Some(v.series.numerator.clone());
                    r.rook_number = v.series.numerator.degree();
                    r.hilbert_series = Some(v.series.clone());
                    r.oracle = Some(Verdict::Theorem(v));
                    bad
                }
                Mode::Conjecture => {
                    let v = verify_conjecture(p, *depth, &limits)?;
                    r.rook_polynomial = Some(v.rook.clone());
                    r.rook_number = Some(v.rook_number);
                    r.oracle = Some(Verdict::Conjecture(v));
                    false
                }
            };
            if let Some(path) = dump_gb {
                let run = run_oracle(p, *depth, &limits)?;
                fs::write(path, run.dump())
                    .map_err(|e| Usage(format!("cannot write {}: {e}", path.display())))?;
            }
            Ok(falsification)
        }),
        Command::Scan {
            max_rank,
            jobs,
            out,
        } => scan(*max_rank as usize, *jobs as usize, out.as_deref(), &limits),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
