//! Command-line front end: `gen`, `verify`, `pair`, `bench` and `report`.
//!
//! Exit codes: 0 success, 1 domain failure (no convergence, verification
//! failure, unreadable file), 2 usage error.

use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use crate::codebook_io::{self, ReportRow};
use crate::constraints::ConstraintSpec;
use crate::ecg;
use crate::edit_model::{parse_eoi, parse_quotas, EditProfile, ErrorSpec};
use crate::error::Error;
use crate::fec_bitset::format_tuples;
use crate::generator::{grow_codebook, CheckSpec, GenerationConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Environment variable capping worker threads.
pub const THREADS_ENV: &str = "ECG_THREADS";

#[derive(Debug, Parser)]
#[command(name = "ids-codebook", version, about = "Grow and check DNA codebooks that correct substitutions, insertions and deletions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Grow a codebook and write it as JSON.
    Gen(GenArgs),
    /// Check that every pair in a codebook file is non-confusable.
    Verify {
        path: PathBuf,
    },
    /// Show the feasible edit counts between two sequences.
    Pair {
        s1: String,
        s2: String,
        #[arg(long, default_value = "sub,ins,del")]
        eoi: String,
        /// Quotas checked directly, one per edit.
        #[arg(long, default_value = "1,1,1")]
        eq: String,
    },
    /// Time `gen` over several augment lengths and print CSV.
    Bench {
        #[command(flatten)]
        gen: GenOptions,
        /// Comma separated augment lengths.
        #[arg(long, default_value = "2,3,4,5,8")]
        aug_lens: String,
    },
    /// Print the redundancy comparison CSV for codebook files.
    Report {
        paths: Vec<PathBuf>,
    },
}

#[derive(Debug, Args)]
struct GenArgs {
    #[command(flatten)]
    opts: GenOptions,
    #[arg(long, default_value_t = 1)]
    aug_len: usize,
    #[arg(long)]
    out: PathBuf,
    /// Record wall time in the output file.
    #[arg(long)]
    timing: bool,
}

#[derive(Debug, Args)]
struct GenOptions {
    /// Codebook size.
    #[arg(long)]
    size: usize,
    #[arg(long, default_value = "sub,ins,del")]
    eoi: String,
    /// Errors to correct per edit; with --raw-check, pair-check quotas instead.
    #[arg(long)]
    eq: String,
    #[arg(long)]
    raw_check: bool,
    #[arg(long, default_value_t = 3)]
    run: usize,
    #[arg(long, default_value_t = 0.6)]
    gc_bal: f64,
    #[arg(long, default_value_t = 7)]
    ctx_len: usize,
    #[arg(long, default_value_t = 64)]
    candidates: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 64)]
    max_steps: usize,
    #[arg(long, default_value_t = 0)]
    min_extra_steps: usize,
    #[arg(long)]
    verbose: bool,
}

impl GenOptions {
    fn config(&self, aug_len: usize) -> Result<GenerationConfig, Error> {
        let eoi = parse_eoi(&self.eoi)?;
        let eq = parse_quotas(&self.eq)?;
        let check = if self.raw_check {
            EditProfile::new(eoi.clone(), eq.clone())?;
            CheckSpec::Raw { eoi, eq }
        } else {
            let spec = ErrorSpec::new(eoi, eq)?;
            spec.check_profile()?;
            CheckSpec::Correct(spec)
        };
        let mut config = GenerationConfig::new(self.size, check);
        config.constraint = ConstraintSpec::new(self.run, self.gc_bal, self.ctx_len, aug_len)?;
        config.candidates_per_step = self.candidates;
        config.seed = self.seed;
        config.max_steps = self.max_steps;
        config.min_extra_steps = self.min_extra_steps;
        config.verbose = self.verbose;
        config.threads = threads_from_env();
        config.validate()?;
        Ok(config)
    }
}

fn threads_from_env() -> usize {
    std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(0)
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::InvalidProfile(_)
        | Error::Capacity { .. }
        | Error::Parse(_)
        | Error::InvalidConfig(_)
        | Error::Alphabet { .. }
        | Error::UnequalLength(..) => EXIT_USAGE,
        _ => EXIT_FAILURE,
    }
}

/// Runs the command line given by `args` (program name first).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return EXIT_USAGE;
            }
            let _ = write!(out, "{}", e.render());
            return EXIT_OK;
        }
    };
    let result = match cli.command {
        Command::Gen(args) => cmd_gen(args, out),
        Command::Verify { path } => cmd_verify(path, out),
        Command::Pair { s1, s2, eoi, eq } => cmd_pair(&s1, &s2, &eoi, &eq, out),
        Command::Bench { gen, aug_lens } => cmd_bench(gen, &aug_lens, out),
        Command::Report { paths } => cmd_report(paths, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn cmd_gen(args: GenArgs, out: &mut dyn Write) -> Result<i32, Error> {
    let config = args.opts.config(args.aug_len)?;
    let codebook = grow_codebook(&config)?;
    codebook_io::save(&codebook, &args.out, args.timing)?;
    writeln!(
        out,
        "wrote {} sequences of length {} to {} (redundancy {:.4}, baseline {:.4})",
        codebook.size(),
        codebook.seq_len(),
        args.out.display(),
        codebook.redundancy(),
        codebook.baseline_redundancy()
    )?;
    Ok(EXIT_OK)
}

fn cmd_verify(path: PathBuf, out: &mut dyn Write) -> Result<i32, Error> {
    let codebook = codebook_io::load(&path, false)?;
    if let Err(e) = codebook.verify() {
        writeln!(out, "FAIL {}: {e}", path.display())?;
        return Ok(EXIT_FAILURE);
    }
    writeln!(
        out,
        "OK {}: {} sequences of length {}, every pair out of reach under ({})",
        path.display(),
        codebook.size(),
        codebook.seq_len(),
        crate::edit_model::format_quotas(codebook.profile.quotas())
    )?;
    Ok(EXIT_OK)
}

fn cmd_pair(s1: &str, s2: &str, eoi: &str, eq: &str, out: &mut dyn Write) -> Result<i32, Error> {
    let profile = Arc::new(EditProfile::parse(eoi, eq)?);
    let state = ecg::run_pair(profile.clone(), s1.as_bytes(), s2.as_bytes())?;
    writeln!(out, "fec: {}", format_tuples(&state.terminal_fecs()))?;
    writeln!(out, "bits: {}", state.terminal_set().bit_string())?;
    writeln!(out, "loss: {} (L = {})", state.pair_loss(), profile.len())?;
    writeln!(out, "visits: {}", state.visits())?;
    Ok(EXIT_OK)
}

fn cmd_bench(opts: GenOptions, aug_lens: &str, out: &mut dyn Write) -> Result<i32, Error> {
    let lens = parse_quotas(aug_lens)
        .map_err(|_| Error::InvalidConfig(format!("bad augment length list {aug_lens:?}")))?;
    if lens.is_empty() || lens.contains(&0) {
        return Err(Error::InvalidConfig("augment lengths must be positive".into()));
    }
    let configs = lens
        .iter()
        .map(|&l| opts.config(l))
        .collect::<Result<Vec<_>, _>>()?;
    writeln!(out, "aug_len,seconds,n,redundancy")?;
    for (len, config) in lens.iter().zip(configs) {
        let start = Instant::now();
        let codebook = grow_codebook(&config)?;
        writeln!(
            out,
            "{len},{:.3},{},{:.4}",
            start.elapsed().as_secs_f64(),
            codebook.seq_len(),
            codebook.redundancy()
        )?;
    }
    Ok(EXIT_OK)
}

fn cmd_report(paths: Vec<PathBuf>, out: &mut dyn Write) -> Result<i32, Error> {
    let rows = paths
        .iter()
        .map(|p| codebook_io::load(p, false).map(|c| codebook_io::report(&c)))
        .collect::<Result<Vec<ReportRow>, _>>()?;
    codebook_io::write_report(&rows, out)?;
    Ok(EXIT_OK)
}
