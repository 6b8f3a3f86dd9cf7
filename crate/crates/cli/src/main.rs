//! `verify`: run the series checks over a corpus and write a report.
//!
//! Exit codes: 0 when no record fails, 1 when some record fails, 2 on an
//! operational error (bad arguments, unreadable corpus, unwritable output).

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, ValueEnum};
use vseries::corpus::{builtin_corpus, load_manifest};
use vseries::verify::{
    render_json, render_markdown, verify_corpus, CorpusSource, Suite, VerifyConfig,
};
use vseries::{Limits, Mode};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Markdown,
}

#[derive(Debug, Parser)]
#[command(
    name = "verify",
    version,
    about = "Check the vanishing-off series identities over a corpus of groups"
)]
struct Args {
    /// Manifest path, or `builtin` for the bundled catalog.
    #[arg(long, default_value = "builtin")]
    corpus: String,

    /// Groups above this order are excluded.
    #[arg(long, default_value_t = 1024)]
    max_order: usize,

    /// `all`, or a comma-separated list of check ids.
    #[arg(long, default_value = "all")]
    suite: String,

    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Output file; standard output when omitted.
    #[arg(long)]
    out: Option<PathBuf>,

    /// Worker threads; 1 runs sequentially.
    #[arg(long)]
    jobs: Option<usize>,

    /// Largest group order for which character tables are computed.
    #[arg(long, default_value_t = vseries::characters::DEFAULT_CHARACTER_CAP)]
    char_cap: usize,
}

/// Runs the suite and returns the number of failing records.
fn run(args: &Args) -> Result<usize> {
    let suite = Suite::parse(&args.suite)?;
    let limits = Limits::default();
    let groups = if args.corpus == "builtin" {
        builtin_corpus(args.max_order, &limits)
    } else {
        load_manifest(Path::new(&args.corpus), &limits)?
    };
    if groups.is_empty() {
        bail!("corpus `{}` has no groups", args.corpus);
    }
    let mode = if args.jobs == Some(1) {
        Mode::Sequential
    } else {
        Mode::Parallel
    };
    let config = VerifyConfig {
        char_cap: args.char_cap,
        mode,
        ..VerifyConfig::default()
    };
    let source = CorpusSource {
        source: args.corpus.clone(),
        max_order: args.max_order,
    };
    let report = with_pool(args.jobs, || {
        verify_corpus(&groups, &suite, &config, source)
    })?;
    let markdown = matches!(args.format, Format::Markdown);
    match &args.out {
        Some(path) => report.emit(markdown, path)?,
        None => {
            let text = if markdown {
                render_markdown(&report)
            } else {
                render_json(&report)
            };
            std::io::stdout()
                .lock()
                .write_all(text.as_bytes())
                .context("cannot write report to stdout")?;
        }
    }
    Ok(report.summary.fail)
}

/// 0 when no record fails, 1 otherwise.
fn exit_code(failures: usize) -> u8 {
    u8::from(failures > 0)
}

#[cfg(feature = "parallel")]
fn with_pool<R: Send>(jobs: Option<usize>, f: impl FnOnce() -> R + Send) -> Result<R> {
    match jobs {
        Some(0) => bail!("--jobs must be at least 1"),
        Some(n) if n > 1 => {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(n).build()?;
            Ok(pool.install(f))
        }
        _ => Ok(f()),
    }
}

#[cfg(not(feature = "parallel"))]
fn with_pool<R: Send>(jobs: Option<usize>, f: impl FnOnce() -> R + Send) -> Result<R> {
    if jobs == Some(0) {
        bail!("--jobs must be at least 1");
    }
    Ok(f())
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(&args) {
        Ok(failures) => ExitCode::from(exit_code(failures)),
        Err(e) => {
            eprintln!("verify: {e:#}");
            ExitCode::from(2)
        }
    }
}
