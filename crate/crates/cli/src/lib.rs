//! Command-line front end for `perm1324`.
//!
//! Data goes to standard output; progress and diagnostics go to standard
//! error. Exit status is 0 on success, 1 when a checked comparison or a decode
//! fails, and 2 on a usage error.

pub mod cache;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::Serialize;

use perm1324::bounds::{growth_row, CountReport, GrowthRow, REFERENCE_LOWER_GROWTH};
use perm1324::codec::{decode, decode_unverified, encode, CodePair};
use perm1324::enumerate::{count_avoiders, enumerate_avoiders, Limits};
use perm1324::words::count_cb_free;
use perm1324::{Permutation, TypeWord};

use crate::cache::{Cache, CACHE_ENV, DEFAULT_CACHE_FILE};

#[derive(Debug, Parser)]
#[command(
    name = "perm1324",
    version,
    about = "Colorings, type words and counting bounds for 1324-avoiding permutations"
)]
pub struct Cli {
    /// Worker threads for enumeration (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    /// Count cache location.
    #[arg(long, global = true, env = CACHE_ENV)]
    pub cache: Option<PathBuf>,

    /// Neither read nor write the count cache.
    #[arg(long, global = true)]
    pub no_cache: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct MaxArg {
    /// Largest length to report (at least 1).
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub max: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print S_n(pattern) for n = 1..=max.
    Count {
        #[arg(long, default_value = "1324")]
        pattern: Permutation,
        #[command(flatten)]
        max: MaxArg,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// List Av_n(pattern) in lexicographic order, one permutation per line.
    Enumerate {
        #[arg(long, default_value = "1324")]
        pattern: Permutation,
        /// Permutation length.
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
    },
    /// Print the position word and value word of a permutation.
    Encode { perm: Permutation },
    /// Rebuild the permutation with the given position and value words.
    Decode {
        w: TypeWord,
        z: TypeWord,
        /// Skip the final re-encoding check (benchmarking only).
        #[arg(long)]
        unverified: bool,
    },
    /// Print h_n, the number of CB-free words of length n, for n = 0..=max.
    Words {
        #[arg(long, value_parser = clap::value_parser!(u64).range(0..))]
        max: u64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Check every bound for n = 1..=max.
    Verify {
        #[command(flatten)]
        max: MaxArg,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Write a JSON report (bound checks, growth table, word counts) to PATH.
    Report {
        path: PathBuf,
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u64).range(1..))]
        max: u64,
    },
}

#[derive(Debug)]
pub enum Failure {
    /// Exit status 2.
    Usage(String),
    /// Exit status 1.
    Failed(String),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Failed(_) => 1,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Failed(m) => m,
        }
    }
}

impl From<perm1324::Error> for Failure {
    fn from(e: perm1324::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Failed(format!("i/o error: {e}"))
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Failed(format!("json error: {e}"))
    }
}

/// Counts `Av_n(pattern)`, consulting and filling the cache.
pub struct Counter {
    cache: Option<Cache>,
    limits: Limits,
}

impl Counter {
    pub fn new(cache: Option<Cache>) -> Self {
        Counter { cache, limits: Limits::default() }
    }

    pub fn count(&mut self, pattern: &Permutation, n: usize) -> Result<BigUint, Failure> {
        self.limits.check(n)?;
        let name = pattern.to_string();
        if let Some(hit) = self.cache.as_ref().and_then(|c| c.get(&name, n)) {
            return Ok(hit);
        }
        let count = count_avoiders(n, pattern, &self.limits)?;
        if let Some(c) = self.cache.as_mut() {
            c.insert(&name, n, &count);
        }
        Ok(count)
    }

    pub fn finish(mut self) {
        if let Some(c) = self.cache.as_mut() {
            if let Err(e) = c.save() {
                eprintln!("could not write cache {}: {e}", c.path().display());
            }
        }
    }
}

fn open_cache(cli: &Cli) -> Option<Cache> {
    if cli.no_cache {
        return None;
    }
    let path = cli.cache.clone().unwrap_or_else(|| PathBuf::from(DEFAULT_CACHE_FILE));
    Some(Cache::open(path))
}

#[derive(Serialize)]
struct CountRow {
    n: usize,
    count: String,
}

#[derive(Serialize)]
struct WordsRow {
    n: usize,
    h_n: String,
}

#[derive(Serialize)]
struct FullReport<'a> {
    max: usize,
    all_passed: bool,
    reports: &'a [CountReport],
    growth: &'a [GrowthRow],
    reference_lower_growth: f64,
    words: Vec<WordsRow>,
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<(), Failure> {
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            return Err(Failure::Usage("--jobs must be at least 1".into()));
        }
        // A second call in the same process keeps the first pool.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }

    match &cli.command {
        Command::Count { pattern, max, format } => {
            let max = max.max as usize;
            Limits::default().check(max)?;
            let mut counter = Counter::new(open_cache(cli));
            let mut rows = Vec::with_capacity(max);
            for n in 1..=max {
                rows.push(CountRow { n, count: counter.count(pattern, n)?.to_string() });
            }
            counter.finish();
            match format {
                Format::Csv => {
                    writeln!(out, "n,count")?;
                    for r in &rows {
                        writeln!(out, "{},{}", r.n, r.count)?;
                    }
                }
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&rows)?)?,
            }
        }
        Command::Enumerate { pattern, n } => {
            for perm in enumerate_avoiders(*n as usize, pattern, &Limits::default())? {
                writeln!(out, "{perm}")?;
            }
        }
        Command::Encode { perm } => {
            writeln!(out, "{}", encode(perm))?;
        }
        Command::Decode { w, z, unverified } => {
            let code = CodePair::new(w.clone(), z.clone());
            let result = if *unverified { decode_unverified(&code) } else { decode(&code) };
            match result {
                Ok(perm) => writeln!(out, "{perm}")?,
                Err(e) => {
                    return Err(Failure::Failed(format!("decode failed at stage {e}")));
                }
            }
        }
        Command::Words { max, format } => {
            let rows = words_rows(*max as usize);
            match format {
                Format::Csv => {
                    writeln!(out, "n,h_n")?;
                    for r in &rows {
                        writeln!(out, "{},{}", r.n, r.h_n)?;
                    }
                }
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&rows)?)?,
            }
        }
        Command::Verify { max, format } => {
            let reports = reports(cli, max.max as usize)?;
            match format {
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&reports)?)?,
                Format::Csv => {
                    writeln!(out, "{}", CountReport::CSV_HEADER)?;
                    for r in &reports {
                        writeln!(out, "{}", r.csv_row())?;
                    }
                }
            }
            check_all(&reports)?;
        }
        Command::Report { path, max } => {
            let max = *max as usize;
            let reports = reports(cli, max)?;
            let growth: Vec<GrowthRow> = reports.iter().map(|r| growth_row(r.n, r.s_n.clone())).collect();
            let full = FullReport {
                max,
                all_passed: reports.iter().all(CountReport::passed),
                reports: &reports,
                growth: &growth,
                reference_lower_growth: REFERENCE_LOWER_GROWTH,
                words: words_rows(max),
            };
            let mut text = serde_json::to_string_pretty(&full)?;
            text.push('\n');
            std::fs::write(path, text)?;
            eprintln!("wrote {}", path.display());
            check_all(&reports)?;
        }
    }
    Ok(())
}

fn words_rows(max: usize) -> Vec<WordsRow> {
    count_cb_free(max).values().iter().enumerate().map(|(n, h)| WordsRow { n, h_n: h.to_string() }).collect()
}

fn reports(cli: &Cli, max: usize) -> Result<Vec<CountReport>, Failure> {
    Limits::default().check(max)?;
    let pattern = perm1324::bounds::pattern_1324();
    let mut counter = Counter::new(open_cache(cli));
    let mut out = Vec::with_capacity(max);
    for n in 1..=max {
        out.push(CountReport::new(n, counter.count(&pattern, n)?));
    }
    counter.finish();
    Ok(out)
}

fn check_all(reports: &[CountReport]) -> Result<(), Failure> {
    let failed: Vec<usize> = reports.iter().filter(|r| !r.passed()).map(|r| r.n).collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Failed(format!("bound check failed for n = {failed:?}")))
    }
}
