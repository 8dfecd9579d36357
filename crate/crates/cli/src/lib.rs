//! Command-line runner: reads a corpus, runs the verification suite on
//! every entry and writes a JSON report.

pub mod cache;
pub mod corpus;
pub mod report;

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::Parser;
use plocal_core::locality::WordFragment;
use plocal_core::verify::{run_entry, Statement, SuiteConfig, VerificationReport};
use plocal_core::Limits;
use rayon::prelude::*;

pub use cache::DiskCache;
pub use corpus::{parse_corpus, CorpusEntry, CorpusError, ParseError};
pub use report::Summary;

pub const DEFAULT_CORPUS: &str = include_str!("../corpus/default.txt");
pub const EXTENDED_CORPUS: &str = include_str!("../corpus/extended.txt");

#[derive(Debug, Parser)]
#[command(
    name = "plocal",
    version,
    about = "Check fusion-system and locality statements over a corpus of finite groups"
)]
pub struct Args {
    /// Corpus file; the built-in default corpus when omitted.
    #[arg(long)]
    pub corpus: Option<PathBuf>,
    /// Only run this statement id (repeatable), e.g. `Lemma-2.2b`.
    #[arg(long = "statement", value_name = "ID")]
    pub statements: Vec<String>,
    /// Largest group order to enumerate.
    #[arg(long, default_value_t = Limits::default().max_elements as u64, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_elements: u64,
    /// Check locality axioms on words of length 4 as well.
    #[arg(long)]
    pub full_word_check: bool,
    /// Worker threads (0 picks one per core).
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
    #[arg(long, default_value = "plocal-report.json")]
    pub report: PathBuf,
    #[arg(long)]
    pub no_cache: bool,
    #[arg(long, default_value = ".plocal-cache")]
    pub cache_dir: PathBuf,
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub limits: Limits,
    pub fragment: WordFragment,
    pub statements: Option<BTreeSet<Statement>>,
    pub cache_dir: Option<PathBuf>,
    pub jobs: usize,
    pub report: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            limits: Limits::default(),
            fragment: WordFragment::Standard,
            statements: None,
            cache_dir: None,
            jobs: 0,
            report: None,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Corpus(#[from] CorpusError),
    #[error("{0}")]
    Config(String),
    #[error("{0}")]
    Entry(#[from] plocal_core::Error),
}

impl CliError {
    fn io(path: &Path) -> impl FnOnce(std::io::Error) -> CliError + '_ {
        move |source| CliError::Io {
            path: path.to_path_buf(),
            source,
        }
    }
}

impl RunConfig {
    pub fn from_args(args: &Args) -> Result<Self, CliError> {
        let statements = if args.statements.is_empty() {
            None
        } else {
            let mut set = BTreeSet::new();
            for id in &args.statements {
                let s = Statement::from_id(id)
                    .ok_or_else(|| CliError::Config(format!("unknown statement id `{id}`")))?;
                set.insert(s);
            }
            Some(set)
        };
        Ok(RunConfig {
            limits: Limits {
                max_elements: args.max_elements as usize,
                ..Limits::default()
            },
            fragment: if args.full_word_check {
                WordFragment::Full
            } else {
                WordFragment::Standard
            },
            statements,
            cache_dir: (!args.no_cache).then(|| args.cache_dir.clone()),
            jobs: args.jobs,
            report: Some(args.report.clone()),
        })
    }
}

pub struct RunOutput {
    pub reports: Vec<VerificationReport>,
    pub summary: Summary,
    pub cache: Option<Arc<DiskCache>>,
}

/// Runs every entry (in parallel up to `config.jobs`) and returns the
/// reports sorted by `(entry, statement, instance)`.
pub fn execute(config: &RunConfig, entries: &[CorpusEntry]) -> Result<RunOutput, CliError> {
    let cache = match &config.cache_dir {
        Some(dir) => Some(Arc::new(DiskCache::open(dir).map_err(CliError::io(dir))?)),
        None => None,
    };
    let suite = SuiteConfig {
        limits: config.limits,
        fragment: config.fragment,
        statements: config.statements.clone(),
        cache: cache
            .clone()
            .map(|c| c as Arc<dyn plocal_core::cache::LatticeCache>),
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| CliError::Config(e.to_string()))?;
    let results: Vec<_> =
        pool.install(|| entries.par_iter().map(|e| run_entry(e, &suite)).collect());
    let mut reports = Vec::new();
    for r in results {
        reports.extend(r?);
    }
    reports.sort_by(|a, b| a.key().cmp(&b.key()));
    let summary = Summary::of(&reports);
    Ok(RunOutput {
        reports,
        summary,
        cache,
    })
}

/// Parses `corpus`, runs it and writes the report if configured.
pub fn run(config: &RunConfig, corpus: &str) -> Result<RunOutput, CliError> {
    let entries = parse_corpus(corpus, config.limits)?;
    let out = execute(config, &entries)?;
    if let Some(path) = &config.report {
        std::fs::write(path, report::to_json(&out.reports)).map_err(CliError::io(path))?;
    }
    Ok(out)
}
