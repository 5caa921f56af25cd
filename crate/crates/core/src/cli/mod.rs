//! Configuration and driver behind the `sentifuzz` binary.

mod ingest;

pub use ingest::{ingest, parse_posts};

use std::env;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::analytics::{pie_chart_data, render_pie_svg, AnalyticsError, CorpusReport};
use crate::fuzzy::FuzzyPartition;
use crate::lexicon::Lexicon;
use crate::pipeline::{Execution, Pipeline, TaggerMode};
use crate::scoring::WeightTable;
use crate::textproc::StopwordSet;

/// Overrides the directory bundled data files are read from.
pub const DATA_DIR_ENV: &str = "SENTIFUZZ_DATA_DIR";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LexiconFormat {
    SentiWordNet,
    Simple,
    Fixture,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFormat {
    Text,
    Pretagged,
    Jsonl,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Config(String),
    #[error("{path}: {message}")]
    Read { path: String, message: String },
    #[error("{path}:{line}: {message}")]
    Input { path: String, line: usize, message: String },
    #[error("{path}: {message}")]
    Lexicon { path: String, message: String },
    #[error(transparent)]
    Post(#[from] crate::pipeline::PostError),
    #[error("{0}")]
    Analytics(#[from] AnalyticsError),
    #[error("{path}: {message}")]
    Write { path: String, message: String },
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub lexicon: Option<PathBuf>,
    pub lexicon_format: LexiconFormat,
    pub input: PathBuf,
    pub input_format: InputFormat,
    pub stopwords: Option<PathBuf>,
    pub weights: Option<PathBuf>,
    pub partition: Option<PathBuf>,
    pub tagger: TaggerMode,
    pub emoticons: bool,
    pub drop_objective: bool,
    pub report: PathBuf,
    pub pie: Option<PathBuf>,
    pub execution: Execution,
}

impl RunConfig {
    /// Config with defaults: fixture lexicon, tagger chosen from the input format.
    pub fn new(input: impl Into<PathBuf>, input_format: InputFormat, report: impl Into<PathBuf>) -> Self {
        RunConfig {
            lexicon: None,
            lexicon_format: LexiconFormat::Fixture,
            input: input.into(),
            input_format,
            stopwords: None,
            weights: None,
            partition: None,
            tagger: match input_format {
                InputFormat::Pretagged => TaggerMode::Pretagged,
                _ => TaggerMode::Builtin,
            },
            emoticons: false,
            drop_objective: false,
            report: report.into(),
            pie: None,
            execution: Execution::Sequential,
        }
    }

    pub fn validate(&self) -> Result<(), CliError> {
        let pretagged_input = self.input_format == InputFormat::Pretagged;
        let pretagged_tagger = self.tagger == TaggerMode::Pretagged;
        if pretagged_tagger && !pretagged_input {
            return Err(CliError::Config(
                "--tagger pretagged requires --input-format pretagged".into(),
            ));
        }
        if pretagged_input && !pretagged_tagger {
            return Err(CliError::Config(
                "--input-format pretagged cannot be re-tagged by the builtin tagger".into(),
            ));
        }
        if self.lexicon_format != LexiconFormat::Fixture && self.lexicon.is_none() {
            return Err(CliError::Config("--lexicon is required for this lexicon format".into()));
        }
        let files = [
            self.lexicon.as_deref(),
            Some(self.input.as_path()),
            self.stopwords.as_deref(),
            self.weights.as_deref(),
            self.partition.as_deref(),
        ];
        for path in files.into_iter().flatten() {
            if !path.is_file() {
                return Err(CliError::Read {
                    path: path.display().to_string(),
                    message: "file not found".into(),
                });
            }
        }
        Ok(())
    }
}

fn data_dir() -> Option<PathBuf> {
    env::var_os(DATA_DIR_ENV).map(PathBuf::from)
}

fn read_err(path: &Path, e: impl ToString) -> CliError {
    CliError::Read {
        path: path.display().to_string(),
        message: e.to_string(),
    }
}

fn load_lexicon(config: &RunConfig) -> Result<Lexicon, CliError> {
    let lex_err = |path: &Path, e: crate::lexicon::LexiconError| CliError::Lexicon {
        path: path.display().to_string(),
        message: e.to_string(),
    };
    match (config.lexicon_format, config.lexicon.as_deref()) {
        (LexiconFormat::SentiWordNet, Some(p)) => Lexicon::open_sentiwordnet(p).map_err(|e| lex_err(p, e)),
        (LexiconFormat::Simple, Some(p)) => Lexicon::open_simple(p).map_err(|e| lex_err(p, e)),
        (LexiconFormat::Fixture, Some(p)) => Lexicon::open_simple(p).map_err(|e| lex_err(p, e)),
        (LexiconFormat::Fixture, None) => match data_dir() {
            Some(dir) => {
                let p = dir.join("fixture_lexicon.tsv");
                Lexicon::open_simple(&p).map_err(|e| lex_err(&p, e))
            }
            None => Ok(Lexicon::fixture()),
        },
        (_, None) => Err(CliError::Config("--lexicon is required for this lexicon format".into())),
    }
}

/// Explicit path, else `$SENTIFUZZ_DATA_DIR/<name>` when that file exists.
fn resolve_data_file(explicit: Option<&Path>, name: &str) -> Option<PathBuf> {
    explicit
        .map(Path::to_path_buf)
        .or_else(|| data_dir().map(|d| d.join(name)).filter(|p| p.is_file()))
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|e| CliError::Write {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

/// Builds the pipeline described by `config`; returns it with any load warnings.
pub fn build_pipeline(config: &RunConfig) -> Result<(Pipeline, Vec<String>), CliError> {
    let mut warnings = Vec::new();
    let lexicon = load_lexicon(config)?;
    let stopwords = match resolve_data_file(config.stopwords.as_deref(), "stopwords.txt") {
        Some(p) => StopwordSet::from_path(&p).map_err(|e| read_err(&p, e))?,
        None => StopwordSet::english(),
    };
    let weights = match resolve_data_file(config.weights.as_deref(), "weights.tsv") {
        Some(p) => WeightTable::from_path(&p).map_err(|e| read_err(&p, e))?,
        None => WeightTable::new(),
    };
    let partition = match resolve_data_file(config.partition.as_deref(), "partition.tsv") {
        Some(p) => {
            let (partition, w) = FuzzyPartition::from_path(&p).map_err(|e| read_err(&p, e))?;
            warnings.extend(w);
            partition
        }
        None => FuzzyPartition::default(),
    };
    let pipeline = Pipeline::new(lexicon)
        .stopwords(stopwords)
        .weights(weights)
        .partition(partition)
        .tagger_mode(config.tagger)
        .emoticons(config.emoticons);
    Ok((pipeline, warnings))
}

/// Runs the whole pipeline, writes the report (and pie chart), and prints
/// per-post lines and the summary to `out`.
pub fn run<W: Write>(config: &RunConfig, out: &mut W) -> Result<CorpusReport, CliError> {
    config.validate()?;
    let (pipeline, mut warnings) = build_pipeline(config)?;
    let posts = ingest(&config.input, config.input_format)?;
    if posts.is_empty() {
        return Err(CliError::Analytics(AnalyticsError::EmptyCorpus));
    }
    let output = pipeline.run(posts, config.execution)?;
    warnings.extend(output.warnings);
    let mut scored = output.posts;
    if config.drop_objective {
        let before = scored.len();
        scored.retain(|p| p.total_score != 0.0);
        let dropped = before - scored.len();
        if dropped > 0 {
            warnings.push(format!("dropped {dropped} objective posts"));
        }
    }
    let report = CorpusReport::build(&scored, warnings)?;
    if let Some(pie) = &config.pie {
        write_file(pie, &render_pie_svg(&pie_chart_data(&report)?))?;
    }
    let mut text = String::new();
    for p in &report.posts {
        text.push_str(&format!("{} {}\n", format_score(p.score), p.class));
    }
    text.push_str(&report.summary());
    for w in &report.warnings {
        text.push_str(&format!("warning: {w}\n"));
    }
    out.write_all(text.as_bytes())
        .map_err(|e| CliError::Write { path: "<stdout>".into(), message: e.to_string() })?;
    // last step: a written report means the run succeeded
    write_file(&config.report, &report.to_json())?;
    Ok(report)
}

/// Shortest round-trip form, always with a decimal point (`-1.0`, `0.1875`).
pub fn format_score(score: f64) -> String {
    let s = score.to_string();
    if s.contains('.') || s.contains("inf") || s.contains("NaN") {
        s
    } else {
        format!("{s}.0")
    }
}
