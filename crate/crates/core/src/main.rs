use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use sentifuzz::cli::{run, InputFormat, LexiconFormat, RunConfig};
use sentifuzz::{Execution, TaggerMode};

#[derive(Clone, Copy, ValueEnum)]
enum LexiconArg {
    Sentiwordnet,
    Simple,
    Fixture,
}

#[derive(Clone, Copy, ValueEnum)]
enum InputArg {
    Text,
    Pretagged,
    Jsonl,
}

#[derive(Clone, Copy, ValueEnum)]
enum TaggerArg {
    Builtin,
    Pretagged,
}

/// Score a corpus of posts and write a sentiment report.
#[derive(Parser)]
#[command(name = "sentifuzz", version)]
struct Args {
    /// Lexicon file; omit to use the bundled fixture.
    #[arg(long)]
    lexicon: Option<PathBuf>,
    /// Defaults to sentiwordnet when --lexicon is given, fixture otherwise.
    #[arg(long, value_enum)]
    lexicon_format: Option<LexiconArg>,
    /// Posts to score.
    #[arg(long)]
    input: PathBuf,
    /// One post per line, or JSON lines with id/author/text/language.
    #[arg(long, value_enum, default_value = "text")]
    input_format: InputArg,
    /// One stopword per line; replaces the builtin English list.
    #[arg(long)]
    stopwords: Option<PathBuf>,
    /// Term weights as `term<TAB>weight`.
    #[arg(long)]
    weights: Option<PathBuf>,
    /// Fuzzy partition as `class<TAB>a<TAB>b<TAB>c<TAB>d`.
    #[arg(long)]
    partition: Option<PathBuf>,
    /// Defaults to pretagged for pretagged input, builtin otherwise.
    #[arg(long, value_enum)]
    tagger: Option<TaggerArg>,
    /// Map emoticons to a +/-0.5 score adjustment.
    #[arg(long)]
    emoticons: bool,
    /// Leave zero-score posts out of the report.
    #[arg(long)]
    drop_objective: bool,
    /// Where to write the JSON report.
    #[arg(long)]
    report: PathBuf,
    /// Where to write the class pie chart as SVG.
    #[arg(long)]
    pie: Option<PathBuf>,
    /// Score posts on a thread pool.
    #[arg(long)]
    parallel: bool,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let input_format = match args.input_format {
        InputArg::Text => InputFormat::Text,
        InputArg::Pretagged => InputFormat::Pretagged,
        InputArg::Jsonl => InputFormat::Jsonl,
    };
    let mut config = RunConfig::new(args.input, input_format, args.report);
    config.lexicon_format = match (args.lexicon_format, &args.lexicon) {
        (Some(LexiconArg::Sentiwordnet), _) | (None, Some(_)) => LexiconFormat::SentiWordNet,
        (Some(LexiconArg::Simple), _) => LexiconFormat::Simple,
        (Some(LexiconArg::Fixture), _) | (None, None) => LexiconFormat::Fixture,
    };
    config.lexicon = args.lexicon;
    if let Some(t) = args.tagger {
        config.tagger = match t {
            TaggerArg::Builtin => TaggerMode::Builtin,
            TaggerArg::Pretagged => TaggerMode::Pretagged,
        };
    }
    config.stopwords = args.stopwords;
    config.weights = args.weights;
    config.partition = args.partition;
    config.emoticons = args.emoticons;
    config.drop_objective = args.drop_objective;
    config.pie = args.pie;
    if args.parallel {
        config.execution = Execution::Parallel;
    }

    match run(&config, &mut std::io::stdout().lock()) {
        Ok(_) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
