//! Scores the raw reference posts with the builtin tagger, a stub
//! translator and term weights, then writes the JSON report and a pie chart.
//!
//!     cargo run --example corpus_report -- [out_dir]

use std::fs;
use std::path::{Path, PathBuf};

use sentifuzz::analytics::{pie_chart_data, render_pie_svg};
use sentifuzz::cli::{ingest, InputFormat};
use sentifuzz::textproc::TranslateError;
use sentifuzz::{CorpusReport, Execution, Lexicon, Pipeline, WeightTable};

fn french(text: &str) -> Result<String, TranslateError> {
    match text {
        "J'aime mon Iphone4S." => Ok("I love my Iphone4S.".to_string()),
        other => Ok(other.to_string()),
    }
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let out_dir = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(std::env::temp_dir);
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("data");

    let pipeline = Pipeline::new(Lexicon::fixture())
        .translator(french)
        .weights(WeightTable::from_path(&data.join("weights.tsv"))?);
    let posts = ingest(&data.join("golden_raw.txt"), InputFormat::Text)?;
    let output = pipeline.run(posts, Execution::Parallel)?;
    let report = CorpusReport::build(&output.posts, output.warnings)?;

    let report_path = out_dir.join("sentifuzz_report.json");
    let pie_path = out_dir.join("sentifuzz_pie.svg");
    fs::write(&report_path, report.to_json())?;
    fs::write(&pie_path, render_pie_svg(&pie_chart_data(&report)?))?;

    print!("{}", report.summary());
    for slice in pie_chart_data(&report)? {
        println!("  {:<16} {:5.1}%", slice.label.to_string(), slice.percent);
    }
    println!("wrote {} and {}", report_path.display(), pie_path.display());
    Ok(())
}
