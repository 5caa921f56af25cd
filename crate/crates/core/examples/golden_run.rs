//! Reproduces the ten-post reference run from the bundled pre-tagged corpus
//! and fixture lexicon.
//!
//!     cargo run --example golden_run

use std::path::Path;

use sentifuzz::cli::{format_score, ingest, InputFormat};
use sentifuzz::{CorpusReport, Execution, Lexicon, Pipeline, TaggerMode, WeightTable};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    let posts = ingest(&data.join("golden_pretagged.txt"), InputFormat::Pretagged)?;

    let pipeline = Pipeline::new(Lexicon::fixture())
        .tagger_mode(TaggerMode::Pretagged)
        .weights(WeightTable::from_path(&data.join("weights.tsv"))?);
    let output = pipeline.run(posts, Execution::Sequential)?;

    for post in &output.posts {
        println!("{:<70} {} {}", post.post.text, format_score(post.total_score), post.class);
    }
    let report = CorpusReport::build(&output.posts, output.warnings)?;
    print!("\n{}", report.summary());
    Ok(())
}
