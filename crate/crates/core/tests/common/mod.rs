#![allow(dead_code)]

use std::path::PathBuf;

use sentifuzz::{Execution, Lexicon, Pipeline, RawPost, ScoredPost, TaggerMode, WeightTable};

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

pub fn golden_posts() -> Vec<RawPost> {
    sentifuzz::cli::ingest(&data_path("golden_pretagged.txt"), sentifuzz::cli::InputFormat::Pretagged)
        .expect("golden corpus parses")
}

pub fn golden_pipeline() -> Pipeline {
    Pipeline::new(Lexicon::fixture()).tagger_mode(TaggerMode::Pretagged)
}

pub fn golden_weights() -> WeightTable {
    WeightTable::from_path(&data_path("weights.tsv")).unwrap()
}

pub fn score_golden(pipeline: &Pipeline) -> Vec<ScoredPost> {
    pipeline.run(golden_posts(), Execution::Sequential).unwrap().posts
}

/// Totals and labels printed for the ten reference posts, in order.
pub const GOLDEN: [(f64, &str); 10] = [
    (0.25, "positive"),
    (0.25, "positive"),
    (0.375, "positive"),
    (0.375, "positive"),
    (0.1875, "weak_positive"),
    (-0.75, "negative"),
    (0.375, "positive"),
    (-1.0, "negative"),
    (0.625, "positive"),
    (0.6875, "positive"),
];

pub fn verdict(criterion: &str, ok: bool, detail: &str) {
    println!("[{}] {criterion}: {detail}", if ok { "PASS" } else { "FAIL" });
}
