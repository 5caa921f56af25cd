//! Exit criteria. Run with `cargo test --test acceptance -- --nocapture`
//! to see one PASS/FAIL line per criterion.

mod common;

use std::collections::BTreeMap;
use std::time::Instant;

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use common::*;
use sentifuzz::analytics::{arithmetic_mean, pie_chart_data, weighted_mean};
use sentifuzz::scoring::{score_tokens, NegatedToken};
use sentifuzz::textproc::{clean, filter_opinion_words, parse_pretagged, tokenize, PUNCTUATION};
use sentifuzz::{
    CorpusReport, Execution, FuzzyPartition, Lexicon, Pipeline, PosCategory, RawPost, SentimentClass,
    StopwordSet, TaggerMode,
};

#[test]
fn criterion_1_golden_run() {
    let started = Instant::now();
    let pipeline = golden_pipeline();
    let scored = score_golden(&pipeline);
    let report = CorpusReport::build(&scored, Vec::new()).unwrap();
    let elapsed = started.elapsed();

    let got: Vec<(f64, String)> = scored.iter().map(|p| (p.total_score, p.class.to_string())).collect();
    let want: Vec<(f64, String)> = GOLDEN.iter().map(|&(s, l)| (s, l.to_string())).collect();
    let ok = got == want
        && report.total_posts == 10
        && report.positive_count == 8
        && report.negative_count == 2
        && report.arithmetic_mean == 0.1375
        && report.positive_percent == 80.0
        && report.negative_percent == 20.0
        && elapsed.as_secs_f64() < 1.0;
    verdict(
        "1 golden run",
        ok,
        &format!(
            "totals {:?}, n={} pos={} neg={} mean={} pos%={} neg%={} in {:?}",
            got.iter().map(|g| g.0).collect::<Vec<_>>(),
            report.total_posts,
            report.positive_count,
            report.negative_count,
            report.arithmetic_mean,
            report.positive_percent,
            report.negative_percent,
            elapsed
        ),
    );
    assert_eq!(got, want);
    assert_eq!(report.total_posts, 10);
    assert_eq!((report.positive_count, report.negative_count), (8, 2));
    assert_eq!(report.arithmetic_mean, 0.1375);
    assert_eq!((report.positive_percent, report.negative_percent), (80.0, 20.0));
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}");
}

/// Scores a pre-tagged line with negation marking switched off.
fn score_without_inversion(line: &str) -> f64 {
    let lexicon = Lexicon::fixture();
    let stopwords = StopwordSet::english();
    let tokens: Vec<NegatedToken> = filter_opinion_words(parse_pretagged(line).unwrap())
        .into_iter()
        .filter(|t| !stopwords.contains(t.normalized()))
        .map(|token| NegatedToken { token, negated: false })
        .collect();
    score_tokens(&tokens, &lexicon).iter().map(|s| s.net).sum()
}

#[test]
fn criterion_2_negation_reconstruction() {
    let pipeline = golden_pipeline();
    let score = |line: &str| pipeline.score(RawPost::new("n", line)).unwrap().0.total_score;
    let not_good = "iphone/NN is/VBZ not/RB good/JJ";
    let not_bad = "iphone/NN is/VBZ Not/RB bad/JJ";
    let with = (score(not_good), score(not_bad));
    let without = (score_without_inversion(not_good), score_without_inversion(not_bad));
    let ok = with == (-1.0, 0.375) && without.0 != -1.0 && without.1 != 0.375;
    verdict(
        "2 negation reconstruction",
        ok,
        &format!("with inversion {with:?}, without {without:?}"),
    );
    assert_eq!(with, (-1.0, 0.375));
    // without inversion: -0.375 + 0.625 and -0.375 - 0.75
    assert_eq!(without, (0.25, -1.125));
}

#[test]
fn criterion_3_lexicon_import() {
    let text = std::fs::read_to_string(data_path("swn_excerpt.txt")).unwrap();
    let data_lines: Vec<&str> = text.lines().filter(|l| !l.starts_with('#') && !l.trim().is_empty()).collect();
    let lexicon = Lexicon::parse_sentiwordnet(&text).unwrap();
    let violations = lexicon
        .entries()
        .filter(|e| {
            !(0.0..=1.0).contains(&e.pos_score)
                || !(0.0..=1.0).contains(&e.neg_score)
                || e.pos_score + e.neg_score > 1.0
        })
        .count();

    let mut rng = StdRng::seed_from_u64(3);
    let mut shuffled = data_lines.clone();
    shuffled.shuffle(&mut rng);
    let reshuffled = Lexicon::parse_sentiwordnet(&shuffled.join("\n")).unwrap();
    let a: Vec<_> = lexicon.entries().collect();
    let b: Vec<_> = reshuffled.entries().collect();
    let same = a == b;
    let able = lexicon.lookup("able", PosCategory::Adjective);

    verdict(
        "3 lexicon import",
        data_lines.len() == 200 && violations == 0 && same,
        &format!(
            "{} lines -> {} entries, {violations} violations, shuffled copy identical: {same}",
            data_lines.len(),
            lexicon.len()
        ),
    );
    assert_eq!(data_lines.len(), 200);
    assert_eq!(violations, 0);
    assert!(same);
    assert!(able.is_some());
}

#[test]
fn criterion_4_classifier_boundaries() {
    let p = FuzzyPartition::default();
    use SentimentClass::*;
    let cases = [
        (0.1875, WeakPositive),
        (0.25, Positive),
        (0.6875, Positive),
        (1.0, Positive),
        (1.0625 + 1e-9, StrongPositive),
        (-1.0, Negative),
        (0.0, Objective),
    ];
    let boundary_ok = cases.iter().all(|&(s, c)| p.classify(s) == c);

    let mut rng = StdRng::seed_from_u64(4);
    let mut asymmetric = Vec::new();
    for _ in 0..1000 {
        let s: f64 = rng.random_range(-3.0..=3.0);
        if p.classify(-s) != p.classify(s).mirror() {
            asymmetric.push(s);
        }
    }
    verdict(
        "4 classifier boundaries",
        boundary_ok && asymmetric.is_empty(),
        &format!("boundary table ok: {boundary_ok}, symmetry failures: {}", asymmetric.len()),
    );
    for (s, c) in cases {
        assert_eq!(p.classify(s), c, "score {s}");
    }
    assert!(asymmetric.is_empty(), "{asymmetric:?}");
}

fn runner() -> TestRunner {
    TestRunner::new(Config { cases: 500, failure_persistence: None, ..Config::default() })
}

fn post_text() -> impl Strategy<Value = String> {
    let word = prop_oneof![
        "[a-zA-Z]{1,8}",
        "[@#][a-z]{1,6}",
        "https?://[a-z./]{1,10}",
        "[!@#(){}\\[\\]:;,.?'\"~*^&%$a-z]{1,6}",
        Just("not".to_string()),
        Just("good".to_string()),
        Just("bad".to_string()),
        Just(":D".to_string()),
        "\\PC{1,4}",
    ];
    prop::collection::vec(word, 0..12).prop_map(|w| w.join(" "))
}

fn scored_corpus() -> impl Strategy<Value = Vec<(f64, f64)>> {
    // scores are multiples of 1/16 in [-16, 16]; weights in (0, 1]
    prop::collection::vec((-256i32..=256, 1u32..=100), 1..40)
        .prop_map(|v| v.into_iter().map(|(s, w)| (s as f64 / 16.0, w as f64 / 100.0)).collect())
}

fn to_posts(corpus: &[(f64, f64)], uniform: Option<f64>) -> Vec<sentifuzz::ScoredPost> {
    let partition = FuzzyPartition::default();
    corpus
        .iter()
        .enumerate()
        .map(|(i, &(score, w))| sentifuzz::ScoredPost {
            post: RawPost::new(i.to_string(), ""),
            token_scores: Vec::new(),
            emoticons: Vec::new(),
            total_score: score,
            weight: uniform.unwrap_or(w),
            class: partition.classify(score),
        })
        .collect()
}

#[test]
fn criterion_5_property_suites() {
    let mut results = BTreeMap::new();

    let r = runner().run(&post_text(), |text| {
        let once = clean(&text);
        prop_assert_eq!(clean(&once), once);
        Ok(())
    });
    results.insert("clean idempotence", r.map_err(|e| e.to_string()));

    let r = runner().run(&post_text(), |text| {
        for tok in tokenize(&clean(&text)) {
            prop_assert!(
                !tok.normalized.chars().any(|c| c == '@' || c == '#' || PUNCTUATION.contains(&c)),
                "token {:?}",
                tok.normalized
            );
        }
        Ok(())
    });
    results.insert("tokenizer purity", r.map_err(|e| e.to_string()));

    let r = runner().run(&(scored_corpus(), 1u32..=100), |(corpus, w)| {
        let posts = to_posts(&corpus, Some(w as f64 / 100.0));
        let diff = (weighted_mean(&posts).unwrap() - arithmetic_mean(&posts).unwrap()).abs();
        prop_assert!(diff <= 1e-12, "diff {}", diff);
        Ok(())
    });
    results.insert("weighted = arithmetic under uniform weights", r.map_err(|e| e.to_string()));

    let empty = Pipeline::new(Lexicon::empty()).emoticons(false);
    let r = runner().run(&post_text(), |text| {
        let (p, _) = empty.score(RawPost::new("z", text)).unwrap();
        prop_assert_eq!(p.total_score, 0.0);
        Ok(())
    });
    results.insert("zero-lexicon neutrality", r.map_err(|e| e.to_string()));

    let pipeline = Pipeline::new(Lexicon::fixture()).weights(golden_weights());
    let r = runner().run(&prop::collection::vec(post_text(), 1..30), |texts| {
        let posts: Vec<RawPost> =
            texts.into_iter().enumerate().map(|(i, t)| RawPost::new(i.to_string(), t)).collect();
        let seq = pipeline.run(posts.clone(), Execution::Sequential).unwrap();
        let par = pipeline.run(posts, Execution::Parallel).unwrap();
        let a = CorpusReport::build(&seq.posts, seq.warnings).unwrap().to_json();
        let b = CorpusReport::build(&par.posts, par.warnings).unwrap().to_json();
        prop_assert_eq!(a, b);
        Ok(())
    });
    results.insert("parallel vs sequential report", r.map_err(|e| e.to_string()));

    let mut all_ok = true;
    for (name, r) in &results {
        all_ok &= r.is_ok();
        verdict(
            &format!("5 property: {name}"),
            r.is_ok(),
            &match r {
                Ok(()) => "500 cases".to_string(),
                Err(e) => e.clone(),
            },
        );
    }
    assert!(all_ok, "{results:?}");
}

#[test]
fn criterion_6_pie_data() {
    let scored = score_golden(&golden_pipeline());
    let report = CorpusReport::build(&scored, Vec::new()).unwrap();
    let slices = pie_chart_data(&report).unwrap();
    let got: Vec<(String, f64)> = slices.iter().map(|s| (s.label.to_string(), s.percent)).collect();
    // hand tally of the ten reference labels: positive x7, weak_positive x1, negative x2
    let want = vec![
        ("positive".to_string(), 70.0),
        ("weak_positive".to_string(), 10.0),
        ("negative".to_string(), 20.0),
    ];
    let golden_sum: f64 = slices.iter().map(|s| s.percent).sum();

    let mut rng = StdRng::seed_from_u64(6);
    let mut worst = 0.0_f64;
    for _ in 0..500 {
        let n = rng.random_range(1..200);
        let corpus: Vec<(f64, f64)> =
            (0..n).map(|_| (rng.random_range(-48..=48) as f64 / 16.0, 1.0)).collect();
        let report = CorpusReport::build(&to_posts(&corpus, None), Vec::new()).unwrap();
        let sum: f64 = pie_chart_data(&report).unwrap().iter().map(|s| s.percent).sum();
        worst = worst.max((sum - 100.0).abs());
    }
    let ok = got == want && (golden_sum - 100.0).abs() <= 1e-9 && worst <= 1e-9;
    verdict(
        "6 pie data",
        ok,
        &format!("golden slices {got:?}, golden sum {golden_sum}, worst random deviation {worst:e}"),
    );
    assert_eq!(got, want);
    assert!((golden_sum - 100.0).abs() <= 1e-9);
    assert!(worst <= 1e-9);
}

#[test]
fn golden_corpus_is_pretagged_input() {
    // the golden run must go through the pre-tagged path, not the builtin tagger
    let posts = golden_posts();
    assert_eq!(posts.len(), 10);
    let scored = golden_pipeline().tagger_mode(TaggerMode::Pretagged).run(posts, Execution::Parallel).unwrap();
    let totals: Vec<f64> = scored.posts.iter().map(|p| p.total_score).collect();
    assert_eq!(totals, GOLDEN.map(|g| g.0));
}
