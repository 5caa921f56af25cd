mod common;

use proptest::prelude::*;

use sentifuzz::analytics::{arithmetic_mean, class_histogram, count_polarities, sentiment_percentages};
use sentifuzz::textproc::{
    filter_opinion_words, format_pretagged, parse_pretagged, remove_stopwords, tag, BaselineTagger,
};
use sentifuzz::{
    FuzzyPartition, Lexicon, PennTag, Pipeline, PosCategory, RawPost, ScoredPost, SentimentClass,
    StopwordSet, TaggedToken, TaggerMode, Token, WeightTable,
};

fn sixteenth() -> impl Strategy<Value = f64> {
    (0u32..=16).prop_map(|k| k as f64 / 16.0)
}

/// Valid SentiWordNet line: scores are multiples of 1/16 with pos + neg <= 1.
fn swn_line() -> impl Strategy<Value = String> {
    (
        prop::sample::select(vec!['a', 'n', 'v', 'r']),
        sixteenth(),
        sixteenth(),
        prop::collection::vec(("[a-z]{1,6}(_[a-z]{1,4})?", 1u8..5), 1..4),
    )
        .prop_filter("pos + neg <= 1", |(_, p, n, _)| p + n <= 1.0)
        .prop_map(|(pos, p, n, terms)| {
            let terms: Vec<String> = terms.into_iter().map(|(t, s)| format!("{t}#{s}")).collect();
            format!("{pos}\t00000001\t{p}\t{n}\t{}\tgloss", terms.join(" "))
        })
}

fn tagged_token() -> impl Strategy<Value = TaggedToken> {
    let tags: Vec<PennTag> = PennTag::ALL
        .iter()
        .copied()
        .filter(|t| !matches!(t, PennTag::LeftBracket | PennTag::RightBracket))
        .collect();
    ("[a-z']{1,7}", prop::sample::select(tags))
        .prop_map(|(w, tag)| TaggedToken::new(Token::new(w, 0), tag))
}

fn reindex(mut tokens: Vec<TaggedToken>) -> Vec<TaggedToken> {
    for (i, t) in tokens.iter_mut().enumerate() {
        t.token.index = i;
    }
    tokens
}

proptest! {
    #[test]
    fn imported_entries_respect_bounds_and_are_reachable(lines in prop::collection::vec(swn_line(), 0..30)) {
        let text = lines.join("\n");
        let lex = Lexicon::parse_sentiwordnet(&text).unwrap();
        for e in lex.entries() {
            prop_assert!((0.0..=1.0).contains(&e.pos_score));
            prop_assert!((0.0..=1.0).contains(&e.neg_score));
            prop_assert!(e.pos_score + e.neg_score <= 1.0);
        }
        for line in &lines {
            let fields: Vec<&str> = line.split('\t').collect();
            let cat = PosCategory::from_code(fields[0]).unwrap();
            for term in fields[4].split(' ') {
                let lemma = term.split('#').next().unwrap();
                prop_assert!(lex.lookup(lemma, cat).is_some(), "{} unreachable", lemma);
            }
        }
    }

    #[test]
    fn merge_is_order_independent(lines in prop::collection::vec(swn_line(), 1..30), seed in any::<u64>()) {
        let mut shuffled = lines.clone();
        let n = shuffled.len();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            shuffled.swap(i, (s >> 33) as usize % (i + 1));
        }
        let a = Lexicon::parse_sentiwordnet(&lines.join("\n")).unwrap();
        let b = Lexicon::parse_sentiwordnet(&shuffled.join("\n")).unwrap();
        prop_assert_eq!(a.entries().collect::<Vec<_>>(), b.entries().collect::<Vec<_>>());
    }

    #[test]
    fn reimporting_merged_rows_is_idempotent(lines in prop::collection::vec(swn_line(), 0..30)) {
        let merged = Lexicon::parse_sentiwordnet(&lines.join("\n")).unwrap();
        let as_swn: Vec<String> = merged
            .entries()
            .map(|e| format!("{}\t0\t{}\t{}\t{}#1\tg", e.category.code(), e.pos_score, e.neg_score, e.lemma))
            .collect();
        let again = Lexicon::parse_sentiwordnet(&as_swn.join("\n")).unwrap();
        prop_assert_eq!(merged.entries().collect::<Vec<_>>(), again.entries().collect::<Vec<_>>());
    }

    #[test]
    fn filter_and_stopwords_are_idempotent_and_commute(tokens in prop::collection::vec(tagged_token(), 0..15)) {
        let tokens = reindex(tokens);
        let sw = StopwordSet::english();
        let f = filter_opinion_words(tokens.clone());
        prop_assert_eq!(filter_opinion_words(f.clone()), f.clone());
        let s = remove_stopwords(tokens.clone(), &sw);
        prop_assert_eq!(remove_stopwords(s.clone(), &sw), s.clone());
        prop_assert_eq!(remove_stopwords(f, &sw), filter_opinion_words(s));
    }

    #[test]
    fn tagging_is_total(words in prop::collection::vec("[a-z0-9]{1,9}", 0..20)) {
        let lex = Lexicon::fixture();
        let tokens: Vec<Token> = words.iter().enumerate().map(|(i, w)| Token::new(w.clone(), i)).collect();
        let tagged = tag(&tokens, &BaselineTagger::with_lexicon(&lex));
        prop_assert_eq!(tagged.len(), tokens.len());
    }

    #[test]
    fn pretagged_round_trip(tokens in prop::collection::vec(tagged_token(), 0..15)) {
        let tokens = reindex(tokens);
        prop_assert_eq!(parse_pretagged(&format_pretagged(&tokens)).unwrap(), tokens);
    }

    #[test]
    fn zero_scored_particle_inverts_an_adjective(
        adjective in prop::sample::select(vec!["good", "bad", "damn", "amazing", "lovely", "catchy", "sloppy", "shiny"]),
        particle in prop::sample::select(vec!["never", "no"]),
    ) {
        let pipeline = Pipeline::new(Lexicon::fixture()).tagger_mode(TaggerMode::Pretagged);
        let score = |line: String| pipeline.score(RawPost::new("p", line)).unwrap().0.total_score;
        let plain = score(format!("{adjective}/JJ"));
        let negated = score(format!("{particle}/RB {adjective}/JJ"));
        prop_assert_eq!(negated, -plain);
    }

    #[test]
    fn positive_token_increases_total(line in prop::collection::vec(tagged_token(), 0..10)) {
        let pipeline = Pipeline::new(Lexicon::fixture()).tagger_mode(TaggerMode::Pretagged);
        let base = format_pretagged(&line);
        let before = pipeline.score(RawPost::new("p", base.clone())).unwrap().0.total_score;
        // "amazing" at the front cannot be reached by a later particle
        let after = pipeline.score(RawPost::new("p", format!("amazing/JJ {base}"))).unwrap().0.total_score;
        prop_assert!(after > before);
    }

    #[test]
    fn totals_do_not_depend_on_weights(line in prop::collection::vec(tagged_token(), 0..10), w in 1u32..=100) {
        let text = format_pretagged(&line);
        let mut weights = WeightTable::new();
        for t in &line {
            weights.insert(t.normalized(), w as f64 / 100.0).unwrap();
        }
        let plain = Pipeline::new(Lexicon::fixture()).tagger_mode(TaggerMode::Pretagged);
        let weighted = Pipeline::new(Lexicon::fixture()).tagger_mode(TaggerMode::Pretagged).weights(weights);
        let a = plain.score(RawPost::new("p", text.clone())).unwrap().0;
        let b = weighted.score(RawPost::new("p", text)).unwrap().0;
        prop_assert_eq!(a.total_score.to_bits(), b.total_score.to_bits());
    }

    #[test]
    fn classify_agrees_with_sign(score in -5.0f64..5.0) {
        let c = FuzzyPartition::default().classify(score);
        prop_assert_eq!(c.is_positive(), score > 0.0);
        prop_assert_eq!(c.is_negative(), score < 0.0);
        prop_assert_eq!(c == SentimentClass::Objective, score == 0.0);
    }

    #[test]
    fn memberships_lie_in_unit_interval(score in -5.0f64..5.0) {
        let m = FuzzyPartition::default().membership_vector(score);
        prop_assert!(m.values().all(|v| (0.0..=1.0).contains(v)));
        if score != 0.0 {
            prop_assert!(m.values().any(|v| *v > 0.0));
        }
    }

    #[test]
    fn argmax_invariant_under_height_scaling(score in -3.0f64..3.0, factor in 0.01f64..=1.0) {
        let p = FuzzyPartition::default();
        prop_assert_eq!(p.scaled(factor).classify(score), p.classify(score));
    }

    #[test]
    fn counts_percentages_and_histogram_agree(scores in prop::collection::vec(-64i32..=64, 1..60)) {
        let partition = FuzzyPartition::default();
        let posts: Vec<ScoredPost> = scores
            .iter()
            .map(|&s| {
                let total = s as f64 / 16.0;
                ScoredPost {
                    post: RawPost::new("x", ""),
                    token_scores: Vec::new(),
                    emoticons: Vec::new(),
                    total_score: total,
                    weight: 1.0,
                    class: partition.classify(total),
                }
            })
            .collect();
        let c = count_polarities(&posts);
        prop_assert_eq!(c.total(), posts.len());
        let (pp, np) = sentiment_percentages(c).unwrap();
        let op = c.objective as f64 * 100.0 / posts.len() as f64;
        prop_assert!((pp + np + op - 100.0).abs() < 1e-9);
        prop_assert!(pp + np <= 100.0 + 1e-9);
        let hist = class_histogram(&posts);
        prop_assert_eq!(hist.values().sum::<usize>(), posts.len());
        let pos: usize = hist.iter().filter(|(k, _)| k.is_positive()).map(|(_, v)| v).sum();
        prop_assert_eq!(pos, c.positive);
        prop_assert!(arithmetic_mean(&posts).is_ok());
    }
}
