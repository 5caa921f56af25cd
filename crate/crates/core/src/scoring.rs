//! Per-token contributions, negation inversion, term weights and post totals.

use std::collections::HashMap;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fuzzy::{FuzzyPartition, SentimentClass};
use crate::lexicon::{Lexicon, PosCategory};
use crate::textproc::{is_negation_particle, EmoticonPolarity, PennTag, RawPost, TaggedToken};

/// How many following tokens a negation particle reaches.
pub const NEGATION_WINDOW: usize = 2;

pub fn tag_to_category(tag: PennTag) -> Option<PosCategory> {
    if tag.is_adjective() {
        Some(PosCategory::Adjective)
    } else if tag.is_adverb() {
        Some(PosCategory::Adverb)
    } else if tag.is_verb() {
        Some(PosCategory::Verb)
    } else if tag.is_common_noun() {
        Some(PosCategory::Noun)
    } else {
        None
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NegatedToken {
    pub token: TaggedToken,
    pub negated: bool,
}

/// Marks the nearest adjective within [`NEGATION_WINDOW`] tokens after each
/// negation particle. Particles stay in the list; a second particle reaching
/// the same adjective flips it back.
pub fn apply_negation(tokens: Vec<TaggedToken>) -> Vec<NegatedToken> {
    let mut flags = vec![false; tokens.len()];
    for (i, t) in tokens.iter().enumerate() {
        if !is_negation_particle(t.normalized()) {
            continue;
        }
        let target = tokens
            .iter()
            .enumerate()
            .skip(i + 1)
            .take(NEGATION_WINDOW)
            .find(|(_, t)| t.tag.is_adjective())
            .map(|(j, _)| j);
        if let Some(j) = target {
            flags[j] = !flags[j];
        }
    }
    tokens
        .into_iter()
        .zip(flags)
        .map(|(token, negated)| NegatedToken { token, negated })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TokenScore {
    pub token: TaggedToken,
    /// Raw lexicon scores; zero when unmatched.
    pub pos: f64,
    pub neg: f64,
    /// `pos - neg`, sign-flipped when negated.
    pub net: f64,
    pub negated: bool,
    pub matched: bool,
}

pub fn score_tokens(tokens: &[NegatedToken], lexicon: &Lexicon) -> Vec<TokenScore> {
    tokens
        .iter()
        .map(|nt| {
            let scores = tag_to_category(nt.token.tag)
                .and_then(|cat| lexicon.lookup(nt.token.normalized(), cat));
            let (pos, neg) = scores.unwrap_or((0.0, 0.0));
            let raw = pos - neg;
            TokenScore {
                token: nt.token.clone(),
                pos,
                neg,
                net: if nt.negated { -raw } else { raw },
                negated: nt.negated,
                matched: scores.is_some(),
            }
        })
        .collect()
}

#[derive(Debug, Error)]
pub enum WeightError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Importance of product terms; anything absent weighs 1.0.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct WeightTable {
    weights: HashMap<String, f64>,
}

impl WeightTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// `term<TAB>weight` lines with weights in (0, 1].
    pub fn parse(text: &str) -> Result<Self, WeightError> {
        let mut table = WeightTable::new();
        for (idx, line) in text.lines().enumerate() {
            let line_no = idx + 1;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let err = |message: String| WeightError::Parse { line: line_no, message };
            let (term, raw) = trimmed
                .split_once('\t')
                .ok_or_else(|| err("expected term<TAB>weight".into()))?;
            let weight: f64 = raw
                .trim()
                .parse()
                .map_err(|_| err(format!("weight {raw:?} is not a number")))?;
            table.insert(term.trim(), weight).map_err(err)?;
        }
        Ok(table)
    }

    pub fn from_path(path: &Path) -> Result<Self, WeightError> {
        Self::parse(&fs::read_to_string(path)?)
    }

    pub fn insert(&mut self, term: &str, weight: f64) -> Result<(), String> {
        if !(weight > 0.0 && weight <= 1.0) {
            return Err(format!("weight {weight} for {term:?} outside (0, 1]"));
        }
        self.weights.insert(term.to_lowercase(), weight);
        Ok(())
    }

    pub fn get(&self, term: &str) -> f64 {
        self.weights.get(term).copied().unwrap_or(1.0)
    }

    /// Largest weight among listed terms that occur in `words`, else 1.0.
    pub fn post_weight<'a>(&self, words: impl IntoIterator<Item = &'a str>) -> f64 {
        words
            .into_iter()
            .filter_map(|w| self.weights.get(w).copied())
            .fold(None, |acc: Option<f64>, w| Some(acc.map_or(w, |a| a.max(w))))
            .unwrap_or(1.0)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScoredPost {
    pub post: RawPost,
    pub token_scores: Vec<TokenScore>,
    pub emoticons: Vec<EmoticonPolarity>,
    pub total_score: f64,
    pub weight: f64,
    pub class: SentimentClass,
}

impl ScoredPost {
    /// Opinion words that had a category but no lexicon row.
    pub fn unmatched_words(&self) -> usize {
        self.token_scores
            .iter()
            .filter(|s| !s.matched && tag_to_category(s.token.tag).is_some())
            .count()
    }
}

/// Assembles the scored post. `all_tokens` is the full tagged post, used
/// only for the weight; `token_scores` are summed in order, followed by
/// any emoticon contributions.
pub fn score_post(
    post: RawPost,
    all_tokens: &[TaggedToken],
    token_scores: Vec<TokenScore>,
    emoticons: Vec<EmoticonPolarity>,
    weights: &WeightTable,
    partition: &FuzzyPartition,
) -> ScoredPost {
    let mut total = 0.0;
    for s in &token_scores {
        total += s.net;
    }
    for e in &emoticons {
        total += e.contribution();
    }
    let weight = weights.post_weight(all_tokens.iter().map(|t| t.normalized()));
    ScoredPost {
        post,
        token_scores,
        emoticons,
        total_score: total,
        weight,
        class: partition.classify(total),
    }
}
