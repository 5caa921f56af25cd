//! End-to-end scoring of posts.
//!
//! Stage order for raw text: translate, emoticons (optional), clean,
//! tokenize, tag, opinion filter, negation, stopwords, lexicon scores.
//! Pre-tagged posts enter at the opinion filter.

use rayon::prelude::*;

use crate::fuzzy::FuzzyPartition;
use crate::lexicon::Lexicon;
use crate::scoring::{apply_negation, score_post, score_tokens, ScoredPost, WeightTable};
use crate::textproc::{
    clean, filter_opinion_words, map_emoticons, parse_pretagged, tag, tokenize, translate_hook,
    BaselineTagger, Identity, PretaggedError, RawPost, StopwordSet, TaggedToken, Translator,
};

/// How post text is turned into tagged tokens.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TaggerMode {
    /// Clean and tokenize the text, then run [`BaselineTagger`].
    #[default]
    Builtin,
    /// Post text is already in `surface/TAG` form.
    Pretagged,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    #[default]
    Sequential,
    Parallel,
}

pub struct Pipeline {
    lexicon: Lexicon,
    stopwords: StopwordSet,
    weights: WeightTable,
    partition: FuzzyPartition,
    translator: Box<dyn Translator>,
    tagger_mode: TaggerMode,
    emoticons: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PipelineOutput {
    pub posts: Vec<ScoredPost>,
    pub warnings: Vec<String>,
}

#[derive(Debug, thiserror::Error)]
#[error("post {id}: {source}")]
pub struct PostError {
    pub id: String,
    #[source]
    pub source: PretaggedError,
}

impl Pipeline {
    /// Pipeline with the bundled stopwords, no term weights, the default
    /// partition, identity translation and the builtin tagger.
    pub fn new(lexicon: Lexicon) -> Self {
        Pipeline {
            lexicon,
            stopwords: StopwordSet::english(),
            weights: WeightTable::new(),
            partition: FuzzyPartition::default(),
            translator: Box::new(Identity),
            tagger_mode: TaggerMode::Builtin,
            emoticons: false,
        }
    }

    pub fn stopwords(mut self, stopwords: StopwordSet) -> Self {
        self.stopwords = stopwords;
        self
    }

    pub fn weights(mut self, weights: WeightTable) -> Self {
        self.weights = weights;
        self
    }

    pub fn partition(mut self, partition: FuzzyPartition) -> Self {
        self.partition = partition;
        self
    }

    pub fn translator(mut self, translator: impl Translator + 'static) -> Self {
        self.translator = Box::new(translator);
        self
    }

    pub fn tagger_mode(mut self, mode: TaggerMode) -> Self {
        self.tagger_mode = mode;
        self
    }

    pub fn emoticons(mut self, enabled: bool) -> Self {
        self.emoticons = enabled;
        self
    }

    pub fn lexicon(&self) -> &Lexicon {
        &self.lexicon
    }

    pub fn get_partition(&self) -> &FuzzyPartition {
        &self.partition
    }

    /// Scores one post. The warning, if any, comes from translation.
    pub fn score(&self, post: RawPost) -> Result<(ScoredPost, Option<String>), PostError> {
        match self.tagger_mode {
            TaggerMode::Pretagged => {
                let tagged = parse_pretagged(&post.text).map_err(|source| PostError {
                    id: post.id.clone(),
                    source,
                })?;
                Ok((self.score_tagged(post, tagged, Vec::new()), None))
            }
            TaggerMode::Builtin => {
                let translated = translate_hook(post, self.translator.as_ref());
                let (text, hits) = if self.emoticons {
                    map_emoticons(&translated.post.text)
                } else {
                    (translated.post.text.clone(), Vec::new())
                };
                let tokens = tokenize(&clean(&text));
                let tagged = tag(&tokens, &BaselineTagger::with_lexicon(&self.lexicon));
                Ok((self.score_tagged(translated.post, tagged, hits), translated.warning))
            }
        }
    }

    /// Scores already-tagged tokens; skips translation and cleaning.
    pub fn score_tagged(
        &self,
        post: RawPost,
        tagged: Vec<TaggedToken>,
        emoticons: Vec<crate::textproc::EmoticonPolarity>,
    ) -> ScoredPost {
        let opinion = filter_opinion_words(tagged.clone());
        let mut negated = apply_negation(opinion);
        negated.retain(|t| !self.stopwords.contains(t.token.normalized()));
        let scores = score_tokens(&negated, &self.lexicon);
        score_post(post, &tagged, scores, emoticons, &self.weights, &self.partition)
    }

    /// Scores a corpus. Results are always in input order.
    pub fn run(&self, posts: Vec<RawPost>, execution: Execution) -> Result<PipelineOutput, PostError> {
        let results: Vec<_> = match execution {
            Execution::Sequential => posts.into_iter().map(|p| self.score(p)).collect(),
            Execution::Parallel => posts.into_par_iter().map(|p| self.score(p)).collect(),
        };
        let mut out = PipelineOutput {
            posts: Vec::with_capacity(results.len()),
            warnings: Vec::new(),
        };
        for r in results {
            let (post, warning) = r?;
            out.posts.push(post);
            out.warnings.extend(warning);
        }
        Ok(out)
    }
}
