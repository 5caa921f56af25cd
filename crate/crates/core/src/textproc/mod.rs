//! Text preprocessing: cleaning, tokenization, tagging, opinion-word
//! filtering and stopword removal.

mod clean;
mod emoticons;
mod penn;
mod pretagged;
mod stopwords;
mod tagger;
mod translate;

pub use clean::{clean, tokenize, PUNCTUATION};
pub use emoticons::{map_emoticons, EmoticonPolarity};
pub use penn::{PennTag, UnknownTag};
pub use pretagged::{format_pretagged, parse_pretagged, PretaggedError};
pub use stopwords::{remove_stopwords, StopwordSet};
pub use tagger::{tag, BaselineTagger, Tagger};
pub use translate::{translate_hook, Identity, TranslateError, Translated, Translator};

use serde::{Deserialize, Serialize};

/// A post as read from the corpus.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RawPost {
    pub id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub author: Option<String>,
    pub text: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub language: Option<String>,
}

impl RawPost {
    pub fn new(id: impl Into<String>, text: impl Into<String>) -> Self {
        RawPost {
            id: id.into(),
            author: None,
            text: text.into(),
            language: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Token {
    pub surface: String,
    pub normalized: String,
    pub index: usize,
}

impl Token {
    pub fn new(surface: impl Into<String>, index: usize) -> Self {
        let surface = surface.into();
        let normalized = surface.to_lowercase();
        Token {
            surface,
            normalized,
            index,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TaggedToken {
    pub token: Token,
    pub tag: PennTag,
}

impl TaggedToken {
    pub fn new(token: Token, tag: PennTag) -> Self {
        TaggedToken { token, tag }
    }

    pub fn normalized(&self) -> &str {
        &self.token.normalized
    }
}

/// Negation particles. They survive opinion filtering whatever their tag.
pub const NEGATION_PARTICLES: [&str; 4] = ["not", "no", "never", "n't"];

pub fn is_negation_particle(word: &str) -> bool {
    NEGATION_PARTICLES.contains(&word)
}

/// Keeps adjectives, adverbs, verbs, common nouns and negation particles,
/// in their original order.
pub fn filter_opinion_words(tokens: Vec<TaggedToken>) -> Vec<TaggedToken> {
    tokens
        .into_iter()
        .filter(|t| t.tag.is_opinion() || is_negation_particle(t.normalized()))
        .collect()
}
