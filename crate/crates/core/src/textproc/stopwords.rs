use std::collections::HashSet;
use std::fs;
use std::io;
use std::path::Path;

use super::TaggedToken;

const DEFAULT_STOPWORDS: &str = include_str!("../../data/stopwords.txt");

/// Lowercase words dropped before scoring.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct StopwordSet {
    words: HashSet<String>,
}

impl StopwordSet {
    /// Bundled English list. Negation particles are not in it.
    pub fn english() -> Self {
        Self::parse(DEFAULT_STOPWORDS)
    }

    /// One word per line, `#` comments and blank lines ignored.
    pub fn parse(text: &str) -> Self {
        let words = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(str::to_lowercase)
            .collect();
        StopwordSet { words }
    }

    pub fn from_path(path: &Path) -> io::Result<Self> {
        Ok(Self::parse(&fs::read_to_string(path)?))
    }

    pub fn contains(&self, word: &str) -> bool {
        self.words.contains(word)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

impl<S: Into<String>> FromIterator<S> for StopwordSet {
    fn from_iter<I: IntoIterator<Item = S>>(iter: I) -> Self {
        StopwordSet {
            words: iter.into_iter().map(|w| w.into().to_lowercase()).collect(),
        }
    }
}

pub fn remove_stopwords(tokens: Vec<TaggedToken>, stopwords: &StopwordSet) -> Vec<TaggedToken> {
    tokens
        .into_iter()
        .filter(|t| !stopwords.contains(t.normalized()))
        .collect()
}
