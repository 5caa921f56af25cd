use super::{PennTag, TaggedToken, Token};
use crate::lexicon::{Lexicon, PosCategory};

/// Assigns exactly one tag to every token.
pub trait Tagger {
    fn tag_tokens(&self, tokens: &[Token]) -> Vec<TaggedToken>;
}

pub fn tag(tokens: &[Token], tagger: &dyn Tagger) -> Vec<TaggedToken> {
    tagger.tag_tokens(tokens)
}

/// Rule-based fallback tagger.
///
/// Rules, first match wins:
/// 1. closed-class word table
/// 2. lexicon hint, when the word is filed under exactly one category
/// 3. suffixes: `-ly` RB, `-ing` VBG, `-ed` VBD, `-est` JJS, `-er` JJR
/// 4. numerals are CD
/// 5. everything else is NN
#[derive(Debug, Clone, Copy, Default)]
pub struct BaselineTagger<'a> {
    lexicon: Option<&'a Lexicon>,
}

impl<'a> BaselineTagger<'a> {
    pub fn new() -> Self {
        BaselineTagger { lexicon: None }
    }

    pub fn with_lexicon(lexicon: &'a Lexicon) -> Self {
        BaselineTagger {
            lexicon: Some(lexicon),
        }
    }

    pub fn tag_word(&self, word: &str) -> PennTag {
        if let Some(tag) = closed_class(word) {
            return tag;
        }
        if let Some(tag) = self.lexicon_hint(word) {
            return tag;
        }
        if let Some(tag) = suffix_rule(word) {
            return tag;
        }
        if is_numeral(word) {
            return PennTag::CD;
        }
        PennTag::NN
    }

    fn lexicon_hint(&self, word: &str) -> Option<PennTag> {
        let cats = self.lexicon?.categories_of(word);
        match cats.as_slice() {
            [PosCategory::Adjective] => Some(PennTag::JJ),
            [PosCategory::Noun] => Some(PennTag::NN),
            [PosCategory::Verb] => Some(PennTag::VB),
            [PosCategory::Adverb] => Some(PennTag::RB),
            _ => None,
        }
    }
}

impl Tagger for BaselineTagger<'_> {
    fn tag_tokens(&self, tokens: &[Token]) -> Vec<TaggedToken> {
        tokens
            .iter()
            .map(|t| TaggedToken::new(t.clone(), self.tag_word(&t.normalized)))
            .collect()
    }
}

fn closed_class(word: &str) -> Option<PennTag> {
    use PennTag::*;
    let tag = match word {
        "a" | "an" | "the" | "this" | "that" | "these" | "those" | "every" | "each" | "some"
        | "any" | "no" | "another" | "either" | "neither" => DT,
        "all" | "both" | "half" => PDT,
        "i" | "you" | "he" | "she" | "it" | "we" | "they" | "me" | "him" | "us" | "them"
        | "myself" | "yourself" | "himself" | "herself" | "itself" | "ourselves"
        | "themselves" => PRP,
        "my" | "your" | "his" | "her" | "its" | "our" | "their" => PRPS,
        "in" | "on" | "at" | "of" | "for" | "with" | "by" | "from" | "about" | "into" | "over"
        | "under" | "after" | "before" | "between" | "through" | "during" | "without"
        | "within" | "above" | "below" | "against" | "among" | "as" | "than" | "if"
        | "because" | "since" | "while" | "until" | "so" | "like" => IN,
        "and" | "or" | "but" | "nor" | "yet" => CC,
        "can" | "could" | "will" | "would" | "shall" | "should" | "may" | "might" | "must" => MD,
        "to" => TO,
        "there" => EX,
        "which" | "whatever" => WDT,
        "who" | "whom" | "what" => WP,
        "whose" => WPS,
        "when" | "where" | "why" | "how" => WRB,
        "not" | "never" | "n't" => RB,
        "is" | "does" | "has" => VBZ,
        "are" | "am" | "do" | "have" => VBP,
        "was" | "were" | "did" | "had" => VBD,
        "be" => VB,
        "been" => VBN,
        "being" => VBG,
        "oh" | "wow" | "hey" | "ouch" => UH,
        _ => return None,
    };
    Some(tag)
}

fn suffix_rule(word: &str) -> Option<PennTag> {
    const RULES: [(&str, PennTag); 5] = [
        ("ly", PennTag::RB),
        ("ing", PennTag::VBG),
        ("ed", PennTag::VBD),
        ("est", PennTag::JJS),
        ("er", PennTag::JJR),
    ];
    let len = word.chars().count();
    RULES
        .iter()
        // require a stem of at least two letters ("bed", "sing" stay nouns)
        .find(|(suffix, _)| word.ends_with(suffix) && len >= suffix.len() + 2)
        .map(|&(_, tag)| tag)
}

fn is_numeral(word: &str) -> bool {
    word.starts_with(|c: char| c.is_ascii_digit())
        && word.chars().all(|c| c.is_ascii_digit() || c == '.' || c == ',')
}
