use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

macro_rules! penn_tags {
    ($($variant:ident => $text:literal),+ $(,)?) => {
        /// Penn Treebank part-of-speech tag, including the punctuation tags
        /// emitted by common taggers.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum PennTag {
            $($variant),+
        }

        impl PennTag {
            pub const ALL: &'static [PennTag] = &[$(PennTag::$variant),+];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(PennTag::$variant => $text),+
                }
            }
        }

        impl FromStr for PennTag {
            type Err = UnknownTag;

            fn from_str(s: &str) -> Result<Self, Self::Err> {
                match s {
                    $($text => Ok(PennTag::$variant),)+
                    _ => Err(UnknownTag(s.to_string())),
                }
            }
        }
    };
}

penn_tags! {
    CC => "CC",
    CD => "CD",
    DT => "DT",
    EX => "EX",
    FW => "FW",
    IN => "IN",
    JJ => "JJ",
    JJR => "JJR",
    JJS => "JJS",
    LS => "LS",
    MD => "MD",
    NN => "NN",
    NNS => "NNS",
    NNP => "NNP",
    NNPS => "NNPS",
    PDT => "PDT",
    POS => "POS",
    PRP => "PRP",
    PRPS => "PRP$",
    RB => "RB",
    RBR => "RBR",
    RBS => "RBS",
    RP => "RP",
    SYM => "SYM",
    TO => "TO",
    UH => "UH",
    VB => "VB",
    VBD => "VBD",
    VBG => "VBG",
    VBN => "VBN",
    VBP => "VBP",
    VBZ => "VBZ",
    WDT => "WDT",
    WP => "WP",
    WPS => "WP$",
    WRB => "WRB",
    Period => ".",
    Comma => ",",
    Colon => ":",
    Hash => "#",
    Dollar => "$",
    OpenQuote => "``",
    CloseQuote => "''",
    LeftBracket => "-LRB-",
    RightBracket => "-RRB-",
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown Penn Treebank tag {0:?}")]
pub struct UnknownTag(pub String);

impl PennTag {
    pub fn is_adjective(self) -> bool {
        matches!(self, PennTag::JJ | PennTag::JJR | PennTag::JJS)
    }

    pub fn is_adverb(self) -> bool {
        matches!(self, PennTag::RB | PennTag::RBR | PennTag::RBS)
    }

    pub fn is_verb(self) -> bool {
        matches!(
            self,
            PennTag::VB | PennTag::VBD | PennTag::VBG | PennTag::VBN | PennTag::VBP | PennTag::VBZ
        )
    }

    /// Common nouns only; proper nouns carry no affect.
    pub fn is_common_noun(self) -> bool {
        matches!(self, PennTag::NN | PennTag::NNS)
    }

    /// Adjectives, adverbs, verbs and common nouns.
    pub fn is_opinion(self) -> bool {
        self.is_adjective() || self.is_adverb() || self.is_verb() || self.is_common_noun()
    }
}

impl fmt::Display for PennTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for PennTag {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for PennTag {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
