//! Polarity lexicon: SentiWordNet 3.0 import, the simplified four-column
//! format, and `(lemma, category)` lookups.
//!
//! Every synset term contributes one sense to its `(lemma, category)` key.
//! Senses of the same key are merged into a single row by the arithmetic
//! mean of their positive and negative scores. The objectivity score is
//! never stored; it is always `1 - pos - neg`.

use std::collections::BTreeMap;
use std::fmt;
use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

const FIXTURE_LEXICON: &str = include_str!("../data/fixture_lexicon.tsv");

/// Word class a lexicon row is filed under.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PosCategory {
    Adjective,
    Noun,
    Verb,
    Adverb,
}

impl PosCategory {
    pub const ALL: [PosCategory; 4] = [
        PosCategory::Adjective,
        PosCategory::Noun,
        PosCategory::Verb,
        PosCategory::Adverb,
    ];

    /// Single-letter code used in SentiWordNet files.
    pub fn code(self) -> char {
        match self {
            PosCategory::Adjective => 'a',
            PosCategory::Noun => 'n',
            PosCategory::Verb => 'v',
            PosCategory::Adverb => 'r',
        }
    }

    pub fn from_code(code: &str) -> Option<Self> {
        match code {
            "a" => Some(PosCategory::Adjective),
            "n" => Some(PosCategory::Noun),
            "v" => Some(PosCategory::Verb),
            "r" => Some(PosCategory::Adverb),
            _ => None,
        }
    }

    fn slot(self) -> usize {
        self as usize
    }
}

impl fmt::Display for PosCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            PosCategory::Adjective => "adjective",
            PosCategory::Noun => "noun",
            PosCategory::Verb => "verb",
            PosCategory::Adverb => "adverb",
        };
        f.write_str(name)
    }
}

impl FromStr for PosCategory {
    type Err = ();

    /// Accepts either the file code (`a`, `n`, `v`, `r`) or the full name.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Some(cat) = PosCategory::from_code(s) {
            return Ok(cat);
        }
        PosCategory::ALL
            .into_iter()
            .find(|c| c.to_string() == s)
            .ok_or(())
    }
}

/// One merged row of the lexicon.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LexiconEntry {
    pub lemma: String,
    pub category: PosCategory,
    pub pos_score: f64,
    pub neg_score: f64,
}

impl LexiconEntry {
    pub fn obj_score(&self) -> f64 {
        1.0 - self.pos_score - self.neg_score
    }
}

#[derive(Debug, Error)]
pub enum LexiconError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl LexiconError {
    fn parse(line: usize, message: impl Into<String>) -> Self {
        LexiconError::Parse {
            line,
            message: message.into(),
        }
    }
}

type Slots = [Option<LexiconEntry>; 4];

/// Immutable `(lemma, category) -> scores` table.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Lexicon {
    entries: BTreeMap<String, Slots>,
    len: usize,
    source: Option<String>,
}

impl Lexicon {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Merged `(pos, neg)` scores for a lowercase lemma, if present.
    pub fn lookup(&self, lemma: &str, category: PosCategory) -> Option<(f64, f64)> {
        self.get(lemma, category)
            .map(|e| (e.pos_score, e.neg_score))
    }

    pub fn get(&self, lemma: &str, category: PosCategory) -> Option<&LexiconEntry> {
        self.entries.get(lemma)?[category.slot()].as_ref()
    }

    /// Categories under which `lemma` has an entry.
    pub fn categories_of(&self, lemma: &str) -> Vec<PosCategory> {
        match self.entries.get(lemma) {
            Some(slots) => PosCategory::ALL
                .into_iter()
                .filter(|c| slots[c.slot()].is_some())
                .collect(),
            None => Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// File name (or other label) the lexicon was read from.
    pub fn source(&self) -> Option<&str> {
        self.source.as_deref()
    }

    pub fn with_source(mut self, source: impl Into<String>) -> Self {
        self.source = Some(source.into());
        self
    }

    /// Entries in lemma order, then category order.
    pub fn entries(&self) -> impl Iterator<Item = &LexiconEntry> {
        self.entries.values().flat_map(|slots| slots.iter().flatten())
    }

    /// Parses SentiWordNet 3.0 text: `POS \t ID \t PosScore \t NegScore \t
    /// SynsetTerms \t Gloss`, `#` comment lines, blank lines ignored.
    pub fn import_sentiwordnet<R: BufRead>(reader: R) -> Result<Self, LexiconError> {
        let mut senses = SenseAccumulator::default();
        for (idx, line) in reader.lines().enumerate() {
            let line = line?;
            let line_no = idx + 1;
            if skip_line(&line) {
                continue;
            }
            let fields: Vec<&str> = line.split('\t').collect();
            if fields.len() < 6 {
                return Err(LexiconError::parse(
                    line_no,
                    format!("expected 6 tab-separated fields, found {}", fields.len()),
                ));
            }
            let category = PosCategory::from_code(fields[0].trim()).ok_or_else(|| {
                LexiconError::parse(line_no, format!("unknown POS code {:?}", fields[0]))
            })?;
            let (pos, neg) = parse_scores(line_no, fields[2], fields[3])?;
            for term in fields[4].split_whitespace() {
                let lemma = strip_sense(term).to_lowercase();
                if lemma.is_empty() {
                    return Err(LexiconError::parse(line_no, format!("empty term {term:?}")));
                }
                senses.push(lemma, category, pos, neg);
            }
        }
        Ok(senses.finish())
    }

    /// Parses the four-column `lemma \t category \t pos \t neg` format.
    /// Each key may appear only once.
    pub fn import_simple<R: BufRead>(reader: R) -> Result<Self, LexiconError> {
        let mut lexicon = Lexicon::empty();
        for (idx, line) in reader.lines().enumerate() {
            let line = line?;
            let line_no = idx + 1;
            if skip_line(&line) {
                continue;
            }
            let fields: Vec<&str> = line.split('\t').map(str::trim).collect();
            if fields.len() != 4 {
                return Err(LexiconError::parse(
                    line_no,
                    format!("expected 4 tab-separated fields, found {}", fields.len()),
                ));
            }
            let lemma = fields[0].to_lowercase();
            if lemma.is_empty() {
                return Err(LexiconError::parse(line_no, "empty lemma"));
            }
            let category: PosCategory = fields[1].parse().map_err(|_| {
                LexiconError::parse(line_no, format!("unknown category {:?}", fields[1]))
            })?;
            let (pos, neg) = parse_scores(line_no, fields[2], fields[3])?;
            if lexicon.get(&lemma, category).is_some() {
                return Err(LexiconError::parse(
                    line_no,
                    format!("duplicate entry for ({lemma}, {category})"),
                ));
            }
            lexicon.insert(LexiconEntry {
                lemma,
                category,
                pos_score: pos,
                neg_score: neg,
            });
        }
        Ok(lexicon)
    }

    pub fn parse_sentiwordnet(text: &str) -> Result<Self, LexiconError> {
        Self::import_sentiwordnet(text.as_bytes())
    }

    pub fn parse_simple(text: &str) -> Result<Self, LexiconError> {
        Self::import_simple(text.as_bytes())
    }

    pub fn open_sentiwordnet(path: &Path) -> Result<Self, LexiconError> {
        let reader = BufReader::new(File::open(path)?);
        Ok(Self::import_sentiwordnet(reader)?.with_source(path.display().to_string()))
    }

    pub fn open_simple(path: &Path) -> Result<Self, LexiconError> {
        let reader = BufReader::new(File::open(path)?);
        Ok(Self::import_simple(reader)?.with_source(path.display().to_string()))
    }

    /// The bundled table that reproduces the ten-post reference run.
    pub fn fixture() -> Self {
        Self::parse_simple(FIXTURE_LEXICON)
            .expect("bundled fixture lexicon is well-formed")
            .with_source("fixture_lexicon.tsv")
    }

    /// Writes the lexicon in the four-column format (one row per key).
    pub fn write_simple<W: Write>(&self, mut out: W) -> io::Result<()> {
        for e in self.entries() {
            writeln!(
                out,
                "{}\t{}\t{}\t{}",
                e.lemma,
                e.category.code(),
                e.pos_score,
                e.neg_score
            )?;
        }
        Ok(())
    }

    fn insert(&mut self, entry: LexiconEntry) {
        let slot = entry.category.slot();
        let slots = self.entries.entry(entry.lemma.clone()).or_default();
        if slots[slot].is_none() {
            self.len += 1;
        }
        slots[slot] = Some(entry);
    }
}

/// Convenience wrapper matching the import operation's name.
pub fn import_sentiwordnet<R: BufRead>(reader: R) -> Result<Lexicon, LexiconError> {
    Lexicon::import_sentiwordnet(reader)
}

pub fn load_fixture_lexicon() -> Lexicon {
    Lexicon::fixture()
}

fn skip_line(line: &str) -> bool {
    let trimmed = line.trim();
    trimmed.is_empty() || trimmed.starts_with('#')
}

fn strip_sense(term: &str) -> &str {
    match term.rfind('#') {
        Some(i) => &term[..i],
        None => term,
    }
}

fn parse_scores(line: usize, pos: &str, neg: &str) -> Result<(f64, f64), LexiconError> {
    let pos = parse_score(line, "PosScore", pos)?;
    let neg = parse_score(line, "NegScore", neg)?;
    if pos + neg > 1.0 {
        return Err(LexiconError::parse(
            line,
            format!("PosScore + NegScore = {} exceeds 1", pos + neg),
        ));
    }
    Ok((pos, neg))
}

fn parse_score(line: usize, name: &str, raw: &str) -> Result<f64, LexiconError> {
    let value: f64 = raw
        .trim()
        .parse()
        .map_err(|_| LexiconError::parse(line, format!("{name} {raw:?} is not a number")))?;
    if !(0.0..=1.0).contains(&value) {
        return Err(LexiconError::parse(
            line,
            format!("{name} {value} outside [0, 1]"),
        ));
    }
    Ok(value)
}

#[derive(Default)]
struct SenseAccumulator {
    senses: BTreeMap<(String, PosCategory), (Vec<f64>, Vec<f64>)>,
}

impl SenseAccumulator {
    fn push(&mut self, lemma: String, category: PosCategory, pos: f64, neg: f64) {
        let (p, n) = self.senses.entry((lemma, category)).or_default();
        p.push(pos);
        n.push(neg);
    }

    fn finish(self) -> Lexicon {
        let mut lexicon = Lexicon::empty();
        for ((lemma, category), (pos, neg)) in self.senses {
            let (pos_score, neg_score) = (mean(pos), mean(neg));
            // Means of valid senses stay valid, but rounding could still push
            // the pair a hair over 1; trim the negative side if so.
            let neg_score = if pos_score + neg_score > 1.0 {
                1.0 - pos_score
            } else {
                neg_score
            };
            lexicon.insert(LexiconEntry {
                lemma,
                category,
                pos_score,
                neg_score,
            });
        }
        lexicon
    }
}

/// Mean over values summed in sorted order, so the result does not depend
/// on the order senses appeared in the file.
fn mean(mut values: Vec<f64>) -> f64 {
    values.sort_by(f64::total_cmp);
    let n = values.len() as f64;
    values.iter().sum::<f64>() / n
}
