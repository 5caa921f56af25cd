//! Grading of post scores: subjectivity, polarity, and the six degree
//! classes via trapezoidal membership functions.
//!
//! The default partition (positive side, negative side mirrored):
//!
//! | class           | a      | b      | c      | d      |
//! |-----------------|--------|--------|--------|--------|
//! | weak_positive   | 0      | 0      | 0.1875 | 0.25   |
//! | positive        | 0.1875 | 0.25   | 0.9375 | 1.0625 |
//! | strong_positive | 0.9375 | 1.0625 | +inf   | +inf   |
//!
//! Positive-side classes only receive membership for scores above zero and
//! negative-side classes only below zero; a score of exactly zero is
//! `objective`. Crisp labels come from the maximum membership, with ties
//! going to the milder class.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SentimentClass {
    StrongNegative,
    Negative,
    WeakNegative,
    Objective,
    WeakPositive,
    Positive,
    StrongPositive,
}

impl SentimentClass {
    pub const ALL: [SentimentClass; 7] = [
        SentimentClass::StrongNegative,
        SentimentClass::Negative,
        SentimentClass::WeakNegative,
        SentimentClass::Objective,
        SentimentClass::WeakPositive,
        SentimentClass::Positive,
        SentimentClass::StrongPositive,
    ];

    /// The six graded classes, mildest first within each side.
    pub const GRADED: [SentimentClass; 6] = [
        SentimentClass::WeakPositive,
        SentimentClass::Positive,
        SentimentClass::StrongPositive,
        SentimentClass::WeakNegative,
        SentimentClass::Negative,
        SentimentClass::StrongNegative,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SentimentClass::StrongNegative => "strong_negative",
            SentimentClass::Negative => "negative",
            SentimentClass::WeakNegative => "weak_negative",
            SentimentClass::Objective => "objective",
            SentimentClass::WeakPositive => "weak_positive",
            SentimentClass::Positive => "positive",
            SentimentClass::StrongPositive => "strong_positive",
        }
    }

    pub fn is_positive(self) -> bool {
        matches!(
            self,
            SentimentClass::WeakPositive | SentimentClass::Positive | SentimentClass::StrongPositive
        )
    }

    pub fn is_negative(self) -> bool {
        matches!(
            self,
            SentimentClass::WeakNegative | SentimentClass::Negative | SentimentClass::StrongNegative
        )
    }

    /// Same degree on the other side of zero.
    pub fn mirror(self) -> Self {
        use SentimentClass::*;
        match self {
            StrongNegative => StrongPositive,
            Negative => Positive,
            WeakNegative => WeakPositive,
            Objective => Objective,
            WeakPositive => WeakNegative,
            Positive => Negative,
            StrongPositive => StrongNegative,
        }
    }
}

impl fmt::Display for SentimentClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SentimentClass {
    type Err = FuzzyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SentimentClass::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| FuzzyError::UnknownClass(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SoPolarity {
    Subjective,
    Objective,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PnPolarity {
    Positive,
    Negative,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FuzzyError {
    #[error("score {0} has no positive/negative polarity")]
    NoPolarity(f64),
    #[error("unknown sentiment class {0:?}")]
    UnknownClass(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("partition is missing class {0}")]
    MissingClass(SentimentClass),
    #[error("partition leaves scores near {0} with no class")]
    CoverageGap(f64),
    #[error("could not read partition file: {0}")]
    Io(String),
}

/// Objective iff the score is exactly zero.
pub fn so_polarity(score: f64) -> SoPolarity {
    if score == 0.0 {
        SoPolarity::Objective
    } else {
        SoPolarity::Subjective
    }
}

pub fn pn_polarity(score: f64) -> Result<PnPolarity, FuzzyError> {
    if score > 0.0 {
        Ok(PnPolarity::Positive)
    } else if score < 0.0 {
        Ok(PnPolarity::Negative)
    } else {
        Err(FuzzyError::NoPolarity(score))
    }
}

/// Trapezoid with breakpoints `a <= b <= c <= d`: zero outside `[a, d]`,
/// `height` on `[b, c]`, linear in between. Breakpoints may be infinite.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Trapezoid {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub height: f64,
}

impl Trapezoid {
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Result<Self, String> {
        if [a, b, c, d].iter().any(|v| v.is_nan()) {
            return Err("breakpoint is NaN".into());
        }
        if !(a <= b && b <= c && c <= d) {
            return Err(format!("breakpoints not monotone: {a}, {b}, {c}, {d}"));
        }
        if b == f64::INFINITY || c == f64::NEG_INFINITY {
            return Err("plateau lies entirely at infinity".into());
        }
        if (a.is_infinite() && a != b) || (d.is_infinite() && d != c) {
            return Err("an infinite outer breakpoint must equal its plateau end".into());
        }
        Ok(Trapezoid { a, b, c, d, height: 1.0 })
    }

    pub fn evaluate(&self, x: f64) -> f64 {
        if x < self.a || x > self.d {
            0.0
        } else if x >= self.b && x <= self.c {
            self.height
        } else if x < self.b {
            self.height * (x - self.a) / (self.b - self.a)
        } else {
            self.height * (self.d - x) / (self.d - self.c)
        }
    }

    fn mirrored(&self) -> Self {
        Trapezoid {
            a: -self.d,
            b: -self.c,
            c: -self.b,
            d: -self.a,
            height: self.height,
        }
    }

    /// `(left, left_closed, right, right_closed)` of the set where the
    /// membership is positive.
    fn support(&self) -> (f64, bool, f64, bool) {
        (self.a, self.a == self.b, self.d, self.c == self.d)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FuzzyPartition {
    functions: BTreeMap<SentimentClass, Trapezoid>,
}

impl Default for FuzzyPartition {
    fn default() -> Self {
        let inf = f64::INFINITY;
        let positive = [
            (SentimentClass::WeakPositive, (0.0, 0.0, 0.1875, 0.25)),
            (SentimentClass::Positive, (0.1875, 0.25, 0.9375, 1.0625)),
            (SentimentClass::StrongPositive, (0.9375, 1.0625, inf, inf)),
        ];
        let mut functions = BTreeMap::new();
        for (class, (a, b, c, d)) in positive {
            let t = Trapezoid::new(a, b, c, d).expect("default breakpoints are monotone");
            functions.insert(class.mirror(), t.mirrored());
            functions.insert(class, t);
        }
        FuzzyPartition { functions }
    }
}

/// Membership of one score in every class.
pub type Memberships = BTreeMap<SentimentClass, f64>;

impl FuzzyPartition {
    /// Builds a partition from all six graded classes, checking that every
    /// non-zero score belongs to some class on its side.
    pub fn from_functions(
        functions: BTreeMap<SentimentClass, Trapezoid>,
    ) -> Result<Self, FuzzyError> {
        for class in SentimentClass::GRADED {
            if !functions.contains_key(&class) {
                return Err(FuzzyError::MissingClass(class));
            }
        }
        let partition = FuzzyPartition {
            functions: functions
                .into_iter()
                .filter(|(c, _)| *c != SentimentClass::Objective)
                .collect(),
        };
        partition.check_coverage()?;
        Ok(partition)
    }

    pub fn function(&self, class: SentimentClass) -> Option<&Trapezoid> {
        self.functions.get(&class)
    }

    /// Parses `class a b c d` lines (tab or space separated). `inf` and
    /// `-inf` are accepted. Returns warnings alongside the partition.
    pub fn parse(text: &str) -> Result<(Self, Vec<String>), FuzzyError> {
        let mut functions = BTreeMap::new();
        for (idx, line) in text.lines().enumerate() {
            let line_no = idx + 1;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = trimmed.split_whitespace().collect();
            let err = |message: String| FuzzyError::Parse { line: line_no, message };
            if fields.len() != 5 {
                return Err(err(format!("expected 5 fields, found {}", fields.len())));
            }
            let class: SentimentClass = fields[0].parse().map_err(|e: FuzzyError| err(e.to_string()))?;
            if class == SentimentClass::Objective {
                return Err(err("objective has no membership function".into()));
            }
            let mut points = [0.0; 4];
            for (slot, raw) in points.iter_mut().zip(&fields[1..]) {
                *slot = raw
                    .parse()
                    .map_err(|_| err(format!("breakpoint {raw:?} is not a number")))?;
            }
            let [a, b, c, d] = points;
            let t = Trapezoid::new(a, b, c, d).map_err(err)?;
            if functions.insert(class, t).is_some() {
                return Err(err(format!("class {class} defined twice")));
            }
        }
        let partition = Self::from_functions(functions)?;
        let warnings = partition.asymmetry_warnings();
        Ok((partition, warnings))
    }

    pub fn from_path(path: &Path) -> Result<(Self, Vec<String>), FuzzyError> {
        let text = fs::read_to_string(path)
            .map_err(|e| FuzzyError::Io(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    /// Same shapes with every height multiplied by `factor`.
    pub fn scaled(&self, factor: f64) -> Self {
        FuzzyPartition {
            functions: self
                .functions
                .iter()
                .map(|(c, t)| {
                    (*c, Trapezoid { height: t.height * factor, ..*t })
                })
                .collect(),
        }
    }

    fn asymmetry_warnings(&self) -> Vec<String> {
        [
            SentimentClass::WeakPositive,
            SentimentClass::Positive,
            SentimentClass::StrongPositive,
        ]
        .into_iter()
        .filter(|c| self.functions[c].mirrored() != self.functions[&c.mirror()])
        .map(|c| format!("partition is asymmetric: {c} is not the mirror of {}", c.mirror()))
        .collect()
    }

    fn check_coverage(&self) -> Result<(), FuzzyError> {
        let side = |positive: bool| -> Vec<(f64, bool, f64, bool)> {
            self.functions
                .iter()
                .filter(|(c, _)| c.is_positive() == positive)
                .map(|(_, t)| {
                    let t = if positive { *t } else { t.mirrored() };
                    t.support()
                })
                .collect()
        };
        for positive in [true, false] {
            let mut supports = side(positive);
            supports.sort_by(|x, y| x.0.total_cmp(&y.0).then(y.1.cmp(&x.1)));
            // sweep (0, +inf): `reach` is the covered right end so far
            let mut reach = 0.0_f64;
            let mut reach_closed = true;
            for (left, left_closed, right, right_closed) in supports {
                if right < reach || (right == reach && !right_closed) {
                    continue;
                }
                let gap = left > reach || (left == reach && !left_closed && !reach_closed);
                if gap {
                    let at = if positive { reach } else { -reach };
                    return Err(FuzzyError::CoverageGap(at));
                }
                if right > reach || right_closed {
                    reach_closed = if right == reach { reach_closed || right_closed } else { right_closed };
                    reach = right;
                }
            }
            if reach != f64::INFINITY {
                let at = if positive { reach } else { -reach };
                return Err(FuzzyError::CoverageGap(at));
            }
        }
        Ok(())
    }

    /// Evaluates every class at `score`.
    pub fn membership_vector(&self, score: f64) -> Memberships {
        let mut out: Memberships = SentimentClass::ALL.into_iter().map(|c| (c, 0.0)).collect();
        if score == 0.0 {
            out.insert(SentimentClass::Objective, 1.0);
            return out;
        }
        for (class, t) in &self.functions {
            let on_side = (score > 0.0 && class.is_positive()) || (score < 0.0 && class.is_negative());
            if on_side {
                out.insert(*class, t.evaluate(score));
            }
        }
        out
    }

    /// Crisp class of maximum membership; ties go to the milder class.
    pub fn classify(&self, score: f64) -> SentimentClass {
        let side: [SentimentClass; 3] = if score > 0.0 {
            [SentimentClass::WeakPositive, SentimentClass::Positive, SentimentClass::StrongPositive]
        } else if score < 0.0 {
            [SentimentClass::WeakNegative, SentimentClass::Negative, SentimentClass::StrongNegative]
        } else {
            return SentimentClass::Objective;
        };
        let memberships = self.membership_vector(score);
        let mut best = side[0];
        for class in &side[1..] {
            if memberships[class] > memberships[&best] {
                best = *class;
            }
        }
        best
    }
}

pub fn membership_vector(score: f64, partition: &FuzzyPartition) -> Memberships {
    partition.membership_vector(score)
}

pub fn classify(score: f64, partition: &FuzzyPartition) -> SentimentClass {
    partition.classify(score)
}
