//! Lexicon-based sentiment grading of micro-blog posts.
//!
//! Posts are cleaned, tokenized and tagged with Penn Treebank tags (or read
//! pre-tagged), reduced to opinion words, scored against a SentiWordNet-style
//! polarity lexicon with negation inversion, and graded into weak, moderate
//! and strong positive/negative classes with trapezoidal membership functions.
//! Corpus statistics and pie-chart data are built from the graded posts.
//!
//! ```
//! use sentifuzz::{Lexicon, Pipeline, RawPost, SentimentClass};
//!
//! let pipeline = Pipeline::new(Lexicon::fixture());
//! let (post, _) = pipeline.score(RawPost::new("1", "iphone is not good")).unwrap();
//! assert_eq!(post.total_score, -1.0);
//! assert_eq!(post.class, SentimentClass::Negative);
//! ```

pub mod analytics;
pub mod cli;
pub mod fuzzy;
pub mod lexicon;
pub mod pipeline;
pub mod scoring;
pub mod textproc;

pub use analytics::{CorpusReport, PieSlice};
pub use fuzzy::{FuzzyPartition, SentimentClass, Trapezoid};
pub use lexicon::{Lexicon, LexiconEntry, LexiconError, PosCategory};
pub use pipeline::{Execution, Pipeline, TaggerMode};
pub use scoring::{ScoredPost, TokenScore, WeightTable};
pub use textproc::{PennTag, RawPost, StopwordSet, TaggedToken, Token};
