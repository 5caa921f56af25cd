//! Corpus-level statistics over scored posts.
//!
//! All sums run in input order so identical input gives bit-identical output.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fuzzy::SentimentClass;
use crate::scoring::ScoredPost;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalyticsError {
    #[error("corpus is empty")]
    EmptyCorpus,
    #[error("weights sum to zero")]
    ZeroWeight,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct PolarityCounts {
    pub positive: usize,
    pub negative: usize,
    pub objective: usize,
}

impl PolarityCounts {
    pub fn total(&self) -> usize {
        self.positive + self.negative + self.objective
    }
}

pub fn count_polarities(posts: &[ScoredPost]) -> PolarityCounts {
    let mut counts = PolarityCounts::default();
    for p in posts {
        if p.total_score > 0.0 {
            counts.positive += 1;
        } else if p.total_score < 0.0 {
            counts.negative += 1;
        } else {
            counts.objective += 1;
        }
    }
    counts
}

pub fn arithmetic_mean(posts: &[ScoredPost]) -> Result<f64, AnalyticsError> {
    if posts.is_empty() {
        return Err(AnalyticsError::EmptyCorpus);
    }
    let mut sum = 0.0;
    for p in posts {
        sum += p.total_score;
    }
    Ok(sum / posts.len() as f64)
}

/// `sum(w_i * a_i) / sum(w_i)`.
pub fn weighted_mean(posts: &[ScoredPost]) -> Result<f64, AnalyticsError> {
    if posts.is_empty() {
        return Err(AnalyticsError::EmptyCorpus);
    }
    let (mut num, mut den) = (0.0, 0.0);
    for p in posts {
        num += p.weight * p.total_score;
        den += p.weight;
    }
    if den == 0.0 {
        return Err(AnalyticsError::ZeroWeight);
    }
    Ok(num / den)
}

fn percent(count: usize, total: usize) -> f64 {
    count as f64 * 100.0 / total as f64
}

/// `(positive %, negative %)` of all posts.
pub fn sentiment_percentages(counts: PolarityCounts) -> Result<(f64, f64), AnalyticsError> {
    let total = counts.total();
    if total == 0 {
        return Err(AnalyticsError::EmptyCorpus);
    }
    Ok((percent(counts.positive, total), percent(counts.negative, total)))
}

pub fn class_histogram(posts: &[ScoredPost]) -> BTreeMap<SentimentClass, usize> {
    let mut hist: BTreeMap<_, _> = SentimentClass::ALL.into_iter().map(|c| (c, 0)).collect();
    for p in posts {
        *hist.entry(p.class).or_default() += 1;
    }
    hist
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PostSummary {
    pub id: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub author: Option<String>,
    pub score: f64,
    pub class: SentimentClass,
    pub weight: f64,
    pub unmatched_words: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PieSlice {
    pub label: SentimentClass,
    pub percent: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorpusReport {
    pub total_posts: usize,
    pub positive_count: usize,
    pub negative_count: usize,
    pub objective_count: usize,
    pub class_histogram: BTreeMap<SentimentClass, usize>,
    pub arithmetic_mean: f64,
    pub weighted_mean: f64,
    pub positive_percent: f64,
    pub negative_percent: f64,
    pub unmatched_word_count: usize,
    pub warnings: Vec<String>,
    pub posts: Vec<PostSummary>,
}

impl CorpusReport {
    pub fn build(posts: &[ScoredPost], warnings: Vec<String>) -> Result<Self, AnalyticsError> {
        let counts = count_polarities(posts);
        let (positive_percent, negative_percent) = sentiment_percentages(counts)?;
        Ok(CorpusReport {
            total_posts: posts.len(),
            positive_count: counts.positive,
            negative_count: counts.negative,
            objective_count: counts.objective,
            class_histogram: class_histogram(posts),
            arithmetic_mean: arithmetic_mean(posts)?,
            weighted_mean: weighted_mean(posts)?,
            positive_percent,
            negative_percent,
            unmatched_word_count: posts.iter().map(ScoredPost::unmatched_words).sum(),
            warnings,
            posts: posts
                .iter()
                .map(|p| PostSummary {
                    id: p.post.id.clone(),
                    author: p.post.author.clone(),
                    score: p.total_score,
                    class: p.class,
                    weight: p.weight,
                    unmatched_words: p.unmatched_words(),
                })
                .collect(),
        })
    }

    pub fn objective_percent(&self) -> f64 {
        percent(self.objective_count, self.total_posts)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Summary block in the `label is: value` style.
    pub fn summary(&self) -> String {
        format!(
            "Total no of tweets is: {}\n\
             Total no of positive tweets: {}\n\
             Total no of negative tweets: {}\n\
             Arithmetic mean is: {:.4}\n\
             Weighted mean is: {:.4}\n\
             Sentiment by Percent\n\
             Positive sentiment % is: {:.1}\n\
             Negative sentiment % is: {:.1}\n",
            self.total_posts,
            self.positive_count,
            self.negative_count,
            self.arithmetic_mean,
            self.weighted_mean,
            self.positive_percent,
            self.negative_percent,
        )
    }
}

/// One slice per non-empty class, strongest positive first.
pub fn pie_chart_data(report: &CorpusReport) -> Result<Vec<PieSlice>, AnalyticsError> {
    if report.total_posts == 0 {
        return Err(AnalyticsError::EmptyCorpus);
    }
    Ok(SentimentClass::ALL
        .into_iter()
        .rev()
        .filter_map(|c| {
            let n = report.class_histogram.get(&c).copied().unwrap_or(0);
            (n > 0).then(|| PieSlice {
                label: c,
                percent: percent(n, report.total_posts),
            })
        })
        .collect())
}

fn slice_color(class: SentimentClass) -> &'static str {
    match class {
        SentimentClass::StrongPositive => "#1a7f37",
        SentimentClass::Positive => "#4ac26b",
        SentimentClass::WeakPositive => "#aceebb",
        SentimentClass::Objective => "#d0d7de",
        SentimentClass::WeakNegative => "#ffcecb",
        SentimentClass::Negative => "#fa4549",
        SentimentClass::StrongNegative => "#a40e26",
    }
}

/// Standalone SVG pie chart with a legend.
pub fn render_pie_svg(slices: &[PieSlice]) -> String {
    let (cx, cy, r) = (150.0, 150.0, 120.0);
    let mut svg = String::new();
    let height = 300.max(40 + 24 * slices.len());
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="520" height="{height}" viewBox="0 0 520 {height}">"#
    );
    let mut start = -PI / 2.0;
    for s in slices {
        let color = slice_color(s.label);
        if s.percent >= 100.0 {
            let _ = writeln!(svg, r#"  <circle cx="{cx}" cy="{cy}" r="{r}" fill="{color}"/>"#);
            continue;
        }
        let sweep = s.percent / 100.0 * 2.0 * PI;
        let end = start + sweep;
        let large = if sweep > PI { 1 } else { 0 };
        let _ = writeln!(
            svg,
            r#"  <path d="M {cx} {cy} L {:.3} {:.3} A {r} {r} 0 {large} 1 {:.3} {:.3} Z" fill="{color}" stroke="white"/>"#,
            cx + r * start.cos(),
            cy + r * start.sin(),
            cx + r * end.cos(),
            cy + r * end.sin(),
        );
        start = end;
    }
    for (i, s) in slices.iter().enumerate() {
        let y = 40 + 24 * i;
        let _ = writeln!(
            svg,
            r#"  <rect x="300" y="{}" width="14" height="14" fill="{}"/><text x="322" y="{}" font-family="sans-serif" font-size="13">{} {:.1}%</text>"#,
            y - 12,
            slice_color(s.label),
            y,
            s.label,
            s.percent
        );
    }
    svg.push_str("</svg>\n");
    svg
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::textproc::RawPost;

    fn post(score: f64, weight: f64, class: SentimentClass) -> ScoredPost {
        ScoredPost {
            post: RawPost::new("x", ""),
            token_scores: Vec::new(),
            emoticons: Vec::new(),
            total_score: score,
            weight,
            class,
        }
    }

    #[test]
    fn counts() {
        assert_eq!(count_polarities(&[]), PolarityCounts::default());
        let c = count_polarities(&[post(0.0, 1.0, SentimentClass::Objective)]);
        assert_eq!((c.positive, c.negative, c.objective), (0, 0, 1));
    }

    #[test]
    fn means() {
        assert_eq!(arithmetic_mean(&[]), Err(AnalyticsError::EmptyCorpus));
        assert_eq!(arithmetic_mean(&[post(0.3, 1.0, SentimentClass::Positive)]), Ok(0.3));
        // (0.95 * 1.0 + 0.05 * -1.0) / (0.95 + 0.05) = 0.9
        let two = [post(1.0, 0.95, SentimentClass::Positive), post(-1.0, 0.05, SentimentClass::Negative)];
        assert!((weighted_mean(&two).unwrap() - 0.9).abs() < 1e-15);
        assert_eq!(weighted_mean(&[]), Err(AnalyticsError::EmptyCorpus));
        assert_eq!(weighted_mean(&[post(1.0, 0.0, SentimentClass::Positive)]), Err(AnalyticsError::ZeroWeight));
    }

    #[test]
    fn percentages() {
        let c = |p, n, o| PolarityCounts { positive: p, negative: n, objective: o };
        assert_eq!(sentiment_percentages(c(8, 2, 0)), Ok((80.0, 20.0)));
        assert_eq!(sentiment_percentages(c(0, 0, 5)), Ok((0.0, 0.0)));
        assert_eq!(sentiment_percentages(c(1, 0, 0)), Ok((100.0, 0.0)));
        assert_eq!(sentiment_percentages(c(0, 0, 0)), Err(AnalyticsError::EmptyCorpus));
    }

    #[test]
    fn pie_single_and_empty() {
        let report = CorpusReport::build(&[post(0.5, 1.0, SentimentClass::Positive)], vec![]).unwrap();
        assert_eq!(
            pie_chart_data(&report).unwrap(),
            vec![PieSlice { label: SentimentClass::Positive, percent: 100.0 }]
        );
        assert!(render_pie_svg(&pie_chart_data(&report).unwrap()).contains("<circle"));
        assert_eq!(CorpusReport::build(&[], vec![]), Err(AnalyticsError::EmptyCorpus));
        let mut empty = report.clone();
        empty.total_posts = 0;
        assert_eq!(pie_chart_data(&empty), Err(AnalyticsError::EmptyCorpus));
    }

    #[test]
    fn summary_rounds_means() {
        let report = CorpusReport::build(
            &[post(0.25, 1.0, SentimentClass::Positive), post(0.025, 1.0, SentimentClass::WeakPositive)],
            vec![],
        )
        .unwrap();
        assert!(report.summary().contains("Arithmetic mean is: 0.1375\n"));
        assert!(report.summary().contains("Positive sentiment % is: 100.0\n"));
    }
}
