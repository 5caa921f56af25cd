//! The `surface/TAG` line format produced by external taggers.
//!
//! A line looks like `@/IN stalin/NN :: iphone/NN is/VBZ lovely/JJ`. An
//! item made only of colons separates the user name prefix (discarded)
//! from the body. Further colon items inside the body are dropped, as are
//! bracket escapes (`-LRB-`, `-RRB-`).

use thiserror::Error;

use super::{PennTag, TaggedToken, Token};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PretaggedError {
    #[error("item {0:?} has no /TAG suffix")]
    MissingTag(String),
    #[error("item {item:?} has unknown tag {tag:?}")]
    UnknownTag { item: String, tag: String },
}

fn is_separator(item: &str) -> bool {
    !item.is_empty() && item.chars().all(|c| c == ':')
}

fn is_bracket_escape(s: &str) -> bool {
    matches!(s, "-LRB-" | "-RRB-" | "-LSB-" | "-RSB-" | "-LCB-" | "-RCB-")
}

pub fn parse_pretagged(line: &str) -> Result<Vec<TaggedToken>, PretaggedError> {
    let items: Vec<&str> = line.split_whitespace().collect();
    let body = match items.iter().position(|i| is_separator(i)) {
        Some(sep) => &items[sep + 1..],
        None => &items[..],
    };
    let mut out = Vec::with_capacity(body.len());
    for &item in body {
        if is_separator(item) {
            continue;
        }
        let (surface, tag) = item
            .rsplit_once('/')
            .filter(|(s, t)| !s.is_empty() && !t.is_empty())
            .ok_or_else(|| PretaggedError::MissingTag(item.to_string()))?;
        if is_bracket_escape(surface) || is_bracket_escape(tag) {
            continue;
        }
        let tag: PennTag = tag.parse().map_err(|_| PretaggedError::UnknownTag {
            item: item.to_string(),
            tag: tag.to_string(),
        })?;
        let token = Token::new(surface.to_lowercase(), out.len());
        out.push(TaggedToken::new(token, tag));
    }
    Ok(out)
}

/// Inverse of [`parse_pretagged`] for the body part.
pub fn format_pretagged(tokens: &[TaggedToken]) -> String {
    tokens
        .iter()
        .map(|t| format!("{}/{}", t.token.surface, t.tag))
        .collect::<Vec<_>>()
        .join(" ")
}
