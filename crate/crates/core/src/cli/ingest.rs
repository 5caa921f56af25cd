use std::fs;
use std::path::Path;

use serde::Deserialize;

use super::{CliError, InputFormat};
use crate::textproc::{parse_pretagged, RawPost};

#[derive(Deserialize)]
struct JsonPost {
    id: Option<serde_json::Value>,
    author: Option<String>,
    text: String,
    language: Option<String>,
}

/// Splits an `@user:` prefix off a text line.
fn split_author(line: &str) -> (Option<String>, &str) {
    if let Some(rest) = line.strip_prefix('@') {
        if let Some((name, text)) = rest.split_once(':') {
            let valid = !name.is_empty() && name.chars().all(|c| c.is_alphanumeric() || c == '_');
            if valid {
                return (Some(name.to_string()), text.trim());
            }
        }
    }
    (None, line.trim())
}

/// Reads posts from a string. Blank lines are skipped; ids default to the
/// 1-based line number.
pub fn parse_posts(text: &str, format: InputFormat, origin: &str) -> Result<Vec<RawPost>, CliError> {
    let mut posts = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        let err = |message: String| CliError::Input {
            path: origin.to_string(),
            line: line_no,
            message,
        };
        let post = match format {
            InputFormat::Text => {
                let (author, text) = split_author(line);
                RawPost {
                    id: line_no.to_string(),
                    author,
                    text: text.to_string(),
                    language: None,
                }
            }
            InputFormat::Jsonl => {
                let j: JsonPost = serde_json::from_str(line).map_err(|e| err(e.to_string()))?;
                let id = match j.id {
                    None | Some(serde_json::Value::Null) => line_no.to_string(),
                    Some(serde_json::Value::String(s)) => s,
                    Some(other) => other.to_string(),
                };
                RawPost {
                    id,
                    author: j.author,
                    text: j.text,
                    language: j.language,
                }
            }
            InputFormat::Pretagged => {
                parse_pretagged(line).map_err(|e| err(e.to_string()))?;
                RawPost::new(line_no.to_string(), line.trim())
            }
        };
        posts.push(post);
    }
    Ok(posts)
}

pub fn ingest(path: &Path, format: InputFormat) -> Result<Vec<RawPost>, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Read {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_posts(&text, format, &path.display().to_string())
}
