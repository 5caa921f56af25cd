use super::Token;

/// Characters stripped from post text after URL, mention and hashtag removal.
pub const PUNCTUATION: &[char] = &[
    '!', '@', '#', '(', ')', '{', '}', '[', ']', ':', ';', ',', '.', '?', '\'', '"', '~', '*',
    '^', '&', '%', '$',
];

fn is_url(word: &str) -> bool {
    let lower = word.to_ascii_lowercase();
    lower.starts_with("http://") || lower.starts_with("https://")
}

/// Drops URLs, `@mentions` and `#hashtags` as whole words, strips the
/// punctuation class, collapses whitespace and lowercases.
pub fn clean(text: &str) -> String {
    let kept: Vec<String> = text
        .split_whitespace()
        .filter(|w| !is_url(w))
        .filter(|w| !w.starts_with('@'))
        .filter(|w| !w.starts_with('#'))
        .map(|w| w.chars().filter(|c| !PUNCTUATION.contains(c)).collect::<String>())
        .filter(|w| !w.is_empty())
        .collect();
    kept.join(" ").to_lowercase()
}

/// Splits on whitespace runs; tokens are lowercased and numbered from 0.
pub fn tokenize(text: &str) -> Vec<Token> {
    text.split_whitespace()
        .enumerate()
        .map(|(i, w)| {
            let lower = w.to_lowercase();
            Token {
                surface: lower.clone(),
                normalized: lower,
                index: i,
            }
        })
        .collect()
}
