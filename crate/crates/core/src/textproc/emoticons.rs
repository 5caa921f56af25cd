use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EmoticonPolarity {
    Positive,
    Negative,
    Neutral,
}

impl EmoticonPolarity {
    /// Score added to a post's total for one emoticon.
    pub fn contribution(self) -> f64 {
        match self {
            EmoticonPolarity::Positive => 0.5,
            EmoticonPolarity::Negative => -0.5,
            EmoticonPolarity::Neutral => 0.0,
        }
    }
}

const TABLE: [(&str, EmoticonPolarity); 7] = [
    ("\u{2639}", EmoticonPolarity::Positive),
    (":D", EmoticonPolarity::Positive),
    ("C:", EmoticonPolarity::Positive),
    ("\u{263A}", EmoticonPolarity::Negative),
    ("D8", EmoticonPolarity::Negative),
    ("D;", EmoticonPolarity::Negative),
    (":|", EmoticonPolarity::Neutral),
];

fn lookup(word: &str) -> Option<EmoticonPolarity> {
    TABLE.iter().find(|(e, _)| *e == word).map(|&(_, p)| p)
}

/// Removes whole-word emoticons and reports their polarities in order.
/// The spaced form `: |` is recognised as well.
pub fn map_emoticons(text: &str) -> (String, Vec<EmoticonPolarity>) {
    let words: Vec<&str> = text.split_whitespace().collect();
    let mut kept = Vec::with_capacity(words.len());
    let mut hits = Vec::new();
    let mut i = 0;
    while i < words.len() {
        if words[i] == ":" && words.get(i + 1) == Some(&"|") {
            hits.push(EmoticonPolarity::Neutral);
            i += 2;
            continue;
        }
        match lookup(words[i]) {
            Some(p) => hits.push(p),
            None => kept.push(words[i]),
        }
        i += 1;
    }
    (kept.join(" "), hits)
}
