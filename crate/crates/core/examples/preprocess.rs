//! Walks one raw post through every preprocessing stage.
//!
//!     cargo run --example preprocess -- "Touch-screen of iphone@ is lovely http://t.co/x #ios"

use sentifuzz::scoring::apply_negation;
use sentifuzz::textproc::{clean, filter_opinion_words, format_pretagged, map_emoticons, tag, tokenize, BaselineTagger};
use sentifuzz::{Lexicon, StopwordSet};

fn main() {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "@bob iphone is not bad at all :D #apple http://t.co/abc".to_string());
    let lexicon = Lexicon::fixture();

    let (text_wo_emoticons, emoticons) = map_emoticons(&text);
    println!("input      : {text}");
    println!("emoticons  : {emoticons:?} -> {text_wo_emoticons:?}");
    let cleaned = clean(&text_wo_emoticons);
    println!("cleaned    : {cleaned:?}");
    let tokens = tokenize(&cleaned);
    let tagged = tag(&tokens, &BaselineTagger::with_lexicon(&lexicon));
    println!("tagged     : {}", format_pretagged(&tagged));
    let opinion = filter_opinion_words(tagged);
    println!("opinion    : {}", format_pretagged(&opinion));
    let stopwords = StopwordSet::english();
    let negated: Vec<_> = apply_negation(opinion)
        .into_iter()
        .filter(|t| !stopwords.contains(t.token.normalized()))
        .collect();
    for t in &negated {
        println!("  {:<10} {:<4} negated={}", t.token.normalized(), t.token.tag, t.negated);
    }
}
