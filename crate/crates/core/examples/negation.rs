//! Shows how negation particles score: the particle keeps its own lexicon
//! value and flips the nearest following adjective.
//!
//!     cargo run --example negation

use sentifuzz::{Lexicon, Pipeline, RawPost, TaggerMode};

fn main() {
    let pipeline = Pipeline::new(Lexicon::fixture()).tagger_mode(TaggerMode::Pretagged);
    for line in [
        "iphone/NN is/VBZ good/JJ",
        "iphone/NN is/VBZ not/RB good/JJ",
        "iphone/NN is/VBZ bad/JJ",
        "iphone/NN is/VBZ Not/RB bad/JJ",
        "iphone/NN is/VBZ not/RB very/RB good/JJ",
        "never/RB not/RB good/JJ",
    ] {
        let (post, _) = pipeline.score(RawPost::new("n", line)).expect("valid line");
        let parts: Vec<String> = post
            .token_scores
            .iter()
            .map(|s| format!("{}{}={:+}", s.token.normalized(), if s.negated { "(neg)" } else { "" }, s.net))
            .collect();
        println!("{line:<45} total {:+} [{}] {}", post.total_score, parts.join(", "), post.class);
    }
}
