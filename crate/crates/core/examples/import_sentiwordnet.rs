//! Imports a SentiWordNet 3.0 file and queries it.
//!
//!     cargo run --example import_sentiwordnet -- [path/to/SentiWordNet_3.0.0.txt] [lemma]

use std::path::PathBuf;

use sentifuzz::{Lexicon, PosCategory};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let path = args
        .next()
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/swn_excerpt.txt"));
    let lemma = args.next().unwrap_or_else(|| "good".to_string());

    let lexicon = Lexicon::open_sentiwordnet(&path)?;
    println!("{}: {} merged (lemma, category) rows", path.display(), lexicon.len());

    for category in PosCategory::ALL {
        match lexicon.get(&lemma, category) {
            Some(e) => println!(
                "{lemma} ({category}): pos {} neg {} obj {}",
                e.pos_score,
                e.neg_score,
                e.obj_score()
            ),
            None => println!("{lemma} ({category}): no entry"),
        }
    }
    Ok(())
}
