//! Prints class memberships across the score axis for the default
//! partition, or for a partition file given as the first argument.
//!
//!     cargo run --example fuzzy_grading -- [partition.tsv]

use sentifuzz::FuzzyPartition;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let partition = match std::env::args().nth(1) {
        Some(path) => {
            let (p, warnings) = FuzzyPartition::from_path(path.as_ref())?;
            for w in warnings {
                eprintln!("warning: {w}");
            }
            p
        }
        None => FuzzyPartition::default(),
    };

    for i in -20..=20 {
        let score = i as f64 * 0.0625;
        let memberships: Vec<String> = partition
            .membership_vector(score)
            .into_iter()
            .filter(|(_, m)| *m > 0.0)
            .map(|(c, m)| format!("{c}={m}"))
            .collect();
        println!("{score:>8.4}  {:<16} {}", partition.classify(score).to_string(), memberships.join(" "));
    }
    Ok(())
}
