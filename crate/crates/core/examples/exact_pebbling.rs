//! Exact pebbling numbers with a witness and replayable certificates.
//!
//! cargo run --release --example exact_pebbling -- path:5

use pebbling::family::generate;
use pebbling::pebbling::{pebbling_number, SearchBudget};

fn main() {
    let spec = std::env::args().nth(1).unwrap_or_else(|| "doublestar:4".into());
    let g = generate(&spec).expect("family spec");
    let r = pebbling_number(&g, 1, &SearchBudget::default()).expect("within budget");

    println!("f({spec}) = {}, attained at root {}", r.value, r.root);
    println!("per root: {:?}", r.per_root.as_deref().unwrap_or(&[]));
    println!("unsolvable at size {}: {:?}", r.value - 1, r.witness.counts());
    for c in &r.spot_checks {
        println!(
            "  {:?} solved in {} steps, replays: {}",
            c.distribution.counts(),
            c.moves.len(),
            c.replays(&g)
        );
    }
    println!("{} configurations explored", r.explored_configs);
}
