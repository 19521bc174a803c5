//! Minimum dominating sets and efficient dominating sets.

use pebbling::domination::{find_efficient_dominating_set, min_dominating_set};
use pebbling::family::generate;

fn main() {
    for spec in ["path:6", "cycle:6", "star:4", "doublestar:4", "corona:cycle:4", "cycle:5"] {
        let g = generate(spec).unwrap();
        let dom = min_dominating_set(&g);
        let eff = find_efficient_dominating_set(&g);
        println!(
            "{spec:>15}  γ = {} {:?}  efficient: {}",
            dom.size,
            dom.set,
            match eff {
                Some(c) => format!("{:?}", c.set),
                None => "none".into(),
            }
        );
    }
}
