//! Every bound, the best one, and the comparison predicates for one graph.
//!
//! cargo run --example bound_ladder -- star:6

use pebbling::harness::{cmd_bounds, GraphSource};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec = std::env::args().nth(1).unwrap_or_else(|| "doublestar:4".into());
    let r = cmd_bounds(&spec.parse::<GraphSource>()?)?;

    println!("{}: n = {}, d = {}, γ = {}, γ_eff = {:?}", r.graph_id, r.n, r.d, r.gamma, r.gamma_eff);
    for b in &r.bounds {
        match b.value {
            Some(v) => println!("  {:<22} {v}", b.name.as_str()),
            None => println!("  {:<22} n/a", b.name.as_str()),
        }
    }
    if let Some(best) = &r.best_bound {
        println!("best: {} = {}", best.name, best.value);
    }
    if let Some(p) = &r.predicates {
        for (pred, dom, other) in p.pairs() {
            println!("  {dom} <= {other}? {pred:?}");
        }
    }
    Ok(())
}
