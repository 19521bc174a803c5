//! Distances, eccentricities and diameter of a family graph or edge-list file.
//!
//! cargo run --example graph_metrics -- corona:cycle:4

use pebbling::harness::GraphSource;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec = std::env::args().nth(1).unwrap_or_else(|| "doublestar:4".into());
    let g = spec.parse::<GraphSource>()?.load()?;
    let m = g.metrics();

    println!("{spec}: n = {}, m = {}, d = {}", g.n(), g.edge_count(), m.diameter());
    for v in g.vertices() {
        println!("  e({v}) = {}  row {:?}", m.eccentricity(v), m.distances()[v]);
    }
    print!("{}", g.to_edge_list());
    Ok(())
}
