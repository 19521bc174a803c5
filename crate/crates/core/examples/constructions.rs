//! Path covers, root-disjoint path systems and cell decompositions, with the
//! cell strategy run on a concrete distribution.

use pebbling::constructions::{
    build_dominating_decomposition, build_path_set, build_root_disjoint_system,
    decomposition_strategy,
};
use pebbling::domination::min_dominating_set;
use pebbling::family::generate;
use pebbling::pebbling::Distribution;

fn main() {
    let g = generate("doublestar:4").unwrap();
    let m = g.metrics();
    let root = 2;

    let ps = build_path_set(&g, &m, root);
    println!("path set {:?}, pigeonhole bound {}", ps.paths, ps.pigeonhole_bound());

    let sys = build_root_disjoint_system(&g, &m, root);
    println!("disjoint system k = {} of capacity {}: {:?}", sys.k(), sys.capacity, sys.paths);

    let dom = min_dominating_set(&g);
    let dec = build_dominating_decomposition(&g, root, &dom).unwrap();
    let bound = dec.pigeonhole_bound(m.diameter());
    println!("cells {:?}, connectors {:?}, bound {bound}", dec.cells, dec.connectors);

    let d = Distribution::single(g.n(), 5, bound as u32);
    let moves = decomposition_strategy(&g, &m, &dec, &d, root).expect("bound suffices");
    println!("{} pebbles on vertex 5 reach {root} in {} steps", bound, moves.len());
    assert!(moves.achieves(&g, &d, root, 1));
}
