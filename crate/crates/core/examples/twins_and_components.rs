//! Twin reduction, expansion back to the full graph, and disconnected inputs.

use prn::builder::{represent, RepresentOptions};
use prn::catalog::twin_example;
use prn::format::format_perms;
use prn::graph::{detect_bipartition, reduce, Graph};
use prn::words::represents;

fn main() {
    let g = twin_example();
    let red = reduce(&g);
    println!("{} vertices, {} after merging twins", g.graph().n(), red.reduced.graph().n());
    let opts = RepresentOptions { expand_twins: true, ..Default::default() };
    let r = represent(&g, &opts).unwrap();
    println!("{}", format_perms(&r.perms, g.graph()));

    // two disjoint paths and an isolated vertex
    let h = Graph::from_edges(["a", "b", "c", "d", "e", "f", "z"], &[(0, 1), (1, 2), (3, 4), (4, 5)]).unwrap();
    let h = detect_bipartition(&h).unwrap();
    let r = represent(&h, &opts).unwrap();
    println!("{}", format_perms(&r.perms, h.graph()));
    assert!(represents(&r.perms.flatten(), h.graph()).unwrap().is_ok());
}
