//! Graph families and the closed-form words for extended crown graphs.

use prn::families::{classify_width2, complete_bipartite, crown_with_pendants, cycle_word, extended_crown, type2_word};
use prn::format::{format_perms, format_word};
use prn::poset::Poset;

fn main() {
    let k = complete_bipartite(2, 3).unwrap();
    println!("K(2,3): {} edges", k.graph().edge_count());
    let p = crown_with_pendants(3, 3, 3).unwrap();
    println!("crown 3 with pendants: {} vertices", p.graph().n());

    let chain = Poset::chain(4);
    let ecg = extended_crown(&chain, None).unwrap();
    println!("extended crown of a 4-chain: {} edges", ecg.graph.graph().edge_count());

    let n_shape = Poset::numbered(4, &[(0, 1), (2, 3), (2, 1)]).unwrap();
    let (ecg, perms) = type2_word(&n_shape, None).unwrap();
    println!("N-shaped poset: {}", format_perms(&perms, ecg.graph.graph()));

    let cycle = Poset::numbered(5, &[(0, 1), (1, 2), (0, 3), (3, 4), (4, 2)]).unwrap();
    let (ecg, w) = cycle_word(&cycle, None).unwrap();
    println!("cycle poset ({}): {}", classify_width2(&cycle).unwrap(), format_word(&w, ecg.graph.graph()));
}
