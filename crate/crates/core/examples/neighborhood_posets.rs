//! Neighborhood containment posets and their minimum chain covers.

use prn::catalog::demo_graph;
use prn::graph::Side;
use prn::oracle::max_antichain_brute;
use prn::poset::{neighborhood_poset, width_and_cover};

fn main() {
    let g = demo_graph();
    for side in [Side::A, Side::B] {
        let np = neighborhood_poset(&g, side).unwrap();
        let (width, cover) = width_and_cover(&np.poset);
        let chains: Vec<String> =
            cover.chains.iter().map(|c| c.iter().map(|&x| np.poset.label(x)).collect::<Vec<_>>().join(" < ")).collect();
        println!(
            "side {side}: width {width} (brute force {}), cover {}",
            max_antichain_brute(&np.poset),
            chains.join(" | ")
        );
    }
}
