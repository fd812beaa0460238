//! One permutation per chain plus a leading one; here on the worked
//! eleven-vertex example, and what goes wrong without the leading row.

use prn::builder::{construct_general_with, BlockOrder};
use prn::catalog::demo_graph;
use prn::format::{format_perms, format_word};
use prn::graph::Side;
use prn::words::{represents, PermSequence, Verdict};

fn main() {
    let g = demo_graph();
    let gr = g.graph();
    let cover: Vec<Vec<usize>> = [&["7", "8", "9"][..], &["10"], &["11"]]
        .iter()
        .map(|c| c.iter().map(|l| gr.id(l).unwrap()).collect())
        .collect();
    let r = construct_general_with(&g, Side::B, Some(&cover), BlockOrder::Containment).unwrap();
    println!("{}", format_perms(&r.perms, gr));
    let tail = PermSequence::new(r.perms.perms()[1..].to_vec()).unwrap();
    if let Verdict::Counterexample { u, v, projection, .. } = represents(&tail.flatten(), gr).unwrap() {
        println!("without the first row: {} and {} give {}", gr.label(u), gr.label(v), format_word(&projection, gr));
    }
}
