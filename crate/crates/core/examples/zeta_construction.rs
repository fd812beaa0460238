//! One permutation per chain when the relative neighborhoods allow it.

use prn::builder::{check_zeta, construct_zeta};
use prn::catalog::ecg_tree;
use prn::families::crown;
use prn::format::format_perms;
use prn::graph::Side;

fn main() {
    for n in 2..=5 {
        let g = crown(n).unwrap();
        let r = construct_zeta(&g, Side::A, None, false).unwrap();
        println!("crown {n}: {}", format_perms(&r.perms, g.graph()));
    }
    // a cover that fails the condition still yields the rows behind a leading permutation
    let g = ecg_tree();
    let gr = g.graph();
    let cover: Vec<Vec<usize>> =
        [&["3", "5", "1"][..], &["7"]].iter().map(|c| c.iter().map(|l| gr.id(l).unwrap()).collect()).collect();
    println!("condition on tree graph: {:?}", check_zeta(&g, &cover, Side::A).unwrap());
    let r = construct_zeta(&g, Side::A, Some(&cover), true).unwrap();
    let p0: Vec<&str> = r.p0.as_ref().unwrap().iter().map(|&v| gr.label(v)).collect();
    println!("{} | {}", p0.join(" "), format_perms(&r.perms, gr));
}
