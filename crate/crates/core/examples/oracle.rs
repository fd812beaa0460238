//! Exact dimension and permutation counts by exhaustive search.

use prn::catalog::demo_graph;
use prn::families::crown;
use prn::oracle::{dimension, prn_exact, OracleBudget};
use prn::poset::Poset;

fn main() {
    let budget = OracleBudget::for_elements(16);
    let standard = Poset::numbered(6, &[(0, 4), (0, 5), (1, 3), (1, 5), (2, 3), (2, 4)]).unwrap();
    println!("standard example S3: dimension {}", dimension(&standard, &budget).unwrap().0);
    for n in 2..=4 {
        println!("crown {n}: {}", prn_exact(&crown(n).unwrap(), &budget).unwrap().0);
    }
    let (k, realizer) = prn_exact(&demo_graph(), &budget).unwrap();
    println!("worked eleven-vertex graph: {k} via {} linear extensions", realizer.linexts.len());
}
