//! Lower and upper bounds, with the induced crown and forbidden subgraph searches.

use prn::builder::bounds_report;
use prn::catalog::{demo_graph, twin_example};

fn main() {
    for (name, g) in [("twins", twin_example()), ("worked", demo_graph())] {
        let b = bounds_report(&g, true).unwrap();
        println!("{name}: {}", serde_json::to_string(&b).unwrap());
    }
}
