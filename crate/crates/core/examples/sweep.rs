//! Classification against exact counts over all small width-two posets.

use prn::oracle::sweep_width2;

fn main() {
    let max_n = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(6);
    let report = sweep_width2(max_n).unwrap();
    let mut by_class = std::collections::BTreeMap::new();
    for r in &report.records {
        *by_class.entry(r.class.to_string()).or_insert(0) += 1;
    }
    println!("{} posets up to {max_n} elements: {by_class:?}", report.records.len());
    println!("mismatches: {}", report.mismatches().len());
}
