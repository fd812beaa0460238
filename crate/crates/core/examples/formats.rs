//! Reading graphs, posets and words from text.

use prn::builder::{represent, RepresentOptions};
use prn::format::{format_perms, parse_bipartite, parse_poset, GraphJson, PosetJson};

fn main() {
    let g = parse_bipartite("# a 6-cycle\nu1 v1\nv1 u2\nu2 v2\nv2 u3\nu3 v3\nv3 u1\nlonely\n").unwrap();
    println!("{}", serde_json::to_string(&GraphJson::from_bipartite(&g)).unwrap());
    let r = represent(&g, &RepresentOptions::default()).unwrap();
    println!("{}", format_perms(&r.perms, g.graph()));

    let p = parse_poset(r#"{"elements": ["x", "y", "z"], "covers": [["x", "y"], ["x", "z"]]}"#).unwrap();
    println!("{}", serde_json::to_string(&PosetJson::from_poset(&p)).unwrap());
}
