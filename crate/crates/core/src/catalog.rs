//! Small named graphs used throughout the tests and examples.

use crate::graph::{detect_bipartition, BipartiteGraph, Graph};

fn numbered(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

fn build(n: usize, edges: &[(u32, u32)]) -> Graph {
    let labels = numbered(n);
    let mut g = Graph::new(labels).expect("numeric labels");
    for &(a, b) in edges {
        g.add_edge(a as usize - 1, b as usize - 1).expect("valid edge");
    }
    g
}

fn bip(g: Graph) -> BipartiteGraph {
    detect_bipartition(&g).expect("catalog graphs are bipartite")
}

/// Nine vertices, parts {1..4} and {5..9}; 3,4 and 6,8 are twins.
pub fn twin_example() -> BipartiteGraph {
    bip(build(9, &[(1, 5), (1, 7), (2, 5), (2, 6), (2, 8), (3, 7), (3, 9), (4, 7), (4, 9)]))
}

/// Eleven vertices, parts {1..6} and {7..11}; both neighborhood posets have
/// width three and the graph contains an induced subdivided claw.
pub fn demo_graph() -> BipartiteGraph {
    bip(build(
        11,
        &[
            (1, 8),
            (1, 9),
            (2, 9),
            (2, 10),
            (3, 11),
            (4, 7),
            (4, 8),
            (4, 9),
            (4, 10),
            (5, 8),
            (5, 9),
            (5, 10),
            (5, 11),
            (6, 7),
            (6, 8),
            (6, 9),
            (6, 10),
            (6, 11),
        ],
    ))
}

/// Extended crown graph of the width-two poset with a tree-shaped (non-path)
/// cover graph, parts {1,3,5,7} and {2,4,6,8}.
pub fn ecg_tree() -> BipartiteGraph {
    bip(build(8, &[(2, 1), (1, 8), (1, 6), (1, 4), (5, 8), (5, 6), (5, 4), (3, 8), (7, 4)]))
}

/// Extended crown graph of the 2+2 crown poset, parts {1,3,5,7} and {2,4,6,8}.
pub fn ecg_crown() -> BipartiteGraph {
    bip(build(8, &[(6, 1), (1, 8), (1, 4), (5, 8), (5, 2), (5, 4), (3, 8), (7, 4)]))
}

/// Extended crown graph of the diamond poset, parts {1,3,5,7} and {2,4,6,8}.
pub fn ecg_diamond() -> BipartiteGraph {
    bip(build(8, &[(1, 2), (2, 3), (3, 6), (6, 5), (5, 4), (4, 1), (2, 5), (7, 2), (8, 5)]))
}

/// 4-cycle 1-2-3-4 with pendants at 1, 2 and 3.
pub fn square_with_pendants() -> Graph {
    build(7, &[(1, 2), (2, 3), (3, 4), (1, 4), (2, 5), (1, 6), (3, 7)])
}

/// Two squares sharing the edge 2-3, with a pendant at 2.
pub fn domino_with_pendant() -> Graph {
    build(7, &[(1, 2), (2, 3), (3, 4), (1, 4), (2, 5), (5, 6), (3, 6), (2, 7)])
}

/// Claw with every edge subdivided once.
pub fn subdivided_claw() -> Graph {
    build(7, &[(1, 2), (1, 3), (1, 4), (2, 5), (3, 6), (4, 7)])
}

/// Bipartite graphs with no permutational 2-representation, used as induced
/// witnesses for a lower bound of three.
pub fn prn_three_witnesses() -> Vec<(&'static str, Graph)> {
    vec![
        ("square-with-pendants", square_with_pendants()),
        ("domino-with-pendant", domino_with_pendant()),
        ("subdivided-claw", subdivided_claw()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parts() {
        let ids = |g: &BipartiteGraph| -> Vec<String> {
            g.part_a().iter().map(|&v| g.graph().label(v).to_string()).collect()
        };
        assert_eq!(ids(&twin_example()), ["1", "2", "3", "4"]);
        assert_eq!(ids(&demo_graph()), ["1", "2", "3", "4", "5", "6"]);
        for g in [ecg_tree(), ecg_crown(), ecg_diamond()] {
            assert_eq!(ids(&g), ["1", "3", "5", "7"]);
        }
    }

    #[test]
    fn witnesses_are_bipartite() {
        for (_, g) in prn_three_witnesses() {
            assert!(detect_bipartition(&g).is_ok());
            assert!(g.is_connected());
        }
    }
}
