use proptest::prelude::*;

use prn::builder::{
    bounds_report, check_zeta, construct_general, construct_zeta, represent, RepresentOptions, ZetaVerdict,
};
use prn::format::{parse_bipartite, GraphJson};
use prn::graph::{reduce, BipartiteGraph, Graph, Side};
use prn::oracle::{dimension, dimension_by_enumeration, max_antichain_brute, OracleBudget};
use prn::poset::{is_realizer, neighborhood_poset, width_and_cover, Poset};
use prn::words::{decode, is_uniform, lemma_scan, represents, PermSequence, Word};

/// Bipartite graph on parts of size `na` and `nb`; isolated vertices allowed.
fn bipartite(max_side: usize) -> impl Strategy<Value = BipartiteGraph> {
    (1..=max_side, 1..=max_side)
        .prop_flat_map(|(na, nb)| (Just(na), Just(nb), proptest::collection::vec(any::<bool>(), na * nb)))
        .prop_map(|(na, nb, bits)| {
            let edges: Vec<(usize, usize)> = (0..na)
                .flat_map(|a| (0..nb).map(move |b| (a, na + b)))
                .filter(|&(a, b)| bits[a * nb + b - na])
                .collect();
            let labels = (0..na).map(|i| format!("a{i}")).chain((0..nb).map(|j| format!("b{j}")));
            let g = Graph::from_edges(labels, &edges).unwrap();
            BipartiteGraph::with_part_a(g, &(0..na).collect::<Vec<_>>()).unwrap()
        })
}

/// Strict order from a random upper-triangular relation, closed transitively.
fn poset(max_n: usize) -> impl Strategy<Value = Poset> {
    (1..=max_n).prop_flat_map(|n| (Just(n), proptest::collection::vec(any::<bool>(), n * n))).prop_map(|(n, bits)| {
        let rel: Vec<(usize, usize)> =
            (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| bits[i * n + j]).collect();
        Poset::numbered(n, &rel).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn represent_always_verifies(g in bipartite(6)) {
        let opts = RepresentOptions { expand_twins: true, ..Default::default() };
        let r = represent(&g, &opts).unwrap();
        prop_assert!(represents(&r.perms.flatten(), g.graph()).unwrap().is_ok());
        let b = bounds_report(&g, false).unwrap();
        prop_assert!(r.perms.len() <= b.upper);
        prop_assert!(b.lower <= b.upper);
    }

    #[test]
    fn general_build_on_reduced_graphs(g in bipartite(6)) {
        let red = reduce(&g).reduced;
        prop_assume!(red.graph().is_connected() && red.graph().n() > 2);
        for side in [Side::A, Side::B] {
            let r = construct_general(&red, side, None).unwrap();
            let width = width_and_cover(&neighborhood_poset(&red, side).unwrap().poset).0;
            prop_assert_eq!(r.perms.len(), width + 1);
            prop_assert!(represents(&r.perms.flatten(), red.graph()).unwrap().is_ok());
            prop_assert!(lemma_scan(&r.perms, &red).is_empty());
            if check_zeta(&red, &r.chains, side).unwrap() == ZetaVerdict::Holds {
                let z = construct_zeta(&red, side, Some(&r.chains), false).unwrap();
                prop_assert_eq!(z.perms.len(), width);
            }
        }
    }

    #[test]
    fn decoded_word_is_represented(letters in proptest::collection::vec(0usize..6, 0..24)) {
        let w = Word::new(letters);
        let g = decode(&w);
        let relabel: Vec<usize> = w.alphabet();
        let local = Word::new(w.letters.iter().map(|x| relabel.binary_search(x).unwrap()).collect());
        prop_assert!(represents(&local, &g).unwrap().is_ok());
    }

    #[test]
    fn permutation_words_are_uniform(perms in proptest::collection::vec(Just((0..5).collect::<Vec<usize>>()).prop_shuffle(), 1..4)) {
        let k = perms.len();
        let seq = PermSequence::new(perms).unwrap();
        prop_assert_eq!(is_uniform(&seq.flatten()), Some(k));
    }

    #[test]
    fn width_matches_brute_force(p in poset(9)) {
        let (w, cover) = width_and_cover(&p);
        prop_assert_eq!(w, max_antichain_brute(&p));
        prop_assert_eq!(cover.chains.len(), w);
        prop_assert!(cover.validate(&p).is_ok());
    }

    #[test]
    fn dimension_agrees_with_enumeration(p in poset(6)) {
        let budget = OracleBudget::default();
        let (d, r) = dimension(&p, &budget).unwrap();
        prop_assert!(is_realizer(&p, &r));
        prop_assert_eq!(r.linexts.len(), d);
        prop_assert!(d <= width_and_cover(&p).0.max(1));
        prop_assert_eq!(d, dimension_by_enumeration(&p, &budget).unwrap().0);
    }

    #[test]
    fn graph_json_round_trips(g in bipartite(5)) {
        let text = serde_json::to_string(&GraphJson::from_bipartite(&g)).unwrap();
        let back = parse_bipartite(&text).unwrap();
        prop_assert!(back.graph().same_labelled(g.graph()));
        prop_assert_eq!(back.part_a(), g.part_a());
    }
}
