use clique_lab::helly::{hajos_compatible, is_clique_helly};
use clique_lab::{
    canonical_form, clique_graph, is_isomorphic, maximal_cliques, parse_graph6, to_graph6, Graph,
};
use clique_lab_oracle as oracle;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut it = bits.into_iter();
            Graph::from_fn(n, |_, _| it.next().unwrap())
        })
    })
}

fn graph_and_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph_strategy(max_n).prop_flat_map(|g| {
        let perm: Vec<usize> = (0..g.order()).collect();
        (Just(g), Just(perm).prop_shuffle())
    })
}

fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    Graph::from_fn(n, |_, _| rng.gen_bool(p))
}

proptest! {
    #[test]
    fn degree_sum_is_twice_edges(g in graph_strategy(16)) {
        prop_assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.edge_count());
    }

    #[test]
    fn graph6_round_trips(g in graph_strategy(20)) {
        let text = to_graph6(&g).unwrap();
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn certificate_is_relabel_invariant((g, perm) in graph_and_perm(12)) {
        let h = g.permuted(&perm);
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert!(is_isomorphic(&g, &h));
    }

    #[test]
    fn clique_structure_is_relabel_invariant((g, perm) in graph_and_perm(10)) {
        let h = g.permuted(&perm);
        let (kg, _) = clique_graph(&g).unwrap();
        let (kh, _) = clique_graph(&h).unwrap();
        prop_assert!(is_isomorphic(&kg, &kh));
        prop_assert_eq!(is_clique_helly(&g), is_clique_helly(&h));
        prop_assert_eq!(hajos_compatible(&g), hajos_compatible(&h));
    }

    #[test]
    fn cliques_are_maximal_and_cover_edges(g in graph_strategy(14)) {
        let family = maximal_cliques(&g).unwrap();
        for c in family.iter() {
            prop_assert!(g.is_complete_set(c));
            for v in 0..g.order() {
                prop_assert!(c.contains(v) || !c.is_subset(g.adjacency(v)));
            }
        }
        for (u, v) in g.edges() {
            prop_assert!(family.iter().any(|c| c.contains(u) && c.contains(v)));
        }
    }

    #[test]
    fn hereditary_helly_implies_helly(g in graph_strategy(10)) {
        prop_assert!(!hajos_compatible(&g) || is_clique_helly(&g));
    }
}

#[test]
fn clique_helly_matches_oracle_on_random_graphs() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(0x5eed);
    for _ in 0..10_000 {
        let n = rng.gen_range(1..=10);
        let p = *[0.3, 0.5, 0.7].choose(&mut rng).unwrap();
        let g = random_graph(&mut rng, n, p);
        let edges: Vec<_> = g.edges().collect();
        let m = oracle::matrix_from_edges(n, &edges);
        assert_eq!(
            is_clique_helly(&g),
            oracle::is_clique_helly(&m),
            "{}",
            to_graph6(&g).unwrap()
        );
    }
}
