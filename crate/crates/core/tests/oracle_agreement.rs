use std::collections::BTreeSet;

use clique_lab::generator::{enumerate_connected_bounded, CorpusSpec};
use clique_lab::helly::{
    hajos_compatible, is_clique_helly, is_helly_family, is_hereditary_helly_definitional,
};
use clique_lab::{canonical_form, clique_graph, maximal_cliques, Graph};
use clique_lab_oracle as oracle;

fn to_graph(m: &oracle::Matrix) -> Graph {
    Graph::from_edge_list(m.len(), &oracle::edges_of(m)).unwrap()
}

fn to_matrix(g: &Graph) -> oracle::Matrix {
    let edges: Vec<_> = g.edges().collect();
    oracle::matrix_from_edges(g.order(), &edges)
}

fn clique_lists(g: &Graph) -> Vec<Vec<usize>> {
    maximal_cliques(g)
        .unwrap()
        .iter()
        .map(|c| c.to_vec())
        .collect()
}

#[test]
fn cliques_match_subset_oracle_on_labeled_graphs() {
    for n in 1..=6 {
        for m in oracle::all_labeled_graphs(n) {
            assert_eq!(
                clique_lists(&to_graph(&m)),
                oracle::maximal_cliques(&m),
                "{m:?}"
            );
        }
    }
}

#[test]
fn clique_graph_matches_intersection_oracle() {
    for m in oracle::all_labeled_graphs(5) {
        let (k, _) = clique_graph(&to_graph(&m)).unwrap();
        assert_eq!(to_matrix(&k), oracle::clique_graph(&m));
    }
}

#[test]
fn clique_helly_matches_family_oracle_on_labeled_graphs() {
    for n in 1..=6 {
        for m in oracle::all_labeled_graphs(n) {
            let g = to_graph(&m);
            let expected = oracle::is_clique_helly(&m);
            assert_eq!(is_clique_helly(&g), expected, "{m:?}");
            let family: Vec<_> = maximal_cliques(&g).unwrap().iter().cloned().collect();
            assert_eq!(is_helly_family(&family).unwrap(), expected);
        }
    }
}

#[test]
fn hereditary_checks_match_oracle() {
    let spec = CorpusSpec {
        n_min: 1,
        n_max: 6,
        delta_max: 5,
        exclude_octahedron: false,
        connected_only: false,
    };
    for g in enumerate_connected_bounded(&spec).unwrap() {
        let expected = oracle::is_hereditary_clique_helly(&to_matrix(&g));
        assert_eq!(is_hereditary_helly_definitional(&g).unwrap(), expected);
        assert_eq!(hajos_compatible(&g), expected);
    }
}

#[test]
fn hajos_compatibility_matches_definition_up_to_eight() {
    let spec = CorpusSpec {
        n_min: 1,
        n_max: 8,
        delta_max: 7,
        exclude_octahedron: false,
        connected_only: false,
    };
    let graphs = enumerate_connected_bounded(&spec).unwrap();
    assert_eq!(graphs.iter().filter(|g| g.order() == 8).count(), 12346);
    for g in graphs {
        let definitional = is_hereditary_helly_definitional(&g).unwrap();
        assert_eq!(hajos_compatible(&g), definitional);
        assert!(!definitional || is_clique_helly(&g));
    }
}

#[test]
fn generator_matches_matrix_enumeration() {
    for n in 1..=6 {
        for (delta, connected) in [(4, true), (2, true), (3, false), (5, false)] {
            let spec = CorpusSpec {
                n_min: n,
                n_max: n,
                delta_max: delta,
                exclude_octahedron: false,
                connected_only: connected,
            };
            let canon = oracle::Canonizer::new(n);
            let got: Vec<_> = enumerate_connected_bounded(&spec)
                .unwrap()
                .iter()
                .map(|g| canon.canonical(&to_matrix(g)))
                .collect();
            let unique: BTreeSet<_> = got.iter().cloned().collect();
            assert_eq!(unique.len(), got.len());
            assert_eq!(
                unique,
                oracle::graph_classes(n, delta, connected),
                "n={n} Δ≤{delta}"
            );
        }
    }
}

#[test]
fn certificates_partition_like_permutation_oracle() {
    for n in 1..=5 {
        let canon = oracle::Canonizer::new(n);
        let graphs: Vec<_> = oracle::all_labeled_graphs(n).collect();
        let ours: Vec<_> = graphs
            .iter()
            .map(|m| canonical_form(&to_graph(m)))
            .collect();
        let theirs: Vec<_> = graphs.iter().map(|m| canon.canonical(m)).collect();
        for i in 0..graphs.len() {
            for j in (i + 1..graphs.len()).step_by(7) {
                assert_eq!(ours[i] == ours[j], theirs[i] == theirs[j]);
            }
        }
    }
}

#[test]
fn frozen_corpus_counts() {
    let spec = CorpusSpec {
        exclude_octahedron: false,
        ..CorpusSpec::low_degree(6, 9)
    };
    assert_eq!(
        clique_lab::generator::corpus_counts(&spec).unwrap(),
        vec![(6, 78), (7, 353), (8, 1929), (9, 12207)]
    );
}
