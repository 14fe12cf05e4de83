//! Structural invariants checked across the small-graph corpus and random
//! graphs.

use prism_fixer::domination::{
    domination_number, enumerate_gamma_sets, is_2_packing, is_dominating, is_independent,
};
use prism_fixer::graph::{parse_graph6, to_graph6, Graph};
use prism_fixer::permutation::{LexPermutations, Permutation};
use prism_fixer::prism::{build_prism, prism_gamma};
use prism_fixer::separable::{enumerate_separable, exists_effective, lemma1_check};
use prism_fixer::VertexSet;
use proptest::prelude::*;

fn corpus(n: usize) -> Vec<(String, Graph)> {
    let path = format!("{}/tests/data/graphs{n}.g6", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(path)
        .unwrap()
        .lines()
        .map(|l| (l.to_string(), parse_graph6(l).unwrap()))
        .collect()
}

#[test]
fn corpus_sizes_match_known_counts() {
    // graphs and connected graphs on n vertices, up to isomorphism
    let all = [1, 2, 4, 11, 34, 156, 1044, 12346];
    let connected = [1, 1, 2, 6, 21, 112, 853, 11117];
    for n in 1..=8 {
        let graphs = corpus(n);
        assert_eq!(graphs.len(), all[n - 1], "n = {n}");
        let c = graphs.iter().filter(|(_, g)| g.is_connected()).count();
        assert_eq!(c, connected[n - 1], "n = {n}");
        assert!(graphs.iter().all(|(_, g)| g.order() == n));
    }
}

#[test]
fn graph6_round_trips_whole_corpus() {
    for n in 1..=8 {
        for (line, g) in corpus(n) {
            assert_eq!(to_graph6(&g).unwrap(), line);
        }
    }
}

#[test]
fn c3_free_tests_agree() {
    for n in 1..=7 {
        for (line, g) in corpus(n) {
            for x in 0..n {
                assert_eq!(g.is_c3_free_vertex(x).unwrap(), g.closed_nbhd_is_star(x).unwrap(), "{line} {x}");
            }
        }
    }
}

#[test]
fn gamma_sets_and_witness() {
    for n in 1..=6 {
        for (line, g) in corpus(n) {
            let best = domination_number(&g);
            assert!(is_dominating(&g, &best.witness), "{line}");
            let sets = enumerate_gamma_sets(&g);
            assert!(sets.contains(&best.witness), "{line}");
            assert!(sets.iter().all(|s| s.len() == best.gamma && is_dominating(&g, s)), "{line}");
            assert!(sets.windows(2).all(|w| w[0] < w[1]), "{line}");
        }
    }
}

#[test]
fn two_packings_are_independent() {
    for (line, g) in corpus(5) {
        for mask in 0u64..1 << 5 {
            let s = VertexSet::from_mask(mask);
            if is_2_packing(&g, &s) {
                assert!(is_independent(&g, &s), "{line} {s}");
            }
        }
    }
}

#[test]
fn prism_degrees_grow_by_one() {
    // every vertex gains exactly one matching edge
    for (line, g) in corpus(6) {
        let mut pi: Vec<usize> = (0..6).collect();
        pi.rotate_left(1);
        let p = build_prism(&g, &Permutation::new(pi).unwrap()).unwrap();
        for v in 0..6 {
            assert_eq!(p.graph().degree(v), g.degree(v) + 1, "{line}");
            assert_eq!(p.graph().degree(v + 6), g.degree(v) + 1, "{line}");
        }
        assert_eq!(p.graph().edge_count(), 2 * g.edge_count() + 6);
    }
}

#[test]
fn effective_images_keep_lemma1_shape() {
    // an effective image is itself separable in the copy, so the image parts
    // carry the same structure as A1 and A2 do in G
    for n in 2..=5 {
        for (line, g) in corpus(n) {
            if g.is_edgeless() {
                continue;
            }
            for pi in LexPermutations::new(n) {
                if let Some(w) = exists_effective(&g, &pi).unwrap() {
                    let image = prism_fixer::separable::SeparableGammaSet::from_parts(w.b2.clone(), w.b1.clone());
                    assert!(lemma1_check(&g, &image).all_hold(), "{line} [{pi}]");
                    assert!(is_dominating(&g, &w.b1.union(&w.b2)), "{line}");
                }
            }
        }
    }
}

#[test]
fn effective_record_forces_equality() {
    // A1 ∪ π(A2)' dominates πG when the record is effective
    for n in 2..=5 {
        for (line, g) in corpus(n) {
            let gamma = domination_number(&g).gamma;
            for pi in LexPermutations::new(n) {
                if let Some(w) = exists_effective(&g, &pi).unwrap() {
                    let prism = build_prism(&g, &pi).unwrap();
                    let d: VertexSet = w.sep.a1.iter().chain(w.b2.iter().map(|b| b + n)).collect();
                    assert_eq!(d.len(), gamma);
                    assert!(is_dominating(prism.graph(), &d), "{line} [{pi}]");
                    assert_eq!(prism_gamma(&g, &pi).unwrap(), gamma, "{line} [{pi}]");
                }
            }
        }
    }
}

#[test]
fn separable_parts_partition_the_set() {
    for (line, g) in corpus(6) {
        for s in enumerate_separable(&g) {
            assert!(s.a1.is_disjoint(&s.a2) && s.a1.union(&s.a2) == s.a, "{line}");
            assert!(!s.a1.is_empty() && !s.a2.is_empty(), "{line}");
        }
    }
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let m = pairs.len();
        proptest::collection::vec(any::<bool>(), m).prop_map(move |keep| {
            let edges = pairs.iter().zip(keep).filter(|(_, k)| *k).map(|(e, _)| *e);
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn arb_graph_and_perm(max_n: usize) -> impl Strategy<Value = (Graph, Permutation)> {
    arb_graph(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
            .prop_map(|(g, p)| (g, Permutation::new(p).unwrap()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn prism_gamma_bounds((g, pi) in arb_graph_and_perm(9)) {
        let gamma = domination_number(&g).gamma;
        let pg = prism_gamma(&g, &pi).unwrap();
        prop_assert!(gamma <= pg && pg <= 2 * gamma);
    }

    #[test]
    fn adding_an_edge_never_raises_gamma(g in arb_graph(10), u in 0usize..10, v in 0usize..10) {
        let n = g.order();
        let (u, v) = (u % n, v % n);
        prop_assume!(u != v);
        let mut edges: Vec<_> = g.edges().as_slice().to_vec();
        edges.push((u.min(v), u.max(v)));
        let h = Graph::from_edges(n, edges).unwrap();
        prop_assert!(domination_number(&h).gamma <= domination_number(&g).gamma);
    }

    #[test]
    fn graph6_round_trip(g in arb_graph(20)) {
        prop_assert_eq!(parse_graph6(&to_graph6(&g).unwrap()).unwrap(), g);
    }

    #[test]
    fn isolated_vertices_add_to_gamma(g in arb_graph(8), k in 1usize..3) {
        let n = g.order();
        let h = Graph::from_edges(n + k, g.edges().as_slice().to_vec()).unwrap();
        prop_assert_eq!(domination_number(&h).gamma, domination_number(&g).gamma + k);
    }
}
