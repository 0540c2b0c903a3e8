mod common;

use common::*;
use proptest::prelude::*;
use rand::Rng;
use vcrit::generate::{generate, ClassSpec, Strategy as GenStrategy};
use vcrit::graph6::{read_graph6_stream, write_graph6_stream};
use vcrit::{
    are_isomorphic, canonical_form, canonical_labeling, chromatic_number, decode_graph6, encode_graph6, k_colorable,
    Graph, PatternId,
};

fn arb_graph(max_order: usize) -> impl Strategy<Value = Graph> {
    (0..=max_order).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for v in 1..n {
                for u in 0..v {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::new(n, &edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn graph6_round_trips(g in arb_graph(40)) {
        let text = encode_graph6(&g).unwrap();
        prop_assert_eq!(decode_graph6(text.as_bytes()).unwrap(), g);
    }

    #[test]
    fn graph6_stream_round_trips(gs in proptest::collection::vec(arb_graph(12), 0..8)) {
        let mut bytes = Vec::new();
        write_graph6_stream(&gs, &mut bytes).unwrap();
        prop_assert_eq!(read_graph6_stream(bytes.as_slice()).unwrap(), gs);
    }

    #[test]
    fn canonical_form_ignores_labels(g in arb_graph(14), seed in any::<u64>()) {
        let mut rng = rng(seed);
        let perm = random_permutation(&mut rng, g.order());
        let h = g.permuted(&perm);
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        let lab = canonical_labeling(&g);
        prop_assert_eq!(g.permuted(&lab.perm), lab.graph);
    }

    #[test]
    fn deleting_a_vertex_lowers_chi_by_at_most_one(g in arb_graph(9)) {
        prop_assume!(g.order() >= 2);
        let chi = chromatic_number(&g).unwrap();
        for v in 0..g.order() {
            let c = chromatic_number(&g.remove_vertex(v)).unwrap();
            prop_assert!(c == chi || c + 1 == chi);
        }
    }

    #[test]
    fn colorings_are_proper(g in arb_graph(11), k in 1usize..6) {
        match k_colorable(&g, k) {
            Some(c) => prop_assert!(c.is_proper_for(&g) && c.num_colors <= k),
            None => prop_assert!(!colorable_backtracking(&g, k)),
        }
    }

    #[test]
    fn clique_and_independence_numbers(g in arb_graph(11)) {
        prop_assert_eq!(g.clique_number(), clique_brute(&g));
        prop_assert_eq!(g.independence_number(), alpha_brute(&g));
    }
}

#[test]
fn canonical_form_over_many_permutations() {
    let mut rng = rng(11);
    for _ in 0..30 {
        let n = rng.gen_range(1..=20);
        let p = rng.gen_range(0.1..0.9);
        let g = random_graph(&mut rng, n, p);
        let code = canonical_form(&g);
        for _ in 0..100 {
            let perm = random_permutation(&mut rng, n);
            assert_eq!(canonical_form(&g.permuted(&perm)), code);
        }
    }
}

#[test]
fn isomorphism_matches_brute_force() {
    let mut rng = rng(12);
    for _ in 0..400 {
        let n = rng.gen_range(1..=7);
        let a = random_graph(&mut rng, n, 0.5);
        let b = if rng.gen_bool(0.5) {
            a.permuted(&random_permutation(&mut rng, n))
        } else {
            random_graph(&mut rng, n, 0.5)
        };
        assert_eq!(are_isomorphic(&a, &b), isomorphic_brute(&a, &b), "{a:?} {b:?}");
    }
}

#[test]
fn four_vertex_graphs_have_eleven_codes() {
    let mut codes = std::collections::BTreeSet::new();
    for mask in 0u32..64 {
        let pairs = [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)];
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        codes.insert(canonical_form(&Graph::new(4, &edges).unwrap()));
    }
    assert_eq!(codes.len(), 11);
}

#[test]
fn generated_classes_are_pairwise_non_isomorphic() {
    for n in 1..=6 {
        let gs = generate(&ClassSpec::default(), n, GenStrategy::Augmentation);
        for (i, a) in gs.iter().enumerate() {
            for b in &gs[i + 1..] {
                assert!(!isomorphic_brute(a, b));
            }
        }
    }
}

#[test]
fn petersen_invariants() {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.extend([(i, (i + 1) % 5), (i, i + 5), (5 + i, 5 + (i + 2) % 5)]);
    }
    let g = Graph::new(10, &edges).unwrap();
    let inv = g.invariants().unwrap();
    assert_eq!((inv.chi, inv.omega, inv.alpha), (3, 2, 4));
    assert_eq!(chromatic_exhaustive(&g), 3);
    assert_eq!(alpha_brute(&g), 4);
    assert_eq!(encode_graph6(&g).unwrap(), graph6_reference(&g));
}

#[test]
fn catalog_patterns_match_hand_built_graphs() {
    let cases = [
        (
            "bull",
            Graph::new(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)]).unwrap(),
        ),
        ("2P2", Graph::new(4, &[(0, 1), (2, 3)]).unwrap()),
        ("chair", Graph::new(5, &[(0, 1), (1, 2), (2, 3), (1, 4)]).unwrap()),
        ("claw+P1", Graph::new(5, &[(0, 1), (0, 2), (0, 3)]).unwrap()),
        (
            "banner",
            Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]).unwrap(),
        ),
        (
            "squid:4:1",
            Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]).unwrap(),
        ),
        ("K3+P1", Graph::new(4, &[(0, 1), (1, 2), (0, 2)]).unwrap()),
    ];
    for (name, want) in cases {
        let got = name.parse::<PatternId>().unwrap().build().unwrap();
        assert!(isomorphic_brute(&got, &want), "{name}");
    }
}

proptest! {
    #[test]
    fn singleton_independent_parts_suffice(g in arb_graph(9)) {
        let all = vcrit::audit::neighbors_of_s_failures(&g, true);
        let singles = vcrit::audit::neighbors_of_s_failures(&g, false);
        prop_assert_eq!(all.is_empty(), singles.is_empty());
    }
}
