use proptest::prelude::*;
use proptest::sample::Index;

use cyclic5::connectivity::{
    cycle_separating_cuts, is_cyclically_5_connected, is_cyclically_k_connected, is_planar, is_planar_guild,
    is_quad_connected, shore_guilds, Guild,
};
use cyclic5::embedding::{find_embedding, verify_embedding, FixConstraint, HomeomorphicEmbedding, DEFAULT_BUDGET};
use cyclic5::expansions::{is_diverse, ExpansionStep, StepKind};
use cyclic5::generator::{brute_c5c, brute_cubic_connected};
use cyclic5::graph::{
    canonical_form, circuits_of_length, from_adjacency_text, from_graph6, is_isomorphic, to_adjacency_text, to_graph6,
};
use cyclic5::Graph;

fn pool() -> Vec<Graph> {
    (4..=12).step_by(2).flat_map(|n| brute_cubic_connected(n).unwrap()).collect()
}

fn c5c_pool() -> Vec<Graph> {
    (10..=14).step_by(2).flat_map(|n| brute_c5c(n).unwrap()).collect()
}

/// A graph from the pool under a random relabelling.
fn shuffled(from: Vec<Graph>) -> impl Strategy<Value = (Graph, Graph)> {
    (any::<Index>(), any::<u64>()).prop_map(move |(i, seed)| {
        let g = from[i.index(from.len())].clone();
        let mut perm: Vec<usize> = (0..g.order()).collect();
        let mut s = seed;
        for k in (1..perm.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(k, (s >> 33) as usize % (k + 1));
        }
        let h = g.relabel(&perm);
        (g, h)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn relabelling_keeps_every_invariant((g, h) in shuffled(pool())) {
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert!(is_isomorphic(&g, &h));
        prop_assert_eq!(is_planar(&g), is_planar(&h));
        for k in [3, 4, 5] {
            prop_assert_eq!(is_cyclically_k_connected(&g, k), is_cyclically_k_connected(&h, k));
        }
        prop_assert_eq!(is_quad_connected(&g), is_quad_connected(&h));
    }

    #[test]
    fn text_formats_round_trip((_, h) in shuffled(pool())) {
        let s = to_graph6(&h);
        let back = from_graph6(&s).unwrap();
        prop_assert_eq!(&back, &h);
        prop_assert_eq!(to_graph6(&back), s);
        prop_assert_eq!(from_adjacency_text(&to_adjacency_text(&h)).unwrap(), h);
    }

    #[test]
    fn handle_expansions_stay_c5c((_, g) in shuffled(c5c_pool()), i in any::<Index>(), j in any::<Index>()) {
        let edges = g.edges();
        let (e, f) = (edges[i.index(edges.len())], edges[j.index(edges.len())]);
        prop_assume!(is_diverse(&g, e, f));
        let step = ExpansionStep { kind: StepKind::Handle, args: vec![e.0, e.1, f.0, f.1], new_vertices: vec![g.order(), g.order() + 1] };
        let (h, eta) = step.apply(&g).unwrap();
        prop_assert!(is_cyclically_5_connected(&h));
        prop_assert!(verify_embedding(&g, &h, &eta, &FixConstraint::null()));
    }

    #[test]
    fn circuit_expansions_stay_c5c((_, g) in shuffled(c5c_pool()), i in any::<Index>()) {
        let cs = circuits_of_length(&g, 5);
        prop_assume!(!cs.is_empty());
        let c = cs[i.index(cs.len())].clone();
        let n = g.order();
        let step = ExpansionStep { kind: StepKind::Circuit, args: c, new_vertices: (n..n + 10).collect() };
        let (h, eta) = step.apply(&g).unwrap();
        prop_assert_eq!(h.order(), n + 10);
        prop_assert!(is_cyclically_5_connected(&h));
        prop_assert!(verify_embedding(&g, &h, &eta, &FixConstraint::null()));
    }

    #[test]
    fn search_finds_a_planted_embedding((_, g) in shuffled(c5c_pool()), i in any::<Index>(), j in any::<Index>(), seed in any::<u64>()) {
        let edges = g.edges();
        let (e, f) = (edges[i.index(edges.len())], edges[j.index(edges.len())]);
        prop_assume!(e.0 != f.0 && e.0 != f.1 && e.1 != f.0 && e.1 != f.1);
        let (h, _, _) = g.plus(e.0, e.1, f.0, f.1).unwrap();
        let mut perm: Vec<usize> = (0..h.order()).collect();
        perm.rotate_left((seed % h.order() as u64) as usize);
        let h = h.relabel(&perm);
        let eta = find_embedding(&g, &h, &FixConstraint::null(), DEFAULT_BUDGET).found();
        prop_assert!(eta.is_some());
        let eta = eta.unwrap();
        prop_assert!(verify_embedding(&g, &h, &eta, &FixConstraint::null()));
        prop_assert_eq!(HomeomorphicEmbedding::from_text(&eta.to_text()).unwrap(), eta);
    }

    #[test]
    fn guild_planarity_ignores_rotation_and_reflection((_, g) in shuffled(c5c_pool()), i in any::<Index>(), r in 0usize..5, flip in any::<bool>()) {
        let cuts: Vec<_> = cycle_separating_cuts(&g, 5).into_iter().filter(|c| c.edges.len() == 5).collect();
        prop_assume!(!cuts.is_empty());
        let guilds = shore_guilds(&g, &cuts[i.index(cuts.len())]).unwrap();
        for gd in guilds {
            let mut order = gd.order.clone();
            order.rotate_left(r);
            if flip {
                order.reverse();
            }
            let moved = Guild::new(gd.graph.clone(), order);
            prop_assert_eq!(&moved, &gd);
            prop_assert_eq!(is_planar_guild(&moved), is_planar_guild(&gd));
        }
    }
}
