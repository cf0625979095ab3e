//! The fast routines against the slow references in `common`.

mod common;

use std::collections::BTreeSet;

use common::*;
use cyclic5::connectivity::{
    cycle_separating_cuts, is_cyclically_k_connected, is_planar, is_planar_guild, is_quad_connected, shore_guilds,
};
use cyclic5::embedding::{augmenting_sequence, check_augmenting_sequence, find_embedding, AugmentOutcome, FixConstraint, DEFAULT_BUDGET};
use cyclic5::expansions::one_extension;
use cyclic5::families::petersen;
use cyclic5::generator::{brute_c5c, brute_cubic_connected};
use cyclic5::graph::{canonical_form, girth, is_isomorphic, quadrangles};
use cyclic5::Graph;

fn cubic_upto(n: usize) -> Vec<Graph> {
    (4..=n).step_by(2).flat_map(|k| brute_cubic_connected(k).unwrap()).collect()
}

#[test]
fn canonical_forms_agree_with_permutation_search() {
    let gs = cubic_upto(8);
    for (i, g) in gs.iter().enumerate() {
        for h in &gs[i..] {
            let same = canonical_form(g) == canonical_form(h);
            assert_eq!(same, brute_isomorphic(g, h));
            assert_eq!(same, is_isomorphic(g, h));
        }
    }
}

#[test]
fn census_counts() {
    let connected: Vec<usize> = (4..=16).step_by(2).map(|n| brute_cubic_connected(n).unwrap().len()).collect();
    assert_eq!(connected, [1, 2, 5, 19, 85, 509, 4060]);
    let girth5: Vec<usize> = (10..=16)
        .step_by(2)
        .map(|n| brute_cubic_connected(n).unwrap().iter().filter(|g| girth(g).is_some_and(|l| l >= 5)).count())
        .collect();
    assert_eq!(girth5, [1, 2, 9, 49]);
    let c5c: Vec<usize> = (10..=16).step_by(2).map(|n| brute_c5c(n).unwrap().len()).collect();
    assert_eq!(c5c, [1, 2, 9, 47]);
}

#[test]
#[ignore = "builds all 41301 cubic graphs on 18 vertices"]
fn census_counts_eighteen() {
    let all = brute_cubic_connected(18).unwrap();
    assert_eq!(all.len(), 41301);
    assert_eq!(all.iter().filter(|g| girth(g).is_some_and(|l| l >= 5)).count(), 455);
    assert_eq!(brute_c5c(18).unwrap().len(), 440);
}

#[test]
fn census_matches_backtracking() {
    for n in (4..=14).step_by(2) {
        let mut forms = BTreeSet::new();
        backtrack_cubic(n, |g| {
            forms.insert(canonical_form(g));
        });
        let ours: BTreeSet<_> = brute_cubic_connected(n).unwrap().iter().map(canonical_form).collect();
        assert_eq!(forms, ours, "n={n}");
    }
}

#[test]
fn planarity_agrees_with_rotation_systems() {
    for g in cubic_upto(12) {
        assert_eq!(is_planar(&g), rotation_planar(&g), "{g:?}");
    }
}

#[test]
fn guild_planarity_agrees_with_rotation_systems() {
    // a guild is planar when closing its leaves into a circuit in the given
    // order gives a planar graph in which that circuit bounds a face
    let mut checked = 0;
    for g in brute_c5c(14).unwrap().into_iter().chain(brute_c5c(12).unwrap()) {
        for cut in cycle_separating_cuts(&g, 5).into_iter().filter(|c| c.edges.len() == 5) {
            for guild in shore_guilds(&g, &cut).unwrap() {
                let mut h = guild.graph.graph().clone();
                let k = guild.order.len();
                for i in 0..k {
                    h.add_edge(guild.order[i], guild.order[(i + 1) % k]).unwrap();
                }
                assert_eq!(is_planar_guild(&guild), rotation_planar_with_face(&h, Some(&guild.order)));
                checked += 1;
            }
        }
    }
    assert!(checked > 0);
}

#[test]
fn cyclic_connectivity_agrees_with_all_subsets() {
    for g in cubic_upto(12) {
        for k in [3, 4, 5] {
            assert_eq!(is_cyclically_k_connected(&g, k), cyclically_k_connected(&g, k), "k={k} {g:?}");
        }
        assert_eq!(is_quad_connected(&g), quad_connected(&g), "{g:?}");
    }
}

#[test]
fn cut_enumeration_agrees_with_all_subsets() {
    for g in brute_cubic_connected(12).unwrap().iter().filter(|g| is_cyclically_k_connected(g, 3)) {
        let ours: BTreeSet<Vec<usize>> = cycle_separating_cuts(g, 5).into_iter().map(|c| c.shore).collect();
        let oracle: BTreeSet<Vec<usize>> = all_cuts(g)
            .into_iter()
            .filter(|(s, size)| *size <= 5 && induced_has_circuit(g, s) && induced_has_circuit(g, &complement(s)))
            .map(|(s, _)| (0..g.order()).filter(|&v| s[v]).collect())
            .collect();
        assert_eq!(ours, oracle, "{g:?}");
    }
}

/// Source side: images of `A` and of edges inside it; sink side likewise
/// for the rest.
fn flow_sides(g: &Graph, h: &Graph, a: &[usize], eta: &cyclic5::embedding::HomeomorphicEmbedding) -> (Vec<bool>, Vec<bool>) {
    let mut src = vec![false; h.order()];
    let mut snk = vec![false; h.order()];
    for (u, v) in g.edges() {
        let (iu, iv) = (a.contains(&u), a.contains(&v));
        if iu != iv {
            continue;
        }
        for x in eta.path(u, v).unwrap() {
            if iu {
                src[x] = true;
            } else {
                snk[x] = true;
            }
        }
    }
    for v in 0..g.order() {
        if a.contains(&v) {
            src[eta.vertex(v)] = true;
        } else {
            snk[eta.vertex(v)] = true;
        }
    }
    (src, snk)
}

#[test]
fn augmenting_sequences_agree_with_max_flow() {
    // G: short 1-extensions of Petersen; A: their quadrangle or a pentagon;
    // hosts: every cyclically 4-connected graph on 14 vertices holding G
    let p = petersen();
    let guests = [one_extension(&p, 0, 1, 2, 7).unwrap().0, one_extension(&p, 0, 1, 3, 8).unwrap().0];
    let hosts: Vec<Graph> = brute_cubic_connected(14).unwrap().into_iter().filter(|h| is_cyclically_k_connected(h, 4)).collect();
    let (mut cuts, mut seqs) = (0, 0);
    for g in &guests {
        let mut shores: Vec<Vec<usize>> = quadrangles(g);
        shores.extend(cyclic5::graph::circuits_of_length(g, 5).into_iter().take(2));
        for h in &hosts {
            let Some(eta) = find_embedding(g, h, &FixConstraint::null(), DEFAULT_BUDGET).found() else { continue };
            for a in &shores {
                let k = g.edges().into_iter().filter(|&(u, v)| a.contains(&u) != a.contains(&v)).count();
                let (src, snk) = flow_sides(g, h, a, &eta);
                let flow = edge_disjoint_paths(h, &src, &snk);
                assert!(flow >= k);
                match augmenting_sequence(g, h, a, &eta, &FixConstraint::null()) {
                    AugmentOutcome::Cut { shore, edges } => {
                        assert_eq!(flow, k);
                        assert_eq!(edges.len(), k);
                        let inside: Vec<bool> = (0..h.order()).map(|x| shore.contains(&x)).collect();
                        assert!((0..h.order()).all(|x| !src[x] || inside[x]));
                        assert!((0..h.order()).all(|x| !snk[x] || !inside[x]));
                        cuts += 1;
                    }
                    AugmentOutcome::Sequence { embedding, sequence } => {
                        assert!(flow > k);
                        assert_eq!(check_augmenting_sequence(g, h, a, &embedding, &sequence), Ok(()));
                        seqs += 1;
                    }
                }
            }
        }
    }
    assert!(cuts > 0 && seqs > 0, "cuts={cuts} sequences={seqs}");
}
