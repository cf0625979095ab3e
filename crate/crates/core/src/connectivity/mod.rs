//! Exact connectivity predicates for cubic graphs.

mod guild;
mod planarity;

use thiserror::Error;

use crate::graph::{girth, quadrangles, Edge, Graph};

pub use guild::{is_planar_guild, shore_guilds, Guild};
pub use planarity::is_planar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConnectivityError {
    #[error("cut edges {0:?} and {1:?} share an end")]
    NotAMatching(Edge, Edge),
    #[error("graph is not cyclically 5-connected")]
    NotCyclicallyFiveConnected,
    #[error("{0:?} is not the boundary of the given shore")]
    NotACut(Vec<Edge>),
}

/// An edge-cut `δA`, stored with its shore `A`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeCut {
    pub shore: Vec<usize>,
    pub edges: Vec<Edge>,
}

impl EdgeCut {
    /// Build the cut `δA` for the shore `A`.
    pub fn from_shore(g: &Graph, shore: &[usize]) -> EdgeCut {
        let mut inside = vec![false; g.order()];
        for &a in shore {
            inside[a] = true;
        }
        let mut shore = shore.to_vec();
        shore.sort_unstable();
        let edges = g.edges().into_iter().filter(|&(u, v)| inside[u] != inside[v]).collect();
        EdgeCut { shore, edges }
    }

    pub fn other_shore(&self, n: usize) -> Vec<usize> {
        let mut inside = vec![false; n];
        for &a in &self.shore {
            inside[a] = true;
        }
        (0..n).filter(|&v| !inside[v]).collect()
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

pub fn is_cubic(g: &Graph) -> bool {
    (0..g.order()).all(|v| g.degree(v) == 3)
}

fn connected_without(g: &Graph, removed: &[usize]) -> bool {
    let n = g.order();
    let mut seen = vec![false; n];
    for &r in removed {
        seen[r] = true;
    }
    let Some(start) = (0..n).find(|&v| !seen[v]) else { return true };
    seen[start] = true;
    let mut stack = vec![start];
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for &w in g.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count + removed.len() == n
}

/// At least four vertices and no vertex cut of size at most two.
pub fn is_three_connected(g: &Graph) -> bool {
    let n = g.order();
    if n < 4 || !g.is_connected() {
        return false;
    }
    for a in 0..n {
        if !connected_without(g, &[a]) {
            return false;
        }
        for b in a + 1..n {
            if !connected_without(g, &[a, b]) {
                return false;
            }
        }
    }
    true
}

/// Visit every edge-cut `δA` of a connected graph with `1 <= |δA| <= k_max`,
/// once per unordered pair `{A, V-A}`. The callback receives the cut edges
/// and a side flag per vertex (the side holding vertex 0 is `false`);
/// returning `false` stops the enumeration.
pub fn for_each_edge_cut<F>(g: &Graph, k_max: usize, mut visit: F)
where
    F: FnMut(&[Edge], &[bool]) -> bool,
{
    let edges = g.edges();
    let n = g.order();
    if n < 2 || !g.is_connected() {
        return;
    }
    let mut removed = vec![false; edges.len()];
    let mut chosen: Vec<usize> = Vec::with_capacity(k_max);
    let mut scratch = CutScratch::new(n);
    choose(&edges, k_max, 0, &mut removed, &mut chosen, &mut scratch, &mut visit);
}

struct CutScratch {
    parent: Vec<usize>,
    colour: Vec<u8>,
    side: Vec<bool>,
    cut: Vec<Edge>,
}

impl CutScratch {
    fn new(n: usize) -> Self {
        CutScratch { parent: vec![0; n], colour: vec![0; n], side: vec![false; n], cut: Vec::new() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }
}

fn choose<F>(
    edges: &[Edge],
    k_max: usize,
    start: usize,
    removed: &mut Vec<bool>,
    chosen: &mut Vec<usize>,
    s: &mut CutScratch,
    visit: &mut F,
) -> bool
where
    F: FnMut(&[Edge], &[bool]) -> bool,
{
    for i in start..edges.len() {
        removed[i] = true;
        chosen.push(i);
        if evaluate(edges, removed, chosen, s) && !visit(&s.cut, &s.side) {
            return false;
        }
        if chosen.len() < k_max && !choose(edges, k_max, i + 1, removed, chosen, s, visit) {
            return false;
        }
        chosen.pop();
        removed[i] = false;
    }
    true
}

/// Whether the chosen edge set is exactly the boundary of some vertex set;
/// fills `s.side` and `s.cut` when it is.
fn evaluate(edges: &[Edge], removed: &[bool], chosen: &[usize], s: &mut CutScratch) -> bool {
    let n = s.parent.len();
    for v in 0..n {
        s.parent[v] = v;
    }
    for (i, &(u, v)) in edges.iter().enumerate() {
        if !removed[i] {
            let (ru, rv) = (s.find(u), s.find(v));
            if ru != rv {
                s.parent[ru] = rv;
            }
        }
    }
    // two-colour the components so that every chosen edge crosses
    for c in s.colour.iter_mut() {
        *c = 0;
    }
    let r0 = s.find(0);
    s.colour[r0] = 1;
    let mut changed = true;
    while changed {
        changed = false;
        for &i in chosen {
            let (u, v) = edges[i];
            let (ru, rv) = (s.find(u), s.find(v));
            if ru == rv {
                return false;
            }
            match (s.colour[ru], s.colour[rv]) {
                (0, 0) => {}
                (a, 0) => {
                    s.colour[rv] = 3 - a;
                    changed = true;
                }
                (0, b) => {
                    s.colour[ru] = 3 - b;
                    changed = true;
                }
                (a, b) if a == b => return false,
                _ => {}
            }
        }
    }
    for v in 0..n {
        let r = s.find(v);
        if s.colour[r] == 0 {
            // unreachable for connected graphs
            return false;
        }
        s.side[v] = s.colour[r] == 2;
    }
    s.cut.clear();
    s.cut.extend(chosen.iter().map(|&i| edges[i]));
    true
}

fn shore_of(side: &[bool], which: bool) -> Vec<usize> {
    (0..side.len()).filter(|&v| side[v] == which).collect()
}

/// Every edge-cut of size at most `k_max` with a circuit on both sides,
/// reported with the shore containing vertex 0 (the lexicographically
/// smaller one).
pub fn cycle_separating_cuts(g: &Graph, k_max: usize) -> Vec<EdgeCut> {
    let mut out = Vec::new();
    for_each_edge_cut(g, k_max, |cut, side| {
        let a = shore_of(side, false);
        let b = shore_of(side, true);
        if g.induces_circuit(&a) && g.induces_circuit(&b) {
            out.push(EdgeCut { shore: a, edges: cut.to_vec() });
        }
        true
    });
    out
}

fn has_cycle_separating_cut(g: &Graph, k_max: usize) -> bool {
    let mut found = false;
    for_each_edge_cut(g, k_max, |_, side| {
        found = g.induces_circuit(&shore_of(side, false)) && g.induces_circuit(&shore_of(side, true));
        !found
    });
    found
}

/// Cubic, 3-connected, at least `2k` vertices, and every edge-cut of size
/// less than `k` has a shore without circuits.
pub fn is_cyclically_k_connected(g: &Graph, k: usize) -> bool {
    let n = g.order();
    if !is_cubic(g) || n < 2 * k || !is_three_connected(g) {
        return false;
    }
    // a circuit of length L < k would give a cut of size <= L separating it
    // from a cyclic remainder (n >= 2k makes the remainder cyclic)
    if girth(g).is_some_and(|l| l < k) {
        return false;
    }
    !has_cycle_separating_cut(g, k - 1)
}

pub fn is_cyclically_5_connected(g: &Graph) -> bool {
    is_cyclically_k_connected(g, 5)
}

/// Cyclically 4-connected, at least 10 vertices (12 when there are several
/// quadrangles), and every cut of size at most 4 has a shore that is a
/// forest or a quadrangle.
pub fn is_quad_connected(g: &Graph) -> bool {
    let n = g.order();
    if n < 10 || !is_cyclically_k_connected(g, 4) {
        return false;
    }
    if quadrangles(g).len() > 1 && n < 12 {
        return false;
    }
    let tame = |verts: &[usize]| !g.induces_circuit(verts) || g.induces_quadrangle(verts);
    let mut ok = true;
    for_each_edge_cut(g, 4, |_, side| {
        ok = tame(&shore_of(side, false)) || tame(&shore_of(side, true));
        ok
    });
    ok
}

/// No 5-edge-cut with at least seven vertices on each side has a planar
/// shore guild (on either side).
pub fn is_dodecahedrally_connected(g: &Graph) -> Result<bool, ConnectivityError> {
    if !is_cyclically_5_connected(g) {
        return Err(ConnectivityError::NotCyclicallyFiveConnected);
    }
    Ok(planar_guild_cut(g).is_none())
}

/// A qualifying 5-cut and shore with a planar shore guild, if any.
pub fn planar_guild_cut(g: &Graph) -> Option<(EdgeCut, Guild)> {
    let n = g.order();
    let mut found = None;
    for_each_edge_cut(g, 5, |cut, side| {
        if cut.len() != 5 {
            return true;
        }
        let a = shore_of(side, false);
        if a.len() < 7 || n - a.len() < 7 {
            return true;
        }
        let b = shore_of(side, true);
        for shore in [a, b] {
            let ec = EdgeCut { shore, edges: cut.to_vec() };
            // shore guilds are only defined for matching cuts
            let Ok(guilds) = shore_guilds(g, &ec) else { return true };
            if let Some(gd) = guilds.into_iter().find(is_planar_guild) {
                found = Some((ec, gd));
                return false;
            }
        }
        true
    });
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{biladder, dodecahedron, petersen};

    #[test]
    fn three_connectivity() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(is_three_connected(&k4));
        let mut e = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        e.extend([(0, 4), (0, 5), (0, 6), (4, 5), (4, 6), (5, 6)]);
        let bowtie = Graph::from_edges(7, &e).unwrap();
        assert!(!is_three_connected(&bowtie));
        assert!(is_three_connected(&petersen()));
    }

    #[test]
    fn small_cases() {
        assert!(is_cyclically_5_connected(&petersen()));
        assert!(is_cyclically_5_connected(&dodecahedron()));
        assert!(is_quad_connected(&petersen()));
        assert!(cycle_separating_cuts(&petersen(), 4).is_empty());
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(!is_cyclically_k_connected(&k4, 4));
    }

    #[test]
    fn dodecahedron_face_cuts() {
        let d = dodecahedron();
        let cuts = cycle_separating_cuts(&d, 5);
        let pentagons = crate::graph::circuits_of_length(&d, 5);
        assert_eq!(pentagons.len(), 12);
        for p in pentagons {
            let cut = EdgeCut::from_shore(&d, &p);
            let found = cuts.iter().any(|c| {
                c.edges == cut.edges
            });
            assert!(found, "face cut {p:?} missing");
        }
        for c in &cuts {
            assert!(d.induces_circuit(&c.shore));
            assert!(d.induces_circuit(&c.other_shore(d.order())));
        }
    }

    #[test]
    fn odd_biladders_are_c5c() {
        assert!(is_cyclically_5_connected(&biladder(7).unwrap()));
    }
}
