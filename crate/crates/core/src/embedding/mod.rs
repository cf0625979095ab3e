//! Homeomorphic embeddings `G ↪ H`: an injective vertex map plus a path in
//! `H` for every edge of `G`, the paths being internally disjoint from the
//! vertex images and meeting each other only at shared ends.

mod augment;
mod reroute;
mod search;

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{edge, Edge, Graph};

pub use augment::{augmenting_sequence, check_augmenting_sequence, is_reduced_modulo, AugmentOutcome, AugmentingSequence};
pub use reroute::{reroute, route_new_edge, RerouteCase};
pub use search::{find_embedding, SearchOutcome, DEFAULT_BUDGET};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EmbeddingError {
    #[error("path ends do not match any rerouting case")]
    EndpointsDoNotMatchAnyCase,
    #[error("edges {0:?} and {1:?} share an end")]
    SharedEndpoints(Edge, Edge),
    #[error("path touches the image of the embedding at {0}")]
    QTouchesImage(usize),
    #[error("not a path of the host: {0:?}")]
    NotAPath(Vec<usize>),
    #[error("{0:?} is not an edge of the guest")]
    UnknownEdge(Edge),
    #[error("fixed subgraph has a vertex of degree less than two")]
    FixDegree,
    #[error("malformed embedding text: {0}")]
    Malformed(String),
}

/// A subgraph `F` of both graphs that an embedding must leave in place.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FixConstraint {
    edges: Vec<Edge>,
}

impl FixConstraint {
    pub fn null() -> Self {
        FixConstraint::default()
    }

    pub fn new(edges: &[Edge]) -> Result<Self, EmbeddingError> {
        let mut edges: Vec<Edge> = edges.iter().map(|&(u, v)| edge(u, v)).collect();
        edges.sort_unstable();
        edges.dedup();
        let mut deg: BTreeMap<usize, usize> = BTreeMap::new();
        for &(u, v) in &edges {
            *deg.entry(u).or_default() += 1;
            *deg.entry(v).or_default() += 1;
        }
        if deg.values().any(|&d| d < 2) {
            return Err(EmbeddingError::FixDegree);
        }
        Ok(FixConstraint { edges })
    }

    pub fn is_null(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertices(&self) -> Vec<usize> {
        let mut vs: Vec<usize> = self.edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.edges.iter().any(|&(a, b)| a == v || b == v)
    }

    pub fn contains_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&edge(u, v)).is_ok()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomeomorphicEmbedding {
    vmap: Vec<usize>,
    /// keyed by `(u, v)` with `u < v`; the path runs from `vmap[u]` to `vmap[v]`
    paths: BTreeMap<Edge, Vec<usize>>,
}

impl HomeomorphicEmbedding {
    /// Assemble an embedding; paths may be given in either direction.
    pub fn new(vmap: Vec<usize>, paths: impl IntoIterator<Item = (Edge, Vec<usize>)>) -> Self {
        let mut out = HomeomorphicEmbedding { vmap, paths: BTreeMap::new() };
        for ((u, v), p) in paths {
            out.set_path(u, v, p);
        }
        out
    }

    pub fn identity(g: &Graph) -> Self {
        let paths = g.edges().into_iter().map(|(u, v)| ((u, v), vec![u, v]));
        HomeomorphicEmbedding::new((0..g.order()).collect(), paths)
    }

    pub fn vmap(&self) -> &[usize] {
        &self.vmap
    }

    pub fn vertex(&self, v: usize) -> usize {
        self.vmap[v]
    }

    pub fn paths(&self) -> &BTreeMap<Edge, Vec<usize>> {
        &self.paths
    }

    /// The image of `uv`, oriented from the image of `u`.
    pub fn path(&self, u: usize, v: usize) -> Option<Vec<usize>> {
        let p = self.paths.get(&edge(u, v))?;
        if u < v {
            Some(p.clone())
        } else {
            Some(p.iter().rev().copied().collect())
        }
    }

    /// Store the image of `uv`; `p` may run in either direction.
    pub(crate) fn set_path(&mut self, u: usize, v: usize, mut p: Vec<usize>) {
        let (a, b) = edge(u, v);
        if p.first() != Some(&self.vmap[a]) {
            p.reverse();
        }
        self.paths.insert((a, b), p);
    }

    /// Host vertices used by the embedding: images of vertices and interior
    /// vertices of edge images.
    pub fn image_vertices(&self, host_order: usize) -> Vec<bool> {
        let mut used = vec![false; host_order];
        for &x in &self.vmap {
            used[x] = true;
        }
        for p in self.paths.values() {
            for &x in p {
                used[x] = true;
            }
        }
        used
    }

    /// Host edges used by some edge image.
    pub fn image_edges(&self) -> Vec<Edge> {
        let mut out: Vec<Edge> =
            self.paths.values().flat_map(|p| p.windows(2).map(|w| edge(w[0], w[1])).collect::<Vec<_>>()).collect();
        out.sort_unstable();
        out
    }

    /// For each host vertex, the guest edge whose image has it as an
    /// interior vertex.
    pub fn interior_owner(&self, host_order: usize) -> Vec<Option<Edge>> {
        let mut owner = vec![None; host_order];
        for (&e, p) in &self.paths {
            for &x in &p[1..p.len() - 1] {
                owner[x] = Some(e);
            }
        }
        owner
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (v, x) in self.vmap.iter().enumerate() {
            writeln!(out, "v {v} -> {x}").unwrap();
        }
        for (&(u, v), p) in &self.paths {
            let path: Vec<String> = p.iter().map(usize::to_string).collect();
            writeln!(out, "e {u}-{v} -> {}", path.join(" ")).unwrap();
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self, EmbeddingError> {
        let bad = |l: &str| EmbeddingError::Malformed(l.to_string());
        let mut vmap: Vec<(usize, usize)> = Vec::new();
        let mut paths = Vec::new();
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let (lhs, rhs) = line.split_once("->").ok_or_else(|| bad(line))?;
            let lhs = lhs.trim();
            if let Some(v) = lhs.strip_prefix("v ") {
                let v = v.trim().parse().map_err(|_| bad(line))?;
                let x = rhs.trim().parse().map_err(|_| bad(line))?;
                vmap.push((v, x));
            } else if let Some(e) = lhs.strip_prefix("e ") {
                let (a, b) = e.trim().split_once('-').ok_or_else(|| bad(line))?;
                let a: usize = a.parse().map_err(|_| bad(line))?;
                let b: usize = b.parse().map_err(|_| bad(line))?;
                let p = rhs
                    .split_whitespace()
                    .map(str::parse)
                    .collect::<Result<Vec<usize>, _>>()
                    .map_err(|_| bad(line))?;
                paths.push(((a, b), p));
            } else {
                return Err(bad(line));
            }
        }
        vmap.sort_unstable();
        if vmap.iter().enumerate().any(|(i, &(v, _))| i != v) {
            return Err(bad("vertex lines must cover 0..n exactly once"));
        }
        let vmap: Vec<usize> = vmap.into_iter().map(|(_, x)| x).collect();
        if paths.iter().any(|&((a, b), _): &(Edge, Vec<usize>)| a >= vmap.len() || b >= vmap.len()) {
            return Err(bad("edge end out of range"));
        }
        Ok(HomeomorphicEmbedding::new(vmap, paths))
    }
}

/// Paths of `h` with at least one edge, both ends on the image of `eta`
/// and nothing else on it, found by breadth-first search from each image
/// vertex.
pub fn bridges(h: &Graph, eta: &HomeomorphicEmbedding) -> Vec<Vec<usize>> {
    let used = eta.image_vertices(h.order());
    let image: BTreeSet<Edge> = eta.image_edges().into_iter().collect();
    let mut out = Vec::new();
    for s in 0..h.order() {
        if !used[s] {
            continue;
        }
        for &w in h.neighbors(s) {
            if image.contains(&edge(s, w)) {
                continue;
            }
            if used[w] {
                if s < w {
                    out.push(vec![s, w]);
                }
                continue;
            }
            let mut prev = vec![usize::MAX; h.order()];
            prev[w] = s;
            let mut queue = VecDeque::from([w]);
            'bfs: while let Some(x) = queue.pop_front() {
                for &y in h.neighbors(x) {
                    if prev[y] != usize::MAX || y == s {
                        continue;
                    }
                    prev[y] = x;
                    if used[y] {
                        let mut p = vec![y];
                        let mut z = y;
                        while z != s {
                            z = prev[z];
                            p.push(z);
                        }
                        p.reverse();
                        out.push(p);
                        break 'bfs;
                    }
                    queue.push_back(y);
                }
            }
        }
    }
    out
}

/// Check (i)-(iii) and, for a non-null `fix`, that `F` is left in place.
pub fn check_embedding(g: &Graph, h: &Graph, eta: &HomeomorphicEmbedding, fix: &FixConstraint) -> Result<(), String> {
    let (ng, nh) = (g.order(), h.order());
    if eta.vmap.len() != ng {
        return Err(format!("vertex map has {} entries for {} vertices", eta.vmap.len(), ng));
    }
    let mut is_image = vec![false; nh];
    for (v, &x) in eta.vmap.iter().enumerate() {
        if x >= nh {
            return Err(format!("vertex {v} maps outside the host"));
        }
        if std::mem::replace(&mut is_image[x], true) {
            return Err(format!("vertex map is not injective at host vertex {x}"));
        }
    }
    let gedges = g.edges();
    if eta.paths.len() != gedges.len() || gedges.iter().any(|e| !eta.paths.contains_key(e)) {
        return Err("edge map does not cover exactly the guest edges".into());
    }
    let mut interior_of: Vec<Option<Edge>> = vec![None; nh];
    let mut used_edges = std::collections::HashSet::new();
    for (&(u, v), p) in &eta.paths {
        if p.len() < 2 || p[0] != eta.vmap[u] || p[p.len() - 1] != eta.vmap[v] {
            return Err(format!("image of {u}-{v} does not join the images of its ends"));
        }
        let mut on_path = std::collections::HashSet::new();
        for w in p.windows(2) {
            if !h.has_edge(w[0], w[1]) {
                return Err(format!("image of {u}-{v} uses non-edge {}-{}", w[0], w[1]));
            }
            if !used_edges.insert(edge(w[0], w[1])) {
                return Err(format!("host edge {}-{} used twice", w[0], w[1]));
            }
        }
        for &x in p {
            if !on_path.insert(x) {
                return Err(format!("image of {u}-{v} repeats vertex {x}"));
            }
        }
        for &x in &p[1..p.len() - 1] {
            if is_image[x] {
                return Err(format!("image of {u}-{v} passes through the image vertex {x}"));
            }
            if let Some(other) = interior_of[x] {
                return Err(format!("images of {other:?} and {u}-{v} share interior vertex {x}"));
            }
            interior_of[x] = Some((u, v));
        }
    }
    for &(u, v) in fix.edges() {
        if !g.has_edge(u, v) || !h.has_edge(u, v) {
            return Err(format!("fixed edge {u}-{v} is not in both graphs"));
        }
        if eta.vmap[u] != u || eta.vmap[v] != v {
            return Err(format!("fixed edge {u}-{v} has moved ends"));
        }
        if eta.paths[&(u, v)] != vec![u, v] {
            return Err(format!("fixed edge {u}-{v} is not mapped to itself"));
        }
    }
    Ok(())
}

pub fn verify_embedding(g: &Graph, h: &Graph, eta: &HomeomorphicEmbedding, fix: &FixConstraint) -> bool {
    check_embedding(g, h, eta, fix).is_ok()
}

/// `η` followed by `ζ`: each edge image is the concatenation of the
/// `ζ`-images of the edges along its `η`-image.
pub fn compose(eta: &HomeomorphicEmbedding, zeta: &HomeomorphicEmbedding) -> HomeomorphicEmbedding {
    let vmap: Vec<usize> = eta.vmap.iter().map(|&x| zeta.vmap[x]).collect();
    let paths = eta.paths.iter().map(|(&e, p)| {
        let mut out = vec![zeta.vmap[p[0]]];
        for w in p.windows(2) {
            let seg = zeta.path(w[0], w[1]).expect("inner embedding covers every host edge");
            out.extend_from_slice(&seg[1..]);
        }
        (e, out)
    });
    HomeomorphicEmbedding::new(vmap, paths)
}
