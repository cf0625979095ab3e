//! Simple undirected graphs with a sorted adjacency representation, and the
//! cubic / subcubic wrappers used everywhere else in the crate.

mod canon;
mod circuits;
mod io;

use std::collections::VecDeque;
use std::fmt;
use std::ops::Deref;

use thiserror::Error;

pub use canon::{automorphism_orbits, canonical_form, canonical_labeling, is_isomorphic, CanonicalForm};
pub use circuits::{circuits_of_length, girth, quadrangles};
pub use io::{from_adjacency_text, from_graph6, to_adjacency_text, to_graph6};

pub type Edge = (usize, usize);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} has degree {degree}")]
    DegreeViolation { vertex: usize, degree: usize },
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("vertex {0} does not have degree 2")]
    NotDegreeTwo(usize),
    #[error("suppressing would create a second {0}-{1} edge")]
    WouldCreateParallelEdge(usize, usize),
    #[error("suppressing would create a loop (a circuit of degree-2 vertices through {0})")]
    WouldCreateLoop(usize),
    #[error("malformed graph6 string: {0}")]
    MalformedGraph6(String),
    #[error("malformed adjacency text: {0}")]
    MalformedAdjacency(String),
}

/// Normalise an undirected edge so the smaller end comes first.
#[inline]
pub fn edge(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n] }
    }

    /// Build a simple graph; loops, repeated edges and bad ids are rejected.
    pub fn from_edges(n: usize, edges: &[Edge]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.size());
        for (u, nbrs) in self.adj.iter().enumerate() {
            out.extend(nbrs.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.order() {
            return Err(GraphError::VertexOutOfRange { vertex: v, order: self.order() });
        }
        Ok(())
    }

    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::Loop(u));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Err(GraphError::DuplicateEdge(u.min(v), u.max(v))),
            Err(i) => {
                self.adj[u].insert(i, v);
                let j = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(j, u);
                Ok(())
            }
        }
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge(u, v));
        }
        let i = self.adj[u].binary_search(&v).unwrap();
        self.adj[u].remove(i);
        let j = self.adj[v].binary_search(&u).unwrap();
        self.adj[v].remove(j);
        Ok(())
    }

    /// Subdivide `uv` by a fresh vertex, which is returned (ids of existing
    /// vertices are unchanged).
    pub fn subdivide(&mut self, u: usize, v: usize) -> Result<usize, GraphError> {
        self.remove_edge(u, v)?;
        let w = self.add_vertex();
        self.add_edge(u, w)?;
        self.add_edge(w, v)?;
        Ok(w)
    }

    /// `G+(u,v,x,y)`: subdivide `uv` by `k` and `xy` by `l` and join `k` to
    /// `l`. Returns the new graph with `k = n` and `l = n + 1`.
    pub fn plus(&self, u: usize, v: usize, x: usize, y: usize) -> Result<(Graph, usize, usize), GraphError> {
        let mut g = self.clone();
        let k = g.subdivide(u, v)?;
        let l = g.subdivide(x, y)?;
        g.add_edge(k, l)?;
        Ok((g, k, l))
    }

    /// Relabel by `perm[old] = new`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut adj = vec![Vec::new(); self.order()];
        for (u, nbrs) in self.adj.iter().enumerate() {
            let mut mapped: Vec<usize> = nbrs.iter().map(|&v| perm[v]).collect();
            mapped.sort_unstable();
            adj[perm[u]] = mapped;
        }
        Graph { adj }
    }

    /// Subgraph induced on `verts`; vertex `verts[i]` becomes `i`.
    pub fn induced(&self, verts: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let mut adj = vec![Vec::new(); verts.len()];
        for (i, &v) in verts.iter().enumerate() {
            let mut nbrs: Vec<usize> =
                self.adj[v].iter().filter(|&&w| index[w] != usize::MAX).map(|&w| index[w]).collect();
            nbrs.sort_unstable();
            adj[i] = nbrs;
        }
        Graph { adj }
    }

    /// Component id for every vertex plus the number of components.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let n = self.order();
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    pub fn is_connected(&self) -> bool {
        self.order() <= 1 || self.components().1 == 1
    }

    /// Whether the subgraph induced on `verts` contains a circuit.
    pub fn induces_circuit(&self, verts: &[usize]) -> bool {
        let h = self.induced(verts);
        let (_, c) = h.components();
        h.size() + c > h.order()
    }

    /// Whether the subgraph induced on `verts` is exactly a 4-circuit.
    pub fn induces_quadrangle(&self, verts: &[usize]) -> bool {
        if verts.len() != 4 {
            return false;
        }
        let h = self.induced(verts);
        h.size() == 4 && (0..4).all(|v| h.degree(v) == 2)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order(), self.edges())
    }
}

/// A simple graph with every degree in {1, 2, 3}.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SubcubicGraph(Graph);

/// A simple graph with every degree exactly 3.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CubicGraph(Graph);

impl Deref for SubcubicGraph {
    type Target = Graph;
    fn deref(&self) -> &Graph {
        &self.0
    }
}

impl Deref for CubicGraph {
    type Target = Graph;
    fn deref(&self) -> &Graph {
        &self.0
    }
}

impl SubcubicGraph {
    pub fn new(g: Graph) -> Result<Self, GraphError> {
        for v in 0..g.order() {
            let d = g.degree(v);
            if !(1..=3).contains(&d) {
                return Err(GraphError::DegreeViolation { vertex: v, degree: d });
            }
        }
        Ok(SubcubicGraph(g))
    }

    pub fn from_edges(n: usize, edges: &[Edge]) -> Result<Self, GraphError> {
        Self::new(Graph::from_edges(n, edges)?)
    }

    pub fn graph(&self) -> &Graph {
        &self.0
    }

    pub fn into_graph(self) -> Graph {
        self.0
    }

    pub fn into_cubic(self) -> Result<CubicGraph, GraphError> {
        CubicGraph::new(self.0)
    }

    /// Delete an edge; ends that drop to degree 0 are an error.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<SubcubicGraph, GraphError> {
        let mut g = self.0.clone();
        g.remove_edge(u, v)?;
        SubcubicGraph::new(g)
    }

    /// Suppress the degree-2 vertex `w`, joining its two neighbours. Returns
    /// the new graph and the map old id -> new id (`None` for `w`).
    pub fn suppress(&self, w: usize) -> Result<(SubcubicGraph, Vec<Option<usize>>), GraphError> {
        self.0.check_vertex(w)?;
        if self.degree(w) != 2 {
            return Err(GraphError::NotDegreeTwo(w));
        }
        let (a, b) = (self.adj[w][0], self.adj[w][1]);
        if self.has_edge(a, b) {
            return Err(GraphError::WouldCreateParallelEdge(a, b));
        }
        let map: Vec<Option<usize>> =
            (0..self.order()).map(|v| if v == w { None } else if v < w { Some(v) } else { Some(v - 1) }).collect();
        let mut edges: Vec<Edge> = self
            .edges()
            .into_iter()
            .filter(|&(x, y)| x != w && y != w)
            .map(|(x, y)| (map[x].unwrap(), map[y].unwrap()))
            .collect();
        edges.push((map[a].unwrap(), map[b].unwrap()));
        let g = Graph::from_edges(self.order() - 1, &edges)?;
        Ok((SubcubicGraph::new(g)?, map))
    }

    /// Suppress every degree-2 vertex, so that each maximal path through
    /// degree-2 vertices becomes a single edge.
    pub fn suppress_degree2(&self) -> Result<(SubcubicGraph, Vec<Option<usize>>), GraphError> {
        let (comp, count) = self.components();
        for c in 0..count {
            let members: Vec<usize> = (0..self.order()).filter(|&v| comp[v] == c).collect();
            if members.iter().all(|&v| self.degree(v) == 2) {
                return Err(GraphError::WouldCreateLoop(members[0]));
            }
        }
        let mut g = self.clone();
        let mut map: Vec<Option<usize>> = (0..self.order()).map(Some).collect();
        while let Some(w) = (0..g.order()).find(|&w| g.degree(w) == 2) {
            let (h, step) = g.suppress(w)?;
            for m in map.iter_mut() {
                *m = m.and_then(|x| step[x]);
            }
            g = h;
        }
        Ok((g, map))
    }
}

impl CubicGraph {
    pub fn new(g: Graph) -> Result<Self, GraphError> {
        for v in 0..g.order() {
            if g.degree(v) != 3 {
                return Err(GraphError::DegreeViolation { vertex: v, degree: g.degree(v) });
            }
        }
        Ok(CubicGraph(g))
    }

    pub fn from_edges(n: usize, edges: &[Edge]) -> Result<Self, GraphError> {
        Self::new(Graph::from_edges(n, edges)?)
    }

    pub fn graph(&self) -> &Graph {
        &self.0
    }

    pub fn into_graph(self) -> Graph {
        self.0
    }

    pub fn as_subcubic(&self) -> SubcubicGraph {
        SubcubicGraph(self.0.clone())
    }

    /// Subdivide `uv`; the new vertex gets id `n`.
    pub fn subdivide(&self, u: usize, v: usize) -> Result<(SubcubicGraph, usize), GraphError> {
        let mut g = self.0.clone();
        let w = g.subdivide(u, v)?;
        Ok((SubcubicGraph(g), w))
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<SubcubicGraph, GraphError> {
        self.as_subcubic().delete_edge(u, v)
    }

    pub fn relabel(&self, perm: &[usize]) -> CubicGraph {
        CubicGraph(self.0.relabel(perm))
    }

    pub fn canonical_form(&self) -> CanonicalForm {
        canonical_form(&self.0)
    }
}

impl TryFrom<Graph> for CubicGraph {
    type Error = GraphError;
    fn try_from(g: Graph) -> Result<Self, GraphError> {
        CubicGraph::new(g)
    }
}

impl TryFrom<Graph> for SubcubicGraph {
    type Error = GraphError;
    fn try_from(g: Graph) -> Result<Self, GraphError> {
        SubcubicGraph::new(g)
    }
}
