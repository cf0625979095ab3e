//! Biladders and the registry of named base graphs.

use std::sync::OnceLock;

use thiserror::Error;

use crate::connectivity::is_cyclically_k_connected;
use crate::graph::{canonical_form, from_adjacency_text, CubicGraph, Graph, GraphError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("no biladder with parameter {0} (need p odd >= 5 or p even >= 10)")]
    InvalidParameter(usize),
    #[error("base graph registry has no section for {0}")]
    RegistryFileMissing(String),
    #[error("base graph registry entry {name} fails validation: {reason}")]
    RegistryFailsValidation { name: String, reason: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub fn is_valid_biladder_parameter(p: usize) -> bool {
    if p % 2 == 1 {
        p >= 5
    } else {
        p >= 10
    }
}

/// The biladder on `2p` vertices: `u_i = i` and `v_i = p + i`, with `u_i`
/// adjacent to `u_{i±1}` and `v_i`, and `v_i` adjacent to `v_{i±2}`.
pub fn biladder(p: usize) -> Result<CubicGraph, FamilyError> {
    if !is_valid_biladder_parameter(p) {
        return Err(FamilyError::InvalidParameter(p));
    }
    let mut edges = Vec::with_capacity(3 * p);
    for i in 0..p {
        edges.push((i, (i + 1) % p));
        edges.push((i, p + i));
        edges.push((p + i, p + (i + 2) % p));
    }
    Ok(CubicGraph::from_edges(2 * p, &edges)?)
}

pub fn petersen() -> CubicGraph {
    biladder(5).unwrap()
}

pub fn dodecahedron() -> CubicGraph {
    biladder(10).unwrap()
}

/// A labeling showing that a graph is a biladder.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiladderWitness {
    pub p: usize,
    pub u: Vec<usize>,
    pub v: Vec<usize>,
}

impl BiladderWitness {
    pub fn check(&self, g: &Graph) -> bool {
        let p = self.p;
        if self.u.len() != p || self.v.len() != p || g.order() != 2 * p {
            return false;
        }
        let mut seen = vec![false; g.order()];
        for &x in self.u.iter().chain(&self.v) {
            if x >= g.order() || std::mem::replace(&mut seen[x], true) {
                return false;
            }
        }
        (0..p).all(|i| {
            let mut want_u = vec![self.u[(i + p - 1) % p], self.u[(i + 1) % p], self.v[i]];
            let mut want_v = vec![self.u[i], self.v[(i + p - 2) % p], self.v[(i + 2) % p]];
            want_u.sort_unstable();
            want_v.sort_unstable();
            g.neighbors(self.u[i]) == want_u.as_slice() && g.neighbors(self.v[i]) == want_v.as_slice()
        })
    }
}

/// Look for a biladder labeling by seeding `u_0, u_1` and the rung `u_0 v_0`
/// and propagating the neighbour recurrences.
pub fn is_biladder(g: &Graph) -> Option<BiladderWitness> {
    let n = g.order();
    if !n.is_multiple_of(2) || !is_valid_biladder_parameter(n / 2) || (0..n).any(|v| g.degree(v) != 3) {
        return None;
    }
    let p = n / 2;
    for u0 in 0..n {
        for &u1 in g.neighbors(u0) {
            for &v0 in g.neighbors(u0) {
                if v0 == u1 {
                    continue;
                }
                let mut u = vec![u0, u1];
                let mut v = vec![v0];
                if let Some(w) = extend_ladder(g, p, &mut u, &mut v) {
                    return Some(w);
                }
            }
        }
    }
    None
}

fn extend_ladder(g: &Graph, p: usize, u: &mut Vec<usize>, v: &mut Vec<usize>) -> Option<BiladderWitness> {
    // invariant: u has one more entry than v
    let i = v.len();
    if i == p {
        let w = BiladderWitness { p, u: u[..p].to_vec(), v: v.clone() };
        return w.check(g).then_some(w);
    }
    let ui = u[i];
    for &vi in g.neighbors(ui) {
        if vi == u[i - 1] || u.contains(&vi) || v.contains(&vi) {
            continue;
        }
        if i >= 2 && !g.has_edge(vi, v[i - 2]) {
            continue;
        }
        let next: Vec<usize> = g.neighbors(ui).iter().copied().filter(|&x| x != u[i - 1] && x != vi).collect();
        let un = next[0];
        if i + 1 < p && (u.contains(&un) || v.contains(&un)) {
            continue;
        }
        if i + 1 == p && un != u[0] {
            continue;
        }
        v.push(vi);
        u.push(un);
        if let Some(w) = extend_ladder(g, p, u, v) {
            return Some(w);
        }
        u.pop();
        v.pop();
    }
    None
}

#[derive(Clone, Debug)]
pub struct BaseGraph {
    pub name: &'static str,
    pub graph: CubicGraph,
}

const REGISTRY: &str = include_str!("../data/base_graphs.txt");
pub const BASE_NAMES: [&str; 5] = ["Petersen", "Triplex", "Box", "Ruby", "Dodecahedron"];

/// Named sections `[Name]` each holding a graph in adjacency text format.
pub fn parse_registry(text: &str) -> Vec<(String, String)> {
    let mut out: Vec<(String, String)> = Vec::new();
    for line in text.lines() {
        let t = line.trim();
        if let Some(name) = t.strip_prefix('[').and_then(|x| x.strip_suffix(']')) {
            out.push((name.to_string(), String::new()));
        } else if let Some((_, body)) = out.last_mut() {
            body.push_str(line);
            body.push('\n');
        }
    }
    out
}

fn load_registry() -> Result<Vec<BaseGraph>, FamilyError> {
    let sections = parse_registry(REGISTRY);
    let mut out = Vec::new();
    for name in BASE_NAMES {
        let graph = match name {
            "Petersen" => petersen(),
            "Dodecahedron" => dodecahedron(),
            _ => {
                let body = sections
                    .iter()
                    .find(|(s, _)| s == name)
                    .map(|(_, b)| b)
                    .ok_or_else(|| FamilyError::RegistryFileMissing(name.to_string()))?;
                let fail = |reason: String| FamilyError::RegistryFailsValidation { name: name.to_string(), reason };
                let g = from_adjacency_text(body).map_err(|e| fail(e.to_string()))?;
                let g = CubicGraph::new(g).map_err(|e| fail(e.to_string()))?;
                if !is_cyclically_k_connected(&g, 5) {
                    return Err(fail("not cyclically 5-connected".into()));
                }
                if is_biladder(&g).is_some() {
                    return Err(fail("is a biladder".into()));
                }
                g
            }
        };
        out.push(BaseGraph { name, graph });
    }
    for i in 0..out.len() {
        for j in i + 1..out.len() {
            if canonical_form(&out[i].graph) == canonical_form(&out[j].graph) {
                return Err(FamilyError::RegistryFailsValidation {
                    name: out[j].name.to_string(),
                    reason: format!("isomorphic to {}", out[i].name),
                });
            }
        }
    }
    Ok(out)
}

/// Petersen, Triplex, Box, Ruby and Dodecahedron, in that order.
pub fn base_graphs() -> Result<&'static [BaseGraph], FamilyError> {
    static CELL: OnceLock<Result<Vec<BaseGraph>, FamilyError>> = OnceLock::new();
    match CELL.get_or_init(load_registry) {
        Ok(v) => Ok(v),
        Err(e) => Err(e.clone()),
    }
}

pub fn base_graph(name: &str) -> Result<&'static CubicGraph, FamilyError> {
    base_graphs()?
        .iter()
        .find(|b| b.name.eq_ignore_ascii_case(name))
        .map(|b| &b.graph)
        .ok_or_else(|| FamilyError::RegistryFileMissing(name.to_string()))
}
