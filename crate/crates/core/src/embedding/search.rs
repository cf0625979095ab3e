//! Backtracking search for a homeomorphic embedding.
//!
//! Guest vertices are placed one at a time; every guest edge is routed as a
//! path through unused host vertices as soon as one of its ends is placed.
//! Edges whose ends are both placed are routed first so that dead ends show
//! up early, and paths are tried shortest first.

use super::{FixConstraint, HomeomorphicEmbedding};
use crate::connectivity::is_planar;
use crate::graph::{automorphism_orbits, edge, Edge, Graph};

pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(HomeomorphicEmbedding),
    /// The search space was exhausted: no embedding exists.
    NotFound,
    BudgetExceeded,
}

impl SearchOutcome {
    pub fn found(self) -> Option<HomeomorphicEmbedding> {
        match self {
            SearchOutcome::Found(e) => Some(e),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, SearchOutcome::Found(_))
    }
}

pub fn find_embedding(g: &Graph, h: &Graph, fix: &FixConstraint, budget: u64) -> SearchOutcome {
    let deg3 = |x: &Graph| (0..x.order()).filter(|&v| x.degree(v) >= 3).count();
    if g.order() > h.order() || g.size() > h.size() || deg3(g) > deg3(h) || g.max_degree() > h.max_degree() {
        return SearchOutcome::NotFound;
    }
    for &(u, v) in fix.edges() {
        if !g.has_edge(u, v) || !h.has_edge(u, v) {
            return SearchOutcome::NotFound;
        }
    }
    if g.order() >= 5 && is_planar(h) && !is_planar(g) {
        return SearchOutcome::NotFound;
    }
    let mut s = Searcher::new(g, h, budget);
    for v in fix.vertices() {
        if g.degree(v) > h.degree(v) {
            return SearchOutcome::NotFound;
        }
        s.place(v, v);
    }
    for &(u, v) in fix.edges() {
        let e = s.edge_index(u, v);
        s.use_host_edge(u, v, true);
        s.paths[e] = Some(vec![s.vmap[s.gedges[e].0], s.vmap[s.gedges[e].1]]);
        s.routed += 1;
    }
    s.use_orbits = fix.is_null();
    match s.solve() {
        Ok(true) => {
            let paths = s.gedges.iter().zip(&s.paths).map(|(&e, p)| (e, p.clone().unwrap()));
            let eta = HomeomorphicEmbedding::new(s.vmap.clone(), paths);
            debug_assert!(super::verify_embedding(g, h, &eta, fix));
            SearchOutcome::Found(eta)
        }
        Ok(false) => SearchOutcome::NotFound,
        Err(Exceeded) => SearchOutcome::BudgetExceeded,
    }
}

struct Exceeded;

const UNSET: usize = usize::MAX;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Slot {
    Free,
    Branch,
    Inner,
}

struct Searcher<'a> {
    g: &'a Graph,
    h: &'a Graph,
    gedges: Vec<Edge>,
    /// per guest vertex: (neighbour, edge index)
    incident: Vec<Vec<(usize, usize)>>,
    vmap: Vec<usize>,
    owner: Vec<usize>,
    slot: Vec<Slot>,
    /// per host vertex, bit i set when the edge to `h.neighbors(x)[i]` is used
    used: Vec<u32>,
    paths: Vec<Option<Vec<usize>>>,
    routed: usize,
    placed: usize,
    slack: usize,
    nodes: u64,
    budget: u64,
    use_orbits: bool,
}

impl<'a> Searcher<'a> {
    fn new(g: &'a Graph, h: &'a Graph, budget: u64) -> Self {
        let gedges = g.edges();
        let mut incident = vec![Vec::new(); g.order()];
        for (i, &(u, v)) in gedges.iter().enumerate() {
            incident[u].push((v, i));
            incident[v].push((u, i));
        }
        assert!(h.max_degree() <= 32, "host degree too large");
        Searcher {
            g,
            h,
            paths: vec![None; gedges.len()],
            gedges,
            incident,
            vmap: vec![UNSET; g.order()],
            owner: vec![UNSET; h.order()],
            slot: vec![Slot::Free; h.order()],
            used: vec![0; h.order()],
            routed: 0,
            placed: 0,
            slack: h.order() - g.order(),
            nodes: 0,
            budget,
            use_orbits: false,
        }
    }

    fn edge_index(&self, u: usize, v: usize) -> usize {
        self.gedges.binary_search(&edge(u, v)).unwrap()
    }

    fn tick(&mut self) -> Result<(), Exceeded> {
        self.nodes += 1;
        if self.nodes > self.budget {
            Err(Exceeded)
        } else {
            Ok(())
        }
    }

    fn place(&mut self, v: usize, x: usize) {
        self.vmap[v] = x;
        self.owner[x] = v;
        self.slot[x] = Slot::Branch;
        self.placed += 1;
    }

    fn unplace(&mut self, v: usize) {
        let x = self.vmap[v];
        self.vmap[v] = UNSET;
        self.owner[x] = UNSET;
        self.slot[x] = Slot::Free;
        self.placed -= 1;
    }

    fn host_edge_used(&self, x: usize, y: usize) -> bool {
        let i = self.h.neighbors(x).binary_search(&y).unwrap();
        self.used[x] >> i & 1 == 1
    }

    fn use_host_edge(&mut self, x: usize, y: usize, on: bool) {
        let i = self.h.neighbors(x).binary_search(&y).unwrap();
        let j = self.h.neighbors(y).binary_search(&x).unwrap();
        if on {
            self.used[x] |= 1 << i;
            self.used[y] |= 1 << j;
        } else {
            self.used[x] &= !(1 << i);
            self.used[y] &= !(1 << j);
        }
    }

    fn solve(&mut self) -> Result<bool, Exceeded> {
        if self.routed == self.gedges.len() && self.placed == self.g.order() {
            return Ok(true);
        }
        // an unrouted edge with both ends placed
        let mut open: Option<(usize, usize)> = None;
        for (i, &(u, v)) in self.gedges.iter().enumerate() {
            if self.paths[i].is_some() {
                continue;
            }
            match (self.vmap[u] != UNSET, self.vmap[v] != UNSET) {
                (true, true) => return self.route(i, u, Some(v)),
                (true, false) if open.is_none() => open = Some((i, u)),
                (false, true) if open.is_none() => open = Some((i, v)),
                _ => {}
            }
        }
        if let Some((i, from)) = open {
            return self.route(i, from, None);
        }
        // start a new component at its highest-degree vertex
        let v = (0..self.g.order())
            .filter(|&v| self.vmap[v] == UNSET)
            .max_by_key(|&v| (self.g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        let candidates: Vec<usize> = if self.use_orbits && self.placed == 0 {
            let orbits = automorphism_orbits(self.h);
            (0..self.h.order()).filter(|&x| orbits[x] == x).collect()
        } else {
            (0..self.h.order()).collect()
        };
        for x in candidates {
            if self.slot[x] != Slot::Free || self.h.degree(x) < self.g.degree(v) {
                continue;
            }
            self.tick()?;
            self.place(v, x);
            if self.feasible() && self.solve()? {
                return Ok(true);
            }
            self.unplace(v);
        }
        Ok(false)
    }

    /// Route edge `i` from the image of `from`, either to the placed vertex
    /// `to` or (when `to` is `None`) to a fresh branch vertex for the other
    /// end, trying paths with fewer interior vertices first.
    fn route(&mut self, i: usize, from: usize, to: Option<usize>) -> Result<bool, Exceeded> {
        let start = self.vmap[from];
        for interior in 0..=self.slack {
            let mut path = vec![start];
            if self.walk(i, from, to, interior, &mut path)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn walk(&mut self, i: usize, from: usize, to: Option<usize>, left: usize, path: &mut Vec<usize>) -> Result<bool, Exceeded> {
        self.tick()?;
        let cur = *path.last().unwrap();
        let other = if self.gedges[i].0 == from { self.gedges[i].1 } else { self.gedges[i].0 };
        let nbrs: Vec<usize> = self.h.neighbors(cur).to_vec();
        for w in nbrs {
            if self.host_edge_used(cur, w) {
                continue;
            }
            if left == 0 {
                let ok_end = match to {
                    Some(t) => w == self.vmap[t],
                    None => self.slot[w] == Slot::Free && self.h.degree(w) >= self.g.degree(other),
                };
                if !ok_end {
                    continue;
                }
                if to.is_none() {
                    self.place(other, w);
                }
                self.use_host_edge(cur, w, true);
                path.push(w);
                self.paths[i] = Some(path.clone());
                self.routed += 1;
                if self.feasible() && self.solve()? {
                    return Ok(true);
                }
                self.routed -= 1;
                self.paths[i] = None;
                path.pop();
                self.use_host_edge(cur, w, false);
                if to.is_none() {
                    self.unplace(other);
                }
            } else if self.slot[w] == Slot::Free && self.h.degree(w) >= 2 {
                self.slot[w] = Slot::Inner;
                self.slack -= 1;
                self.use_host_edge(cur, w, true);
                path.push(w);
                let found = self.walk(i, from, to, left - 1, path)?;
                if found {
                    return Ok(true);
                }
                path.pop();
                self.use_host_edge(cur, w, false);
                self.slack += 1;
                self.slot[w] = Slot::Free;
            }
        }
        Ok(false)
    }

    /// Every placed vertex must keep enough usable host edges for its
    /// unrouted guest edges.
    fn feasible(&self) -> bool {
        let free = self.slot.iter().filter(|&&s| s == Slot::Free).count();
        if free < self.g.order() - self.placed {
            return false;
        }
        for v in 0..self.g.order() {
            let x = self.vmap[v];
            if x == UNSET {
                continue;
            }
            let pending: Vec<usize> = self.incident[v]
                .iter()
                .filter(|&&(_, e)| self.paths[e].is_none())
                .map(|&(w, _)| w)
                .collect();
            if pending.is_empty() {
                continue;
            }
            let mut live = 0;
            for (k, &y) in self.h.neighbors(x).iter().enumerate() {
                if self.used[x] >> k & 1 == 1 {
                    continue;
                }
                let usable = match self.slot[y] {
                    Slot::Free => true,
                    Slot::Branch => pending.contains(&self.owner[y]),
                    Slot::Inner => false,
                };
                if usable {
                    live += 1;
                }
            }
            if live < pending.len() {
                return false;
            }
        }
        true
    }
}
