//! Canonical labeling by equitable refinement plus individualization, with
//! automorphism pruning of sibling branches.

use std::fmt;

use super::Graph;

/// Certificate of a graph: equal iff the graphs are isomorphic. The derived
/// ordering is a total order used for catalog sorting.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u16>);

impl CanonicalForm {
    pub fn as_words(&self) -> &[u16] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|w| format!("{w:04x}")).collect()
    }

    pub fn from_hex(s: &str) -> Option<Self> {
        if !s.len().is_multiple_of(4) || !s.is_ascii() {
            return None;
        }
        let words = (0..s.len() / 4)
            .map(|i| u16::from_str_radix(&s[4 * i..4 * i + 4], 16).ok())
            .collect::<Option<Vec<_>>>()?;
        Some(CanonicalForm(words))
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.to_hex())
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canon(g).0
}

/// `perm[old] = new` such that relabeling by `perm` gives the canonical graph.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    canon(g).1
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order() && g.size() == h.size() && canonical_form(g) == canonical_form(h)
}

/// Orbit representative (smallest member) of every vertex under Aut(G).
pub fn automorphism_orbits(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut uf = UnionFind::new(n);
    let (comp, count) = g.components();
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); count];
    for v in 0..n {
        members[comp[v]].push(v);
    }
    let mut certs = Vec::new();
    for verts in &members {
        let h = g.induced(verts);
        let mut s = Search::new(&h);
        s.run();
        for gamma in &s.autos {
            for (i, &j) in gamma.iter().enumerate() {
                uf.union(verts[i], verts[j]);
            }
        }
        let (cert, perm) = s.best.unwrap();
        certs.push((cert, perm, verts.clone()));
    }
    // isomorphic components are swapped by automorphisms as well
    for i in 0..certs.len() {
        for j in i + 1..certs.len() {
            if certs[i].0 == certs[j].0 {
                let inv_j = invert(&certs[j].1);
                for (a, &va) in certs[i].2.iter().enumerate() {
                    let b = inv_j[certs[i].1[a]];
                    uf.union(va, certs[j].2[b]);
                }
            }
        }
    }
    let mut rep = vec![usize::MAX; n];
    for v in 0..n {
        let r = uf.find(v);
        if rep[r] == usize::MAX {
            rep[r] = v;
        }
    }
    (0..n).map(|v| rep[uf.find(v)]).collect()
}

fn canon(g: &Graph) -> (CanonicalForm, Vec<usize>) {
    let n = g.order();
    let (comp, count) = g.components();
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); count];
    for v in 0..n {
        members[comp[v]].push(v);
    }
    let mut parts: Vec<(Vec<u16>, Vec<usize>, &Vec<usize>)> = members
        .iter()
        .map(|verts| {
            let h = if count == 1 { g.clone() } else { g.induced(verts) };
            let mut s = Search::new(&h);
            s.run();
            let (cert, perm) = s.best.unwrap();
            (cert, perm, verts)
        })
        .collect();
    parts.sort_by(|a, b| a.0.cmp(&b.0));

    let mut words = vec![n as u16, count as u16];
    let mut perm = vec![0; n];
    let mut offset = 0;
    for (cert, local, verts) in &parts {
        words.extend_from_slice(cert);
        for (i, &v) in verts.iter().enumerate() {
            perm[v] = offset + local[i];
        }
        offset += verts.len();
    }
    (CanonicalForm(words), perm)
}

fn invert(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    inv
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

type Cells = Vec<Vec<usize>>;

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Vec<u16>, Vec<usize>)>,
    autos: Vec<Vec<usize>>,
    counts: Vec<u32>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph) -> Self {
        Search { g, best: None, autos: Vec::new(), counts: vec![0; g.order()] }
    }

    fn run(&mut self) {
        let cells = self.initial_cells();
        let cells = self.refine(cells);
        let mut fixed = Vec::new();
        self.descend(cells, &mut fixed);
    }

    /// Cells keyed by degree and the number of short closed walks that are
    /// circuits through the vertex.
    fn initial_cells(&self) -> Cells {
        let n = self.g.order();
        let keys: Vec<(usize, [u32; 3])> =
            (0..n).map(|v| (self.g.degree(v), short_circuits_through(self.g, v))).collect();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (keys[v], v));
        let mut cells: Cells = Vec::new();
        for v in order {
            match cells.last_mut() {
                Some(cell) if keys[cell[0]] == keys[v] => cell.push(v),
                _ => cells.push(vec![v]),
            }
        }
        cells
    }

    fn refine(&mut self, mut cells: Cells) -> Cells {
        let n = self.g.order();
        loop {
            let mut split = false;
            let mut s = 0;
            while s < cells.len() && cells.len() < n {
                self.counts.iter_mut().for_each(|c| *c = 0);
                for &w in &cells[s] {
                    for &x in self.g.neighbors(w) {
                        self.counts[x] += 1;
                    }
                }
                let counts = &self.counts;
                let mut next: Cells = Vec::with_capacity(cells.len() + 2);
                for cell in &cells {
                    if cell.len() == 1 || cell.iter().all(|&v| counts[v] == counts[cell[0]]) {
                        next.push(cell.clone());
                        continue;
                    }
                    let mut sorted = cell.clone();
                    sorted.sort_by_key(|&v| (counts[v], v));
                    let mut start = 0;
                    for i in 1..=sorted.len() {
                        if i == sorted.len() || counts[sorted[i]] != counts[sorted[start]] {
                            next.push(sorted[start..i].to_vec());
                            start = i;
                        }
                    }
                    split = true;
                }
                cells = next;
                s += 1;
            }
            if !split || cells.len() == n {
                return cells;
            }
        }
    }

    fn descend(&mut self, cells: Cells, fixed: &mut Vec<usize>) {
        let n = self.g.order();
        if cells.len() == n {
            self.leaf(&cells);
            return;
        }
        let target = cells.iter().position(|c| c.len() > 1).unwrap();
        let candidates = cells[target].clone();
        let mut tried: Vec<usize> = Vec::new();
        let mut seen_autos = usize::MAX;
        let mut orbit = Vec::new();
        for v in candidates {
            if !tried.is_empty() {
                if seen_autos != self.autos.len() {
                    orbit = self.pointwise_orbits(fixed);
                    seen_autos = self.autos.len();
                }
                if tried.iter().any(|&t| orbit[t] == orbit[v]) {
                    continue;
                }
            }
            tried.push(v);
            let mut next = cells.clone();
            let rest: Vec<usize> = next[target].iter().copied().filter(|&w| w != v).collect();
            next[target] = vec![v];
            next.insert(target + 1, rest);
            let next = self.refine(next);
            fixed.push(v);
            self.descend(next, fixed);
            fixed.pop();
        }
    }

    /// Orbits of the group generated by the known automorphisms that fix
    /// every vertex of `fixed`.
    fn pointwise_orbits(&self, fixed: &[usize]) -> Vec<usize> {
        let mut uf = UnionFind::new(self.g.order());
        for gamma in &self.autos {
            if fixed.iter().all(|&f| gamma[f] == f) {
                for (i, &j) in gamma.iter().enumerate() {
                    uf.union(i, j);
                }
            }
        }
        (0..self.g.order()).map(|v| uf.find(v)).collect()
    }

    fn leaf(&mut self, cells: &Cells) {
        let n = self.g.order();
        let mut perm = vec![0; n];
        for (pos, cell) in cells.iter().enumerate() {
            perm[cell[0]] = pos;
        }
        let mut cert = Vec::with_capacity(1 + n + 2 * self.g.size());
        cert.push(n as u16);
        for cell in cells {
            let v = cell[0];
            let mut nbrs: Vec<u16> = self.g.neighbors(v).iter().map(|&w| perm[w] as u16).collect();
            nbrs.sort_unstable();
            cert.push(nbrs.len() as u16);
            cert.extend(nbrs);
        }
        match &self.best {
            None => self.best = Some((cert, perm)),
            Some((best, best_perm)) => match cert.cmp(best) {
                std::cmp::Ordering::Greater => self.best = Some((cert, perm)),
                std::cmp::Ordering::Equal => {
                    let inv = invert(best_perm);
                    let gamma: Vec<usize> = (0..n).map(|x| inv[perm[x]]).collect();
                    if gamma.iter().enumerate().any(|(i, &j)| i != j) {
                        self.autos.push(gamma);
                    }
                }
                std::cmp::Ordering::Less => {}
            },
        }
    }
}

/// Number of circuits of length 3, 4 and 5 through `v` (each counted twice,
/// once per direction, which is irrelevant for an invariant).
fn short_circuits_through(g: &Graph, v: usize) -> [u32; 3] {
    let mut out = [0u32; 3];
    let mut path = vec![v];
    fn walk(g: &Graph, path: &mut Vec<usize>, out: &mut [u32; 3]) {
        let last = *path.last().unwrap();
        let len = path.len();
        for &w in g.neighbors(last) {
            if w == path[0] && len >= 3 {
                out[len - 3] += 1;
            } else if len < 5 && !path.contains(&w) {
                path.push(w);
                walk(g, path, out);
                path.pop();
            }
        }
    }
    if g.degree(v) <= 4 {
        walk(g, &mut path, &mut out);
    }
    out
}
