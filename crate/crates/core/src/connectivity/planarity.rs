//! Path-addition planarity test (Demoucron, Malgrange, Pertuiset) applied
//! to each biconnected block.

use crate::graph::{edge, Edge, Graph};

pub fn is_planar(g: &Graph) -> bool {
    let n = g.order();
    if n >= 3 && g.size() > 3 * n - 6 {
        return false;
    }
    blocks(g).into_iter().all(|b| block_is_planar(&b))
}

/// Edge sets of the biconnected blocks.
fn blocks(g: &Graph) -> Vec<Vec<Edge>> {
    let n = g.order();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut stack: Vec<Edge> = Vec::new();
    let mut out = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        // iterative DFS: (vertex, parent, next neighbour index)
        let mut frames: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        disc[root] = time;
        low[root] = time;
        time += 1;
        while let Some(&mut (u, parent, ref mut idx)) = frames.last_mut() {
            if *idx < g.degree(u) {
                let w = g.neighbors(u)[*idx];
                *idx += 1;
                if w == parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    stack.push((u, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    frames.push((w, u, 0));
                } else if disc[w] < disc[u] {
                    stack.push((u, w));
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                frames.pop();
                if let Some(&(p, _, _)) = frames.last() {
                    low[p] = low[p].min(low[u]);
                    if low[u] >= disc[p] {
                        let mut block = Vec::new();
                        while let Some(e) = stack.pop() {
                            block.push(edge(e.0, e.1));
                            if e == (p, u) {
                                break;
                            }
                        }
                        out.push(block);
                    }
                }
            }
        }
    }
    out
}

fn block_is_planar(block: &[Edge]) -> bool {
    let mut ids: Vec<usize> = block.iter().flat_map(|&(a, b)| [a, b]).collect();
    ids.sort_unstable();
    ids.dedup();
    let nb = ids.len();
    if nb <= 4 {
        return true;
    }
    let local = |v: usize| ids.binary_search(&v).unwrap();
    let edges: Vec<Edge> = block.iter().map(|&(a, b)| edge(local(a), local(b))).collect();
    if edges.len() > 3 * nb - 6 {
        return false;
    }
    let g = Graph::from_edges(nb, &edges).expect("block of a simple graph");
    let m = edges.len();

    let cycle = find_cycle(&g);
    let mut emb_v = vec![false; nb];
    let mut emb_e = std::collections::HashSet::new();
    for i in 0..cycle.len() {
        emb_v[cycle[i]] = true;
        emb_e.insert(edge(cycle[i], cycle[(i + 1) % cycle.len()]));
    }
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle];

    while emb_e.len() < m {
        let frags = fragments(&g, &emb_v, &emb_e);
        let mut choice: Option<(usize, usize)> = None;
        for (i, fr) in frags.iter().enumerate() {
            let admissible: Vec<usize> = faces
                .iter()
                .enumerate()
                .filter(|(_, f)| fr.attachments.iter().all(|a| f.contains(a)))
                .map(|(j, _)| j)
                .collect();
            match admissible.len() {
                0 => return false,
                1 => {
                    choice = Some((i, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((i, admissible[0]));
                    }
                }
            }
        }
        let (fi, fj) = choice.expect("at least one fragment");
        let path = fragment_path(&g, &frags[fi], &emb_v);
        for w in path.windows(2) {
            emb_e.insert(edge(w[0], w[1]));
        }
        for &v in &path {
            emb_v[v] = true;
        }
        let face = faces.swap_remove(fj);
        let (f1, f2) = split_face(&face, &path);
        faces.push(f1);
        faces.push(f2);
    }
    true
}

/// A circuit closed by the first non-tree edge of a BFS tree.
fn find_cycle(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut parent = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    let mut queue = std::collections::VecDeque::from([0]);
    seen[0] = true;
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = u;
                queue.push_back(w);
            } else if w != parent[u] && parent[w] != u {
                let up = |mut x: usize| {
                    let mut p = vec![x];
                    while parent[x] != usize::MAX {
                        x = parent[x];
                        p.push(x);
                    }
                    p
                };
                let (pu, pw) = (up(u), up(w));
                let lca = *pu.iter().find(|x| pw.contains(x)).unwrap();
                let mut cyc: Vec<usize> = pu.iter().copied().take_while(|&x| x != lca).collect();
                cyc.push(lca);
                let back: Vec<usize> = pw.iter().copied().take_while(|&x| x != lca).collect();
                cyc.extend(back.into_iter().rev());
                return cyc;
            }
        }
    }
    unreachable!("a block with at least three vertices has a circuit")
}

struct Fragment {
    inner: Vec<usize>,
    attachments: Vec<usize>,
    chord: Option<Edge>,
}

fn fragments(g: &Graph, emb_v: &[bool], emb_e: &std::collections::HashSet<Edge>) -> Vec<Fragment> {
    let n = g.order();
    let mut out = Vec::new();
    for (u, v) in g.edges() {
        if emb_v[u] && emb_v[v] && !emb_e.contains(&(u, v)) {
            out.push(Fragment { inner: Vec::new(), attachments: vec![u, v], chord: Some((u, v)) });
        }
    }
    let mut seen = vec![false; n];
    for s in 0..n {
        if emb_v[s] || seen[s] {
            continue;
        }
        seen[s] = true;
        let mut inner = vec![s];
        let mut attach = Vec::new();
        let mut i = 0;
        while i < inner.len() {
            let u = inner[i];
            i += 1;
            for &w in g.neighbors(u) {
                if emb_v[w] {
                    attach.push(w);
                } else if !seen[w] {
                    seen[w] = true;
                    inner.push(w);
                }
            }
        }
        attach.sort_unstable();
        attach.dedup();
        out.push(Fragment { inner, attachments: attach, chord: None });
    }
    out
}

/// A path through the fragment between two distinct attachment vertices.
fn fragment_path(g: &Graph, fr: &Fragment, emb_v: &[bool]) -> Vec<usize> {
    if let Some((a, b)) = fr.chord {
        return vec![a, b];
    }
    let n = g.order();
    let mut in_frag = vec![false; n];
    for &x in &fr.inner {
        in_frag[x] = true;
    }
    let a = fr.attachments[0];
    let mut prev = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    for &w in g.neighbors(a) {
        if in_frag[w] && prev[w] == usize::MAX {
            prev[w] = a;
            queue.push_back(w);
        }
    }
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if emb_v[w] && w != a {
                let mut path = vec![w, u];
                let mut x = u;
                while prev[x] != a {
                    x = prev[x];
                    path.push(x);
                }
                path.push(a);
                path.reverse();
                return path;
            }
            if in_frag[w] && prev[w] == usize::MAX {
                prev[w] = u;
                queue.push_back(w);
            }
        }
    }
    unreachable!("fragments of a block have two attachments")
}

fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let a = path[0];
    let b = *path.last().unwrap();
    let k = face.len();
    let i = face.iter().position(|&x| x == a).unwrap();
    let j = face.iter().position(|&x| x == b).unwrap();
    let interior = &path[1..path.len() - 1];
    let mut f1 = Vec::new();
    let mut x = i;
    loop {
        f1.push(face[x]);
        if x == j {
            break;
        }
        x = (x + 1) % k;
    }
    f1.extend(interior.iter().rev());
    let mut f2 = Vec::new();
    let mut x = j;
    loop {
        f2.push(face[x]);
        if x == i {
            break;
        }
        x = (x + 1) % k;
    }
    f2.extend(interior.iter());
    (f1, f2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        let mut e = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                e.push((i, j));
            }
        }
        Graph::from_edges(n, &e).unwrap()
    }

    #[test]
    fn kuratowski_graphs() {
        assert!(is_planar(&complete(4)));
        assert!(!is_planar(&complete(5)));
        let mut e = Vec::new();
        for i in 0..3 {
            for j in 3..6 {
                e.push((i, j));
            }
        }
        assert!(!is_planar(&Graph::from_edges(6, &e).unwrap()));
        // K5 minus an edge is planar
        let mut k5 = complete(5);
        k5.remove_edge(0, 1).unwrap();
        assert!(is_planar(&k5));
    }

    #[test]
    fn blocks_of_a_bowtie() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        assert_eq!(blocks(&g).len(), 2);
    }
}
