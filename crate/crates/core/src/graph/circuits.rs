use std::collections::VecDeque;

use super::Graph;

/// Length of a shortest circuit, `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.order();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[s] = 0;
        parent[s] = usize::MAX;
        queue.clear();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

pub fn quadrangles(g: &Graph) -> Vec<Vec<usize>> {
    circuits_of_length(g, 4)
}

/// Every circuit of length `k`, once each, as the rotation starting at its
/// smallest vertex and heading to the smaller of that vertex's two circuit
/// neighbours. Output is sorted.
pub fn circuits_of_length(g: &Graph, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k < 3 {
        return out;
    }
    let mut path = Vec::with_capacity(k);
    for s in 0..g.order() {
        path.clear();
        path.push(s);
        extend(g, k, &mut path, &mut out);
    }
    out.sort();
    out
}

fn extend(g: &Graph, k: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let s = path[0];
    let last = *path.last().unwrap();
    for &w in g.neighbors(last) {
        if path.len() == k {
            if w == s && path[1] < path[k - 1] {
                out.push(path.clone());
            }
        } else if w > s && !path.contains(&w) {
            path.push(w);
            extend(g, k, path, out);
            path.pop();
        }
    }
}
