//! Slow, obviously-correct reference implementations used as oracles.
#![allow(dead_code)]

use cyclic5::Graph;

/// Isomorphism by trying every bijection, pruned on adjacency.
pub fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    let n = g.order();
    if n != h.order() || g.size() != h.size() {
        return false;
    }
    fn extend(g: &Graph, h: &Graph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let v = map.len();
        if v == g.order() {
            return true;
        }
        for x in 0..h.order() {
            if used[x] || g.degree(v) != h.degree(x) {
                continue;
            }
            if (0..v).all(|u| g.has_edge(u, v) == h.has_edge(map[u], x)) {
                map.push(x);
                used[x] = true;
                if extend(g, h, map, used) {
                    return true;
                }
                map.pop();
                used[x] = false;
            }
        }
        false
    }
    extend(g, h, &mut Vec::new(), &mut vec![false; n])
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Planarity by trying every rotation system of a connected graph and
/// counting faces against Euler's formula.
pub fn rotation_planar(g: &Graph) -> bool {
    rotation_planar_with_face(g, None)
}

/// As above, also asking for `face` (a circuit, in order) to bound a face.
pub fn rotation_planar_with_face(g: &Graph, face: Option<&[usize]>) -> bool {
    let n = g.order();
    if n == 0 {
        return true;
    }
    assert!(g.is_connected(), "oracle handles connected graphs only");
    let e = g.size();
    // rotations at a vertex: orderings of its neighbours with the first fixed
    let choices: Vec<Vec<Vec<usize>>> = (0..n)
        .map(|v| {
            let ns = g.neighbors(v);
            if ns.len() <= 2 {
                return vec![ns.to_vec()];
            }
            permutations(&ns[1..]).into_iter().map(|mut p| {
                p.insert(0, ns[0]);
                p
            }).collect()
        })
        .collect();
    let mut pick = vec![0usize; n];
    loop {
        let rot: Vec<&Vec<usize>> = (0..n).map(|v| &choices[v][pick[v]]).collect();
        let fs = faces(g, &rot);
        if fs.len() + n == e + 2 && face.is_none_or(|c| fs.iter().any(|f| same_cycle(f, c))) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            pick[i] += 1;
            if pick[i] < choices[i].len() {
                break;
            }
            pick[i] = 0;
            i += 1;
        }
    }
}

/// Face boundaries as vertex sequences.
fn faces(g: &Graph, rot: &[&Vec<usize>]) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for u in 0..n {
        for &v in g.neighbors(u) {
            if seen.contains(&(u, v)) {
                continue;
            }
            let mut walk = Vec::new();
            let (mut a, mut b) = (u, v);
            while seen.insert((a, b)) {
                walk.push(a);
                let r = rot[b];
                let i = r.iter().position(|&x| x == a).unwrap();
                let c = r[(i + 1) % r.len()];
                a = b;
                b = c;
            }
            out.push(walk);
        }
    }
    out
}

fn same_cycle(f: &[usize], c: &[usize]) -> bool {
    let k = c.len();
    if f.len() != k {
        return false;
    }
    let Some(s) = f.iter().position(|&x| x == c[0]) else { return false };
    let fwd = (0..k).all(|i| f[(s + i) % k] == c[i]);
    let bwd = (0..k).all(|i| f[(s + k - i) % k] == c[i]);
    fwd || bwd
}

/// Whether the subgraph induced on `side` (a membership mask) has a circuit.
pub fn induced_has_circuit(g: &Graph, side: &[bool]) -> bool {
    let verts: Vec<usize> = (0..g.order()).filter(|&v| side[v]).collect();
    let edges = g.edges().into_iter().filter(|&(u, v)| side[u] && side[v]).count();
    // a forest has |E| = |V| - components
    let mut comp = vec![usize::MAX; g.order()];
    let mut k = 0;
    for &s in &verts {
        if comp[s] != usize::MAX {
            continue;
        }
        let mut stack = vec![s];
        comp[s] = k;
        while let Some(x) = stack.pop() {
            for &y in g.neighbors(x) {
                if side[y] && comp[y] == usize::MAX {
                    comp[y] = k;
                    stack.push(y);
                }
            }
        }
        k += 1;
    }
    edges + k > verts.len()
}

/// Every vertex subset containing vertex 0 (so each unordered cut once),
/// with its cut size.
pub fn all_cuts(g: &Graph) -> Vec<(Vec<bool>, usize)> {
    let n = g.order();
    assert!(n <= 20);
    let mut out = Vec::new();
    for mask in 0u32..(1 << (n - 1)) {
        let side: Vec<bool> = (0..n).map(|v| v == 0 || mask >> (v - 1) & 1 == 1).collect();
        if side.iter().all(|&b| b) {
            continue;
        }
        let size = g.edges().into_iter().filter(|&(u, v)| side[u] != side[v]).count();
        out.push((side, size));
    }
    out
}

pub fn complement(side: &[bool]) -> Vec<bool> {
    side.iter().map(|&b| !b).collect()
}

/// Connected after deleting any two vertices.
pub fn three_connected(g: &Graph) -> bool {
    let n = g.order();
    if n < 4 {
        return false;
    }
    for a in 0..n {
        for b in a + 1..n {
            let keep: Vec<bool> = (0..n).map(|v| v != a && v != b).collect();
            let start = (0..n).find(|&v| keep[v]).unwrap();
            let mut seen = vec![false; n];
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for &y in g.neighbors(x) {
                    if keep[y] && !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            if (0..n).any(|v| keep[v] && !seen[v]) {
                return false;
            }
        }
    }
    true
}

/// Cyclic k-connectivity straight from the definition.
pub fn cyclically_k_connected(g: &Graph, k: usize) -> bool {
    let n = g.order();
    if (0..n).any(|v| g.degree(v) != 3) || n < 2 * k || !three_connected(g) {
        return false;
    }
    all_cuts(g).into_iter().all(|(side, size)| {
        size >= k || !induced_has_circuit(g, &side) || !induced_has_circuit(g, &complement(&side))
    })
}

fn four_cycles(g: &Graph) -> usize {
    let n = g.order();
    let mut count = 0;
    for a in 0..n {
        for b in a + 1..n {
            let common = (0..n).filter(|&x| g.has_edge(a, x) && g.has_edge(b, x)).count();
            count += common * common.saturating_sub(1) / 2;
        }
    }
    count / 2
}

fn is_quadrangle_side(g: &Graph, side: &[bool]) -> bool {
    let verts: Vec<usize> = (0..g.order()).filter(|&v| side[v]).collect();
    verts.len() == 4 && verts.iter().all(|&v| verts.iter().filter(|&&w| g.has_edge(v, w)).count() == 2)
}

/// Quad-connectivity straight from the definition.
pub fn quad_connected(g: &Graph) -> bool {
    let n = g.order();
    if !cyclically_k_connected(g, 4) || n < 10 || (four_cycles(g) > 1 && n < 12) {
        return false;
    }
    let tame = |s: &[bool]| !induced_has_circuit(g, s) || is_quadrangle_side(g, s);
    all_cuts(g).into_iter().all(|(side, size)| size > 4 || tame(&side) || tame(&complement(&side)))
}

/// Number of edge-disjoint paths from `sources` to `sinks` (unit
/// capacities, augmenting paths found by breadth-first search).
pub fn edge_disjoint_paths(g: &Graph, sources: &[bool], sinks: &[bool]) -> usize {
    let n = g.order();
    let (s, t) = (n, n + 1);
    let mut cap = std::collections::HashMap::<(usize, usize), i32>::new();
    let mut adj = vec![Vec::new(); n + 2];
    let mut arc = |a: usize, b: usize, c: i32, cap: &mut std::collections::HashMap<(usize, usize), i32>| {
        *cap.entry((a, b)).or_insert(0) += c;
        cap.entry((b, a)).or_insert(0);
        adj[a].push(b);
        adj[b].push(a);
    };
    for (u, v) in g.edges() {
        arc(u, v, 1, &mut cap);
        arc(v, u, 1, &mut cap);
    }
    for v in 0..n {
        if sources[v] {
            arc(s, v, 1000, &mut cap);
        }
        if sinks[v] {
            arc(v, t, 1000, &mut cap);
        }
    }
    let mut flow = 0;
    loop {
        let mut prev = vec![usize::MAX; n + 2];
        prev[s] = s;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if prev[y] == usize::MAX && cap[&(x, y)] > 0 {
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if prev[t] == usize::MAX {
            return flow;
        }
        let mut y = t;
        while y != s {
            let x = prev[y];
            *cap.get_mut(&(x, y)).unwrap() -= 1;
            *cap.get_mut(&(y, x)).unwrap() += 1;
            y = x;
        }
        flow += 1;
    }
}

/// Every connected cubic graph on `n` vertices, labelled in breadth-first
/// order, found by backtracking over adjacency; duplicates are left in.
pub fn backtrack_cubic(n: usize, mut visit: impl FnMut(&Graph)) {
    fn go(n: usize, adj: &mut Vec<Vec<usize>>, next: &mut usize, v: usize, visit: &mut dyn FnMut(&Graph)) {
        if v == n {
            if *next == n {
                let mut g = Graph::empty(n);
                for a in 0..n {
                    for &b in &adj[a] {
                        if a < b {
                            g.add_edge(a, b).unwrap();
                        }
                    }
                }
                visit(&g);
            }
            return;
        }
        if v >= *next {
            // v was never reached: disconnected
            return;
        }
        if adj[v].len() == 3 {
            go(n, adj, next, v + 1, visit);
            return;
        }
        // join v to an already discovered later vertex, or to the next new one
        let lo = adj[v].iter().copied().filter(|&w| w > v).max().map_or(v + 1, |w| w + 1);
        for w in lo..=(*next).min(n - 1) {
            if adj[w].len() == 3 || adj[v].contains(&w) {
                continue;
            }
            let fresh = w == *next;
            if fresh {
                *next += 1;
            }
            adj[v].push(w);
            adj[w].push(v);
            go(n, adj, next, v, visit);
            adj[v].pop();
            adj[w].pop();
            if fresh {
                *next -= 1;
            }
        }
    }
    let mut adj = vec![Vec::new(); n];
    let mut next = 1;
    go(n, &mut adj, &mut next, 0, &mut visit);
}
