//! The three rerouting constructions and routing a new edge along a path.

use super::{EmbeddingError, HomeomorphicEmbedding};
use crate::graph::{edge, Edge, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RerouteCase {
    /// both ends of the new path on the image of `e`
    A,
    /// one end inside the image of `e`, the other inside the image of an edge
    /// sharing an end with `e`; that end moves
    B,
    /// ends inside images of edges at either end of `e`; both ends move
    C,
}

/// Check that `p` is a path of `h` whose interior avoids the image of `η`.
fn check_path(h: &Graph, eta: &HomeomorphicEmbedding, p: &[usize]) -> Result<(), EmbeddingError> {
    if p.len() < 2 || p.windows(2).any(|w| !h.has_edge(w[0], w[1])) {
        return Err(EmbeddingError::NotAPath(p.to_vec()));
    }
    let mut seen = std::collections::HashSet::new();
    if !p.iter().all(|x| seen.insert(*x)) {
        return Err(EmbeddingError::NotAPath(p.to_vec()));
    }
    let image = eta.image_vertices(h.order());
    if let Some(&x) = p[1..p.len() - 1].iter().find(|&&x| image[x]) {
        return Err(EmbeddingError::QTouchesImage(x));
    }
    let used = eta.image_edges();
    if p.len() == 2 && used.binary_search(&edge(p[0], p[1])).is_ok() {
        return Err(EmbeddingError::NotAPath(p.to_vec()));
    }
    Ok(())
}

fn other_end(e: Edge, v: usize) -> usize {
    if e.0 == v {
        e.1
    } else {
        e.0
    }
}

/// Position of `x` strictly inside the image of `e` oriented from `from`.
fn interior_index(eta: &HomeomorphicEmbedding, e: Edge, from: usize, x: usize) -> Option<(Vec<usize>, usize)> {
    let p = eta.path(from, other_end(e, from))?;
    let i = p.iter().position(|&y| y == x)?;
    (i > 0 && i + 1 < p.len()).then_some((p, i))
}

/// Reroute the image of `e = (a, b)` along `p`, picking whichever of the
/// three constructions the ends of `p` call for.
pub fn reroute(
    g: &Graph,
    h: &Graph,
    eta: &HomeomorphicEmbedding,
    e: Edge,
    p: &[usize],
) -> Result<(HomeomorphicEmbedding, RerouteCase), EmbeddingError> {
    let e = edge(e.0, e.1);
    if !g.has_edge(e.0, e.1) {
        return Err(EmbeddingError::UnknownEdge(e));
    }
    check_path(h, eta, p)?;
    let (x, y) = (p[0], p[p.len() - 1]);
    let owner = eta.interior_owner(h.order());
    let pe = eta.path(e.0, e.1).unwrap();

    // (a)
    if let (Some(i), Some(j)) = (pe.iter().position(|&z| z == x), pe.iter().position(|&z| z == y)) {
        let (i, j, seg) = if i < j { (i, j, p.to_vec()) } else { (j, i, p.iter().rev().copied().collect()) };
        let mut np = pe[..i].to_vec();
        np.extend_from_slice(&seg);
        np.extend_from_slice(&pe[j + 1..]);
        let mut out = eta.clone();
        out.set_path(e.0, e.1, np);
        return Ok((out, RerouteCase::A));
    }

    // (b): one end inside η(e), the other inside η(f) with f sharing an end v of e
    for (x, y, p) in [(x, y, p.to_vec()), (y, x, p.iter().rev().copied().collect::<Vec<_>>())] {
        if owner[x] != Some(e) {
            continue;
        }
        let Some(f) = owner[y] else { continue };
        let shared = [e.0, e.1].into_iter().find(|&v| f.0 == v || f.1 == v);
        let Some(v) = shared else { continue };
        if g.degree(v) != 3 {
            continue;
        }
        let gg = g.neighbors(v).iter().map(|&w| edge(v, w)).find(|&k| k != e && k != f).unwrap();
        // η(e) from the far end to η(v), cut at x, then P' to y
        let pe_from_far = eta.path(other_end(e, v), v).unwrap();
        let ix = pe_from_far.iter().position(|&z| z == x).unwrap();
        let mut ne = pe_from_far[..=ix].to_vec();
        ne.extend_from_slice(&p[1..]);
        // η(f) from its far end to η(v), cut at y
        let pf = eta.path(other_end(f, v), v).unwrap();
        let iy = pf.iter().position(|&z| z == y).unwrap();
        let nf = pf[..=iy].to_vec();
        // η(g) from its far end through η(v) and on to y
        let mut ng = eta.path(other_end(gg, v), v).unwrap();
        ng.extend(pf[iy..pf.len() - 1].iter().rev());
        let mut out = eta.clone();
        out.vmap[v] = y;
        out.set_path(e.0, e.1, ne);
        out.set_path(f.0, f.1, nf);
        out.set_path(gg.0, gg.1, ng);
        return Ok((out, RerouteCase::B));
    }

    // (c): x inside η(f1) at u, y inside η(g1) at v
    if g.degree(e.0) == 3 && g.degree(e.1) == 3 {
        for (u, v) in [(e.0, e.1), (e.1, e.0)] {
            let (Some(f1), Some(g1)) = (owner[x], owner[y]) else { break };
            let at = |k: Edge, w: usize| k != e && (k.0 == w || k.1 == w);
            if !(at(f1, u) && at(g1, v)) {
                continue;
            }
            let f2 = g.neighbors(u).iter().map(|&w| edge(u, w)).find(|&k| k != e && k != f1).unwrap();
            let g2 = g.neighbors(v).iter().map(|&w| edge(v, w)).find(|&k| k != e && k != g1).unwrap();
            let mut out = eta.clone();
            for (w, k1, k2, z) in [(u, f1, f2, x), (v, g1, g2, y)] {
                let p1 = eta.path(other_end(k1, w), w).unwrap();
                let iz = p1.iter().position(|&q| q == z).unwrap();
                let mut p2 = eta.path(other_end(k2, w), w).unwrap();
                p2.extend(p1[iz..p1.len() - 1].iter().rev());
                out.vmap[w] = z;
                out.set_path(k1.0, k1.1, p1[..=iz].to_vec());
                out.set_path(k2.0, k2.1, p2);
            }
            out.set_path(e.0, e.1, if u == e.0 { p.to_vec() } else { p.iter().rev().copied().collect() });
            return Ok((out, RerouteCase::C));
        }
    }
    Err(EmbeddingError::EndpointsDoNotMatchAnyCase)
}

/// Route a new edge along `q`, whose ends lie inside the images of `e1` and
/// `e2`. Returns `G+(u1,v1,u2,v2)` with the new vertices `n` (on `e1`) and
/// `n + 1` (on `e2`), and the embedding of it into `h`.
pub fn route_new_edge(
    g: &Graph,
    h: &Graph,
    eta: &HomeomorphicEmbedding,
    q: &[usize],
    e1: Edge,
    e2: Edge,
) -> Result<(Graph, HomeomorphicEmbedding), EmbeddingError> {
    let (e1, e2) = (edge(e1.0, e1.1), edge(e2.0, e2.1));
    for e in [e1, e2] {
        if !g.has_edge(e.0, e.1) {
            return Err(EmbeddingError::UnknownEdge(e));
        }
    }
    if e1.0 == e2.0 || e1.0 == e2.1 || e1.1 == e2.0 || e1.1 == e2.1 {
        return Err(EmbeddingError::SharedEndpoints(e1, e2));
    }
    check_path(h, eta, q)?;
    let owner = eta.interior_owner(h.order());
    let mut q = q.to_vec();
    if owner[q[0]] != Some(e1) {
        q.reverse();
    }
    let (x1, x2) = (q[0], q[q.len() - 1]);
    for (x, e) in [(x1, e1), (x2, e2)] {
        if owner[x] != Some(e) {
            return Err(EmbeddingError::QTouchesImage(x));
        }
    }
    let (g2, k, l) = g.plus(e1.0, e1.1, e2.0, e2.1).expect("disjoint edges of a simple graph");
    let mut vmap = eta.vmap().to_vec();
    vmap.push(x1);
    vmap.push(x2);
    let mut out = HomeomorphicEmbedding::new(vmap, std::iter::empty());
    for (&(a, b), p) in eta.paths() {
        if (a, b) != e1 && (a, b) != e2 {
            out.set_path(a, b, p.clone());
        }
    }
    for ((a, b), z, w) in [(e1, x1, k), (e2, x2, l)] {
        let (p, i) = interior_index(eta, (a, b), a, z).unwrap();
        out.set_path(a, w, p[..=i].to_vec());
        out.set_path(w, b, p[i..].to_vec());
    }
    out.set_path(k, l, q);
    Ok((g2, out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::{check_embedding, FixConstraint};

    /// K4 inside a host where 0-1 runs through 4 and 5, 0-2 through 6 and
    /// 1-3 through 7, plus spare paths 4-8-9-5 and 6-7.
    fn host() -> (Graph, Graph, HomeomorphicEmbedding) {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let h = Graph::from_edges(
            10,
            &[
                (0, 4), (4, 5), (5, 1), (0, 6), (6, 2), (0, 3), (1, 2),
                (1, 7), (7, 3), (2, 3), (4, 8), (8, 9), (9, 5), (6, 7),
            ],
        )
        .unwrap();
        let eta = HomeomorphicEmbedding::new(
            vec![0, 1, 2, 3],
            [
                ((0, 1), vec![0, 4, 5, 1]),
                ((0, 2), vec![0, 6, 2]),
                ((0, 3), vec![0, 3]),
                ((1, 2), vec![1, 2]),
                ((1, 3), vec![1, 7, 3]),
                ((2, 3), vec![2, 3]),
            ],
        );
        (g, h, eta)
    }

    #[test]
    fn host_embedding_is_valid() {
        let (g, h, eta) = host();
        check_embedding(&g, &h, &eta, &FixConstraint::null()).unwrap();
    }

    #[test]
    fn case_a_detours() {
        let (g, h, eta) = host();
        let (out, case) = reroute(&g, &h, &eta, (0, 1), &[4, 8, 9, 5]).unwrap();
        assert_eq!(case, RerouteCase::A);
        assert_eq!(out.path(0, 1).unwrap(), vec![0, 4, 8, 9, 5, 1]);
        check_embedding(&g, &h, &out, &FixConstraint::null()).unwrap();
    }

    #[test]
    fn case_c_moves_both_ends() {
        // e = 0-1 flanked by 0-2 (through 6) and 1-3 (through 7)
        let (g, h, eta) = host();
        let (out, case) = reroute(&g, &h, &eta, (0, 1), &[6, 7]).unwrap();
        assert_eq!(case, RerouteCase::C);
        assert_eq!(out.vertex(0), 6);
        assert_eq!(out.vertex(1), 7);
        assert_eq!(out.path(0, 1).unwrap(), vec![6, 7]);
        check_embedding(&g, &h, &out, &FixConstraint::null()).unwrap();
        // untouched edge
        assert_eq!(out.path(2, 3), eta.path(2, 3));
    }

    #[test]
    fn case_b_moves_one_end() {
        // e = 1-3 through 7, f = 0-1 through 4 and 5
        let (g, mut h, eta) = host();
        h.add_edge(5, 7).unwrap();
        let (out, case) = reroute(&g, &h, &eta, (1, 3), &[7, 5]).unwrap();
        assert_eq!(case, RerouteCase::B);
        assert_eq!(out.vertex(1), 5);
        check_embedding(&g, &h, &out, &FixConstraint::null()).unwrap();
    }

    #[test]
    fn unmatched_ends_are_rejected() {
        let (g, h, eta) = host();
        assert_eq!(reroute(&g, &h, &eta, (0, 2), &[6, 7]), Err(EmbeddingError::EndpointsDoNotMatchAnyCase));
    }

    #[test]
    fn new_edge_routing() {
        let (g, h, eta) = host();
        let (g2, out) = route_new_edge(&g, &h, &eta, &[6, 7], (0, 2), (1, 3)).unwrap();
        assert_eq!(g2.order(), 6);
        assert!(g2.has_edge(4, 5));
        check_embedding(&g2, &h, &out, &FixConstraint::null()).unwrap();
        assert_eq!(
            route_new_edge(&g, &h, &eta, &[6, 7], (0, 2), (0, 1)).map(|_| ()),
            Err(EmbeddingError::SharedEndpoints((0, 2), (0, 1)))
        );
        assert!(matches!(
            route_new_edge(&g, &h, &eta, &[4, 8], (0, 1), (0, 2)),
            Err(EmbeddingError::SharedEndpoints(..))
        ));
    }
}
