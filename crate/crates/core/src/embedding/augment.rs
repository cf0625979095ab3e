//! Augmenting sequences for an edge-cut `δA` of the guest: either the host
//! has a cut of the same size separating the two sides of the image, or a
//! chain of paths `Q_1..Q_n` that jumps across the images of the cut edges.
//!
//! The chain is found as a shortest path in a residual graph. Each image
//! `η(e_t)` is oriented from the `A` side; a walk may step backwards along
//! it, and starting a new path costs one. Minimal chains are then reduced
//! by rerouting until no local improvement is left.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use super::{check_embedding, reroute, FixConstraint, HomeomorphicEmbedding};
use crate::graph::{edge, Edge, Graph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AugmentingSequence {
    /// `Q_1..Q_n`, each running from `x_i` to `y_i`
    pub paths: Vec<Vec<usize>>,
}

impl AugmentingSequence {
    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn x(&self, i: usize) -> usize {
        self.paths[i][0]
    }

    pub fn y(&self, i: usize) -> usize {
        *self.paths[i].last().unwrap()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AugmentOutcome {
    /// `δ_H B` has as many edges as `δ_G A` and separates the two images
    Cut { shore: Vec<usize>, edges: Vec<Edge> },
    Sequence { embedding: HomeomorphicEmbedding, sequence: AugmentingSequence },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Loc {
    Free,
    Inside,
    Outside,
    /// interior vertex `j` of the image of cut edge `t`
    Cut(usize, usize),
}

/// Where each host vertex sits relative to the image of the cut.
struct Frame {
    in_a: Vec<bool>,
    /// cut edges as `(u_t, v_t)` with `u_t` in `A`
    cut: Vec<Edge>,
    /// images of the cut edges, oriented from `η(u_t)`
    cut_paths: Vec<Vec<usize>>,
    loc: Vec<Loc>,
    free_adj: Vec<Vec<usize>>,
}

impl Frame {
    fn new(g: &Graph, h: &Graph, a: &[usize], eta: &HomeomorphicEmbedding) -> Frame {
        let mut in_a = vec![false; g.order()];
        for &v in a {
            in_a[v] = true;
        }
        let mut loc = vec![Loc::Free; h.order()];
        let mut cut = Vec::new();
        let mut cut_paths = Vec::new();
        for (v, &x) in eta.vmap().iter().enumerate() {
            loc[x] = if in_a[v] { Loc::Inside } else { Loc::Outside };
        }
        for (&(u, v), p) in eta.paths() {
            match (in_a[u], in_a[v]) {
                (true, true) | (false, false) => {
                    let side = if in_a[u] { Loc::Inside } else { Loc::Outside };
                    for &x in p {
                        loc[x] = side;
                    }
                }
                _ => {
                    let (s, t) = if in_a[u] { (u, v) } else { (v, u) };
                    let p = eta.path(s, t).unwrap();
                    for (j, &x) in p.iter().enumerate().take(p.len() - 1).skip(1) {
                        loc[x] = Loc::Cut(cut.len(), j);
                    }
                    cut.push((s, t));
                    cut_paths.push(p);
                }
            }
        }
        let used: HashSet<Edge> = eta.image_edges().into_iter().collect();
        let free_adj = (0..h.order())
            .map(|x| h.neighbors(x).iter().copied().filter(|&y| !used.contains(&edge(x, y))).collect())
            .collect();
        Frame { in_a, cut, cut_paths, loc, free_adj }
    }

    fn is_end_image(&self, eta: &HomeomorphicEmbedding, x: usize, inner: bool) -> bool {
        self.cut.iter().any(|&(u, v)| eta.vertex(if inner { u } else { v }) == x)
    }
}

const START: usize = 0;
const IN_Q: usize = 1;
const ARRIVED: usize = 2;
const BACK: usize = 3;
const FINAL: usize = 4;
const MODES: usize = 5;

enum Search {
    Found(AugmentingSequence),
    Blocked(Vec<bool>),
}

/// Lexicographically shortest residual walk: fewest paths, then fewest
/// steps.
fn shortest(eta: &HomeomorphicEmbedding, fr: &Frame) -> Search {
    let nh = fr.loc.len();
    let mut dist = vec![(u32::MAX, u32::MAX); nh * MODES];
    let mut prev = vec![usize::MAX; nh * MODES];
    let mut heap = BinaryHeap::new();
    for x in 0..nh {
        if fr.loc[x] == Loc::Inside {
            dist[x * MODES + START] = (0, 0);
            heap.push(Reverse(((0u32, 0u32), x * MODES + START)));
        }
    }
    let mut target = None;
    while let Some(Reverse((d, s))) = heap.pop() {
        if d > dist[s] {
            continue;
        }
        let (x, mode) = (s / MODES, s % MODES);
        if mode == FINAL {
            target = Some(s);
            break;
        }
        let mut moves: Vec<(usize, (u32, u32))> = Vec::new();
        if matches!(mode, START | BACK | IN_Q) {
            let extra = u32::from(mode != IN_Q);
            for &w in &fr.free_adj[x] {
                let next = match fr.loc[w] {
                    Loc::Free => Some(IN_Q),
                    Loc::Cut(..) => Some(ARRIVED),
                    Loc::Outside if !fr.is_end_image(eta, w, false) => Some(FINAL),
                    _ => None,
                };
                if let Some(m) = next {
                    moves.push((w * MODES + m, (d.0 + extra, d.1 + 1)));
                }
            }
        }
        if matches!(mode, ARRIVED | BACK) {
            if let Loc::Cut(t, j) = fr.loc[x] {
                if j >= 2 {
                    moves.push((fr.cut_paths[t][j - 1] * MODES + BACK, (d.0, d.1 + 1)));
                }
            }
        }
        for (s2, d2) in moves {
            if d2 < dist[s2] {
                dist[s2] = d2;
                prev[s2] = s;
                heap.push(Reverse((d2, s2)));
            }
        }
    }
    let Some(mut s) = target else {
        let reached = (0..nh).map(|x| (0..FINAL).any(|m| dist[x * MODES + m].0 != u32::MAX)).collect();
        return Search::Blocked(reached);
    };
    let mut states = vec![s];
    while prev[s] != usize::MAX {
        s = prev[s];
        states.push(s);
    }
    states.reverse();
    let mut paths: Vec<Vec<usize>> = Vec::new();
    for w in states.windows(2) {
        let (a, b) = (w[0], w[1]);
        let (am, bm) = (a % MODES, b % MODES);
        if matches!(am, START | BACK) && matches!(bm, IN_Q | ARRIVED | FINAL) {
            paths.push(vec![a / MODES]);
        }
        if matches!(bm, IN_Q | ARRIVED | FINAL) && am != ARRIVED {
            paths.last_mut().unwrap().push(b / MODES);
        }
    }
    Search::Found(AugmentingSequence { paths })
}

/// Find a cut of `h` matching `δ_G A` or an augmenting sequence, reduced
/// modulo `fix` by rerouting `η` when the first sequence found is not.
pub fn augmenting_sequence(
    g: &Graph,
    h: &Graph,
    a: &[usize],
    eta: &HomeomorphicEmbedding,
    fix: &FixConstraint,
) -> AugmentOutcome {
    let mut eta = eta.clone();
    let mut best: Option<(HomeomorphicEmbedding, AugmentingSequence)> = None;
    loop {
        let fr = Frame::new(g, h, a, &eta);
        match shortest(&eta, &fr) {
            Search::Blocked(reached) => {
                if let Some((embedding, sequence)) = best {
                    return AugmentOutcome::Sequence { embedding, sequence };
                }
                let shore: Vec<usize> = (0..h.order()).filter(|&x| reached[x] || fr.loc[x] == Loc::Inside).collect();
                let edges = crate::connectivity::EdgeCut::from_shore(h, &shore).edges;
                debug_assert_eq!(edges.len(), fr.cut.len());
                return AugmentOutcome::Cut { shore, edges };
            }
            Search::Found(seq) => {
                debug_assert_eq!(check_augmenting_sequence(g, h, a, &eta, &seq), Ok(()));
                if best.as_ref().is_some_and(|(_, b)| b.len() <= seq.len()) {
                    // rerouting did not shorten the chain; keep what we had
                    let (embedding, sequence) = best.unwrap();
                    return AugmentOutcome::Sequence { embedding, sequence };
                }
                let violation = violation(g, &fr, &eta, &seq, fix);
                best = Some((eta.clone(), seq));
                let Some((e, q)) = violation else {
                    let (embedding, sequence) = best.unwrap();
                    return AugmentOutcome::Sequence { embedding, sequence };
                };
                match reroute(g, h, &eta, e, &q) {
                    Ok((next, _)) if check_embedding(g, h, &next, fix).is_ok() => eta = next,
                    _ => {
                        let (embedding, sequence) = best.unwrap();
                        return AugmentOutcome::Sequence { embedding, sequence };
                    }
                }
            }
        }
    }
}

/// Check (i)-(iv) of an augmenting sequence, plus disjointness.
pub fn check_augmenting_sequence(
    g: &Graph,
    h: &Graph,
    a: &[usize],
    eta: &HomeomorphicEmbedding,
    seq: &AugmentingSequence,
) -> Result<(), String> {
    let fr = Frame::new(g, h, a, eta);
    let n = seq.len();
    if n == 0 {
        return Err("empty sequence".into());
    }
    let mut seen = HashSet::new();
    for (i, q) in seq.paths.iter().enumerate() {
        if q.len() < 2 || q.windows(2).any(|w| !h.has_edge(w[0], w[1])) {
            return Err(format!("Q_{} is not a path of the host", i + 1));
        }
        for &x in q {
            if !seen.insert(x) {
                return Err(format!("vertex {x} used twice"));
            }
        }
        if let Some(&x) = q[1..q.len() - 1].iter().find(|&&x| fr.loc[x] != Loc::Free) {
            return Err(format!("Q_{} passes through the image at {x}", i + 1));
        }
    }
    let (x1, yn) = (seq.x(0), seq.y(n - 1));
    if fr.loc[x1] != Loc::Inside || fr.is_end_image(eta, x1, true) {
        return Err("x_1 is not in the image of G|A away from the cut".into());
    }
    if fr.loc[yn] != Loc::Outside || fr.is_end_image(eta, yn, false) {
        return Err("y_n is not in the image of G\\A away from the cut".into());
    }
    for i in 0..n - 1 {
        match (fr.loc[seq.y(i)], fr.loc[seq.x(i + 1)]) {
            (Loc::Cut(t, j), Loc::Cut(t2, j2)) if t == t2 && j2 < j => {}
            _ => return Err(format!("x_{} and y_{} are not in order on a cut image", i + 2, i + 1)),
        }
    }
    for i in 0..n {
        for j in 0..i.saturating_sub(1) {
            if let (Loc::Cut(t, pi), Loc::Cut(t2, pj)) = (fr.loc[seq.x(i)], fr.loc[seq.y(j)]) {
                if t == t2 && pj >= pi {
                    return Err(format!("x_{} lies behind y_{} on the image of a cut edge", i + 1, j + 1));
                }
            }
        }
    }
    Ok(())
}

/// The guest edges whose image contains host vertex `x`.
fn edges_through(g: &Graph, eta: &HomeomorphicEmbedding, x: usize) -> Vec<Edge> {
    if let Some(v) = eta.vmap().iter().position(|&y| y == x) {
        return g.neighbors(v).iter().map(|&w| edge(v, w)).collect();
    }
    eta.paths().iter().filter(|(_, p)| p.contains(&x)).map(|(&e, _)| e).collect()
}

/// An edge of `G \ E(F)` joining an end of `e` to an end of `f`.
fn bridge(g: &Graph, fix: &FixConstraint, e: Edge, f: Edge) -> Option<Edge> {
    for a in [e.0, e.1] {
        for b in [f.0, f.1] {
            if a != b && g.has_edge(a, b) && !fix.contains_edge(a, b) && edge(a, b) != e && edge(a, b) != f {
                return Some(edge(a, b));
            }
        }
    }
    None
}

fn shares_end(e: Edge, f: Edge) -> bool {
    e.0 == f.0 || e.0 == f.1 || e.1 == f.0 || e.1 == f.1
}

/// The first failure of the reduced conditions, as the edge to reroute and
/// the path to reroute it along.
fn violation(
    g: &Graph,
    fr: &Frame,
    eta: &HomeomorphicEmbedding,
    seq: &AugmentingSequence,
    fix: &FixConstraint,
) -> Option<(Edge, Vec<usize>)> {
    let n = seq.len();
    let cut_edge = |x: usize| match fr.loc[x] {
        Loc::Cut(t, _) => Some(edge(fr.cut[t].0, fr.cut[t].1)),
        _ => None,
    };
    let within = |e: Edge, side: bool| fr.in_a[e.0] == side && fr.in_a[e.1] == side;
    // (i) and (ii)
    for (x, y, q, side) in [(seq.x(0), seq.y(0), 0, true), (seq.y(n - 1), seq.x(n - 1), n - 1, false)] {
        let Some(et) = cut_edge(y) else { continue };
        for e in edges_through(g, eta, x).into_iter().filter(|&e| within(e, side)) {
            if shares_end(e, et) {
                return Some((e, seq.paths[q].clone()));
            }
            if let Some(b) = bridge(g, fix, e, et) {
                return Some((b, seq.paths[q].clone()));
            }
        }
    }
    // (iii)
    for i in 1..n.saturating_sub(1) {
        let (Loc::Cut(t, _), Loc::Cut(t2, _)) = (fr.loc[seq.x(i)], fr.loc[seq.y(i)]) else { continue };
        if t == t2 {
            return Some((fr.cut[t], seq.paths[i].clone()));
        }
        for (a, b) in [(fr.cut[t].0, fr.cut[t2].0), (fr.cut[t].1, fr.cut[t2].1)] {
            if g.has_edge(a, b) && !fix.contains_edge(a, b) {
                return Some((edge(a, b), seq.paths[i].clone()));
            }
        }
    }
    None
}

/// Conditions (i)-(iii) of being reduced modulo `fix`.
pub fn is_reduced_modulo(
    g: &Graph,
    h: &Graph,
    a: &[usize],
    eta: &HomeomorphicEmbedding,
    seq: &AugmentingSequence,
    fix: &FixConstraint,
) -> bool {
    let fr = Frame::new(g, h, a, eta);
    violation(g, &fr, eta, seq, fix).is_none()
}
