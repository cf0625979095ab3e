use super::{planarity::is_planar, ConnectivityError, EdgeCut};
use crate::graph::{Graph, SubcubicGraph};

/// A graph whose vertices have degree 1 or 3, with a cyclic order on the
/// degree-1 vertices. Orders equal up to rotation and reflection give equal
/// guilds.
#[derive(Clone, Debug)]
pub struct Guild {
    pub graph: SubcubicGraph,
    pub order: Vec<usize>,
}

impl Guild {
    pub fn new(graph: SubcubicGraph, order: Vec<usize>) -> Guild {
        debug_assert!((0..graph.order()).all(|v| matches!(graph.degree(v), 1 | 3)));
        debug_assert_eq!(order.len(), (0..graph.order()).filter(|&v| graph.degree(v) == 1).count());
        Guild { graph, order }
    }

    /// Smallest rotation of the order or of its reverse.
    pub fn normalized_order(&self) -> Vec<usize> {
        let k = self.order.len();
        let mut best = self.order.clone();
        let mut rev = self.order.clone();
        rev.reverse();
        for seq in [&self.order, &rev] {
            for r in 0..k {
                let rot: Vec<usize> = (0..k).map(|i| seq[(i + r) % k]).collect();
                if rot < best {
                    best = rot;
                }
            }
        }
        best
    }
}

impl PartialEq for Guild {
    fn eq(&self, other: &Guild) -> bool {
        self.graph == other.graph && self.normalized_order() == other.normalized_order()
    }
}

impl Eq for Guild {}

/// The shore guilds of `A = cut.shore`: the graph `G|A` together with the
/// cut edges and their outer ends as leaves, under every cyclic order of the
/// leaves. Shore vertices keep their relative order and come first; leaf `i`
/// hangs off the `i`-th cut edge.
pub fn shore_guilds(g: &Graph, cut: &EdgeCut) -> Result<Vec<Guild>, ConnectivityError> {
    let n = g.order();
    let mut inside = vec![false; n];
    for &a in &cut.shore {
        inside[a] = true;
    }
    let mut ends = vec![false; n];
    for (i, &(u, v)) in cut.edges.iter().enumerate() {
        if inside[u] == inside[v] {
            return Err(ConnectivityError::NotACut(cut.edges.clone()));
        }
        for w in [u, v] {
            if std::mem::replace(&mut ends[w], true) {
                let other = cut.edges[..i].iter().copied().find(|&(a, b)| a == w || b == w).unwrap();
                return Err(ConnectivityError::NotAMatching(other, (u, v)));
            }
        }
    }
    let boundary = EdgeCut::from_shore(g, &cut.shore);
    let mut mine = cut.edges.clone();
    mine.sort_unstable();
    if boundary.edges != mine {
        return Err(ConnectivityError::NotACut(cut.edges.clone()));
    }

    let s = cut.shore.len();
    let k = cut.edges.len();
    let mut h = g.induced(&cut.shore);
    let mut index = vec![usize::MAX; n];
    for (i, &a) in cut.shore.iter().enumerate() {
        index[a] = i;
    }
    for &(u, v) in &cut.edges {
        let a = if inside[u] { u } else { v };
        let leaf = h.add_vertex();
        h.add_edge(index[a], leaf).expect("fresh leaf");
    }
    let graph = SubcubicGraph::new(h).expect("shore of a cubic graph");
    let leaves: Vec<usize> = (s..s + k).collect();
    Ok(cyclic_orders(&leaves).into_iter().map(|order| Guild::new(graph.clone(), order)).collect())
}

/// Every cyclic order of `items` up to rotation and reflection: `(k-1)!/2`
/// of them for `k >= 3`.
pub fn cyclic_orders(items: &[usize]) -> Vec<Vec<usize>> {
    let k = items.len();
    if k <= 2 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    let mut rest: Vec<usize> = items[1..].to_vec();
    permute(&mut rest, 0, &mut |perm| {
        if perm[0] < perm[perm.len() - 1] {
            let mut order = vec![items[0]];
            order.extend_from_slice(perm);
            out.push(order);
        }
    });
    out.sort();
    out
}

fn permute(xs: &mut Vec<usize>, i: usize, f: &mut dyn FnMut(&[usize])) {
    if i == xs.len() {
        f(xs);
        return;
    }
    for j in i..xs.len() {
        xs.swap(i, j);
        permute(xs, i + 1, f);
        xs.swap(i, j);
    }
}

/// A guild is planar when it can be drawn in a disc with the leaves on the
/// boundary in the given cyclic order. Decided by adding a circuit through
/// the leaves in order and a hub joined to every leaf.
pub fn is_planar_guild(guild: &Guild) -> bool {
    let mut h = guild.graph.graph().clone();
    let leaves = &guild.order;
    let k = leaves.len();
    if k >= 2 {
        for i in 0..k {
            let (a, b) = (leaves[i], leaves[(i + 1) % k]);
            if !h.has_edge(a, b) {
                h.add_edge(a, b).unwrap();
            }
        }
    }
    let hub = h.add_vertex();
    for &l in leaves {
        h.add_edge(hub, l).unwrap();
    }
    is_planar(&h)
}
