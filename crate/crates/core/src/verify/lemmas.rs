//! Exhaustive lemma batteries over every qualifying configuration in the
//! small quad-connected graphs.

use std::fmt;

use rayon::prelude::*;

use super::{circuit_expansions, dedup, first_embedding, handle_expansions, two_extensions, Candidate, Verdict};
use crate::connectivity::{is_cyclically_5_connected, is_quad_connected};
use crate::embedding::{
    augmenting_sequence, find_embedding, route_new_edge, verify_embedding, AugmentOutcome, FixConstraint,
    HomeomorphicEmbedding, SearchOutcome, DEFAULT_BUDGET,
};
use crate::expansions::{ampersand, circuit_expansion, classify_extension, handle_expansion, is_diverse, one_extension, ExpansionStep};
use crate::families::{biladder, is_biladder, is_valid_biladder_parameter};
use crate::generator::{brute_c5c, brute_cubic_connected, GeneratorError};
use crate::graph::{circuits_of_length, edge, is_isomorphic, quadrangles, to_graph6, Edge, Graph, SubcubicGraph};

#[derive(Clone, Debug)]
pub struct LemmaConfig {
    /// largest order of the graphs the batteries range over
    pub max_n: usize,
    /// largest biladder parameter for the biladder transfer checks
    pub biladder_max_p: usize,
    /// largest parameter of the bigger biladder for which the transfer
    /// statements are also checked by embedding search
    pub transfer_search_max_p: usize,
    pub budget: u64,
}

impl Default for LemmaConfig {
    fn default() -> Self {
        LemmaConfig { max_n: 12, biladder_max_p: 14, transfer_search_max_p: 9, budget: DEFAULT_BUDGET }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LemmaResult {
    pub name: &'static str,
    pub instances: usize,
    pub violations: Vec<String>,
    pub budget_exceeded: usize,
    pub note: String,
}

impl LemmaResult {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.budget_exceeded == 0
    }
}

impl fmt::Display for LemmaResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "ok" } else { "FAIL" };
        write!(
            f,
            "{}\t{}\tinstances={}\tviolations={}\tbudget-exceeded={}",
            self.name,
            verdict,
            self.instances,
            self.violations.len(),
            self.budget_exceeded
        )?;
        if !self.note.is_empty() {
            write!(f, "\t{}", self.note)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default)]
pub struct LemmaReport {
    pub results: Vec<LemmaResult>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(LemmaResult::passed)
    }

    pub fn get(&self, name: &str) -> Option<&LemmaResult> {
        self.results.iter().find(|r| r.name == name)
    }

    pub fn to_text(&self) -> String {
        self.results.iter().map(|r| format!("{r}\n")).collect()
    }
}

#[derive(Default)]
struct Tally {
    instances: usize,
    violations: Vec<String>,
    budget: usize,
    extra: [usize; 2],
}

impl Tally {
    fn merge(mut self, o: Tally) -> Tally {
        self.instances += o.instances;
        self.violations.extend(o.violations);
        self.budget += o.budget;
        self.extra[0] += o.extra[0];
        self.extra[1] += o.extra[1];
        self
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.violations.push(what());
        }
    }

    fn finish(self, name: &'static str, note: String) -> LemmaResult {
        LemmaResult { name, instances: self.instances, violations: self.violations, budget_exceeded: self.budget, note }
    }
}

fn over<F>(graphs: &[Graph], f: F) -> Tally
where
    F: Fn(&Graph) -> Tally + Sync + Send,
{
    graphs.par_iter().map(f).reduce(Tally::default, Tally::merge)
}

/// Vertex sequences of length `k` along a path, in both directions.
pub(crate) fn directed_paths(g: &Graph, k: usize) -> Vec<Vec<usize>> {
    fn grow(g: &Graph, k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if p.len() == k {
            out.push(p.clone());
            return;
        }
        let last = *p.last().unwrap();
        for &w in g.neighbors(last) {
            if !p.contains(&w) {
                p.push(w);
                grow(g, k, p, out);
                p.pop();
            }
        }
    }
    let mut out = Vec::new();
    for s in 0..g.order() {
        grow(g, k, &mut vec![s], &mut out);
    }
    out
}

/// Each 5-circuit in each of its ten orders.
fn ordered_pentagons(g: &Graph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for c in circuits_of_length(g, 5) {
        for r in 0..5 {
            let fwd: Vec<usize> = (0..5).map(|i| c[(r + i) % 5]).collect();
            let mut back = fwd.clone();
            back[1..].reverse();
            out.push(fwd);
            out.push(back);
        }
    }
    out
}

fn third_neighbour(g: &Graph, v: usize, a: usize, b: usize) -> usize {
    g.neighbors(v).iter().copied().find(|&w| w != a && w != b).unwrap()
}

fn long(g: &Graph, u: usize, v: usize, x: usize, y: usize) -> bool {
    classify_extension(g, u, v, x, y).long
}

fn based_somewhere(g: &Graph, e: Edge, f: Edge) -> bool {
    !classify_extension(g, e.0, e.1, f.0, f.1).based_at.is_empty()
}

fn new_quadrangles(g2: &Graph, n: usize) -> usize {
    quadrangles(g2).iter().filter(|q| q.iter().any(|&x| x >= n)).count()
}

/// Quad-connected cubic graphs of every even order from 10 to `max_n`.
pub fn quad_connected_graphs(max_n: usize) -> Result<Vec<Graph>, GeneratorError> {
    let mut out = Vec::new();
    for n in (10..=max_n).step_by(2) {
        let layer = brute_cubic_connected(n)?;
        out.extend(layer.into_par_iter().filter(is_quad_connected).collect::<Vec<_>>());
    }
    Ok(out)
}

fn one_extension_quad_connected(univ: &[Graph]) -> LemmaResult {
    let t = over(univ, |g| {
        let mut t = Tally::default();
        let has_quad = !quadrangles(g).is_empty();
        for (e, f) in super::disjoint_edge_pairs(g) {
            let orders: &[(Edge, Edge)] = if has_quad { &[(e, f), (f, e)] } else { &[(e, f)] };
            for &(a, b) in orders {
                if has_quad && !based_somewhere(g, a, b) {
                    continue;
                }
                let (g2, _, _) = one_extension(g, a.0, a.1, b.0, b.1).unwrap();
                let ok = is_quad_connected(&g2) && new_quadrangles(&g2, g.order()) <= 1;
                t.check(ok, || format!("{} + {a:?} {b:?}", to_graph6(g)));
            }
        }
        t
    });
    t.finish("one-extension-quad-connected", String::new())
}

fn long_extension_c5c(univ: &[Graph]) -> LemmaResult {
    let t = over(univ, |g| {
        let mut t = Tally::default();
        let quads = quadrangles(g);
        if quads.len() > 1 {
            return t;
        }
        for (e, f) in super::disjoint_edge_pairs(g) {
            for (a, b) in [(e, f), (f, e)] {
                let class = classify_extension(g, a.0, a.1, b.0, b.1);
                if !class.long || (!quads.is_empty() && class.based_at.is_empty()) {
                    continue;
                }
                let (g2, _, _) = one_extension(g, a.0, a.1, b.0, b.1).unwrap();
                t.check(is_cyclically_5_connected(&g2), || format!("{} + {a:?} {b:?}", to_graph6(g)));
            }
        }
        t
    });
    t.finish("long-extension-c5c", String::new())
}

fn path_extension_short_iff_adjacent(univ: &[Graph]) -> LemmaResult {
    let t = over(univ, |g| {
        let mut t = Tally::default();
        let c5c = is_cyclically_5_connected(g);
        let quads = quadrangles(g);
        for p in directed_paths(g, 5) {
            let qualifies = c5c
                || quads.iter().any(|c| c.contains(&p[0]) && c.contains(&p[1]) && !c.contains(&p[3]) && !c.contains(&p[4]));
            if !qualifies {
                continue;
            }
            let short = !long(g, p[0], p[1], p[3], p[4]);
            t.check(short == g.has_edge(p[0], p[4]), || format!("{} path {p:?}", to_graph6(g)));
        }
        t
    });
    t.finish("path-extension-short-iff-adjacent", String::new())
}

fn ampersand_c5c(univ: &[Graph]) -> LemmaResult {
    let t = over(univ, |g| {
        let mut t = Tally::default();
        let quads = quadrangles(g);
        if quads.len() > 1 {
            return t;
        }
        for p in directed_paths(g, 6) {
            let qualifies = quads.is_empty()
                || quads.iter().any(|c| c.contains(&p[0]) && c.contains(&p[1]) && p[3..].iter().all(|x| !c.contains(x)));
            if !qualifies {
                continue;
            }
            let us: [usize; 6] = p[..].try_into().unwrap();
            let ok = ampersand(g, &us).is_ok_and(|g2| is_cyclically_5_connected(&g2));
            t.check(ok, || format!("{} path {p:?}", to_graph6(g)));
        }
        t
    });
    t.finish("ampersand-c5c", String::new())
}

fn pentagon_extension_long(univ: &[Graph]) -> LemmaResult {
    let t = over(univ, |g| {
        let mut t = Tally::default();
        let c5c = is_cyclically_5_connected(g);
        let quads = quadrangles(g);
        for u in ordered_pentagons(g) {
            let qualifies = c5c
                || quads.iter().any(|c| {
                    c.contains(&u[2]) && c.contains(&u[3]) && [u[0], u[1], u[4]].iter().all(|x| !c.contains(x))
                });
            if !qualifies {
                continue;
            }
            let v1 = third_neighbour(g, u[0], u[1], u[4]);
            t.check(long(g, u[2], u[3], u[0], v1), || format!("{} circuit {u:?}", to_graph6(g)));
        }
        t
    });
    t.finish("pentagon-extension-long", String::new())
}

fn quadrangle_extensions_long(univ: &[Graph]) -> LemmaResult {
    let t = over(univ, |g| {
        let mut t = Tally::default();
        for c in quadrangles(g) {
            for [u1, u2, u3, u4] in crate::expansions::quadrangle_labelings(&c) {
                let v1 = third_neighbour(g, u1, u2, u4);
                let v2 = third_neighbour(g, u2, u1, u3);
                for &w1 in g.neighbors(v1).iter().filter(|&&w| w != u1) {
                    t.check(long(g, u2, u3, v1, w1), || format!("{} C={:?} w1={w1}", to_graph6(g), [u1, u2, u3, u4]));
                    for &z1 in g.neighbors(w1).iter().filter(|&&z| z != v1 && z != v2) {
                        t.check(long(g, u1, u2, w1, z1), || {
                            format!("{} C={:?} w1={w1} z1={z1}", to_graph6(g), [u1, u2, u3, u4])
                        });
                    }
                }
            }
        }
        t
    });
    t.finish("quadrangle-extensions-long", String::new())
}

fn has_circuit(g: &Graph) -> bool {
    let (_, comps) = g.components();
    g.size() + comps > g.order()
}

/// Relabel `h` so that `eta` is the identity on the vertices of the guest.
fn straighten(h: &Graph, eta: &HomeomorphicEmbedding) -> (Graph, HomeomorphicEmbedding) {
    let mut perm = vec![usize::MAX; h.order()];
    for (v, &x) in eta.vmap().iter().enumerate() {
        perm[x] = v;
    }
    let mut next = eta.vmap().len();
    for p in perm.iter_mut().filter(|p| **p == usize::MAX) {
        *p = next;
        next += 1;
    }
    let paths = eta.paths().iter().map(|(&e, p)| (e, p.iter().map(|&x| perm[x]).collect()));
    (h.relabel(&perm), HomeomorphicEmbedding::new((0..eta.vmap().len()).collect(), paths))
}

enum Routed {
    /// the first path of the augmenting sequence gave the extension
    Constructive,
    /// found by searching all 1-extensions based at the quadrangle
    Searched,
    Budget,
    Failed(String),
}

/// A 1-extension of `g` based at `c` embedding in `h` and fixing `fix`.
fn based_extension(g: &Graph, h: &Graph, eta: &HomeomorphicEmbedding, c: &[usize], fix: &FixConstraint, budget: u64) -> Routed {
    let on_c = |e: Edge| (0..4).any(|i| edge(c[i], c[(i + 1) % 4]) == e);
    if let AugmentOutcome::Sequence { embedding, sequence } = augmenting_sequence(g, h, c, eta, fix) {
        let q = &sequence.paths[0];
        let owner = embedding.interior_owner(h.order());
        if let (Some(e1), Some(e2)) = (owner[q[0]], owner[q[q.len() - 1]]) {
            if on_c(e1) && !c.contains(&e2.0) && !c.contains(&e2.1) {
                if let Ok((g2, eta2)) = route_new_edge(g, h, &embedding, q, e1, e2) {
                    if verify_embedding(&g2, h, &eta2, fix) {
                        return Routed::Constructive;
                    }
                }
            }
        }
    }
    let mut cands = Vec::new();
    for i in 0..4 {
        let (u, v) = (c[i], c[(i + 1) % 4]);
        for f in g.edges() {
            if c.contains(&f.0) || c.contains(&f.1) || fix.contains_edge(f.0, f.1) {
                continue;
            }
            cands.push(Candidate {
                label: "1-extension".into(),
                steps: vec![ExpansionStep::plus(u, v, f.0, f.1, g.order())],
                graph: one_extension(g, u, v, f.0, f.1).unwrap().0,
            });
        }
    }
    match first_embedding(&cands, h, fix, budget) {
        Verdict::Witness(_) => Routed::Searched,
        Verdict::BudgetExceeded => Routed::Budget,
        Verdict::Exhausted => Routed::Failed(format!("G={} H={} C={c:?} fix={:?}", to_graph6(g), to_graph6(h), fix.edges())),
    }
}

fn based_extension_routes(hosts: &[Graph], guests: &[Graph], budget: u64) -> LemmaResult {
    let pairs: Vec<(&Graph, &Graph)> =
        hosts.iter().flat_map(|h| guests.iter().filter(|g| g.order() < h.order()).map(move |g| (g, h))).collect();
    let t = pairs
        .par_iter()
        .map(|&(g, h)| {
            let mut t = Tally::default();
            let quads: Vec<Vec<usize>> = quadrangles(g)
                .into_iter()
                .filter(|c| {
                    let rest: Vec<usize> = (0..g.order()).filter(|v| !c.contains(v)).collect();
                    has_circuit(&g.induced(&rest))
                })
                .collect();
            if quads.is_empty() {
                return t;
            }
            let eta = match find_embedding(g, h, &FixConstraint::null(), budget) {
                SearchOutcome::Found(e) => e,
                SearchOutcome::NotFound => return t,
                SearchOutcome::BudgetExceeded => {
                    t.budget += 1;
                    return t;
                }
            };
            let (h2, eta2) = straighten(h, &eta);
            for c in &quads {
                let mut settings = vec![FixConstraint::null()];
                let fixed = (3..=g.order()).flat_map(|k| circuits_of_length(g, k)).find(|d| {
                    d.iter().all(|x| !c.contains(x))
                        && (0..d.len()).all(|i| eta2.path(d[i], d[(i + 1) % d.len()]).is_some_and(|p| p.len() == 2))
                });
                if let Some(d) = fixed {
                    let edges: Vec<Edge> = (0..d.len()).map(|i| edge(d[i], d[(i + 1) % d.len()])).collect();
                    settings.push(FixConstraint::new(&edges).unwrap());
                }
                for fix in settings {
                    t.instances += 1;
                    match based_extension(g, &h2, &eta2, c, &fix, budget) {
                        Routed::Constructive => t.extra[0] += 1,
                        Routed::Searched => t.extra[1] += 1,
                        Routed::Budget => t.budget += 1,
                        Routed::Failed(why) => t.violations.push(why),
                    }
                }
            }
            t
        })
        .reduce(Tally::default, Tally::merge);
    let note = format!("routed={} searched={}", t.extra[0], t.extra[1]);
    t.finish("based-extension-routes", note)
}

fn double_path_handle(c5c: &[Graph], budget: u64) -> LemmaResult {
    let t = over(c5c, |g| {
        let mut t = Tally::default();
        let handles: Vec<Candidate> = handle_expansions(g).into_iter().filter(|c| is_cyclically_5_connected(&c.graph)).collect();
        let mut hosts = Vec::new();
        for p in directed_paths(g, 5) {
            let (g1, _, _) = one_extension(g, p[0], p[1], p[2], p[3]).unwrap();
            let (g2, _, _) = one_extension(&g1, p[1], p[2], p[3], p[4]).unwrap();
            hosts.push(Candidate { label: format!("{p:?}"), steps: Vec::new(), graph: g2 });
        }
        for host in dedup(hosts) {
            t.instances += 1;
            match first_embedding(&handles, &host.graph, &FixConstraint::null(), budget) {
                Verdict::Witness(_) => {}
                Verdict::BudgetExceeded => t.budget += 1,
                Verdict::Exhausted => t.violations.push(format!("{} path {}", to_graph6(g), host.label)),
            }
        }
        t
    });
    t.finish("double-path-handle", String::new())
}

fn two_extension_biladders(c5c: &[Graph], budget: u64) -> LemmaResult {
    let t = over(c5c, |g| {
        let mut t = Tally::default();
        let handles = handle_expansions(g);
        for cand in two_extensions(g) {
            let g1 = cand.steps[0].apply(g).unwrap().0;
            let a = &cand.steps[1].args;
            if !long(&g1, a[0], a[1], a[2], a[3]) || !is_cyclically_5_connected(&cand.graph) {
                continue;
            }
            t.instances += 1;
            match first_embedding(&handles, &cand.graph, &FixConstraint::null(), budget) {
                Verdict::Witness(_) => {}
                Verdict::BudgetExceeded => t.budget += 1,
                Verdict::Exhausted => {
                    t.extra[0] += 1;
                    if is_biladder(g).is_none() || is_biladder(&cand.graph).is_none() {
                        t.violations.push(format!("G={} H={}", to_graph6(g), to_graph6(&cand.graph)));
                    }
                }
            }
        }
        t
    });
    let note = format!("without-handle={}", t.extra[0]);
    t.finish("two-extension-biladders", note)
}

/// Delete the rungs `u_i v_i` and `u_{i+1} v_{i+1}` of the biladder on `2q`
/// vertices, suppress, and return the smaller graph together with the
/// edges corresponding to `e` and `f`.
fn drop_two_rungs(g1: &Graph, q: usize, i: usize, e: Edge, f: Edge) -> Option<(Graph, Edge, Edge)> {
    let r1 = (i, q + i);
    let r2 = ((i + 1) % q, q + (i + 1) % q);
    let mut d = g1.clone();
    d.remove_edge(r1.0, r1.1).ok()?;
    d.remove_edge(r2.0, r2.1).ok()?;
    let dead: Vec<bool> = (0..d.order()).map(|v| d.degree(v) == 2).collect();
    let walk = |from: usize, towards: usize| {
        let (mut prev, mut cur) = (from, towards);
        while dead[cur] {
            let next = d.neighbors(cur).iter().copied().find(|&w| w != prev).unwrap();
            prev = cur;
            cur = next;
        }
        cur
    };
    let (small, map) = SubcubicGraph::new(d.clone()).ok()?.suppress_degree2().ok()?;
    let image = |(a, b): Edge| {
        let x = walk(b, a);
        let y = walk(a, b);
        Some(edge(map[x]?, map[y]?))
    };
    Some((small.into_graph(), image(e)?, image(f)?))
}

fn biladder_handle_transfer(cfg: &LemmaConfig) -> LemmaResult {
    let ps: Vec<usize> = (7..=cfg.biladder_max_p.saturating_sub(2))
        .filter(|&p| p != 10 && is_valid_biladder_parameter(p) && is_valid_biladder_parameter(p + 2))
        .collect();
    let t = ps
        .par_iter()
        .map(|&p| {
            let mut t = Tally::default();
            let q = p + 2;
            let g = biladder(p).unwrap();
            let g1 = biladder(q).unwrap();
            for (e, f) in super::disjoint_edge_pairs(&g1) {
                if !is_diverse(&g1, e, f) {
                    continue;
                }
                let rungs = |i: usize| [edge(i, q + i), edge((i + 1) % q, q + (i + 1) % q)];
                let ok = (0..q).any(|i| {
                    if rungs(i).contains(&e) || rungs(i).contains(&f) {
                        return false;
                    }
                    drop_two_rungs(&g1, q, i, e, f)
                        .is_some_and(|(small, e2, f2)| is_diverse(&small, e2, f2) && is_isomorphic(&small, &g))
                });
                t.check(ok, || format!("p={q} e={e:?} f={f:?}"));
            }
            if q <= cfg.transfer_search_max_p {
                let handles = handle_expansions(&g);
                let hosts: Vec<Candidate> = super::disjoint_edge_pairs(&g1)
                    .into_iter()
                    .filter(|&(e, f)| is_diverse(&g1, e, f))
                    .map(|(e, f)| Candidate { label: format!("{e:?} {f:?}"), steps: Vec::new(), graph: handle_expansion(&g1, e, f).unwrap() })
                    .collect();
                for host in dedup(hosts) {
                    t.instances += 1;
                    match first_embedding(&handles, &host.graph, &FixConstraint::null(), cfg.budget) {
                        Verdict::Witness(_) => t.extra[0] += 1,
                        Verdict::BudgetExceeded => t.budget += 1,
                        Verdict::Exhausted => t.violations.push(format!("p={q} handle {} has no handle of p={p}", host.label)),
                    }
                }
            }
            t
        })
        .reduce(Tally::default, Tally::merge);
    let note = format!("searched={}", t.extra[0]);
    t.finish("biladder-handle-transfer", note)
}

fn biladder_circuit_transfer(cfg: &LemmaConfig) -> LemmaResult {
    let ps: Vec<usize> = (5..=cfg.transfer_search_max_p.saturating_sub(2))
        .filter(|&p| is_valid_biladder_parameter(p) && is_valid_biladder_parameter(p + 2))
        .collect();
    let mut t = Tally::default();
    for p in ps {
        let g = biladder(p).unwrap();
        let g1 = biladder(p + 2).unwrap();
        let expansions = circuit_expansions(&g);
        let hosts: Vec<Candidate> = circuits_of_length(&g1, 5)
            .into_iter()
            .map(|c| Candidate { label: format!("{c:?}"), steps: Vec::new(), graph: circuit_expansion(&g1, &c).unwrap() })
            .collect();
        for host in dedup(hosts) {
            t.instances += 1;
            match first_embedding(&expansions, &host.graph, &FixConstraint::null(), cfg.budget) {
                Verdict::Witness(_) => {}
                Verdict::BudgetExceeded => t.budget += 1,
                Verdict::Exhausted => t.violations.push(format!("p={} circuit {}", p + 2, host.label)),
            }
        }
    }
    t.finish("biladder-circuit-transfer", String::new())
}

/// Run every battery. The quad-connected graphs of order at most
/// `cfg.max_n` are the universe for the extension lemmas; the routing
/// battery pairs every smaller connected cubic graph with each cyclically
/// 5-connected host in that range.
pub fn lemma_suite(cfg: &LemmaConfig) -> Result<LemmaReport, GeneratorError> {
    let univ = quad_connected_graphs(cfg.max_n)?;
    let mut c5c = Vec::new();
    for n in (10..=cfg.max_n).step_by(2) {
        c5c.extend(brute_c5c(n)?);
    }
    let mut guests = Vec::new();
    for n in (4..cfg.max_n).step_by(2) {
        guests.extend(brute_cubic_connected(n)?);
    }
    let results = vec![
        one_extension_quad_connected(&univ),
        long_extension_c5c(&univ),
        path_extension_short_iff_adjacent(&univ),
        ampersand_c5c(&univ),
        pentagon_extension_long(&univ),
        quadrangle_extensions_long(&univ),
        based_extension_routes(&c5c, &guests, cfg.budget),
        double_path_handle(&c5c, cfg.budget),
        two_extension_biladders(&c5c, cfg.budget),
        biladder_handle_transfer(cfg),
        biladder_circuit_transfer(cfg),
    ];
    Ok(LemmaReport { results })
}
