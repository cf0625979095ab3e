//! Catalogs of cyclically 5-connected cubic graphs, built two ways: as the
//! closure of the start graphs under handle and circuit expansion, and by
//! brute force over all cubic graphs.
//!
//! The brute census grows every cubic graph on `n + 2` vertices from those
//! on `n` by inserting an edge between two subdivided edges. The graphs this
//! misses are the ones where no edge can be removed without creating a
//! parallel edge: `K4`, rings of diamonds, and diamond chains hung between
//! two hubs. Those are added directly.

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::Path;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;
use thiserror::Error;

use crate::connectivity::is_cyclically_5_connected;
use crate::expansions::{circuit_expansion, handle_expansion, is_diverse, ExpansionError, ExpansionStep, StepKind};
use crate::families::{base_graphs, biladder, is_valid_biladder_parameter, FamilyError};
use crate::graph::{canonical_form, canonical_labeling, circuits_of_length, from_graph6, to_graph6, CanonicalForm, Graph};

/// Largest order the brute census handles.
pub const BRUTE_MAX: usize = 18;

#[derive(Debug, Error)]
pub enum GeneratorError {
    #[error("order {0} is outside the supported range")]
    OutOfRange(usize),
    #[error("catalog i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("catalog data is corrupt: {0}")]
    Corrupt(String),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Expansion(#[from] ExpansionError),
}

fn canonical_copy(g: &Graph) -> Graph {
    g.relabel(&canonical_labeling(g))
}

/// `n`-vertex cubic graphs that have no edge whose removal and suppression
/// leaves a simple graph.
pub fn irreducible_cubic(n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    if n == 4 {
        out.push(Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap());
    }
    if n >= 8 && n.is_multiple_of(4) {
        let mut g = Graph::empty(0);
        let d = n / 4;
        let tips: Vec<(usize, usize)> = (0..d).map(|_| diamond(&mut g)).collect();
        for i in 0..d {
            g.add_edge(tips[i].1, tips[(i + 1) % d].0).unwrap();
        }
        out.push(g);
    }
    // two hubs: three diamond chains between them, or a chain between them
    // and a looped chain at each
    if n >= 14 && (n - 2).is_multiple_of(4) {
        let total = (n - 2) / 4;
        for a in 1..=total {
            for b in a..=total {
                let c = total.saturating_sub(a + b);
                if c >= b && a + b + c == total {
                    let mut g = Graph::empty(2);
                    for len in [a, b, c] {
                        chain(&mut g, 0, 1, len);
                    }
                    out.push(g);
                }
            }
        }
        for mid in 1..=total {
            for l1 in 1..=total {
                let l2 = total.saturating_sub(mid + l1);
                if l2 >= l1 && mid + l1 + l2 == total {
                    let mut g = Graph::empty(2);
                    chain(&mut g, 0, 1, mid);
                    chain(&mut g, 0, 0, l1);
                    chain(&mut g, 1, 1, l2);
                    out.push(g);
                }
            }
        }
    }
    out
}

/// Add `K4 - e`; returns its two degree-2 tips.
fn diamond(g: &mut Graph) -> (usize, usize) {
    let a = g.add_vertex();
    let c = g.add_vertex();
    let d = g.add_vertex();
    let b = g.add_vertex();
    for (x, y) in [(a, c), (a, d), (c, d), (c, b), (d, b)] {
        g.add_edge(x, y).unwrap();
    }
    (a, b)
}

fn chain(g: &mut Graph, from: usize, to: usize, len: usize) {
    let mut prev = from;
    for _ in 0..len {
        let (a, b) = diamond(g);
        g.add_edge(prev, a).unwrap();
        prev = b;
    }
    g.add_edge(prev, to).unwrap();
}

/// Canonically labelled connected cubic graphs by order, grown on demand.
struct Census {
    connected: BTreeMap<usize, Arc<Vec<Graph>>>,
}

fn census() -> &'static Mutex<Census> {
    static CENSUS: OnceLock<Mutex<Census>> = OnceLock::new();
    CENSUS.get_or_init(|| Mutex::new(Census { connected: BTreeMap::new() }))
}

fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let mut g = a.clone();
    let off = a.order();
    for _ in 0..b.order() {
        g.add_vertex();
    }
    for (u, v) in b.edges() {
        g.add_edge(u + off, v + off).unwrap();
    }
    g
}

impl Census {
    fn connected(&mut self, n: usize) -> Arc<Vec<Graph>> {
        if let Some(list) = self.connected.get(&n) {
            return list.clone();
        }
        let list = if n < 4 || n % 2 == 1 {
            Vec::new()
        } else {
            self.grow(n)
        };
        let list = Arc::new(list);
        self.connected.insert(n, list.clone());
        list
    }

    fn grow(&mut self, n: usize) -> Vec<Graph> {
        // parents: every cubic graph on n - 2 vertices with at most two
        // components
        let mut parents: Vec<Graph> = self.connected(n - 2).to_vec();
        for a in (4..=n - 2).step_by(2) {
            let b = n - 2 - a;
            if b < a {
                break;
            }
            let (la, lb) = (self.connected(a), self.connected(b));
            for (i, x) in la.iter().enumerate() {
                for (j, y) in lb.iter().enumerate() {
                    if a < b || i <= j {
                        parents.push(disjoint_union(x, y));
                    }
                }
            }
        }
        let children: Vec<Vec<(CanonicalForm, Graph)>> = parents
            .par_iter()
            .map(|p| {
                let (comp, count) = p.components();
                let edges = p.edges();
                let mut seen = BTreeMap::new();
                for i in 0..edges.len() {
                    for j in i + 1..edges.len() {
                        let (e, f) = (edges[i], edges[j]);
                        if count == 2 && comp[e.0] == comp[f.0] {
                            continue;
                        }
                        let (g, _, _) = p.plus(e.0, e.1, f.0, f.1).unwrap();
                        seen.entry(canonical_form(&g)).or_insert(g);
                    }
                }
                seen.into_iter().collect()
            })
            .collect();
        let mut all: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
        for (form, g) in children.into_iter().flatten() {
            all.entry(form).or_insert(g);
        }
        for g in irreducible_cubic(n) {
            all.entry(canonical_form(&g)).or_insert(g);
        }
        all.into_values().map(|g| canonical_copy(&g)).collect()
    }
}

/// Every connected cubic graph on `n` vertices up to isomorphism, ordered
/// by canonical form.
pub fn brute_cubic_connected(n: usize) -> Result<Vec<Graph>, GeneratorError> {
    if !(4..=BRUTE_MAX).contains(&n) || n % 2 == 1 {
        return Err(GeneratorError::OutOfRange(n));
    }
    Ok(census().lock().unwrap().connected(n).to_vec())
}

/// The cyclically 5-connected graphs among them.
pub fn brute_c5c(n: usize) -> Result<Vec<Graph>, GeneratorError> {
    if n > BRUTE_MAX || n % 2 == 1 {
        return Err(GeneratorError::OutOfRange(n));
    }
    if n < 10 {
        return Ok(Vec::new());
    }
    Ok(brute_cubic_connected(n)?.into_par_iter().filter(is_cyclically_5_connected).collect())
}

/// Canonical forms of all handle and circuit expansions of `g`.
fn expansion_forms(g: &Graph, ops: Ops) -> BTreeSet<CanonicalForm> {
    children(g, ops).into_iter().map(|(f, _, _)| f).collect()
}

/// Cyclically 5-connected graphs of order at most `max_n` that are neither
/// a handle nor a circuit expansion of a smaller one.
pub fn irreducible_bases(max_n: usize) -> Result<Vec<Graph>, GeneratorError> {
    if max_n > BRUTE_MAX {
        return Err(GeneratorError::OutOfRange(max_n));
    }
    let mut reachable: BTreeSet<CanonicalForm> = BTreeSet::new();
    let mut out = Vec::new();
    for n in (10..=max_n).step_by(2) {
        let layer = brute_c5c(n)?;
        for g in &layer {
            if !reachable.contains(&canonical_form(g)) {
                out.push(g.clone());
            }
        }
        let forms: Vec<BTreeSet<CanonicalForm>> = layer.par_iter().map(|g| expansion_forms(g, Ops::ALL)).collect();
        reachable.extend(forms.into_iter().flatten());
    }
    Ok(out)
}

/// Which operations the closure uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Ops {
    pub handle: bool,
    pub circuit: bool,
}

impl Ops {
    pub const ALL: Ops = Ops { handle: true, circuit: true };
    pub const HANDLE: Ops = Ops { handle: true, circuit: false };
}

impl std::str::FromStr for Ops {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let mut ops = Ops { handle: false, circuit: false };
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            match part {
                "handle" => ops.handle = true,
                "circuit" => ops.circuit = true,
                other => return Err(format!("unknown operation {other:?}")),
            }
        }
        Ok(ops)
    }
}

/// All expansions of `g`: canonical form, graph, and the step producing it.
/// Ordered by form, keeping the least step per form.
fn children(g: &Graph, ops: Ops) -> Vec<(CanonicalForm, Graph, ExpansionStep)> {
    let n = g.order();
    let mut out: BTreeMap<CanonicalForm, (Graph, ExpansionStep)> = BTreeMap::new();
    let mut offer = |h: Graph, step: ExpansionStep| {
        let f = canonical_form(&h);
        match out.get(&f) {
            Some((_, old)) if *old <= step => {}
            _ => {
                out.insert(f, (h, step));
            }
        }
    };
    if ops.handle {
        let edges = g.edges();
        for i in 0..edges.len() {
            for j in i + 1..edges.len() {
                let (e, f) = (edges[i], edges[j]);
                if is_diverse(g, e, f) {
                    let h = handle_expansion(g, e, f).unwrap();
                    offer(h, ExpansionStep { kind: StepKind::Handle, args: vec![e.0, e.1, f.0, f.1], new_vertices: vec![n, n + 1] });
                }
            }
        }
    }
    if ops.circuit {
        for c in circuits_of_length(g, 5) {
            let h = circuit_expansion(g, &c).unwrap();
            offer(h, ExpansionStep { kind: StepKind::Circuit, args: c, new_vertices: (n..n + 10).collect() });
        }
    }
    out.into_iter().map(|(f, (h, s))| (f, h, s)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// a start graph, by registry name or `biladder(p)`
    Base(String),
    /// `step` applied to the stored graph of `parent`
    Expansion { parent: CanonicalForm, step: ExpansionStep },
}

impl Provenance {
    pub fn to_line(&self) -> String {
        match self {
            Provenance::Base(name) => format!("base {name}"),
            Provenance::Expansion { parent, step } => format!("{} @ {}", step.to_line(), parent.to_hex()),
        }
    }

    pub fn from_line(line: &str) -> Result<Self, GeneratorError> {
        if let Some(name) = line.strip_prefix("base ") {
            return Ok(Provenance::Base(name.trim().to_string()));
        }
        let (step, parent) = line.split_once('@').ok_or_else(|| GeneratorError::Corrupt(line.into()))?;
        let parent = CanonicalForm::from_hex(parent.trim()).ok_or_else(|| GeneratorError::Corrupt(line.into()))?;
        Ok(Provenance::Expansion { parent, step: ExpansionStep::from_line(step)? })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub graph: Graph,
    pub form: CanonicalForm,
    pub provenance: Provenance,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Catalog {
    pub max_n: usize,
    entries: BTreeMap<CanonicalForm, CatalogEntry>,
}

/// Start graphs of the closure: the registry's non-biladders and every
/// biladder up to `max_n` vertices.
pub fn start_graphs(max_n: usize) -> Result<Vec<(String, Graph)>, GeneratorError> {
    let mut out = Vec::new();
    for b in base_graphs()? {
        if !matches!(b.name, "Petersen" | "Dodecahedron") && b.graph.order() <= max_n {
            out.push((b.name.to_string(), b.graph.graph().clone()));
        }
    }
    for p in 5..=max_n / 2 {
        if is_valid_biladder_parameter(p) {
            out.push((format!("biladder({p})"), biladder(p)?.into_graph()));
        }
    }
    Ok(out)
}

/// Closure of the start graphs under the chosen operations, up to `max_n`
/// vertices, breadth first by order.
pub fn generate_catalog(max_n: usize, ops: Ops) -> Result<Catalog, GeneratorError> {
    let mut entries: BTreeMap<CanonicalForm, CatalogEntry> = BTreeMap::new();
    for (name, g) in start_graphs(max_n)? {
        let form = canonical_form(&g);
        entries.entry(form.clone()).or_insert(CatalogEntry { graph: g, form, provenance: Provenance::Base(name) });
    }
    for n in (10..max_n).step_by(2) {
        let layer: Vec<&CatalogEntry> = entries.values().filter(|e| e.graph.order() == n).collect();
        let found: Vec<Vec<(CanonicalForm, Graph, ExpansionStep)>> = layer
            .par_iter()
            .map(|e| children(&e.graph, ops).into_iter().filter(|(_, h, _)| h.order() <= max_n).collect())
            .collect();
        let parents: Vec<CanonicalForm> = layer.iter().map(|e| e.form.clone()).collect();
        for (parent, kids) in parents.into_iter().zip(found) {
            for (form, graph, step) in kids {
                entries.entry(form.clone()).or_insert_with(|| CatalogEntry {
                    graph,
                    form,
                    provenance: Provenance::Expansion { parent: parent.clone(), step },
                });
            }
        }
    }
    Ok(Catalog { max_n, entries })
}

impl Catalog {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = &CatalogEntry> {
        self.entries.values()
    }

    pub fn get(&self, form: &CanonicalForm) -> Option<&CatalogEntry> {
        self.entries.get(form)
    }

    pub fn of_order(&self, n: usize) -> Vec<&CatalogEntry> {
        self.entries.values().filter(|e| e.graph.order() == n).collect()
    }

    pub fn forms_of_order(&self, n: usize) -> BTreeSet<CanonicalForm> {
        self.of_order(n).into_iter().map(|e| e.form.clone()).collect()
    }

    /// Rebuild an entry from its provenance.
    pub fn replay(&self, form: &CanonicalForm) -> Result<Graph, GeneratorError> {
        let e = self.entries.get(form).ok_or_else(|| GeneratorError::Corrupt("unknown entry".into()))?;
        let g = match &e.provenance {
            Provenance::Base(name) => {
                if let Some(p) = name.strip_prefix("biladder(").and_then(|s| s.strip_suffix(')')) {
                    let p = p.parse().map_err(|_| GeneratorError::Corrupt(name.clone()))?;
                    biladder(p)?.into_graph()
                } else {
                    crate::families::base_graph(name)?.graph().clone()
                }
            }
            Provenance::Expansion { parent, step } => {
                let parent = self.entries.get(parent).ok_or_else(|| GeneratorError::Corrupt("missing parent".into()))?;
                step.apply(&parent.graph)?.0
            }
        };
        if canonical_form(&g) != *form {
            return Err(GeneratorError::Corrupt(format!("provenance of {} does not replay", form.to_hex())));
        }
        Ok(g)
    }

    /// Every entry is cyclically 5-connected, unique, and replays.
    pub fn verify(&self) -> Result<(), GeneratorError> {
        self.entries.par_iter().try_for_each(|(form, e)| {
            if canonical_form(&e.graph) != *form {
                return Err(GeneratorError::Corrupt(format!("entry {} has the wrong form", form.to_hex())));
            }
            if !is_cyclically_5_connected(&e.graph) {
                return Err(GeneratorError::Corrupt(format!("entry {} is not cyclically 5-connected", form.to_hex())));
            }
            self.replay(form).map(|_| ())
        })
    }

    /// Write `<dir>/<n>/graphs.g6`, `<dir>/<n>/provenance.txt` and
    /// `<dir>/index.txt`.
    pub fn save(&self, dir: &Path) -> Result<(), GeneratorError> {
        fs::create_dir_all(dir)?;
        let mut index = format!("max_n {}\n", self.max_n);
        let orders: BTreeSet<usize> = self.entries.values().map(|e| e.graph.order()).collect();
        for n in orders {
            let sub = dir.join(n.to_string());
            fs::create_dir_all(&sub)?;
            let (mut g6, mut prov) = (String::new(), String::new());
            for e in self.of_order(n) {
                g6.push_str(&to_graph6(&e.graph));
                g6.push('\n');
                prov.push_str(&e.provenance.to_line());
                prov.push('\n');
                index.push_str(&format!("{n} {}\n", e.form.to_hex()));
            }
            fs::write(sub.join("graphs.g6"), g6)?;
            fs::write(sub.join("provenance.txt"), prov)?;
        }
        fs::write(dir.join("index.txt"), index)?;
        Ok(())
    }

    /// Load a saved catalog, checking the index against recomputed forms.
    pub fn load(dir: &Path) -> Result<Catalog, GeneratorError> {
        let index = fs::read_to_string(dir.join("index.txt"))?;
        let mut lines = index.lines();
        let max_n = lines
            .next()
            .and_then(|l| l.strip_prefix("max_n "))
            .and_then(|s| s.trim().parse().ok())
            .ok_or_else(|| GeneratorError::Corrupt("index header".into()))?;
        let mut expected: BTreeMap<usize, Vec<CanonicalForm>> = BTreeMap::new();
        for line in lines {
            let (n, hex) = line.split_once(' ').ok_or_else(|| GeneratorError::Corrupt(line.into()))?;
            let n: usize = n.parse().map_err(|_| GeneratorError::Corrupt(line.into()))?;
            let form = CanonicalForm::from_hex(hex.trim()).ok_or_else(|| GeneratorError::Corrupt(line.into()))?;
            expected.entry(n).or_default().push(form);
        }
        let mut entries = BTreeMap::new();
        for (n, forms) in expected {
            let sub = dir.join(n.to_string());
            let g6 = fs::read_to_string(sub.join("graphs.g6"))?;
            let prov = fs::read_to_string(sub.join("provenance.txt"))?;
            let graphs: Vec<&str> = g6.lines().filter(|l| !l.is_empty()).collect();
            let provs: Vec<&str> = prov.lines().filter(|l| !l.is_empty()).collect();
            if graphs.len() != forms.len() || provs.len() != forms.len() {
                return Err(GeneratorError::Corrupt(format!("order {n}: index and data disagree in length")));
            }
            for ((g6, p), form) in graphs.into_iter().zip(provs).zip(forms) {
                let graph = from_graph6(g6).map_err(|e| GeneratorError::Corrupt(e.to_string()))?;
                if canonical_form(&graph) != form {
                    return Err(GeneratorError::Corrupt(format!("order {n}: {g6} does not match the index")));
                }
                entries.insert(form.clone(), CatalogEntry { graph, form, provenance: Provenance::from_line(p)? });
            }
        }
        Ok(Catalog { max_n, entries })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (4..=12).step_by(2).map(|n| brute_cubic_connected(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 19, 85]);
    }

    #[test]
    fn out_of_range() {
        assert!(matches!(brute_cubic_connected(20), Err(GeneratorError::OutOfRange(20))));
        assert!(matches!(brute_cubic_connected(7), Err(GeneratorError::OutOfRange(7))));
        assert!(brute_c5c(8).unwrap().is_empty());
    }

    #[test]
    fn irreducible_graphs_have_no_removable_edge() {
        for n in [4, 8, 14, 18] {
            for g in irreducible_cubic(n) {
                assert_eq!(g.order(), n);
                assert!((0..n).all(|v| g.degree(v) == 3));
                for (k, l) in g.edges() {
                    let mut h = g.clone();
                    h.remove_edge(k, l).unwrap();
                    let sub = crate::graph::SubcubicGraph::new(h).unwrap();
                    assert!(sub.suppress_degree2().is_err(), "edge {k}-{l} of an order-{n} seed is removable");
                }
            }
        }
    }
}
