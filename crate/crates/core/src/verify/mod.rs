//! Existence statements run as searches: each check either returns a
//! witness that re-verifies, reports that the whole candidate space was
//! searched without success, or says the embedding budget ran out.

mod campaign;
mod lemmas;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use thiserror::Error;

use crate::connectivity::{is_cyclically_5_connected, is_cyclically_k_connected, is_dodecahedrally_connected, is_quad_connected};
use crate::embedding::{
    bridges, find_embedding, route_new_edge, verify_embedding, FixConstraint, HomeomorphicEmbedding, SearchOutcome,
};
use crate::expansions::{
    circuit_expansion, classify_extension, enumerate_typed_expansions, handle_expansion, is_diverse, one_extension,
    ExpansionError, ExpansionStep, ExpansionType, StepKind,
};
use crate::families::{base_graphs, biladder, dodecahedron, is_biladder, petersen, FamilyError};
use crate::graph::{canonical_form, circuits_of_length, is_isomorphic, to_graph6, Edge, Graph};

pub use campaign::{
    base_containment_campaign, handle_or_circuit_campaign, instance_pairs, one_extension_campaign, two_extension_campaign,
    typed_expansion_campaign, Campaign, CampaignConfig, Outcome,
};
pub use lemmas::{quad_connected_graphs, lemma_suite, LemmaConfig, LemmaReport, LemmaResult};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("the guest does not embed in the host")]
    NoBaseEmbedding,
    #[error("hypothesis not met: {0}")]
    Precondition(String),
    #[error("excluded case: {0}")]
    ExceptionApplies(String),
    #[error(transparent)]
    Expansion(#[from] ExpansionError),
    #[error(transparent)]
    Family(#[from] FamilyError),
}

/// Which statement a report is about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Theorem {
    /// every cyclically 5-connected graph contains a base graph
    BaseContainment,
    /// a 1-extension of the guest embeds, fixing `F`
    OneExtension,
    /// a typed expansion based at a quadrangle embeds
    TypedExpansion,
    /// a c5c 1- or 2-extension or circuit expansion embeds
    TwoExtension,
    /// as above with a dodecahedrally connected host: 1- or 2-extension
    TwoExtensionDodecahedral,
    /// a c5c handle or circuit expansion embeds
    HandleOrCircuit,
}

impl Theorem {
    pub const ALL: [Theorem; 6] = [
        Theorem::BaseContainment,
        Theorem::OneExtension,
        Theorem::TypedExpansion,
        Theorem::TwoExtension,
        Theorem::TwoExtensionDodecahedral,
        Theorem::HandleOrCircuit,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Theorem::BaseContainment => "base-containment",
            Theorem::OneExtension => "one-extension",
            Theorem::TypedExpansion => "typed-expansion",
            Theorem::TwoExtension => "two-extension",
            Theorem::TwoExtensionDodecahedral => "two-extension-dodecahedral",
            Theorem::HandleOrCircuit => "handle-or-circuit",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Theorem {
    type Err = VerifyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.id() == s)
            .ok_or_else(|| VerifyError::Precondition(format!("unknown theorem {s:?}")))
    }
}

/// A graph built from the guest, how it was built, and its embedding into
/// the host.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    /// base graph name, or `1-extension`, `2-extension`, `handle`,
    /// `circuit`, `type-X`
    pub label: String,
    pub steps: Vec<ExpansionStep>,
    pub graph: Graph,
    pub embedding: HomeomorphicEmbedding,
}

impl Witness {
    pub fn verify(&self, host: &Graph, fix: &FixConstraint) -> bool {
        verify_embedding(&self.graph, host, &self.embedding, fix)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Witness(Box<Witness>),
    /// every candidate was searched to the end without an embedding
    Exhausted,
    BudgetExceeded,
}

impl Verdict {
    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Witness(w) => Some(w),
            _ => None,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Witness(w) => write!(f, "witness {}", w.label),
            Verdict::Exhausted => f.write_str("exhausted-no-witness"),
            Verdict::BudgetExceeded => f.write_str("budget-exceeded"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct TheoremReport {
    pub theorem: Theorem,
    pub instance: String,
    pub verdict: Verdict,
    pub elapsed: Duration,
}

impl TheoremReport {
    /// One tab-separated line; timing is left out so output is stable.
    pub fn to_line(&self) -> String {
        format!("{}\t{}\t{}", self.theorem, self.instance, self.verdict)
    }
}

fn instance(g: &Graph, h: Option<&Graph>) -> String {
    match h {
        Some(h) => format!("G={} H={}", to_graph6(g), to_graph6(h)),
        None => format!("G={}", to_graph6(g)),
    }
}

fn report(theorem: Theorem, instance: String, start: Instant, verdict: Verdict) -> TheoremReport {
    TheoremReport { theorem, instance, verdict, elapsed: start.elapsed() }
}

/// A graph to try, in the order candidates are listed.
#[derive(Clone, Debug)]
pub(crate) struct Candidate {
    pub label: String,
    pub steps: Vec<ExpansionStep>,
    pub graph: Graph,
}

/// Keep the first candidate of each isomorphism class.
pub(crate) fn dedup(cands: Vec<Candidate>) -> Vec<Candidate> {
    let forms: Vec<_> = cands.par_iter().map(|c| canonical_form(&c.graph)).collect();
    let mut seen = BTreeSet::new();
    cands.into_iter().zip(forms).filter(|(_, f)| seen.insert(f.clone())).map(|(c, _)| c).collect()
}

/// The first candidate (in list order) that embeds in `h`.
pub(crate) fn first_embedding(cands: &[Candidate], h: &Graph, fix: &FixConstraint, budget: u64) -> Verdict {
    let over = AtomicBool::new(false);
    let hit = cands
        .par_iter()
        .filter(|c| c.graph.order() <= h.order() && c.graph.size() <= h.size())
        .find_map_first(|c| match find_embedding(&c.graph, h, fix, budget) {
            SearchOutcome::Found(embedding) => Some(Witness {
                label: c.label.clone(),
                steps: c.steps.clone(),
                graph: c.graph.clone(),
                embedding,
            }),
            SearchOutcome::BudgetExceeded => {
                over.store(true, Ordering::Relaxed);
                None
            }
            SearchOutcome::NotFound => None,
        });
    match hit {
        Some(w) => Verdict::Witness(Box::new(w)),
        None if over.load(Ordering::Relaxed) => Verdict::BudgetExceeded,
        None => Verdict::Exhausted,
    }
}

/// Try the stages in order; a later stage only runs if no earlier one
/// produced a witness.
fn staged(stages: &[Vec<Candidate>], h: &Graph, fix: &FixConstraint, budget: u64) -> Verdict {
    let mut over = false;
    for s in stages {
        match first_embedding(s, h, fix, budget) {
            Verdict::Witness(w) => return Verdict::Witness(w),
            Verdict::BudgetExceeded => over = true,
            Verdict::Exhausted => {}
        }
    }
    if over {
        Verdict::BudgetExceeded
    } else {
        Verdict::Exhausted
    }
}

/// Unordered pairs of edges with four distinct ends, in edge-list order.
pub(crate) fn disjoint_edge_pairs(g: &Graph) -> Vec<(Edge, Edge)> {
    let es = g.edges();
    let mut out = Vec::new();
    for i in 0..es.len() {
        for j in i + 1..es.len() {
            let (e, f) = (es[i], es[j]);
            if e.0 != f.0 && e.0 != f.1 && e.1 != f.0 && e.1 != f.1 {
                out.push((e, f));
            }
        }
    }
    out
}

/// Every 1-extension up to isomorphism, skipping edges of `fix`.
pub(crate) fn one_extensions(g: &Graph, fix: &FixConstraint) -> Vec<Candidate> {
    let cands = disjoint_edge_pairs(g)
        .into_iter()
        .filter(|&(e, f)| !fix.contains_edge(e.0, e.1) && !fix.contains_edge(f.0, f.1))
        .map(|(e, f)| Candidate {
            label: "1-extension".into(),
            steps: vec![ExpansionStep::plus(e.0, e.1, f.0, f.1, g.order())],
            graph: one_extension(g, e.0, e.1, f.0, f.1).unwrap().0,
        })
        .collect();
    dedup(cands)
}

/// 2-extensions `G+(e)+(f)` where the first step is short and the second
/// is based at its new quadrangle, up to isomorphism.
pub(crate) fn two_extensions(g: &Graph) -> Vec<Candidate> {
    let mut firsts = Vec::new();
    for (e, f) in disjoint_edge_pairs(g) {
        for (a, b) in [(e, f), (f, e)] {
            let class = classify_extension(g, a.0, a.1, b.0, b.1);
            if let Some(q) = class.new_quadrangle {
                firsts.push((a, b, q));
            }
        }
    }
    let mut out = Vec::new();
    for (a, b, q) in firsts {
        let n = g.order();
        let g1 = one_extension(g, a.0, a.1, b.0, b.1).unwrap().0;
        let s1 = ExpansionStep::plus(a.0, a.1, b.0, b.1, n);
        for i in 0..4 {
            let (u, v) = (q[i], q[(i + 1) % 4]);
            for f in g1.edges() {
                if q.contains(&f.0) || q.contains(&f.1) {
                    continue;
                }
                let g2 = one_extension(&g1, u, v, f.0, f.1).unwrap().0;
                out.push(Candidate {
                    label: "2-extension".into(),
                    steps: vec![s1.clone(), ExpansionStep::plus(u, v, f.0, f.1, n + 2)],
                    graph: g2,
                });
            }
        }
    }
    dedup(out)
}

pub(crate) fn handle_expansions(g: &Graph) -> Vec<Candidate> {
    let cands = disjoint_edge_pairs(g)
        .into_iter()
        .filter(|&(e, f)| is_diverse(g, e, f))
        .map(|(e, f)| Candidate {
            label: "handle".into(),
            steps: vec![ExpansionStep { kind: StepKind::Handle, args: vec![e.0, e.1, f.0, f.1], new_vertices: vec![g.order(), g.order() + 1] }],
            graph: handle_expansion(g, e, f).unwrap(),
        })
        .collect();
    dedup(cands)
}

pub(crate) fn circuit_expansions(g: &Graph) -> Vec<Candidate> {
    let n = g.order();
    let cands = circuits_of_length(g, 5)
        .into_iter()
        .map(|c| Candidate {
            label: "circuit".into(),
            steps: vec![ExpansionStep { kind: StepKind::Circuit, args: c.clone(), new_vertices: (n..n + 10).collect() }],
            graph: circuit_expansion(g, &c).unwrap(),
        })
        .collect();
    dedup(cands)
}

fn only_c5c(cands: Vec<Candidate>) -> Vec<Candidate> {
    cands.into_par_iter().filter(|c| is_cyclically_5_connected(&c.graph)).collect()
}

/// Find `η: G ↪ H` fixing `fix`, or say why not.
fn base_embedding(g: &Graph, h: &Graph, fix: &FixConstraint, budget: u64) -> Result<Option<HomeomorphicEmbedding>, VerifyError> {
    match find_embedding(g, h, fix, budget) {
        SearchOutcome::Found(e) => Ok(Some(e)),
        SearchOutcome::NotFound => Err(VerifyError::NoBaseEmbedding),
        SearchOutcome::BudgetExceeded => Ok(None),
    }
}

/// Some base graph embeds in `g`.
pub fn check_base_containment(g: &Graph, budget: u64) -> Result<TheoremReport, VerifyError> {
    let start = Instant::now();
    if !is_cyclically_5_connected(g) {
        return Err(VerifyError::Precondition("graph is not cyclically 5-connected".into()));
    }
    let cands: Vec<Candidate> = base_graphs()?
        .iter()
        .map(|b| Candidate { label: b.name.to_string(), steps: Vec::new(), graph: b.graph.graph().clone() })
        .collect();
    let verdict = first_embedding(&cands, g, &FixConstraint::null(), budget);
    Ok(report(Theorem::BaseContainment, instance(g, None), start, verdict))
}

/// A 1-extension of `g` embeds in `h`, fixing `fix`. A bridge of the
/// embedding is tried first; every 1-extension is searched if no bridge
/// joins two edges with four distinct ends.
pub fn check_one_extension(g: &Graph, h: &Graph, fix: &FixConstraint, budget: u64) -> Result<TheoremReport, VerifyError> {
    let start = Instant::now();
    let inst = instance(g, Some(h));
    if is_isomorphic(g, h) {
        return Err(VerifyError::Precondition("guest and host are isomorphic".into()));
    }
    if !is_cyclically_k_connected(g, 4) || !is_cyclically_k_connected(h, 4) {
        return Err(VerifyError::Precondition("guest and host must be cyclically 4-connected".into()));
    }
    let Some(eta) = base_embedding(g, h, fix, budget)? else {
        return Ok(report(Theorem::OneExtension, inst, start, Verdict::BudgetExceeded));
    };
    let owner = eta.interior_owner(h.order());
    for q in bridges(h, &eta) {
        let (Some(e1), Some(e2)) = (owner[q[0]], owner[q[q.len() - 1]]) else { continue };
        if fix.contains_edge(e1.0, e1.1) || fix.contains_edge(e2.0, e2.1) {
            continue;
        }
        if let Ok((g2, eta2)) = route_new_edge(g, h, &eta, &q, e1, e2) {
            if verify_embedding(&g2, h, &eta2, fix) {
                let w = Witness {
                    label: "1-extension".into(),
                    steps: vec![ExpansionStep::plus(e1.0, e1.1, e2.0, e2.1, g.order())],
                    graph: g2,
                    embedding: eta2,
                };
                return Ok(report(Theorem::OneExtension, inst, start, Verdict::Witness(Box::new(w))));
            }
        }
    }
    let verdict = first_embedding(&one_extensions(g, fix), h, fix, budget);
    Ok(report(Theorem::OneExtension, inst, start, verdict))
}

/// An expansion of one of `types` based at the quadrangle `c` embeds in
/// `h`.
pub fn check_typed_expansion(
    g: &Graph,
    c: &[usize],
    h: &Graph,
    types: &[ExpansionType],
    budget: u64,
) -> Result<TheoremReport, VerifyError> {
    let start = Instant::now();
    let inst = format!("{} C={:?} types={}", instance(g, Some(h)), c, types.iter().map(|t| t.to_string()).collect::<String>());
    if !is_quad_connected(g) {
        return Err(VerifyError::Precondition("guest is not quad-connected".into()));
    }
    if !is_cyclically_5_connected(h) {
        return Err(VerifyError::Precondition("host is not cyclically 5-connected".into()));
    }
    if base_embedding(g, h, &FixConstraint::null(), budget)?.is_none() {
        return Ok(report(Theorem::TypedExpansion, inst, start, Verdict::BudgetExceeded));
    }
    let cands: Vec<Candidate> = enumerate_typed_expansions(g, c, types)?
        .into_iter()
        .map(|t| Candidate { label: format!("type-{}", t.ty), steps: vec![t.step], graph: t.graph })
        .collect();
    let verdict = first_embedding(&cands, h, &FixConstraint::null(), budget);
    Ok(report(Theorem::TypedExpansion, inst, start, verdict))
}

/// A cyclically 5-connected 1- or 2-extension of `g` (or, unless
/// `dodecahedral`, a circuit expansion) embeds in `h`. With
/// `dodecahedral` set the host must be dodecahedrally connected.
pub fn check_two_extension(g: &Graph, h: &Graph, dodecahedral: bool, budget: u64) -> Result<TheoremReport, VerifyError> {
    let start = Instant::now();
    let theorem = if dodecahedral { Theorem::TwoExtensionDodecahedral } else { Theorem::TwoExtension };
    let inst = instance(g, Some(h));
    if is_isomorphic(g, h) {
        return Err(VerifyError::Precondition("guest and host are isomorphic".into()));
    }
    if !is_cyclically_5_connected(g) || !is_cyclically_5_connected(h) {
        return Err(VerifyError::Precondition("guest and host must be cyclically 5-connected".into()));
    }
    if dodecahedral && !is_dodecahedrally_connected(h).unwrap_or(false) {
        return Err(VerifyError::Precondition("host is not dodecahedrally connected".into()));
    }
    if base_embedding(g, h, &FixConstraint::null(), budget)?.is_none() {
        return Ok(report(theorem, inst, start, Verdict::BudgetExceeded));
    }
    let fits = |c: &Candidate| c.graph.order() <= h.order();
    let mut stages = vec![only_c5c(one_extensions(g, &FixConstraint::null()))];
    if g.order() + 4 <= h.order() {
        stages.push(only_c5c(two_extensions(g)));
    }
    if !dodecahedral && g.order() + 10 <= h.order() {
        stages.push(only_c5c(circuit_expansions(g)));
    }
    for s in &mut stages {
        s.retain(fits);
    }
    let verdict = staged(&stages, h, &FixConstraint::null(), budget);
    Ok(report(theorem, inst, start, verdict))
}

/// The excluded pairs: Petersen into a host containing the 14-vertex
/// biladder, the Dodecahedron into one containing the 24-vertex biladder,
/// and pairs of biladders.
pub fn handle_or_circuit_exception(g: &Graph, h: &Graph, budget: u64) -> Result<Option<String>, VerifyError> {
    if is_biladder(g).is_some() && is_biladder(h).is_some() {
        return Ok(Some("both graphs are biladders".into()));
    }
    let guards = [(petersen(), 7usize), (dodecahedron(), 12)];
    for (small, p) in guards {
        if g.order() == small.order() && is_isomorphic(g, &small) {
            let big = biladder(p)?;
            match find_embedding(&big, h, &FixConstraint::null(), budget) {
                SearchOutcome::Found(_) => {
                    return Ok(Some(format!("host contains the biladder on {} vertices", 2 * p)));
                }
                SearchOutcome::BudgetExceeded => {
                    return Err(VerifyError::Precondition(format!("could not decide whether the host contains the biladder on {} vertices", 2 * p)));
                }
                SearchOutcome::NotFound => {}
            }
        }
    }
    Ok(None)
}

/// A cyclically 5-connected handle or circuit expansion of `g` embeds in
/// `h`; a handle expansion when `h` is dodecahedrally connected.
pub fn check_handle_or_circuit(g: &Graph, h: &Graph, budget: u64) -> Result<TheoremReport, VerifyError> {
    let start = Instant::now();
    let inst = instance(g, Some(h));
    if is_isomorphic(g, h) {
        return Err(VerifyError::Precondition("guest and host are isomorphic".into()));
    }
    if !is_cyclically_5_connected(g) || !is_cyclically_5_connected(h) {
        return Err(VerifyError::Precondition("guest and host must be cyclically 5-connected".into()));
    }
    if let Some(why) = handle_or_circuit_exception(g, h, budget)? {
        return Err(VerifyError::ExceptionApplies(why));
    }
    if base_embedding(g, h, &FixConstraint::null(), budget)?.is_none() {
        return Ok(report(Theorem::HandleOrCircuit, inst, start, Verdict::BudgetExceeded));
    }
    let dodecahedral = is_dodecahedrally_connected(h).unwrap_or(false);
    let mut stages = vec![only_c5c(handle_expansions(g))];
    if !dodecahedral {
        stages.push(only_c5c(circuit_expansions(g)));
    }
    let verdict = staged(&stages, h, &FixConstraint::null(), budget);
    Ok(report(Theorem::HandleOrCircuit, inst, start, verdict))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::DEFAULT_BUDGET;
    use crate::generator::brute_c5c;
    use crate::graph::quadrangles;

    fn hosts_containing(g: &Graph, n: usize) -> Vec<Graph> {
        brute_c5c(n)
            .unwrap()
            .into_iter()
            .filter(|h| find_embedding(g, h, &FixConstraint::null(), DEFAULT_BUDGET).is_found())
            .collect()
    }

    #[test]
    fn petersen_contains_itself() {
        let r = check_base_containment(&petersen(), DEFAULT_BUDGET).unwrap();
        let w = r.verdict.witness().unwrap();
        assert_eq!(w.label, "Petersen");
        assert!(w.verify(&petersen(), &FixConstraint::null()));
    }

    #[test]
    fn odd_biladder_contains_petersen() {
        let h = biladder(7).unwrap();
        let r = check_base_containment(&h, DEFAULT_BUDGET).unwrap();
        assert_eq!(r.verdict.witness().unwrap().label, "Petersen");
    }

    #[test]
    fn one_extension_into_twelve_vertex_hosts() {
        let p = petersen();
        let hosts = hosts_containing(&p, 12);
        assert_eq!(hosts.len(), 1);
        for h in hosts {
            let r = check_one_extension(&p, &h, &FixConstraint::null(), DEFAULT_BUDGET).unwrap();
            let w = r.verdict.witness().expect("witness");
            assert!(w.verify(&h, &FixConstraint::null()));
            assert_eq!(w.graph.order(), 12);
        }
        assert!(matches!(
            check_one_extension(&p, &p, &FixConstraint::null(), DEFAULT_BUDGET),
            Err(VerifyError::Precondition(_))
        ));
    }

    #[test]
    fn one_extension_keeps_a_fixed_circuit() {
        let p = petersen();
        let h = handle_expansion(&p, (0, 1), (3, 8)).unwrap();
        let fix = FixConstraint::new(&[(5, 7), (7, 9), (9, 6), (6, 8), (8, 5)]).unwrap();
        let r = check_one_extension(&p, &h, &fix, DEFAULT_BUDGET).unwrap();
        assert!(r.verdict.witness().unwrap().verify(&h, &fix));
    }

    #[test]
    fn typed_expansion_of_short_extension() {
        let (g, _, _) = one_extension(&petersen(), 0, 1, 2, 3).unwrap();
        let c = quadrangles(&g).remove(0);
        let hosts = hosts_containing(&g, 14);
        assert!(!hosts.is_empty());
        for h in &hosts {
            let r = check_typed_expansion(&g, &c, h, &ExpansionType::ALL, DEFAULT_BUDGET).unwrap();
            assert!(r.verdict.witness().unwrap().verify(h, &FixConstraint::null()));
        }
    }

    #[test]
    fn petersen_into_seven_biladder() {
        let r = check_two_extension(&petersen(), &biladder(7).unwrap(), false, DEFAULT_BUDGET).unwrap();
        let w = r.verdict.witness().unwrap();
        assert!(is_cyclically_5_connected(&w.graph));
        assert!(matches!(
            check_handle_or_circuit(&petersen(), &biladder(7).unwrap(), DEFAULT_BUDGET),
            Err(VerifyError::ExceptionApplies(_))
        ));
    }

    #[test]
    fn size_forces_the_handle_witness() {
        let p = petersen();
        for h in hosts_containing(&p, 12) {
            let r = check_handle_or_circuit(&p, &h, DEFAULT_BUDGET).unwrap();
            let w = r.verdict.witness().unwrap();
            assert_eq!(w.label, "handle");
            assert!(is_isomorphic(&w.graph, &h));
        }
    }

    #[test]
    fn report_line_is_stable() {
        let r = check_base_containment(&petersen(), DEFAULT_BUDGET).unwrap();
        assert_eq!(r.to_line(), format!("base-containment\tG={}\twitness Petersen", to_graph6(&petersen())));
        assert_eq!("handle-or-circuit".parse::<Theorem>().unwrap(), Theorem::HandleOrCircuit);
    }
}
