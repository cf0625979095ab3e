//! Graph-building operations: 1-extensions `G+(u,v,x,y)`, the `&` operator,
//! handle and circuit expansions, generating sequences based at a
//! quadrangle and the typed expansions A to H.
//!
//! New vertices always get the next free ids, so `G+(u,v,x,y)` has `k = n`
//! on `uv` and `l = n + 1` on `xy`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::connectivity::is_quad_connected;
use crate::embedding::{compose, HomeomorphicEmbedding};
use crate::graph::{canonical_form, circuits_of_length, edge, CanonicalForm, Edge, Graph, GraphError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExpansionError {
    #[error("{0:?} is not an edge")]
    NotAnEdge(Edge),
    #[error("both pairs name the same edge")]
    SameEdge,
    #[error("vertices do not form a path in the given order")]
    NotAPath,
    #[error("edges are not diverse")]
    EdgesNotDiverse,
    #[error("not a circuit of length five")]
    NotAFiveCircuit,
    #[error("graph is not quad-connected")]
    NotQuadConnected,
    #[error("not a quadrangle")]
    NotAQuadrangle,
    #[error("invalid generating sequence: {0}")]
    InvalidSequence(String),
    #[error("mirror hypothesis not met: {0}")]
    HypothesisNotMet(String),
    #[error("malformed provenance line: {0}")]
    Malformed(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// `G+(u,v,x,y)`.
pub fn one_extension(g: &Graph, u: usize, v: usize, x: usize, y: usize) -> Result<(Graph, usize, usize), ExpansionError> {
    for (a, b) in [(u, v), (x, y)] {
        if a >= g.order() || b >= g.order() || !g.has_edge(a, b) {
            return Err(ExpansionError::NotAnEdge((a, b)));
        }
    }
    if edge(u, v) == edge(x, y) {
        return Err(ExpansionError::SameEdge);
    }
    Ok(g.plus(u, v, x, y)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionClass {
    pub long: bool,
    /// quadrangles of `G` containing `uv` and avoiding `x, y`, in circuit order
    pub based_at: Vec<Vec<usize>>,
    /// for a short extension, the quadrangle `u k l x` of the new graph
    pub new_quadrangle: Option<[usize; 4]>,
}

/// Long or short, and where `G+(u,v,x,y)` is based.
pub fn classify_extension(g: &Graph, u: usize, v: usize, x: usize, y: usize) -> ExtensionClass {
    let (k, l) = (g.order(), g.order() + 1);
    let mut new_quadrangle = None;
    'outer: for a in [u, v] {
        for b in [x, y] {
            if g.has_edge(a, b) {
                new_quadrangle = Some([a, k, l, b]);
                break 'outer;
            }
        }
    }
    let based_at = circuits_of_length(g, 4)
        .into_iter()
        .filter(|c| on_circuit(c, u, v) && !c.contains(&x) && !c.contains(&y))
        .collect();
    ExtensionClass { long: new_quadrangle.is_none(), based_at, new_quadrangle }
}

fn on_circuit(c: &[usize], a: usize, b: usize) -> bool {
    let n = c.len();
    (0..n).any(|i| edge(c[i], c[(i + 1) % n]) == edge(a, b))
}

/// `e` and `f` share no end and no edge is adjacent to both.
pub fn is_diverse(g: &Graph, e: Edge, f: Edge) -> bool {
    let ends = [e.0, e.1];
    if ends.contains(&f.0) || ends.contains(&f.1) {
        return false;
    }
    !ends.iter().any(|&a| g.has_edge(a, f.0) || g.has_edge(a, f.1))
}

pub fn handle_expansion(g: &Graph, e: Edge, f: Edge) -> Result<Graph, ExpansionError> {
    for x in [e, f] {
        if !g.has_edge(x.0, x.1) {
            return Err(ExpansionError::NotAnEdge(x));
        }
    }
    if !is_diverse(g, e, f) {
        return Err(ExpansionError::EdgesNotDiverse);
    }
    Ok(g.plus(e.0, e.1, f.0, f.1)?.0)
}

/// `G&(u1..u6)`: `G1 = G+(u1,u2,u3,u4)`, then `G1+(u3,l1,u5,u6)`.
pub fn ampersand(g: &Graph, us: &[usize; 6]) -> Result<Graph, ExpansionError> {
    let mut distinct = us.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() != 6 || us.iter().any(|&u| u >= g.order()) || us.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
        return Err(ExpansionError::NotAPath);
    }
    let (g1, _, l1) = g.plus(us[0], us[1], us[2], us[3])?;
    Ok(g1.plus(us[2], l1, us[4], us[5])?.0)
}

/// Subdivide the edges of a 5-circuit by `v_1..v_5` (ids `n..n+5`), add a
/// new 5-circuit `u_1..u_5` (ids `n+5..n+10`) and join `u_i v_i`.
pub fn circuit_expansion(g: &Graph, c: &[usize]) -> Result<Graph, ExpansionError> {
    if c.len() != 5 || c.iter().any(|&x| x >= g.order()) || !is_circuit_walk(g, c) {
        return Err(ExpansionError::NotAFiveCircuit);
    }
    let n = g.order();
    let mut h = g.clone();
    for i in 0..5 {
        h.remove_edge(c[i], c[(i + 1) % 5])?;
    }
    for _ in 0..10 {
        h.add_vertex();
    }
    for i in 0..5 {
        h.add_edge(c[i], n + i)?;
        h.add_edge(n + i, c[(i + 1) % 5])?;
        h.add_edge(n + 5 + i, n + 5 + (i + 1) % 5)?;
        h.add_edge(n + i, n + 5 + i)?;
    }
    Ok(h)
}

fn is_circuit_walk(g: &Graph, c: &[usize]) -> bool {
    let mut s = c.to_vec();
    s.sort_unstable();
    s.dedup();
    s.len() == c.len() && (0..c.len()).all(|i| g.has_edge(c[i], c[(i + 1) % c.len()]))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExpansionType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    H,
}

impl ExpansionType {
    pub const ALL: [ExpansionType; 8] = [
        ExpansionType::A,
        ExpansionType::B,
        ExpansionType::C,
        ExpansionType::D,
        ExpansionType::E,
        ExpansionType::F,
        ExpansionType::G,
        ExpansionType::H,
    ];

    /// Vertices added.
    pub fn delta(self) -> usize {
        match self {
            ExpansionType::A => 2,
            ExpansionType::B | ExpansionType::C | ExpansionType::D => 4,
            ExpansionType::E => 6,
            ExpansionType::F => 8,
            ExpansionType::G | ExpansionType::H => 10,
        }
    }
}

impl fmt::Display for ExpansionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for ExpansionType {
    type Err = ExpansionError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ExpansionType::ALL
            .into_iter()
            .find(|t| t.to_string().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| ExpansionError::Malformed(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StepKind {
    OneExtension,
    Ampersand,
    Handle,
    Circuit,
    Typed(ExpansionType),
}

impl fmt::Display for StepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StepKind::OneExtension => write!(f, "plus"),
            StepKind::Ampersand => write!(f, "amp"),
            StepKind::Handle => write!(f, "handle"),
            StepKind::Circuit => write!(f, "circuit"),
            StepKind::Typed(t) => write!(f, "type-{t}"),
        }
    }
}

impl FromStr for StepKind {
    type Err = ExpansionError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "plus" => StepKind::OneExtension,
            "amp" => StepKind::Ampersand,
            "handle" => StepKind::Handle,
            "circuit" => StepKind::Circuit,
            _ => StepKind::Typed(s.strip_prefix("type-").ok_or_else(|| ExpansionError::Malformed(s.into()))?.parse()?),
        })
    }
}

/// One recorded operation. Typed steps carry the quadrangle labeling
/// `u1..u4` followed by the type's own parameters:
///
/// | type | extra args |
/// |------|------------|
/// | A | `x y` |
/// | B | `v1' a b` |
/// | C | `v1' variant z` with `z = v2'` (variant 0) or `v4'` (variant 1) |
/// | D | `v1'` |
/// | E | `v1' v3'` |
/// | F | `w` (the common neighbour `v1' = v2'`) |
/// | G | `v1' w` |
/// | H | `x1 x2 x3 x4 w` |
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExpansionStep {
    pub kind: StepKind,
    pub args: Vec<usize>,
    pub new_vertices: Vec<usize>,
}

impl ExpansionStep {
    pub fn plus(u: usize, v: usize, x: usize, y: usize, n: usize) -> Self {
        ExpansionStep { kind: StepKind::OneExtension, args: vec![u, v, x, y], new_vertices: vec![n, n + 1] }
    }

    /// Apply to `g`, returning the new graph and the natural embedding of
    /// `g` into it.
    pub fn apply(&self, g: &Graph) -> Result<(Graph, HomeomorphicEmbedding), ExpansionError> {
        let a = &self.args;
        let need = |k: usize| if a.len() == k { Ok(()) } else { Err(ExpansionError::InvalidSequence(format!("{} takes {k} args", self.kind))) };
        let out = match self.kind {
            StepKind::OneExtension => {
                need(4)?;
                let (h, _, _) = one_extension(g, a[0], a[1], a[2], a[3])?;
                let eta = plus_embedding(g, a[0], a[1], a[2], a[3]);
                (h, eta)
            }
            StepKind::Handle => {
                need(4)?;
                let h = handle_expansion(g, (a[0], a[1]), (a[2], a[3]))?;
                (h, plus_embedding(g, a[0], a[1], a[2], a[3]))
            }
            StepKind::Ampersand => {
                need(6)?;
                let us: [usize; 6] = a[..].try_into().unwrap();
                let h = ampersand(g, &us)?;
                let (g1, _, l1) = g.plus(a[0], a[1], a[2], a[3])?;
                let eta = compose(&plus_embedding(g, a[0], a[1], a[2], a[3]), &plus_embedding(&g1, a[2], l1, a[4], a[5]));
                (h, eta)
            }
            StepKind::Circuit => {
                need(5)?;
                let h = circuit_expansion(g, a)?;
                let n = g.order();
                let mut eta = HomeomorphicEmbedding::identity(g);
                for i in 0..5 {
                    eta.set_path(a[i], a[(i + 1) % 5], vec![a[i], n + i, a[(i + 1) % 5]]);
                }
                (h, eta)
            }
            StepKind::Typed(t) => {
                let chain = typed_chain(g, t, a)?;
                let mut cur = g.clone();
                let mut eta = HomeomorphicEmbedding::identity(g);
                for s in &chain {
                    let (next, e) = s.apply(&cur)?;
                    eta = compose(&eta, &e);
                    cur = next;
                }
                (cur, eta)
            }
        };
        Ok(out)
    }

    pub fn to_line(&self) -> String {
        let args: Vec<String> = self.args.iter().map(usize::to_string).collect();
        let new: Vec<String> = self.new_vertices.iter().map(usize::to_string).collect();
        format!("{} {} -> {}", self.kind, args.join(" "), new.join(" "))
    }

    pub fn from_line(line: &str) -> Result<Self, ExpansionError> {
        let bad = || ExpansionError::Malformed(line.to_string());
        let (lhs, rhs) = line.split_once("->").ok_or_else(bad)?;
        let mut it = lhs.split_whitespace();
        let kind: StepKind = it.next().ok_or_else(bad)?.parse()?;
        let args = it.map(str::parse).collect::<Result<Vec<usize>, _>>().map_err(|_| bad())?;
        let new_vertices = rhs.split_whitespace().map(str::parse).collect::<Result<Vec<usize>, _>>().map_err(|_| bad())?;
        Ok(ExpansionStep { kind, args, new_vertices })
    }
}

/// The subdivision embedding `G ↪ G+(u,v,x,y)`.
fn plus_embedding(g: &Graph, u: usize, v: usize, x: usize, y: usize) -> HomeomorphicEmbedding {
    let (k, l) = (g.order(), g.order() + 1);
    let mut eta = HomeomorphicEmbedding::identity(g);
    eta.set_path(u, v, vec![u, k, v]);
    eta.set_path(x, y, vec![x, l, y]);
    eta
}

/// Steps applied in order to a starting graph, with the canonical form
/// reached after each.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GeneratingSequence {
    pub steps: Vec<ExpansionStep>,
    pub forms: Vec<CanonicalForm>,
}

impl GeneratingSequence {
    /// Record `steps` by applying them to `g0`.
    pub fn record(g0: &Graph, steps: Vec<ExpansionStep>) -> Result<(Graph, GeneratingSequence), ExpansionError> {
        let mut cur = g0.clone();
        let mut forms = Vec::with_capacity(steps.len());
        for s in &steps {
            cur = s.apply(&cur)?.0;
            forms.push(canonical_form(&cur));
        }
        Ok((cur, GeneratingSequence { steps, forms }))
    }

    /// Re-apply the steps to `g0`; fails if a stored form is not reproduced.
    pub fn replay(&self, g0: &Graph) -> Result<Graph, ExpansionError> {
        let (g, again) = GeneratingSequence::record(g0, self.steps.clone())?;
        if again.forms != self.forms {
            return Err(ExpansionError::InvalidSequence("replay does not reproduce the recorded forms".into()));
        }
        Ok(g)
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (s, f) in self.steps.iter().zip(&self.forms) {
            out.push_str(&s.to_line());
            out.push_str(" # ");
            out.push_str(&f.to_hex());
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self, ExpansionError> {
        let mut seq = GeneratingSequence::default();
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let (step, form) = line.split_once('#').ok_or_else(|| ExpansionError::Malformed(line.into()))?;
            seq.steps.push(ExpansionStep::from_line(step)?);
            seq.forms.push(CanonicalForm::from_hex(form.trim()).ok_or_else(|| ExpansionError::Malformed(line.into()))?);
        }
        Ok(seq)
    }
}

/// The natural embedding of the starting graph into the last graph of the
/// sequence.
pub fn canonical_embedding(g0: &Graph, seq: &GeneratingSequence) -> Result<HomeomorphicEmbedding, ExpansionError> {
    let mut cur = g0.clone();
    let mut eta = HomeomorphicEmbedding::identity(g0);
    for s in &seq.steps {
        let (next, e) = s.apply(&cur)?;
        eta = compose(&eta, &e);
        cur = next;
    }
    Ok(eta)
}

/// Build an `n`-extension from 1-extension arguments: step `i` must be
/// based at `C_{i-1}` and every step but the last must be short, its new
/// quadrangle becoming the next `C_i`.
pub fn n_extension(g: &Graph, c: &[usize], steps: &[[usize; 4]]) -> Result<(Graph, GeneratingSequence), ExpansionError> {
    if steps.is_empty() {
        return Err(ExpansionError::InvalidSequence("no steps".into()));
    }
    if c.len() != 4 || !g.induces_quadrangle(c) {
        return Err(ExpansionError::NotAQuadrangle);
    }
    let mut cur = g.clone();
    let mut quad: Vec<usize> = c.to_vec();
    let mut recorded = Vec::new();
    for (i, &[u, v, x, y]) in steps.iter().enumerate() {
        if !on_circuit(&quad, u, v) || quad.contains(&x) || quad.contains(&y) {
            return Err(ExpansionError::InvalidSequence(format!("step {} is not based at {quad:?}", i + 1)));
        }
        let class = classify_extension(&cur, u, v, x, y);
        let n = cur.order();
        cur = one_extension(&cur, u, v, x, y)?.0;
        recorded.push(ExpansionStep::plus(u, v, x, y, n));
        if i + 1 < steps.len() {
            let Some(q) = class.new_quadrangle else {
                return Err(ExpansionError::InvalidSequence(format!("step {} is long but not last", i + 1)));
            };
            quad = q.to_vec();
        }
    }
    GeneratingSequence::record(g, recorded)
}

/// The mirror image of a sequence whose first step is
/// `G0+(u1,u2,v1,v1')` for the quadrangle `c = [u1,u2,u3,u4]`: the first
/// step becomes `G0+(u1,u4,v1,v1'')` and later steps are carried along by
/// the isomorphism swapping `u1 ↔ k` and `v1 ↔ l`. The result is based at
/// `[u1,u4,u3,u2]`.
pub fn mirror_generating_sequence(g0: &Graph, c: &[usize; 4], seq: &GeneratingSequence) -> Result<GeneratingSequence, ExpansionError> {
    let bad = |s: &str| ExpansionError::HypothesisNotMet(s.to_string());
    let first = seq.steps.first().ok_or_else(|| bad("empty sequence"))?;
    if first.kind != StepKind::OneExtension {
        return Err(bad("first step is not a 1-extension"));
    }
    let [u1, u2, u3, u4] = *c;
    if !g0.induces_quadrangle(c) || !g0.has_edge(u1, u2) || !g0.has_edge(u1, u4) || !g0.has_edge(u2, u3) || !g0.has_edge(u3, u4) {
        return Err(bad("not a quadrangle in order"));
    }
    let v1 = off_circuit_neighbour(g0, c, u1).ok_or_else(|| bad("u1 has no neighbour off the quadrangle"))?;
    let a = &first.args;
    let others: Vec<usize> = g0.neighbors(v1).iter().copied().filter(|&w| w != u1).collect();
    if a[..2] != [u1, u2] || a[2] != v1 || !others.contains(&a[3]) || others.len() != 2 {
        return Err(bad("first step is not G0+(u1,u2,v1,v1')"));
    }
    let v1pp = if others[0] == a[3] { others[1] } else { others[0] };
    let (k, l) = (g0.order(), g0.order() + 1);
    let phi = |x: usize| match x {
        _ if x == u1 => k,
        _ if x == k => u1,
        _ if x == v1 => l,
        _ if x == l => v1,
        _ => x,
    };
    let mut steps = vec![ExpansionStep::plus(u1, u4, v1, v1pp, k)];
    for s in &seq.steps[1..] {
        steps.push(ExpansionStep { kind: s.kind, args: s.args.iter().map(|&x| phi(x)).collect(), new_vertices: s.new_vertices.clone() });
    }
    Ok(GeneratingSequence::record(g0, steps)?.1)
}

fn off_circuit_neighbour(g: &Graph, c: &[usize], u: usize) -> Option<usize> {
    g.neighbors(u).iter().copied().find(|w| !c.contains(w))
}

/// A typed expansion together with the step that builds it in one go and
/// its elementary 1-extension chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypedExpansion {
    pub ty: ExpansionType,
    pub step: ExpansionStep,
    pub graph: Graph,
    pub sequence: GeneratingSequence,
}

/// The four-step chain of a type F expansion on the quadrangle
/// `lab = [U1,U2,U3,U4]` with `w` the common neighbour of `V1` and `V2`
/// (the neighbours of `U1`, `U2` off the quadrangle):
/// `G+(U1,U2,V1,w)`, then `+(U2,k,V2,w)`, `+(k2,k,U3,U4)` and `+(k,l,k2,l2)`.
fn f_chain(g: &Graph, lab: [usize; 4], w: usize) -> Result<Vec<ExpansionStep>, ExpansionError> {
    let [u1, u2, u3, u4] = lab;
    let v1 = off_circuit_neighbour(g, &lab, u1).ok_or(ExpansionError::NotAQuadrangle)?;
    let v2 = off_circuit_neighbour(g, &lab, u2).ok_or(ExpansionError::NotAQuadrangle)?;
    if !g.has_edge(v1, w) || !g.has_edge(v2, w) || lab.contains(&w) {
        return Err(ExpansionError::InvalidSequence("w is not a common neighbour of v1 and v2".into()));
    }
    let n = g.order();
    let (k, l, k2, l2) = (n, n + 1, n + 2, n + 3);
    Ok(vec![
        ExpansionStep::plus(u1, u2, v1, w, n),
        ExpansionStep::plus(u2, k, v2, w, n + 2),
        ExpansionStep::plus(k2, k, u3, u4, n + 4),
        ExpansionStep::plus(k, l, k2, l2, n + 6),
    ])
}

/// Elementary 1-extension chain of a typed step (see [`ExpansionStep`]).
fn typed_chain(g: &Graph, t: ExpansionType, a: &[usize]) -> Result<Vec<ExpansionStep>, ExpansionError> {
    let arity = match t {
        ExpansionType::A => 6,
        ExpansionType::B => 7,
        ExpansionType::C => 7,
        ExpansionType::D => 5,
        ExpansionType::E => 6,
        ExpansionType::F => 5,
        ExpansionType::G => 6,
        ExpansionType::H => 9,
    };
    if a.len() != arity {
        return Err(ExpansionError::InvalidSequence(format!("type {t} takes {arity} args")));
    }
    let lab: [usize; 4] = a[..4].try_into().unwrap();
    if !g.induces_quadrangle(&lab) || !(0..4).all(|i| g.has_edge(lab[i], lab[(i + 1) % 4])) {
        return Err(ExpansionError::NotAQuadrangle);
    }
    let [u1, u2, u3, u4] = lab;
    let n = g.order();
    let (k, l) = (n, n + 1);
    let v = |u: usize| off_circuit_neighbour(g, &lab, u).ok_or(ExpansionError::NotAQuadrangle);
    let first = |v1p: usize| Ok::<_, ExpansionError>(ExpansionStep::plus(u1, u2, v(u1)?, v1p, n));
    let chain = match t {
        ExpansionType::A => vec![ExpansionStep::plus(u1, u2, a[4], a[5], n)],
        ExpansionType::B => vec![first(a[4])?, ExpansionStep::plus(v(u1)?, l, a[5], a[6], n + 2)],
        ExpansionType::C => {
            let second = match a[5] {
                0 => ExpansionStep::plus(k, l, v(u2)?, a[6], n + 2),
                1 => ExpansionStep::plus(u1, v(u1)?, v(u4)?, a[6], n + 2),
                _ => return Err(ExpansionError::InvalidSequence("type C variant is 0 or 1".into())),
            };
            vec![first(a[4])?, second]
        }
        ExpansionType::D => vec![first(a[4])?, ExpansionStep::plus(u1, k, u3, v(u3)?, n + 2)],
        ExpansionType::E => {
            let b = n + 3;
            vec![first(a[4])?, ExpansionStep::plus(u1, k, u3, u4, n + 2), ExpansionStep::plus(b, u4, v(u3)?, a[5], n + 4)]
        }
        ExpansionType::F => f_chain(g, lab, a[4])?,
        ExpansionType::G => {
            let s = first(a[4])?;
            let g1 = s.apply(g)?.0;
            let mut out = vec![s];
            out.extend(f_chain(&g1, [u1, k, l, v(u1)?], a[5])?);
            out
        }
        ExpansionType::H => {
            let d: [usize; 4] = a[4..8].try_into().unwrap();
            if !h_pattern(g, &lab, &d) {
                return Err(ExpansionError::InvalidSequence("second quadrangle does not fit the type H pattern".into()));
            }
            let s = ExpansionStep::plus(u1, u2, d[0], d[1], n);
            let g1 = s.apply(g)?.0;
            let mut out = vec![s];
            out.extend(f_chain(&g1, [d[0], l, k, u1], a[8])?);
            out
        }
    };
    Ok(chain)
}

/// `d = x1..x4` is a quadrangle off `C` with `x1 ~ u1`, and `u2, x2` as
/// well as `u4, x4` having a common neighbour.
fn h_pattern(g: &Graph, c: &[usize; 4], d: &[usize; 4]) -> bool {
    let common = |a: usize, b: usize| g.neighbors(a).iter().any(|w| g.has_edge(*w, b));
    g.induces_quadrangle(d)
        && (0..4).all(|i| g.has_edge(d[i], d[(i + 1) % 4]))
        && d.iter().all(|x| !c.contains(x))
        && g.has_edge(d[0], c[0])
        && common(c[1], d[1])
        && common(c[3], d[3])
}

/// The eight labelings `u1..u4` of a quadrangle given in circuit order.
pub fn quadrangle_labelings(c: &[usize]) -> Vec<[usize; 4]> {
    let mut out = Vec::with_capacity(8);
    for r in 0..4 {
        out.push([c[r], c[(r + 1) % 4], c[(r + 2) % 4], c[(r + 3) % 4]]);
        out.push([c[r], c[(r + 3) % 4], c[(r + 2) % 4], c[(r + 1) % 4]]);
    }
    out
}

/// Every expansion of the requested types based at the quadrangle `c`, one
/// per isomorphism class and type, each with the least argument list
/// producing it.
pub fn enumerate_typed_expansions(
    g: &Graph,
    c: &[usize],
    types: &[ExpansionType],
) -> Result<Vec<TypedExpansion>, ExpansionError> {
    if c.len() != 4 || !g.induces_quadrangle(c) {
        return Err(ExpansionError::NotAQuadrangle);
    }
    if !is_quad_connected(g) {
        return Err(ExpansionError::NotQuadConnected);
    }
    let c = circuit_order(g, c);
    let mut best: BTreeMap<(ExpansionType, CanonicalForm), TypedExpansion> = BTreeMap::new();
    for &t in types {
        for args in typed_candidates(g, &c, t) {
            let step = ExpansionStep { kind: StepKind::Typed(t), args, new_vertices: (g.order()..g.order() + t.delta()).collect() };
            let Ok(chain) = typed_chain(g, t, &step.args) else { continue };
            let Ok((graph, sequence)) = GeneratingSequence::record(g, chain) else { continue };
            if !typed_condition_holds(g, t, &sequence) {
                continue;
            }
            let key = (t, sequence.forms.last().unwrap().clone());
            let better = best.get(&key).is_none_or(|old| step.args < old.step.args);
            if better {
                best.insert(key, TypedExpansion { ty: t, step, graph, sequence });
            }
        }
    }
    Ok(best.into_values().collect())
}

/// Reorder four quadrangle vertices along the circuit.
fn circuit_order(g: &Graph, c: &[usize]) -> Vec<usize> {
    let mut out = vec![c[0]];
    while out.len() < 4 {
        let last = *out.last().unwrap();
        let next = c.iter().copied().find(|&x| !out.contains(&x) && g.has_edge(last, x)).unwrap();
        out.push(next);
    }
    out
}

/// Longness conditions that are part of the definitions of types A, B, C.
fn typed_condition_holds(g: &Graph, t: ExpansionType, seq: &GeneratingSequence) -> bool {
    match t {
        ExpansionType::A | ExpansionType::B | ExpansionType::C => {
            let mut cur = g.clone();
            let last = seq.steps.len() - 1;
            for (i, s) in seq.steps.iter().enumerate() {
                let a = &s.args;
                if i == last {
                    return classify_extension(&cur, a[0], a[1], a[2], a[3]).long;
                }
                cur = s.apply(&cur).unwrap().0;
            }
            unreachable!()
        }
        _ => true,
    }
}

/// Argument lists to try for type `t`.
fn typed_candidates(g: &Graph, c: &[usize], t: ExpansionType) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for lab in quadrangle_labelings(c) {
        let [u1, u2, u3, u4] = lab;
        let v = |u: usize| off_circuit_neighbour(g, &lab, u).unwrap();
        let (v1, v2) = (v(u1), v(u2));
        let others = |x: usize, not: usize| -> Vec<usize> { g.neighbors(x).iter().copied().filter(|&w| w != not).collect() };
        let base = lab.to_vec();
        let with = |extra: &[usize]| {
            let mut a = base.clone();
            a.extend_from_slice(extra);
            a
        };
        match t {
            ExpansionType::A => {
                for (x, y) in g.edges() {
                    if !lab.contains(&x) && !lab.contains(&y) {
                        out.push(with(&[x, y]));
                    }
                }
            }
            ExpansionType::B => {
                for v1p in others(v1, u1) {
                    let Ok((g1, k, l)) = g.plus(u1, u2, v1, v1p) else { continue };
                    let c1 = [v1, u1, k, l];
                    for (a, b) in g1.edges() {
                        if !c1.contains(&a) && !c1.contains(&b) {
                            out.push(with(&[v1p, a, b]));
                        }
                    }
                }
            }
            ExpansionType::C => {
                for v1p in others(v1, u1) {
                    let Ok((g1, k, l)) = g.plus(u1, u2, v1, v1p) else { continue };
                    let c1 = [v1, u1, k, l];
                    for (variant, z0, not) in [(0, v2, u2), (1, v(u4), u4)] {
                        for z in others_in(&g1, z0, not) {
                            if !c1.contains(&z0) && !c1.contains(&z) {
                                out.push(with(&[v1p, variant, z]));
                            }
                        }
                    }
                }
            }
            ExpansionType::D => {
                for v1p in others(v1, u1) {
                    out.push(with(&[v1p]));
                }
            }
            ExpansionType::E => {
                for v1p in others(v1, u1) {
                    for v3p in others(v(u3), u3) {
                        out.push(with(&[v1p, v3p]));
                    }
                }
            }
            ExpansionType::F => {
                for w in others(v1, u1) {
                    if g.has_edge(v2, w) && !lab.contains(&w) {
                        out.push(with(&[w]));
                    }
                }
            }
            ExpansionType::G => {
                for v1p in others(v1, u1) {
                    let Ok((g1, k, l)) = g.plus(u1, u2, v1, v1p) else { continue };
                    let c1 = [u1, k, l, v1];
                    let (a, b) = (off_circuit_neighbour(&g1, &c1, u1).unwrap(), off_circuit_neighbour(&g1, &c1, k).unwrap());
                    for &w in g1.neighbors(a) {
                        if g1.has_edge(b, w) && !c1.contains(&w) {
                            out.push(with(&[v1p, w]));
                        }
                    }
                }
            }
            ExpansionType::H => {
                for d in circuits_of_length(g, 4) {
                    for dl in quadrangle_labelings(&d) {
                        if !h_pattern(g, &lab, &dl) {
                            continue;
                        }
                        let Ok((g1, k, l)) = g.plus(u1, u2, dl[0], dl[1]) else { continue };
                        let c1 = [dl[0], l, k, u1];
                        let (a, b) = (off_circuit_neighbour(&g1, &c1, dl[0]).unwrap(), off_circuit_neighbour(&g1, &c1, l).unwrap());
                        for &w in g1.neighbors(a) {
                            if g1.has_edge(b, w) && !c1.contains(&w) {
                                out.push(with(&[dl[0], dl[1], dl[2], dl[3], w]));
                            }
                        }
                    }
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

fn others_in(g: &Graph, x: usize, not: usize) -> Vec<usize> {
    g.neighbors(x).iter().copied().filter(|&w| w != not).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::is_cyclically_5_connected;
    use crate::embedding::{verify_embedding, FixConstraint};
    use crate::families::petersen;

    #[test]
    fn one_extension_errors() {
        let p = petersen();
        assert_eq!(one_extension(&p, 0, 2, 5, 6).unwrap_err(), ExpansionError::NotAnEdge((0, 2)));
        assert_eq!(one_extension(&p, 0, 1, 1, 0).unwrap_err(), ExpansionError::SameEdge);
        let (g, k, l) = one_extension(&p, 0, 1, 5, 7).unwrap();
        assert_eq!((g.order(), k, l), (12, 10, 11));
    }

    #[test]
    fn short_extension_has_a_new_quadrangle() {
        let p = petersen();
        // 1 ~ 2: the quadrangle is 1, k, l, 2
        let c = classify_extension(&p, 0, 1, 2, 3);
        assert!(!c.long);
        let (g, _, _) = one_extension(&p, 0, 1, 2, 3).unwrap();
        assert!(g.induces_quadrangle(&c.new_quadrangle.unwrap()));
    }

    #[test]
    fn step_text_round_trip() {
        let s = ExpansionStep { kind: StepKind::Typed(ExpansionType::C), args: vec![0, 1, 2, 3, 9, 1, 7], new_vertices: vec![10, 11, 12, 13] };
        assert_eq!(ExpansionStep::from_line(&s.to_line()).unwrap(), s);
    }

    #[test]
    fn ampersand_and_handle() {
        let p = petersen();
        let g = ampersand(&p, &[0, 1, 2, 3, 4, 9]).unwrap();
        assert_eq!(g.order(), 14);
        assert!(is_cyclically_5_connected(&g));
        assert_eq!(ampersand(&p, &[0, 2, 1, 3, 4, 9]), Err(ExpansionError::NotAPath));
        assert_eq!(handle_expansion(&p, (0, 1), (1, 2)), Err(ExpansionError::EdgesNotDiverse));
    }

    #[test]
    fn circuit_expansion_embeds_the_original() {
        let p = petersen();
        let step = ExpansionStep { kind: StepKind::Circuit, args: vec![0, 1, 2, 3, 4], new_vertices: (10..20).collect() };
        let (g, eta) = step.apply(&p).unwrap();
        assert_eq!(g.order(), 20);
        assert!(verify_embedding(&p, &g, &eta, &FixConstraint::null()));
        assert_eq!(circuit_expansion(&p, &[0, 1, 2, 3]), Err(ExpansionError::NotAFiveCircuit));
    }
}

#[cfg(test)]
mod typed_tests {
    use super::*;
    use crate::embedding::{verify_embedding, FixConstraint};
    use crate::families::petersen;
    use crate::graph::quadrangles;

    #[test]
    fn typed_expansions_of_a_one_quadrangle_graph() {
        let (g, _, _) = one_extension(&petersen(), 0, 1, 2, 3).unwrap();
        assert!(is_quad_connected(&g));
        let c = quadrangles(&g).remove(0);
        let all = enumerate_typed_expansions(&g, &c, &ExpansionType::ALL).unwrap();
        let mut count: BTreeMap<ExpansionType, usize> = BTreeMap::new();
        for t in &all {
            *count.entry(t.ty).or_default() += 1;
            assert_eq!(t.graph.order(), g.order() + t.ty.delta());
            let eta = canonical_embedding(&g, &t.sequence).unwrap();
            assert!(verify_embedding(&g, &t.graph, &eta, &FixConstraint::null()));
            let last = t.sequence.steps.last().unwrap();
            let before = GeneratingSequence::record(&g, t.sequence.steps[..t.sequence.len() - 1].to_vec()).unwrap().0;
            let a = &last.args;
            assert!(classify_extension(&before, a[0], a[1], a[2], a[3]).long, "{:?}", t.step);
        }
        eprintln!("{count:?}");
    }
}
