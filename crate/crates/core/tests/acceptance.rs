//! Acceptance criteria, one line each. Runs without the libtest harness so
//! the lines always print.
//!
//! Two criteria cannot hold as stated and are expected to print FAIL; for
//! those the run instead checks that the recorded finding still stands:
//!
//! * 4: only two non-biladder irreducible graphs have at most 14 vertices;
//!   the third has 18.
//! * 9: every 5-edge-cut of the Dodecahedron with a circuit on both sides
//!   cuts off one pentagon, so no cut has seven vertices on each side and
//!   the graph is dodecahedrally connected.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use cyclic5::cli;
use cyclic5::connectivity::{
    cycle_separating_cuts, is_cyclically_5_connected, is_dodecahedrally_connected, is_planar, is_quad_connected,
};
use cyclic5::embedding::{find_embedding, FixConstraint, DEFAULT_BUDGET};
use cyclic5::families::{base_graph, biladder, dodecahedron, is_biladder, petersen};
use cyclic5::generator::{brute_c5c, brute_cubic_connected, generate_catalog, irreducible_bases, Ops};
use cyclic5::graph::{canonical_form, from_graph6, is_isomorphic, quadrangles, to_graph6};
use cyclic5::verify::{
    base_containment_campaign, handle_or_circuit_campaign, lemma_suite, CampaignConfig, LemmaConfig, Outcome,
};
use cyclic5::Graph;

struct Criterion {
    id: u8,
    pass: bool,
    detail: String,
    elapsed: Duration,
}

fn timed(id: u8, f: impl FnOnce() -> (bool, String)) -> Criterion {
    let start = Instant::now();
    let (pass, detail) = f();
    let c = Criterion { id, pass, detail, elapsed: start.elapsed() };
    println!(
        "criterion {:2}: {} ({:.1}s) {}",
        c.id,
        if c.pass { "PASS" } else { "FAIL" },
        c.elapsed.as_secs_f64(),
        c.detail
    );
    c
}

fn c5c_upto(n: usize) -> Vec<Graph> {
    (10..=n).step_by(2).flat_map(|k| brute_c5c(k).unwrap()).collect()
}

fn biladder_identities() -> (bool, String) {
    let a = is_isomorphic(&biladder(5).unwrap(), &petersen());
    let b = is_isomorphic(&biladder(10).unwrap(), &dodecahedron());
    (a && b, format!("biladder(5)~Petersen={a} biladder(10)~Dodecahedron={b}"))
}

fn definition_equivalence() -> (bool, String) {
    let mut graphs = 0;
    let mut mismatches = 0;
    for n in (4..=14).step_by(2) {
        for g in brute_cubic_connected(n).unwrap() {
            graphs += 1;
            if is_cyclically_5_connected(&g) != (is_quad_connected(&g) && quadrangles(&g).is_empty()) {
                mismatches += 1;
            }
        }
    }
    (mismatches == 0, format!("graphs={graphs} mismatches={mismatches}"))
}

fn closure() -> (bool, String) {
    let cat = generate_catalog(16, Ops::ALL).unwrap();
    let mut ok = true;
    let mut parts = Vec::new();
    for n in (10..=16).step_by(2) {
        let brute: BTreeSet<_> = brute_c5c(n).unwrap().iter().map(canonical_form).collect();
        let ours = cat.forms_of_order(n);
        let diff = ours.symmetric_difference(&brute).count();
        ok &= diff == 0;
        parts.push(format!("n={n}:{}/{} diff={diff}", ours.len(), brute.len()));
    }
    (ok, parts.join(" "))
}

/// Returns the verdict and whether the recorded finding holds.
fn base_derivation() -> (bool, String, bool) {
    let first = irreducible_bases(14).unwrap();
    let again = irreducible_bases(14).unwrap();
    let deterministic = first == again;
    let (bil, non): (Vec<&Graph>, Vec<&Graph>) = first.iter().partition(|g| is_biladder(g).is_some());
    let bil_ok = bil.len() == 2
        && bil.iter().any(|g| is_isomorphic(g, &petersen()))
        && bil.iter().any(|g| is_isomorphic(g, &biladder(7).unwrap()));
    let names = ["Triplex", "Box", "Ruby"];
    let registered = |g: &Graph| names.iter().find(|nm| is_isomorphic(g, base_graph(nm).unwrap())).copied();
    let found: Vec<Option<&str>> = non.iter().map(|g| registered(g)).collect();
    let pass = deterministic && bil_ok && non.len() == 3 && found.iter().all(Option::is_some);

    // where the third one is
    let upto18 = irreducible_bases(18).unwrap();
    let non18: Vec<(usize, Option<&str>)> =
        upto18.iter().filter(|g| is_biladder(g).is_none()).map(|g| (g.order(), registered(g))).collect();
    let finding = deterministic
        && bil_ok
        && found == [Some("Triplex"), Some("Box")]
        && non18 == [(12, Some("Triplex")), (14, Some("Box")), (18, Some("Ruby"))];
    let detail = format!(
        "up to 14: biladders={} non-biladders={} {:?}; up to 18 non-biladders (order, name)={:?}; deterministic={deterministic}",
        bil.len(),
        non.len(),
        found,
        non18
    );
    (pass, detail, finding)
}

fn base_containment() -> (bool, String) {
    let c = base_containment_campaign(&c5c_upto(14), &CampaignConfig::default()).unwrap();
    (c.outcome() == Outcome::AllWitnessed, c.summary())
}

fn biladder_parity() -> (bool, String) {
    let pet = petersen();
    let mut parts = Vec::new();
    let mut ok = true;
    for p in [5, 7, 9] {
        let hit = find_embedding(&pet, &biladder(p).unwrap(), &FixConstraint::null(), DEFAULT_BUDGET).is_found();
        ok &= hit;
        parts.push(format!("Petersen<biladder({p})={hit}"));
    }
    for p in [10, 12] {
        let planar = is_planar(&biladder(p).unwrap());
        ok &= planar;
        parts.push(format!("planar(biladder({p}))={planar}"));
    }
    (ok, parts.join(" "))
}

fn lemmas() -> (bool, String) {
    let rep = lemma_suite(&LemmaConfig { max_n: 12, ..LemmaConfig::default() }).unwrap();
    let parts: Vec<String> = rep
        .results
        .iter()
        .map(|r| format!("{}:{}/{}", r.name, r.instances - r.violations.len().min(r.instances), r.instances))
        .collect();
    for r in rep.results.iter().filter(|r| !r.passed()) {
        println!("    {r}");
    }
    (rep.passed(), parts.join(" "))
}

fn handle_or_circuit() -> (bool, String) {
    let graphs = c5c_upto(14);
    let c = handle_or_circuit_campaign(&graphs, &CampaignConfig::default()).unwrap();
    // a dodecahedrally connected host must get a handle witness
    let mut wrong_kind = 0;
    for r in &c.reports {
        let h6 = r.instance.split("H=").nth(1).unwrap();
        let h = from_graph6(h6).unwrap();
        let dodec = is_dodecahedrally_connected(&h).unwrap();
        if dodec && r.verdict.witness().is_some_and(|w| w.label != "handle") {
            wrong_kind += 1;
        }
    }
    (c.outcome() == Outcome::AllWitnessed && wrong_kind == 0 && !c.reports.is_empty(), format!("{} non-handle-for-dodecahedral={wrong_kind}", c.summary()))
}

/// Returns the verdict and whether the recorded finding holds.
fn dodecahedral() -> (bool, String, bool) {
    let p = is_dodecahedrally_connected(&petersen()).unwrap();
    let d = dodecahedron();
    let dd = is_dodecahedrally_connected(&d).unwrap();
    let cuts = cycle_separating_cuts(&d, 5);
    let smaller: BTreeSet<usize> = cuts.iter().map(|c| c.shore.len().min(d.order() - c.shore.len())).collect();
    let pass = p && !dd;
    let finding = p && dd && cuts.len() == 12 && smaller == BTreeSet::from([5]);
    (pass, format!("Petersen={p} Dodecahedron={dd}; Dodecahedron has {} cyclic 5-cuts, smaller sides {smaller:?}", cuts.len()), finding)
}

fn round_trip() -> (bool, String) {
    let mut stable = true;
    for g in c5c_upto(16) {
        let s = to_graph6(&g);
        let back = from_graph6(&s).unwrap();
        stable &= back == g && to_graph6(&back) == s;
    }
    let run = |dir: &std::path::Path| {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = cli::run(
            ["cyclic5", "gen", "--max-n", "14", "--out", dir.to_str().unwrap()],
            &mut std::io::empty(),
            &mut out,
            &mut err,
        );
        let mut files: Vec<(String, Vec<u8>)> = Vec::new();
        let mut stack = vec![dir.to_path_buf()];
        while let Some(d) = stack.pop() {
            for e in std::fs::read_dir(&d).unwrap() {
                let p = e.unwrap().path();
                if p.is_dir() {
                    stack.push(p);
                } else {
                    files.push((p.strip_prefix(dir).unwrap().display().to_string(), std::fs::read(&p).unwrap()));
                }
            }
        }
        files.sort();
        (code, out, files)
    };
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    let (ra, rb) = (run(a.path()), run(b.path()));
    let identical = ra == rb && ra.0 == 0;
    (stable && identical, format!("graph6-stable={stable} gen-runs-identical={identical} files={}", ra.2.len()))
}

fn main() {
    let mut results = Vec::new();
    results.push(timed(1, biladder_identities));
    results.push(timed(2, definition_equivalence));
    results.push(timed(3, closure));
    let mut finding4 = false;
    results.push(timed(4, || {
        let (pass, detail, finding) = base_derivation();
        finding4 = finding;
        (pass, detail)
    }));
    results.push(timed(5, base_containment));
    results.push(timed(6, biladder_parity));
    results.push(timed(7, lemmas));
    results.push(timed(8, handle_or_circuit));
    let mut finding9 = false;
    results.push(timed(9, || {
        let (pass, detail, finding) = dodecahedral();
        finding9 = finding;
        (pass, detail)
    }));
    results.push(timed(10, round_trip));

    let passed = results.iter().filter(|c| c.pass).count();
    println!("acceptance: {passed}/{} criteria pass", results.len());

    let expected_failures = [(4u8, finding4), (9u8, finding9)];
    let mut ok = true;
    for c in &results {
        match expected_failures.iter().find(|(id, _)| *id == c.id) {
            Some(&(id, finding)) => {
                if !c.pass {
                    println!("criterion {id:2}: expected failure, recorded finding holds: {finding}");
                    ok &= finding;
                }
            }
            None => ok &= c.pass,
        }
    }
    if !ok {
        std::process::exit(1);
    }
}
