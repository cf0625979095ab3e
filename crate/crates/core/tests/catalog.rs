use std::collections::BTreeSet;

use cyclic5::connectivity::is_cyclically_5_connected;
use cyclic5::generator::{brute_c5c, generate_catalog, start_graphs, Catalog, Ops, Provenance};
use cyclic5::graph::canonical_form;

#[test]
fn closure_matches_brute_force_to_sixteen() {
    let cat = generate_catalog(16, Ops::ALL).unwrap();
    for n in (10..=16).step_by(2) {
        let brute: BTreeSet<_> = brute_c5c(n).unwrap().iter().map(canonical_form).collect();
        assert_eq!(cat.forms_of_order(n), brute, "n={n}");
    }
    assert_eq!(cat.len(), 1 + 2 + 9 + 47);
}

#[test]
fn every_entry_replays_and_is_c5c() {
    let cat = generate_catalog(14, Ops::ALL).unwrap();
    cat.verify().unwrap();
    for e in cat.entries() {
        assert!(is_cyclically_5_connected(&e.graph));
        assert_eq!(canonical_form(&cat.replay(&e.form).unwrap()), e.form);
        if let Provenance::Expansion { parent, .. } = &e.provenance {
            assert!(cat.get(parent).unwrap().graph.order() < e.graph.order());
        }
    }
}

#[test]
fn save_and_load_round_trip() {
    let cat = generate_catalog(14, Ops::ALL).unwrap();
    let dir = tempfile::tempdir().unwrap();
    cat.save(dir.path()).unwrap();
    let back = Catalog::load(dir.path()).unwrap();
    assert_eq!(back, cat);

    // a tampered graph file is caught
    let f = dir.path().join("12").join("graphs.g6");
    let text = std::fs::read_to_string(&f).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    std::fs::write(&f, format!("{}\n{}\n", lines[1], lines[0])).unwrap();
    assert!(Catalog::load(dir.path()).is_err());
}

#[test]
fn start_graphs_are_the_registry_and_biladders() {
    let names: Vec<String> = start_graphs(18).unwrap().into_iter().map(|(n, _)| n).collect();
    assert_eq!(names, ["Triplex", "Box", "Ruby", "biladder(5)", "biladder(7)", "biladder(9)"]);
}
