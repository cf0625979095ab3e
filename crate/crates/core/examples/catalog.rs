//! Build the catalog of cyclically 5-connected cubic graphs by expansion,
//! compare it with the brute census, and save it.
//!
//! `cargo run --release --example catalog -- 16 /tmp/catalog`

use std::path::PathBuf;

use cyclic5::generator::{brute_c5c, generate_catalog, Catalog, Ops};
use cyclic5::graph::canonical_form;

fn main() {
    let mut args = std::env::args().skip(1);
    let max_n: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(14);
    let dir = args.next().map(PathBuf::from);

    let cat = generate_catalog(max_n, Ops::ALL).unwrap();
    cat.verify().unwrap();
    for n in (10..=max_n).step_by(2) {
        let brute: std::collections::BTreeSet<_> = brute_c5c(n).unwrap().iter().map(canonical_form).collect();
        let ours = cat.forms_of_order(n);
        println!("n={n}: catalog {} brute {} equal={}", ours.len(), brute.len(), ours == brute);
    }
    let handle_only = generate_catalog(max_n, Ops::HANDLE).unwrap();
    println!("handle expansions alone reach {} of {}", handle_only.len(), cat.len());

    for e in cat.of_order(max_n).into_iter().take(3) {
        println!("{} <- {}", e.form.to_hex(), e.provenance.to_line());
    }
    if let Some(dir) = dir {
        cat.save(&dir).unwrap();
        let back = Catalog::load(&dir).unwrap();
        println!("saved to {} and reloaded: {}", dir.display(), back == cat);
    }
}
