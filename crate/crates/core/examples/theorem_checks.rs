//! Run the lemma batteries and a few theorem checks.
//!
//! `cargo run --release --example theorem_checks -- [max_n]`

use cyclic5::embedding::DEFAULT_BUDGET;
use cyclic5::families::{biladder, petersen};
use cyclic5::verify::{check_base_containment, check_handle_or_circuit, check_two_extension, lemma_suite, LemmaConfig};

fn main() {
    let max_n = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(12);
    let cfg = LemmaConfig { max_n, ..LemmaConfig::default() };
    let start = std::time::Instant::now();
    let report = lemma_suite(&cfg).expect("lemma suite");
    print!("{}", report.to_text());
    for r in &report.results {
        for v in r.violations.iter().take(3) {
            println!("  {} violation: {v}", r.name);
        }
    }
    println!("lemmas up to n={max_n}: {} in {:.1?}", if report.passed() { "all passed" } else { "FAILURES" }, start.elapsed());

    let b9 = biladder(9).unwrap();
    println!("{}", check_base_containment(&b9, DEFAULT_BUDGET).unwrap().to_line());
    println!("{}", check_two_extension(&petersen(), &biladder(7).unwrap(), false, DEFAULT_BUDGET).unwrap().to_line());
    match check_handle_or_circuit(&petersen(), &biladder(7).unwrap(), DEFAULT_BUDGET) {
        Ok(r) => println!("{}", r.to_line()),
        Err(e) => println!("handle-or-circuit\tPetersen into the 14-vertex biladder\t{e}"),
    }
}
