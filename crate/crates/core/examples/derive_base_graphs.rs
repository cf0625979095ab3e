//! Find the cyclically 5-connected cubic graphs on at most N vertices (16 by
//! default, 18 at most) that are neither handle nor circuit expansions of a
//! smaller one, and print the non-biladders among them in registry format.

use cyclic5::families::is_biladder;
use cyclic5::generator::{brute_c5c, brute_cubic_connected, irreducible_bases};
use cyclic5::graph::to_adjacency_text;

fn main() {
    let max_n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(16);
    for n in (10..=max_n).step_by(2) {
        let all = brute_cubic_connected(n).unwrap().len();
        let c5c = brute_c5c(n).unwrap().len();
        println!("# n={n}: {all} connected cubic, {c5c} cyclically 5-connected");
    }
    for g in irreducible_bases(max_n).unwrap() {
        match is_biladder(&g) {
            Some(w) => println!("# biladder p={} on {} vertices", w.p, g.order()),
            None => {
                println!("[order {}]", g.order());
                print!("{}", to_adjacency_text(&g));
            }
        }
    }
}
