//! Augmenting sequences for the quadrangle shore of a short 1-extension of
//! the Petersen graph embedded in larger cyclically 5-connected graphs.

use cyclic5::embedding::{
    augmenting_sequence, check_augmenting_sequence, find_embedding, AugmentOutcome, FixConstraint, DEFAULT_BUDGET,
};
use cyclic5::expansions::{classify_extension, one_extension};
use cyclic5::families::petersen;
use cyclic5::generator::brute_c5c;
use cyclic5::graph::{quadrangles, to_graph6};

fn main() {
    let p = petersen();
    // edges (0,1) and (2,7) are at distance one, giving a short extension
    let (g, _, _) = one_extension(&p, 0, 1, 2, 7).unwrap();
    let class = classify_extension(&p, 0, 1, 2, 7);
    let c = quadrangles(&g).pop().expect("a short extension has a quadrangle");
    println!("G = {} (long={}), C = {c:?}", to_graph6(&g), class.long);

    for h in brute_c5c(14).unwrap() {
        let Some(eta) = find_embedding(&g, &h, &FixConstraint::null(), DEFAULT_BUDGET).found() else { continue };
        match augmenting_sequence(&g, &h, &c, &eta, &FixConstraint::null()) {
            AugmentOutcome::Sequence { embedding, sequence } => {
                let ok = check_augmenting_sequence(&g, &h, &c, &embedding, &sequence).is_ok();
                let lens: Vec<usize> = sequence.paths.iter().map(|q| q.len() - 1).collect();
                println!("H = {}: sequence of {} paths, lengths {lens:?}, valid={ok}", to_graph6(&h), sequence.len());
            }
            AugmentOutcome::Cut { shore, edges } => {
                println!("H = {}: cut of {} edges, shore {shore:?}", to_graph6(&h), edges.len());
            }
        }
    }
}
