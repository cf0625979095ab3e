//! Biladders: the small ones named, parity of Petersen containment, and
//! planarity of the even ones.

use cyclic5::connectivity::{is_cyclically_5_connected, is_planar};
use cyclic5::embedding::{find_embedding, FixConstraint, DEFAULT_BUDGET};
use cyclic5::families::{biladder, dodecahedron, is_biladder, is_valid_biladder_parameter, petersen};
use cyclic5::graph::{is_isomorphic, to_graph6};

fn main() {
    let p5 = biladder(5).unwrap();
    let p10 = biladder(10).unwrap();
    println!("biladder(5) is Petersen: {}", is_isomorphic(&p5, &petersen()));
    println!("biladder(10) is the Dodecahedron: {}", is_isomorphic(&p10, &dodecahedron()));

    let pet = petersen();
    for p in (5..=12).filter(|&p| is_valid_biladder_parameter(p)) {
        let g = biladder(p).unwrap();
        let contains = find_embedding(&pet, &g, &FixConstraint::null(), DEFAULT_BUDGET).is_found();
        println!(
            "p={p:2} n={:2} c5c={} planar={} contains-petersen={contains} {}",
            g.order(),
            is_cyclically_5_connected(&g),
            is_planar(&g),
            to_graph6(&g)
        );
    }

    // recognition recovers the rung labelling
    let w = is_biladder(&biladder(9).unwrap()).unwrap();
    println!("recognised p={} u={:?}", w.p, w.u);
}
