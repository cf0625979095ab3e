//! Connectivity classes of the small cubic graphs, and a planar shore guild
//! on a 30-vertex graph built from two halves of the Dodecahedron.

use cyclic5::connectivity::{
    cycle_separating_cuts, is_cyclically_5_connected, is_cyclically_k_connected, is_dodecahedrally_connected,
    is_quad_connected, planar_guild_cut, shore_guilds,
};
use cyclic5::families::{biladder, dodecahedron, petersen};
use cyclic5::generator::brute_cubic_connected;
use cyclic5::graph::{circuits_of_length, quadrangles};
use cyclic5::Graph;

fn main() {
    println!(" n  cubic  c4c  quad  c5c");
    for n in (10..=14).step_by(2) {
        let all = brute_cubic_connected(n).unwrap();
        let c4 = all.iter().filter(|g| is_cyclically_k_connected(g, 4)).count();
        let quad = all.iter().filter(|g| is_quad_connected(g)).count();
        let c5 = all.iter().filter(|g| is_cyclically_5_connected(g)).count();
        let mismatch = all
            .iter()
            .filter(|g| is_cyclically_5_connected(g) != (is_quad_connected(g) && quadrangles(g).is_empty()))
            .count();
        println!("{n:2} {:6} {c4:4} {quad:5} {c5:4}  mismatches={mismatch}", all.len());
    }

    // the 5-cuts of the Dodecahedron all cut off a single pentagon
    let d = dodecahedron();
    let cuts = cycle_separating_cuts(&d, 5);
    let sides: Vec<usize> = cuts.iter().map(|c| c.shore.len().min(d.order() - c.shore.len())).collect();
    println!("dodecahedron: {} cycle-separating 5-cuts, smaller sides {:?}", cuts.len(), sides.iter().max());
    println!("dodecahedron dodecahedrally connected: {:?}", is_dodecahedrally_connected(&d));
    println!("petersen dodecahedrally connected: {:?}", is_dodecahedrally_connected(&petersen()));

    println!("biladder(12) dodecahedrally connected: {:?}", is_dodecahedrally_connected(&biladder(12).unwrap()));

    let g = two_caps();
    match planar_guild_cut(&g) {
        Some((cut, guild)) => {
            let total = shore_guilds(&g, &cut).unwrap().len();
            println!(
                "two caps (c5c={}): planar guild on a shore of {} vertices, order {:?}, one of {total} guilds",
                is_cyclically_5_connected(&g),
                cut.shore.len(),
                guild.normalized_order()
            );
        }
        None => println!("two caps: dodecahedrally connected"),
    }
}

/// Two copies of the Dodecahedron with a face removed, glued leg to leg.
fn two_caps() -> Graph {
    let d = dodecahedron();
    let face = circuits_of_length(&d, 5).remove(0);
    let rest: Vec<usize> = (0..d.order()).filter(|v| !face.contains(v)).collect();
    let idx = |v: usize| rest.iter().position(|&x| x == v).unwrap();
    let m = rest.len();
    let mut g = Graph::empty(2 * m);
    for (u, v) in d.edges() {
        if !face.contains(&u) && !face.contains(&v) {
            g.add_edge(idx(u), idx(v)).unwrap();
            g.add_edge(m + idx(u), m + idx(v)).unwrap();
        }
    }
    for &f in &face {
        let leg = d.neighbors(f).iter().copied().find(|w| !face.contains(w)).unwrap();
        g.add_edge(idx(leg), m + idx(leg)).unwrap();
    }
    g
}
