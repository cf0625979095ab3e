//! Topological embedding search, rerouting an edge image, and growing the
//! guest by a 1-extension routed along a path of the host.

use cyclic5::embedding::{
    bridges, find_embedding, reroute, route_new_edge, verify_embedding, FixConstraint, SearchOutcome, DEFAULT_BUDGET,
};
use cyclic5::families::{biladder, petersen};
use cyclic5::graph::edge;

fn main() {
    let g = petersen();
    let h = biladder(7).unwrap();
    let eta = match find_embedding(&g, &h, &FixConstraint::null(), DEFAULT_BUDGET) {
        SearchOutcome::Found(e) => e,
        other => panic!("expected an embedding, got {other:?}"),
    };
    println!("Petersen into biladder(7):");
    print!("{}", eta.to_text());

    // paths of the host meeting the image only at their ends
    let owner = eta.interior_owner(h.order());
    let found = bridges(&h, &eta);
    println!("{} bridges", found.len());
    let Some(q) = found.into_iter().find(|q| owner[q[0]].is_some() && owner[q[q.len() - 1]].is_some()) else {
        println!("no bridge between two edge interiors");
        return;
    };
    println!("bridge {q:?}");
    let last = q[q.len() - 1];

    // the first edge whose image can be moved onto some bridge
    let moved = g.edges().into_iter().find_map(|e| {
        bridges(&h, &eta).into_iter().find_map(|p| reroute(&g, &h, &eta, e, &p).ok().map(|r| (e, p, r)))
    });
    if let Some((e, p, (eta2, case))) = moved {
        let valid = verify_embedding(&g, &h, &eta2, &FixConstraint::null());
        println!("image of {e:?} rerouted along {p:?}: case {case:?}, valid={valid}, new image {:?}", eta2.path(e.0, e.1));
    }

    if let (Some(e1), Some(e2)) = (owner[q[0]], owner[last]) {
        match route_new_edge(&g, &h, &eta, &q, edge(e1.0, e1.1), edge(e2.0, e2.1)) {
            Ok((g2, eta2)) => println!(
                "G+{:?}{:?} on {} vertices embeds: {}",
                e1,
                e2,
                g2.order(),
                verify_embedding(&g2, &h, &eta2, &FixConstraint::null())
            ),
            Err(err) => println!("cannot route a new edge: {err}"),
        }
    }
}
