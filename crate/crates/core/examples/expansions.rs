//! Every expansion kind applied to small graphs, with the connectivity of
//! the result.

use cyclic5::connectivity::{is_cyclically_5_connected, is_quad_connected};
use cyclic5::expansions::{
    ampersand, circuit_expansion, classify_extension, enumerate_typed_expansions, handle_expansion, is_diverse,
    mirror_generating_sequence, one_extension, ExpansionType,
};
use cyclic5::families::petersen;
use cyclic5::graph::{circuits_of_length, quadrangles, to_graph6};

fn main() {
    let p = petersen();
    let edges = p.edges();

    let (e, f) = (edges[0], *edges.iter().find(|&&f| is_diverse(&p, edges[0], f)).unwrap());
    let h = handle_expansion(&p, e, f).unwrap();
    println!("handle {e:?} {f:?}: {} c5c={}", to_graph6(&h), is_cyclically_5_connected(&h));

    let c = circuits_of_length(&p, 5).remove(0);
    let h = circuit_expansion(&p, &c).unwrap();
    println!("circuit {c:?}: n={} c5c={}", h.order(), is_cyclically_5_connected(&h));

    let (short, _, _) = one_extension(&p, 0, 1, 2, 7).unwrap();
    let cl = classify_extension(&p, 0, 1, 2, 7);
    println!("G+(0,1,2,7): long={} quad-connected={}", cl.long, is_quad_connected(&short));

    // a path u1..u6 whose ends are far apart
    let us = [0, 1, 2, 3, 4, 9];
    match ampersand(&p, &us) {
        Ok(a) => println!("ampersand {us:?}: n={} c5c={}", a.order(), is_cyclically_5_connected(&a)),
        Err(err) => println!("ampersand {us:?}: {err}"),
    }

    let q = quadrangles(&short).remove(0);
    let typed = enumerate_typed_expansions(&short, &q, &ExpansionType::ALL).unwrap();
    for t in ExpansionType::ALL {
        let n = typed.iter().filter(|x| x.ty == t).count();
        println!("type {t}: {n} classes at C={q:?}");
    }
    // sequences opening with G+(u1,u2,v1,v1') have a mirror image
    let mirrored = typed.iter().find_map(|t| {
        let lab: [usize; 4] = t.step.args[..4].try_into().unwrap();
        mirror_generating_sequence(&short, &lab, &t.sequence).ok().map(|m| (t, m))
    });
    if let Some((t, m)) = mirrored {
        println!("type {} sequence:\n{}mirror:\n{}", t.ty, t.sequence.to_text(), m.to_text());
    }
}
