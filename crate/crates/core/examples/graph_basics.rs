//! Builds small graphs and prints their invariants and canonical codes.
//!
//! ```bash
//! cargo run --example graph_basics
//! ```

use vcrit::graph::Comparability;
use vcrit::{are_isomorphic, Graph, PatternId, VertexSet};

fn main() {
    let c5 = PatternId::Cycle(5).build().unwrap();
    let wheel = c5.with_vertex(VertexSet::full(5)).unwrap();
    let k4 = Graph::complete(4).unwrap();

    for (name, g) in [("C5", &c5), ("W5", &wheel), ("K4", &k4)] {
        let inv = g.invariants().unwrap();
        println!(
            "{name}: n={} m={} chi={} omega={} alpha={} delta={} Delta={} code={}",
            g.order(),
            g.edge_count(),
            inv.chi,
            inv.omega,
            inv.alpha,
            inv.min_degree,
            inv.max_degree,
            g.canonical_form()
        );
    }

    let nb = c5.neighborhoods(0).unwrap();
    println!(
        "C5 vertex 0: N={:?} N[]={:?} non-neighbours={:?}",
        nb.open, nb.closed, nb.nonneighbors
    );
    println!(
        "C5 non-neighbours of 0 connected: {}",
        c5.is_connected_within(nb.nonneighbors)
    );

    // the path 0-1-2: N(0) is inside N(2)
    let p3 = PatternId::Path(3).build().unwrap();
    println!("P3 comparable pair: {:?}", p3.has_comparable_vertices());
    println!(
        "K4 comparable pair (adjacent allowed): {:?}",
        k4.comparable_vertices(Comparability::IncludeAdjacent)
    );

    let shuffled = c5.permuted(&[3, 0, 4, 1, 2]);
    println!("C5 ~ relabelled C5: {}", are_isomorphic(&c5, &shuffled));
    println!("C5 ~ P5: {}", are_isomorphic(&c5, &PatternId::Path(5).build().unwrap()));
}
