//! Lists the forbidden-pattern catalogue and searches for induced copies.
//!
//! ```bash
//! cargo run --example pattern_catalog
//! cargo run --example pattern_catalog -- "squid:4:3"
//! ```

use vcrit::{encode_graph6, find_induced, is_free, PatternId};

fn main() {
    let names = match std::env::args().nth(1) {
        Some(a) => vec![a],
        None => [
            "2P2",
            "bull",
            "banner",
            "chair",
            "claw+P1",
            "K3+P1",
            "P3+P1",
            "P3+lP1:2",
            "squid:4:2",
            "hl:2",
            "K1l+P1:3",
            "union(C:5,K:1)",
        ]
        .iter()
        .map(|s| s.to_string())
        .collect(),
    };
    for name in names {
        let id: PatternId = match name.parse() {
            Ok(id) => id,
            Err(e) => {
                eprintln!("{name}: {e}");
                std::process::exit(2);
            }
        };
        let g = id.build().unwrap();
        println!(
            "{:<14} n={:<2} m={:<2} graph6={}",
            id.to_string(),
            g.order(),
            g.edge_count(),
            encode_graph6(&g).unwrap()
        );
    }

    // the 5-wheel contains an induced P3 but no 2P2
    let wheel = PatternId::Cycle(5)
        .build()
        .unwrap()
        .with_vertex(vcrit::VertexSet::full(5))
        .unwrap();
    let p3 = PatternId::Path(3).build().unwrap();
    println!("P3 in W5 at {:?}", find_induced(&wheel, &p3).map(|e| e.map));
    println!(
        "W5 is (2P2, bull)-free: {}",
        is_free(&wheel, &[PatternId::TwoP2, PatternId::Bull]).unwrap()
    );
}
