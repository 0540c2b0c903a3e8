//! Computes chromatic numbers and vertex-criticality with witness colourings.
//!
//! ```bash
//! cargo run --example criticality_check
//! ```

use vcrit::coloring::CriticalityFailure;
use vcrit::{chromatic_number, is_k_vertex_critical, k_colorable, Graph, PatternId, VertexSet};

fn main() {
    let c5 = PatternId::Cycle(5).build().unwrap();
    let samples = [
        ("K4", Graph::complete(4).unwrap(), 4),
        ("C5", c5.clone(), 3),
        ("C6", PatternId::Cycle(6).build().unwrap(), 3),
        ("W5", c5.with_vertex(VertexSet::full(5)).unwrap(), 4),
        (
            "K4+pendant",
            Graph::complete(4)
                .unwrap()
                .with_vertex(VertexSet::singleton(0))
                .unwrap(),
            4,
        ),
    ];
    for (name, g, k) in &samples {
        let chi = chromatic_number(g).unwrap();
        let report = is_k_vertex_critical(g, *k).unwrap();
        let verdict = match report.failure {
            None => "critical".to_string(),
            Some(CriticalityFailure::ChromaticMismatch { chi }) => format!("chi is {chi}"),
            Some(CriticalityFailure::VertexNotCritical { vertex }) => format!("deleting {vertex} keeps chi"),
        };
        println!("{name:<11} chi={chi} {k}-vertex-critical: {verdict}");
        if report.is_critical_for.is_some() {
            for (v, c) in report.per_vertex.iter().enumerate() {
                let c = c.as_ref().unwrap();
                println!("    G-{v}: {:?} ({} colours)", c.colors, c.num_colors);
            }
        }
    }
    let c = k_colorable(&c5, 3).unwrap();
    println!(
        "C5 3-colouring: {:?}, classes {:?}",
        c.colors,
        (0..c.num_colors).map(|i| c.class(i)).collect::<Vec<_>>()
    );
}
