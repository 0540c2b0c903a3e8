//! Decides k-colourability of (2P2, bull)-free graphs and checks the certificates.
//!
//! ```bash
//! cargo run --release --example certify_coloring
//! ```

use vcrit::certify::format_certificate;
use vcrit::{decide, enumerate_critical, verify_certificate, Certificate, Graph, PatternId, VertexSet};

fn main() {
    let family = [PatternId::TwoP2, PatternId::Bull];
    let k = 3;
    let db = enumerate_critical(k + 1, &family).unwrap();
    println!("database {} with {} entries", db.file_name(), db.len());

    let c5 = PatternId::Cycle(5).build().unwrap();
    let samples = [
        ("C5", c5.clone()),
        ("W5", c5.with_vertex(VertexSet::full(5)).unwrap()),
        ("K4", Graph::complete(4).unwrap()),
        (
            "K4-e",
            Graph::new(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap(),
        ),
        ("P5", PatternId::Path(5).build().unwrap()),
    ];
    for (name, g) in &samples {
        match decide(g, k, &family, &db) {
            Ok(cert) => {
                let ok = verify_certificate(g, k, &cert, &db);
                let answer = match &cert {
                    Certificate::Yes(_) => "colourable",
                    Certificate::No { .. } => "not colourable",
                };
                println!("{name}: {answer} with {k} colours, certificate verified: {ok}");
                print!("{}", format_certificate(&cert, &db));
            }
            Err(e) => println!("{name}: {e}"),
        }
    }
}
