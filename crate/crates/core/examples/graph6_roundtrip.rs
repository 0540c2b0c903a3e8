//! Encodes graphs to graph6, decodes them back, and reads a stream.
//!
//! ```bash
//! cargo run --example graph6_roundtrip
//! echo 'Dhc' | cargo run --example graph6_roundtrip -- -
//! ```

use std::io;

use vcrit::graph6::{read_graph6_stream, Graph6Reader};
use vcrit::{decode_graph6, encode_graph6, Graph, PatternId};

fn main() {
    if std::env::args().nth(1).as_deref() == Some("-") {
        for item in Graph6Reader::new(io::stdin().lock()) {
            match item {
                Ok((line, g)) => println!("line {line}: n={} edges={:?}", g.order(), g.edges()),
                Err(e) => {
                    eprintln!("error: {e}");
                    std::process::exit(2);
                }
            }
        }
        return;
    }

    let samples = [
        ("K3", Graph::complete(3).unwrap()),
        ("3P1", Graph::empty(3).unwrap()),
        ("C5", PatternId::Cycle(5).build().unwrap()),
        ("Petersen", petersen()),
    ];
    for (name, g) in &samples {
        let text = encode_graph6(g).unwrap();
        let back = decode_graph6(text.as_bytes()).unwrap();
        println!("{name:<9} {text:<12} round trip ok: {}", &back == g);
    }

    let stream = ">>graph6<<Bw\r\n\nDhc\n";
    let graphs = read_graph6_stream(stream.as_bytes()).unwrap();
    println!("stream with header, CRLF and a blank line: {} graphs", graphs.len());

    let bad = "Bw\nB\n";
    if let Err(e) = read_graph6_stream(bad.as_bytes()) {
        println!("truncated record: {e}");
    }
}

fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::new(10, &edges).unwrap()
}
