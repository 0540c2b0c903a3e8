//! Generates a database of k-vertex-critical graphs and writes it as graph6.
//!
//! ```bash
//! cargo run --release --example generate_database -- 5 2P2,bull
//! cargo run --release --example generate_database -- 6 2P2,banner out.g6
//! ```

use std::fs::File;
use std::io::{self, BufWriter, Write};

use vcrit::pattern::parse_pattern_list;
use vcrit::{enumerate_critical, CountsTable};

fn main() {
    let mut args = std::env::args().skip(1);
    let k: usize = args.next().and_then(|a| a.parse().ok()).unwrap_or(5);
    let forbid = args.next().unwrap_or_else(|| "2P2,bull".into());
    let fail = |e: &dyn std::fmt::Display| -> ! {
        eprintln!("error: {e}");
        std::process::exit(2);
    };
    let patterns = parse_pattern_list(&forbid).unwrap_or_else(|e| fail(&e));
    let db = enumerate_critical(k, &patterns).unwrap_or_else(|e| fail(&e));
    db.validate().unwrap_or_else(|e| fail(&e));

    let sink: Box<dyn Write> = match args.next() {
        Some(path) => Box::new(File::create(&path).unwrap_or_else(|e| fail(&e))),
        None => Box::new(io::stdout()),
    };
    let mut sink = BufWriter::new(sink);
    db.write_graph6(&mut sink).unwrap();
    sink.flush().unwrap();

    eprintln!("{}: {} graphs", db.file_name(), db.len());
    eprint!("{}", db.manifest());
    eprint!("{}", CountsTable::from_databases([&db]));
}
