//! Regenerates the counts of k-vertex-critical (2P2, bull)-free graphs.
//!
//! ```bash
//! cargo run --release --example reproduce_table -- 6
//! cargo run --release --example reproduce_table -- 7
//! ```

use std::time::Instant;

use vcrit::reproduce_counts_table;

fn main() {
    let k_max: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(6);
    let start = Instant::now();
    let table = reproduce_counts_table(k_max).unwrap_or_else(|e| {
        eprintln!("error: {e}");
        std::process::exit(2);
    });
    print!("{table}");
    eprintln!("elapsed: {:.2?}", start.elapsed());
}
