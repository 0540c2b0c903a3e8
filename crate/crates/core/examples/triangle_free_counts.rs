//! Counts isomorphism classes of triangle-free graphs by order.
//!
//! ```bash
//! cargo run --release --example triangle_free_counts -- 11
//! cargo run --release --example triangle_free_counts -- 10 --level-dedup
//! ```

use std::time::Instant;

use vcrit::critical::enumerate_triangle_free_with;
use vcrit::generate::Strategy;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let max_n: usize = args.first().and_then(|a| a.parse().ok()).unwrap_or(10);
    let strategy = if args.iter().any(|a| a == "--level-dedup") {
        Strategy::LevelDedup
    } else {
        Strategy::Augmentation
    };
    println!("strategy: {strategy:?}");
    for n in 1..=max_n {
        let start = Instant::now();
        let graphs = enumerate_triangle_free_with(n, strategy).expect("supported order");
        println!("n={n:2} classes={:9} ({:.2?})", graphs.len(), start.elapsed());
    }
}
