//! Runs the structural audits over regenerated databases.
//!
//! ```bash
//! cargo run --release --example audit_lemmas -- 5
//! ```

use vcrit::audit::{audit_hl_lemma, audit_neighbors_of_s, audit_squid_lemma};
use vcrit::{run_audits, PatternId, VertexSet};

fn main() {
    let k: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(4);
    let mut violations = 0;
    let mut reports = run_audits(k).unwrap();
    reports.push(audit_squid_lemma(3, 2).unwrap());
    reports.push(audit_hl_lemma(k, 2).unwrap());
    let wheel = PatternId::Cycle(5)
        .build()
        .unwrap()
        .with_vertex(VertexSet::full(5))
        .unwrap();
    reports.push(audit_neighbors_of_s(&wheel).unwrap());
    for r in &reports {
        println!("{r}");
        violations += r.violations.len();
    }
    if violations > 0 {
        std::process::exit(3);
    }
}
