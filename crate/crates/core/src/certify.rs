//! Certifying k-colourability for (2P2, H)-free graphs.
//!
//! A YES answer carries a proper k-colouring. A NO answer carries a vertex
//! set inducing a copy of a (k+1)-vertex-critical database entry; when the
//! database is complete for the family such an entry always exists.

use std::fmt::Write as _;

use thiserror::Error;

use crate::coloring::{k_colorable, Coloring};
use crate::critical::CriticalDatabase;
use crate::graph::{are_isomorphic, Graph, VertexSet};
use crate::graph6::encode_graph6;
use crate::pattern::{find_induced, find_violation, PatternError, PatternId, Violation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    Yes(Coloring),
    No { witness: VertexSet, db_index: usize },
}

#[derive(Debug, Error)]
pub enum DecideError {
    #[error("input graph is outside the family: contains {} on vertices {:?}", .0.pattern, .0.embedding.map)]
    OutsideFamily(Violation),
    #[error("database is for k = {found}, expected {expected}")]
    DatabaseMismatch { expected: usize, found: usize },
    #[error("database family does not cover {0}")]
    FamilyNotCovered(String),
    #[error("graph is not {k}-colourable but no database entry embeds; the database is incomplete")]
    IncompleteDatabase { k: usize },
    #[error(transparent)]
    Pattern(#[from] PatternError),
}

/// Decides k-colourability of `g` with a checkable certificate.
///
/// `db` must hold the (k+1)-vertex-critical graphs of a family covering
/// `family`. Database entries are searched in stored order and the first
/// one found as an induced subgraph is the witness.
pub fn decide(g: &Graph, k: usize, family: &[PatternId], db: &CriticalDatabase) -> Result<Certificate, DecideError> {
    if db.k != k + 1 {
        return Err(DecideError::DatabaseMismatch {
            expected: k + 1,
            found: db.k,
        });
    }
    if !db.covers(family)? {
        let names: Vec<String> = family.iter().map(|p| p.to_string()).collect();
        return Err(DecideError::FamilyNotCovered(names.join(",")));
    }
    if let Some(v) = find_violation(g, family)? {
        return Err(DecideError::OutsideFamily(v));
    }
    if let Some(coloring) = k_colorable(g, k) {
        return Ok(Certificate::Yes(coloring));
    }
    for (db_index, entry) in db.entries.iter().enumerate() {
        if let Some(e) = find_induced(g, entry) {
            return Ok(Certificate::No {
                witness: e.image(),
                db_index,
            });
        }
    }
    Err(DecideError::IncompleteDatabase { k })
}

/// Re-checks a certificate from scratch using only colouring and isomorphism primitives.
pub fn verify_certificate(g: &Graph, k: usize, cert: &Certificate, db: &CriticalDatabase) -> bool {
    match cert {
        Certificate::Yes(c) => c.num_colors <= k && c.is_proper_for(g),
        Certificate::No { witness, db_index } => {
            let Some(entry) = db.entries.get(*db_index) else {
                return false;
            };
            if !witness.is_subset(g.vertices()) {
                return false;
            }
            are_isomorphic(&g.induced_subgraph(*witness), entry) && k_colorable(entry, k).is_none()
        }
    }
}

/// Text form: `YES` then `v:color` lines, or `NO`, the witness vertices,
/// and the matched entry's graph6 line.
pub fn format_certificate(cert: &Certificate, db: &CriticalDatabase) -> String {
    let mut out = String::new();
    match cert {
        Certificate::Yes(c) => {
            out.push_str("YES\n");
            for (v, color) in c.colors.iter().enumerate() {
                let _ = writeln!(out, "{v}:{color}");
            }
        }
        Certificate::No { witness, db_index } => {
            out.push_str("NO\n");
            let vs: Vec<String> = witness.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(out, "{}", vs.join(" "));
            let line = db
                .entries
                .get(*db_index)
                .and_then(|e| encode_graph6(e).ok())
                .unwrap_or_default();
            let _ = writeln!(out, "{line}");
        }
    }
    out
}
