//! Exact tools for k-vertex-critical graphs in 2P2-free families.
//!
//! - [`graph`]: bit-row graphs, neighbourhoods, invariants, comparability
//! - [`canon`]: canonical labelling and isomorphism
//! - [`graph6`]: the graph6 interchange format
//! - [`pattern`]: named forbidden graphs and induced-subgraph search
//! - [`coloring`]: exact colouring and vertex-criticality
//! - [`generate`] / [`critical`]: isomorph-free generation and critical databases
//! - [`certify`]: certifying k-colourability decisions
//! - [`audit`]: executable checks of structural lemmas over databases
//! - [`cli`]: the `vcrit` command line

pub mod audit;
pub mod canon;
pub mod certify;
pub mod cli;
pub mod coloring;
pub mod critical;
pub mod generate;
pub mod graph;
pub mod graph6;
pub mod pattern;

pub use audit::{run_audits, AuditReport};
pub use canon::{canonical_form, canonical_labeling, CanonicalCode};
pub use certify::{decide, verify_certificate, Certificate};
pub use coloring::{chromatic_number, is_k_vertex_critical, k_colorable, Coloring, CriticalityReport};
pub use critical::{
    enumerate_critical, enumerate_critical_p3p1free, filter_family, reproduce_counts_table, CountsTable,
    CriticalDatabase,
};
pub use graph::{are_isomorphic, Graph, GraphError, GraphInvariants, VertexSet, MAX_ORDER};
pub use graph6::{decode_graph6, encode_graph6};
pub use pattern::{find_induced, is_free, Embedding, PatternId};
