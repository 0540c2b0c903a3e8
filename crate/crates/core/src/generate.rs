//! Isomorph-free generation of graphs in hereditary classes.
//!
//! Graphs grow one vertex at a time. A child is accepted when deleting its
//! canonically last maximum-degree vertex gives back the parent's
//! isomorphism class; children of one parent are deduplicated by canonical
//! code. Every constraint here is hereditary, so each class on `n`
//! vertices is reached from exactly one class on `n - 1` vertices.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;

use crate::canon::{canonical_form, canonical_labeling, CanonicalCode};
use crate::graph::{Bits, Graph, VertexSet};
use crate::pattern::find_induced_through;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Depth-first canonical augmentation (the default).
    #[default]
    Augmentation,
    /// Breadth-first, one global canonical-code set per level. Kept as a
    /// cross-check for the augmentation rule; memory grows with the level.
    LevelDedup,
}

/// Hereditary constraints on the generated graphs.
#[derive(Debug, Clone, Default)]
pub struct ClassSpec {
    /// No triangles; new vertices may only join independent sets.
    pub triangle_free: bool,
    /// Forbidden induced subgraphs beyond the triangle.
    pub forbidden: Vec<Graph>,
    pub max_degree: Option<usize>,
}

impl ClassSpec {
    pub fn triangle_free() -> Self {
        ClassSpec {
            triangle_free: true,
            ..ClassSpec::default()
        }
    }

    fn degree_cap(&self) -> usize {
        self.max_degree.unwrap_or(usize::MAX)
    }

    /// Calls `f` with every admissible neighbourhood for a new vertex.
    fn for_each_extension(&self, g: &Graph, mut f: impl FnMut(VertexSet)) {
        let cap = self.degree_cap();
        let mut allowed = 0u64;
        for v in 0..g.order() {
            if g.degree(v) < cap {
                allowed |= 1u64 << v;
            }
        }
        self.extend_rec(g, allowed, 0, 0, cap, &mut f);
    }

    fn extend_rec(
        &self,
        g: &Graph,
        remaining: u64,
        current: u64,
        size: usize,
        cap: usize,
        f: &mut impl FnMut(VertexSet),
    ) {
        f(VertexSet(current));
        if size >= cap {
            return;
        }
        for v in Bits(remaining) {
            // only vertices above v stay available, keeping subsets unique
            let mut rest = remaining & !((2u64 << v) - 1);
            if self.triangle_free {
                rest &= !g.row(v);
            }
            self.extend_rec(g, rest, current | 1u64 << v, size + 1, cap, f);
        }
    }

    /// Whether `child` (a valid parent plus `new`) still lies in the class.
    fn admits(&self, child: &Graph, new: usize) -> bool {
        self.forbidden
            .iter()
            .all(|p| find_induced_through(child, p, new).is_none())
    }
}

/// Canonically labelled graph together with its code.
#[derive(Debug, Clone)]
pub struct Generated {
    pub graph: Graph,
    pub code: CanonicalCode,
}

/// Accepted children of `parent`, canonically labelled.
fn children(class: &ClassSpec, parent: &Graph, parent_code: &CanonicalCode) -> Vec<Generated> {
    let new = parent.order();
    let mut seen: HashSet<CanonicalCode> = HashSet::new();
    let mut out = Vec::new();
    class.for_each_extension(parent, |s| {
        let child = parent.with_vertex(s).expect("order checked by caller");
        if !class.admits(&child, new) {
            return;
        }
        let top = child.max_degree();
        if child.degree(new) != top {
            return;
        }
        let lab = canonical_labeling(&child);
        let chosen = *lab
            .perm
            .iter()
            .rev()
            .find(|&&v| child.degree(v) == top)
            .expect("some vertex has maximum degree");
        if chosen != new && canonical_form(&child.remove_vertex(chosen)) != *parent_code {
            return;
        }
        let code = lab.code();
        if seen.insert(code.clone()) {
            out.push(Generated { graph: lab.graph, code });
        }
    });
    out
}

fn descend<T>(
    class: &ClassSpec,
    node: &Generated,
    target: usize,
    visit: &(impl Fn(&Generated) -> Option<T> + Sync),
    out: &mut Vec<T>,
) {
    if node.graph.order() == target {
        if let Some(t) = visit(node) {
            out.push(t);
        }
        return;
    }
    for child in children(class, &node.graph, &node.code) {
        descend(class, &child, target, visit, out);
    }
}

fn root() -> Generated {
    let graph = Graph::empty(0).expect("order 0 is valid");
    let code = canonical_form(&graph);
    Generated { graph, code }
}

/// Visits one canonically labelled representative of every class member
/// on `n` vertices, in parallel, and returns the kept results sorted by
/// canonical code.
pub fn generate_filtered<T, F>(class: &ClassSpec, n: usize, strategy: Strategy, visit: F) -> Vec<(CanonicalCode, T)>
where
    T: Send,
    F: Fn(&Generated) -> Option<T> + Sync,
{
    let keyed = |g: &Generated| visit(g).map(|t| (g.code.clone(), t));
    let mut out: Vec<(CanonicalCode, T)> = match strategy {
        Strategy::Augmentation => {
            // breadth-first to a split level, then independent subtrees
            let split = n.saturating_sub(4).min(8);
            let mut frontier = vec![root()];
            for _ in 0..split {
                frontier = frontier
                    .par_iter()
                    .flat_map_iter(|node| children(class, &node.graph, &node.code))
                    .collect();
            }
            frontier
                .par_iter()
                .flat_map_iter(|node| {
                    let mut local = Vec::new();
                    descend(class, node, n, &keyed, &mut local);
                    local
                })
                .collect()
        }
        Strategy::LevelDedup => {
            let mut level: BTreeMap<CanonicalCode, Graph> = BTreeMap::new();
            level.insert(root().code, root().graph);
            for order in 0..n {
                let next: Vec<Generated> = level
                    .par_iter()
                    .flat_map_iter(|(_, g)| all_children(class, g, order))
                    .collect();
                level = next.into_iter().map(|x| (x.code, x.graph)).collect();
            }
            level
                .into_par_iter()
                .filter_map(|(code, graph)| keyed(&Generated { graph, code }))
                .collect()
        }
    };
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// Every admissible child, canonically labelled, without acceptance test.
fn all_children(class: &ClassSpec, g: &Graph, new: usize) -> Vec<Generated> {
    let mut out = Vec::new();
    class.for_each_extension(g, |s| {
        let child = g.with_vertex(s).expect("order checked by caller");
        if class.admits(&child, new) {
            let lab = canonical_labeling(&child);
            out.push(Generated {
                code: lab.code(),
                graph: lab.graph,
            });
        }
    });
    out
}

/// One canonically labelled representative per class member on `n` vertices.
pub fn generate(class: &ClassSpec, n: usize, strategy: Strategy) -> Vec<Graph> {
    generate_filtered(class, n, strategy, |g| Some(g.graph.clone()))
        .into_iter()
        .map(|(_, g)| g)
        .collect()
}

/// Number of class members on `n` vertices.
pub fn count(class: &ClassSpec, n: usize, strategy: Strategy) -> usize {
    generate_filtered(class, n, strategy, |_| Some(())).len()
}
