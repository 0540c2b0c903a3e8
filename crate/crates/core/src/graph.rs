//! Small immutable graphs stored as one `u64` adjacency row per vertex.

use std::fmt;

use thiserror::Error;

use crate::canon::{self, CanonicalCode};
use crate::coloring;

/// Largest supported order: one machine word per row, single-byte graph6 prefix.
pub const MAX_ORDER: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("order {0} exceeds the supported maximum of {MAX_ORDER}")]
    OrderTooLarge(usize),
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("operation requires a graph with at least one vertex")]
    EmptyGraph,
}

/// A set of vertex indices as a 64-bit mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> Self {
        VertexSet(vs.into_iter().fold(0u64, |m, v| m | (1u64 << v)))
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Lowest member.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Members in ascending order.
    pub fn iter(self) -> Bits {
        Bits(self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Bits;
    fn into_iter(self) -> Bits {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_vertices(iter)
    }
}

/// Ascending iterator over the set bits of a word.
#[derive(Clone, Copy, Debug)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Bits {}

/// Open neighbourhood, closed neighbourhood and non-neighbours of one vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Neighborhoods {
    pub open: VertexSet,
    pub closed: VertexSet,
    pub nonneighbors: VertexSet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphInvariants {
    pub chi: usize,
    pub omega: usize,
    pub alpha: usize,
    pub min_degree: usize,
    pub max_degree: usize,
}

/// Which pairs count as comparable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comparability {
    /// `N(a) ⊆ N(b)`, which forces `a` and `b` to be nonadjacent.
    Nonadjacent,
    /// Also accept adjacent pairs with `N(a) \ {b} ⊆ N(b) \ {a}`.
    IncludeAdjacent,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComparablePair {
    pub a: usize,
    pub b: usize,
    /// Set when the pair was found through the adjacent-pair rule.
    pub adjacent: bool,
}

/// Simple undirected graph on at most [`MAX_ORDER`] vertices.
///
/// Row `v` holds the characteristic vector of `N(v)`. Rows are symmetric,
/// have a zero diagonal and no bits at or above `order`; every constructor
/// maintains this, so derived equality and hashing are labelled equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    rows: [u64; MAX_ORDER],
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges are harmless.
    pub fn new(order: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(order)?;
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= order {
                    return Err(GraphError::VertexOutOfRange { vertex: w, order });
                }
            }
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// Edgeless graph.
    pub fn empty(order: usize) -> Result<Graph, GraphError> {
        if order > MAX_ORDER {
            return Err(GraphError::OrderTooLarge(order));
        }
        Ok(Graph {
            order,
            rows: [0; MAX_ORDER],
        })
    }

    pub fn complete(order: usize) -> Result<Graph, GraphError> {
        Ok(Graph::empty(order)?.complement())
    }

    /// Builds a graph from raw rows, checking every representation invariant.
    pub fn from_rows(rows: &[u64]) -> Result<Graph, GraphError> {
        let order = rows.len();
        let mut g = Graph::empty(order)?;
        let valid = VertexSet::full(order).0;
        for (v, &row) in rows.iter().enumerate() {
            if row >> v & 1 == 1 {
                return Err(GraphError::LoopEdge(v));
            }
            if row & !valid != 0 {
                let vertex = (row & !valid).trailing_zeros() as usize;
                return Err(GraphError::VertexOutOfRange { vertex, order });
            }
            g.rows[v] = row;
        }
        for u in 0..order {
            for v in Bits(rows[u]) {
                if rows[v] >> u & 1 == 0 {
                    // asymmetric input: treat as out-of-range neighbour report
                    return Err(GraphError::VertexOutOfRange { vertex: v, order });
                }
            }
        }
        Ok(g)
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        self.rows[u] |= 1u64 << v;
        self.rows[v] |= 1u64 << u;
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    /// Adjacency rows, one per vertex.
    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.rows[..self.order]
    }

    #[inline]
    pub fn row(&self, v: usize) -> u64 {
        self.rows[v]
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.rows[v])
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order)
    }

    pub fn edge_count(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.order {
            for v in Bits(self.rows[u] >> u >> 1) {
                out.push((u, u + 1 + v));
            }
        }
        out
    }

    pub fn min_degree(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.order).0;
        let mut g = self.clone();
        for v in 0..self.order {
            g.rows[v] = !self.rows[v] & full & !(1u64 << v);
        }
        g
    }

    /// Subgraph induced by `s`, relabelled by ascending original index.
    pub fn induced_subgraph(&self, s: VertexSet) -> Graph {
        let s = s.intersection(self.vertices());
        let mut g = Graph {
            order: s.len(),
            rows: [0; MAX_ORDER],
        };
        for (i, v) in s.iter().enumerate() {
            g.rows[i] = pext(self.rows[v], s.0);
        }
        g
    }

    /// `G - v`.
    pub fn remove_vertex(&self, v: usize) -> Graph {
        let mut s = self.vertices();
        s.remove(v);
        self.induced_subgraph(s)
    }

    /// Appends a new vertex adjacent to `neighbors`.
    pub fn with_vertex(&self, neighbors: VertexSet) -> Result<Graph, GraphError> {
        let n = self.order;
        if n + 1 > MAX_ORDER {
            return Err(GraphError::OrderTooLarge(n + 1));
        }
        if let Some(bad) = neighbors.difference(self.vertices()).first() {
            return Err(GraphError::VertexOutOfRange { vertex: bad, order: n });
        }
        let mut g = self.clone();
        g.order = n + 1;
        g.rows[n] = neighbors.0;
        for u in neighbors {
            g.rows[u] |= 1u64 << n;
        }
        Ok(g)
    }

    /// Relabels so that new vertex `i` is old vertex `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order, "permutation length must equal order");
        let mut inverse = [0usize; MAX_ORDER];
        for (new, &old) in perm.iter().enumerate() {
            inverse[old] = new;
        }
        let mut g = Graph {
            order: self.order,
            rows: [0; MAX_ORDER],
        };
        for (new, &old) in perm.iter().enumerate() {
            g.rows[new] = Bits(self.rows[old]).fold(0u64, |m, u| m | 1u64 << inverse[u]);
        }
        g
    }

    pub fn neighborhoods(&self, v: usize) -> Result<Neighborhoods, GraphError> {
        if v >= self.order {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: self.order,
            });
        }
        let open = self.neighbors(v);
        let closed = open.union(VertexSet::singleton(v));
        Ok(Neighborhoods {
            open,
            closed,
            nonneighbors: self.vertices().difference(closed),
        })
    }

    pub fn is_connected(&self) -> bool {
        if self.order == 0 {
            return true;
        }
        self.reach(0, self.vertices()) == self.vertices()
    }

    /// Vertices of `within` reachable from `start` inside `within`.
    pub fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            for v in Bits(frontier) {
                next |= self.rows[v];
            }
            frontier = next & within.0 & !seen;
            seen |= frontier;
        }
        VertexSet(seen)
    }

    /// Whether the subgraph induced by `s` is connected (true for empty `s`).
    pub fn is_connected_within(&self, s: VertexSet) -> bool {
        match s.first() {
            None => true,
            Some(v) => self.reach(v, s) == s,
        }
    }

    /// First comparable pair `(a, b)` in lexicographic order, if any.
    pub fn has_comparable_vertices(&self) -> Option<ComparablePair> {
        self.comparable_vertices(Comparability::Nonadjacent)
    }

    pub fn comparable_vertices(&self, mode: Comparability) -> Option<ComparablePair> {
        for a in 0..self.order {
            for b in 0..self.order {
                if a == b {
                    continue;
                }
                let na = self.rows[a];
                let nb = self.rows[b];
                if self.has_edge(a, b) {
                    if mode == Comparability::IncludeAdjacent && (na & !(1u64 << b)) & !(nb & !(1u64 << a)) == 0 {
                        return Some(ComparablePair { a, b, adjacent: true });
                    }
                } else if na & !nb == 0 {
                    return Some(ComparablePair { a, b, adjacent: false });
                }
            }
        }
        None
    }

    pub fn clique_number(&self) -> usize {
        max_clique(self).len()
    }

    pub fn independence_number(&self) -> usize {
        max_clique(&self.complement()).len()
    }

    pub fn invariants(&self) -> Result<GraphInvariants, GraphError> {
        if self.order == 0 {
            return Err(GraphError::EmptyGraph);
        }
        Ok(GraphInvariants {
            chi: coloring::chromatic_number(self)?,
            omega: self.clique_number(),
            alpha: self.independence_number(),
            min_degree: self.min_degree(),
            max_degree: self.max_degree(),
        })
    }

    pub fn canonical_form(&self) -> CanonicalCode {
        canon::canonical_form(self)
    }

    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        are_isomorphic(self, other)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order, self.edges())
    }
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order()
        && g.edge_count() == h.edge_count()
        && degree_sequence(g) == degree_sequence(h)
        && g.canonical_form() == h.canonical_form()
}

pub(crate) fn degree_sequence(g: &Graph) -> Vec<usize> {
    let mut d: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
    d.sort_unstable();
    d
}

/// Gathers the bits of `x` selected by `mask` into the low bits.
#[inline]
pub(crate) fn pext(x: u64, mask: u64) -> u64 {
    let mut out = 0u64;
    for (i, b) in Bits(mask).enumerate() {
        out |= (x >> b & 1) << i;
    }
    out
}

/// A maximum clique, lowest-index vertices preferred on ties.
pub fn max_clique(g: &Graph) -> VertexSet {
    let mut best = VertexSet::EMPTY;
    if g.order() > 0 {
        best = VertexSet::singleton(0);
    }
    clique_expand(g, VertexSet::EMPTY, g.vertices(), &mut best);
    best
}

fn clique_expand(g: &Graph, current: VertexSet, mut candidates: VertexSet, best: &mut VertexSet) {
    if candidates.is_empty() {
        if current.len() > best.len() {
            *best = current;
        }
        return;
    }
    while let Some(v) = candidates.first() {
        // greedy coloring bound on what the candidates can still add
        if current.len() + color_bound(g, candidates) <= best.len() {
            return;
        }
        let mut next = current;
        next.insert(v);
        clique_expand(g, next, candidates.intersection(g.neighbors(v)), best);
        candidates.remove(v);
    }
    if current.len() > best.len() {
        *best = current;
    }
}

/// Number of colour classes of a greedy sequential colouring of `s`.
fn color_bound(g: &Graph, s: VertexSet) -> usize {
    let mut uncolored = s;
    let mut classes = 0;
    while !uncolored.is_empty() {
        classes += 1;
        let mut avail = uncolored;
        while let Some(v) = avail.first() {
            uncolored.remove(v);
            avail.remove(v);
            avail = avail.difference(g.neighbors(v));
        }
    }
    classes
}
