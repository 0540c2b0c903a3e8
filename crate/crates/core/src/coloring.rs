//! Exact colouring: k-colourability, chromatic number, vertex-criticality.

use crate::graph::{max_clique, Bits, Graph, GraphError, VertexSet};

/// A proper colouring using exactly the colours `0..num_colors`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    pub colors: Vec<usize>,
    pub num_colors: usize,
}

impl Coloring {
    /// Checks properness and that the palette is exactly `0..num_colors`.
    pub fn is_proper_for(&self, g: &Graph) -> bool {
        if self.colors.len() != g.order() {
            return false;
        }
        if self.colors.iter().any(|&c| c >= self.num_colors) {
            return false;
        }
        let used = self.colors.iter().fold(0u128, |m, &c| m | 1u128 << c.min(127));
        if used.count_ones() as usize != self.num_colors {
            return false;
        }
        g.edges().iter().all(|&(u, v)| self.colors[u] != self.colors[v])
    }

    pub fn class(&self, color: usize) -> VertexSet {
        self.colors
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c == color)
            .map(|(v, _)| v)
            .collect()
    }
}

/// A proper colouring with at most `k` colours, if one exists.
///
/// DSATUR backtracking: the next vertex has the most distinctly coloured
/// neighbours, ties broken by uncoloured degree and then lowest index;
/// a vertex may open at most one new colour.
pub fn k_colorable(g: &Graph, k: usize) -> Option<Coloring> {
    let n = g.order();
    if n == 0 {
        return Some(Coloring {
            colors: Vec::new(),
            num_colors: 0,
        });
    }
    if k == 0 {
        return None;
    }
    let k = k.min(n);
    let mut solver = Dsatur {
        g,
        k,
        colors: vec![usize::MAX; n],
        forbidden: vec![0u64; n],
        uncolored: g.vertices().0,
    };
    if solver.solve(0) {
        let num_colors = solver.colors.iter().max().map_or(0, |c| c + 1);
        Some(Coloring {
            colors: solver.colors,
            num_colors,
        })
    } else {
        None
    }
}

struct Dsatur<'a> {
    g: &'a Graph,
    k: usize,
    colors: Vec<usize>,
    /// Bit `c` set when some neighbour has colour `c`.
    forbidden: Vec<u64>,
    uncolored: u64,
}

impl Dsatur<'_> {
    fn pick(&self) -> usize {
        let mut best = usize::MAX;
        let mut best_key = (0u32, 0u32);
        for v in Bits(self.uncolored) {
            let key = (
                self.forbidden[v].count_ones(),
                (self.g.row(v) & self.uncolored).count_ones(),
            );
            if best == usize::MAX || key > best_key {
                best = v;
                best_key = key;
            }
        }
        best
    }

    fn solve(&mut self, used: usize) -> bool {
        if self.uncolored == 0 {
            return true;
        }
        let v = self.pick();
        let limit = (used + 1).min(self.k);
        let mut options = !self.forbidden[v] & ((1u64 << limit) - 1);
        if options == 0 {
            return false;
        }
        let row = self.g.row(v);
        self.uncolored &= !(1u64 << v);
        while options != 0 {
            let c = options.trailing_zeros() as usize;
            options &= options - 1;
            self.colors[v] = c;
            // remember which neighbours gain colour c for the first time
            let mut touched = 0u64;
            for u in Bits(row & self.uncolored) {
                if self.forbidden[u] >> c & 1 == 0 {
                    self.forbidden[u] |= 1u64 << c;
                    touched |= 1u64 << u;
                }
            }
            if self.solve(used.max(c + 1)) {
                return true;
            }
            for u in Bits(touched) {
                self.forbidden[u] &= !(1u64 << c);
            }
        }
        self.colors[v] = usize::MAX;
        self.uncolored |= 1u64 << v;
        false
    }
}

/// DSATUR greedy colouring (no backtracking), an upper bound on chi.
pub fn greedy_coloring(g: &Graph) -> Coloring {
    let n = g.order();
    let mut colors = vec![usize::MAX; n];
    let mut forbidden = vec![0u64; n];
    let mut uncolored = g.vertices().0;
    let mut num_colors = 0;
    while uncolored != 0 {
        let mut v = usize::MAX;
        let mut best = (0u32, 0u32);
        for u in Bits(uncolored) {
            let key = (forbidden[u].count_ones(), (g.row(u) & uncolored).count_ones());
            if v == usize::MAX || key > best {
                v = u;
                best = key;
            }
        }
        let c = (!forbidden[v]).trailing_zeros() as usize;
        colors[v] = c;
        num_colors = num_colors.max(c + 1);
        uncolored &= !(1u64 << v);
        for u in Bits(g.row(v)) {
            forbidden[u] |= 1u64 << c;
        }
    }
    Coloring { colors, num_colors }
}

pub fn chromatic_number(g: &Graph) -> Result<usize, GraphError> {
    Ok(optimal_coloring(g)?.num_colors)
}

/// A colouring with exactly chi colours.
pub fn optimal_coloring(g: &Graph) -> Result<Coloring, GraphError> {
    if g.order() == 0 {
        return Err(GraphError::EmptyGraph);
    }
    let lower = max_clique(g).len();
    let mut best = greedy_coloring(g);
    // best.num_colors is an upper bound; walk up from the clique bound
    for k in lower..best.num_colors {
        if let Some(c) = k_colorable(g, k) {
            best = c;
            break;
        }
    }
    Ok(best)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CriticalityFailure {
    /// chi differs from the requested k.
    ChromaticMismatch { chi: usize },
    /// `G - vertex` still needs k colours.
    VertexNotCritical { vertex: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalityReport {
    pub chi: usize,
    pub is_critical_for: Option<usize>,
    /// Entry `v` colours `g.remove_vertex(v)` with at most chi - 1 colours.
    /// Filled for every vertex on success, up to the failing vertex otherwise.
    pub per_vertex: Vec<Option<Coloring>>,
    pub failure: Option<CriticalityFailure>,
}

pub fn is_k_vertex_critical(g: &Graph, k: usize) -> Result<CriticalityReport, GraphError> {
    let chi = chromatic_number(g)?;
    let n = g.order();
    let mut report = CriticalityReport {
        chi,
        is_critical_for: None,
        per_vertex: vec![None; n],
        failure: None,
    };
    if chi != k {
        report.failure = Some(CriticalityFailure::ChromaticMismatch { chi });
        return Ok(report);
    }
    for v in 0..n {
        match k_colorable(&g.remove_vertex(v), k - 1) {
            Some(c) => report.per_vertex[v] = Some(c),
            None => {
                report.failure = Some(CriticalityFailure::VertexNotCritical { vertex: v });
                return Ok(report);
            }
        }
    }
    report.is_critical_for = Some(k);
    Ok(report)
}

/// Witness-free criticality test used in bulk enumeration.
pub fn is_critical(g: &Graph, k: usize) -> bool {
    if k == 0 || g.order() == 0 {
        return false;
    }
    if k_colorable(g, k - 1).is_some() || k_colorable(g, k).is_none() {
        return false;
    }
    (0..g.order()).all(|v| k_colorable(&g.remove_vertex(v), k - 1).is_some())
}
