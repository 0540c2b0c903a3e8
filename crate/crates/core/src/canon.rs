//! Canonical labelling by equitable refinement and individualisation.
//!
//! The canonical graph is the relabelling whose upper-triangle bit string,
//! read in graph6 column order, is lexicographically largest among the
//! leaves of the refinement tree. Subtrees are pruned with automorphisms
//! discovered along the way (two leaves with equal strings).

use std::fmt;

use crate::graph::{Bits, Graph};
use crate::graph6;

/// graph6 bytes of the canonically relabelled graph.
///
/// Codes of different orders never collide and sort by order first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0[0] as usize - 63
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({})", String::from_utf8_lossy(&self.0))
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&String::from_utf8_lossy(&self.0))
    }
}

#[derive(Debug, Clone)]
pub struct Labeling {
    /// `perm[i]` is the original vertex placed at canonical position `i`.
    pub perm: Vec<usize>,
    /// `g.permuted(&perm)`.
    pub graph: Graph,
}

impl Labeling {
    pub fn code(&self) -> CanonicalCode {
        CanonicalCode(graph6::encode_bytes(&self.graph))
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalCode {
    canonical_labeling(g).code()
}

pub fn canonical_labeling(g: &Graph) -> Labeling {
    let n = g.order();
    if n <= 1 {
        return Labeling {
            perm: (0..n).collect(),
            graph: g.clone(),
        };
    }
    let mut search = Search {
        g,
        first: None,
        best: None,
        automorphisms: Vec::new(),
        orbit_cache: None,
    };
    let mut cells = vec![g.vertices().0];
    refine(g, &mut cells);
    let mut fixed = Vec::with_capacity(n);
    search.descend(cells, &mut fixed);
    let perm = search.best.expect("search visits at least one leaf").perm;
    let graph = g.permuted(&perm);
    Labeling { perm, graph }
}

struct Leaf {
    key: Vec<u64>,
    perm: Vec<usize>,
    /// Individualised vertices along the path to this leaf.
    path: Vec<usize>,
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    /// Stored as `image[v]`.
    automorphisms: Vec<Vec<usize>>,
    /// Union-find parents keyed by (number of automorphisms, path).
    orbit_cache: Option<(usize, Vec<usize>, Vec<usize>)>,
}

impl Search<'_> {
    /// Returns `Some(depth)` when the rest of the tree below `depth` is
    /// known to repeat leaves already seen.
    fn descend(&mut self, cells: Vec<u64>, fixed: &mut Vec<usize>) -> Option<usize> {
        let Some(target) = cells.iter().position(|c| c.count_ones() > 1) else {
            return self.leaf(&cells, fixed);
        };
        let depth = fixed.len();
        let mut tried: Vec<usize> = Vec::new();
        for v in Bits(cells[target]) {
            if !tried.is_empty() && self.equivalent_to_tried(v, &tried, fixed) {
                continue;
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(1u64 << v);
            child.push(cells[target] & !(1u64 << v));
            child.extend_from_slice(&cells[target + 1..]);
            refine(self.g, &mut child);
            fixed.push(v);
            let jump = self.descend(child, fixed);
            fixed.pop();
            tried.push(v);
            if let Some(level) = jump {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }

    fn leaf(&mut self, cells: &[u64], fixed: &[usize]) -> Option<usize> {
        let perm: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let key = leaf_key(self.g, &perm);
        let leaf = Leaf {
            key,
            perm,
            path: fixed.to_vec(),
        };
        let Some(first) = &self.first else {
            self.first = Some(Leaf {
                key: leaf.key.clone(),
                perm: leaf.perm.clone(),
                path: leaf.path.clone(),
            });
            self.best = Some(leaf);
            return None;
        };
        // an equal leaf gives an automorphism mapping the earlier path onto
        // this one, so this subtree repeats the earlier one from the divergence
        let earlier = if leaf.key == first.key {
            first
        } else {
            let best = self.best.as_ref().expect("set with first");
            if leaf.key > best.key {
                self.best = Some(leaf);
                return None;
            }
            if leaf.key != best.key {
                return None;
            }
            best
        };
        let mut image = vec![0; leaf.perm.len()];
        for (e, l) in earlier.perm.iter().zip(&leaf.perm) {
            image[*e] = *l;
        }
        let common = earlier.path.iter().zip(&leaf.path).take_while(|(a, b)| a == b).count();
        self.automorphisms.push(image);
        Some(common)
    }

    /// Whether `v` lies in the orbit of a tried vertex under the stored
    /// automorphisms that fix every individualised vertex.
    fn equivalent_to_tried(&mut self, v: usize, tried: &[usize], fixed: &[usize]) -> bool {
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let fresh = match &self.orbit_cache {
            Some((count, path, _)) => *count != self.automorphisms.len() || path != fixed,
            None => true,
        };
        if fresh {
            let n = self.g.order();
            let mut parent: Vec<usize> = (0..n).collect();
            for gamma in &self.automorphisms {
                if fixed.iter().any(|&f| gamma[f] != f) {
                    continue;
                }
                for (x, &y) in gamma.iter().enumerate() {
                    let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
            self.orbit_cache = Some((self.automorphisms.len(), fixed.to_vec(), parent));
        }
        let parent = &mut self.orbit_cache.as_mut().expect("filled above").2;
        let root = find(parent, v);
        tried.iter().any(|&t| find(parent, t) == root)
    }
}

/// Column `j` holds the adjacencies to earlier positions, position 0 most significant.
fn leaf_key(g: &Graph, perm: &[usize]) -> Vec<u64> {
    let mut key = Vec::with_capacity(perm.len().saturating_sub(1));
    for j in 1..perm.len() {
        let row = g.row(perm[j]);
        let mut col = 0u64;
        for &p in &perm[..j] {
            col = col << 1 | (row >> p & 1);
        }
        key.push(col);
    }
    key
}

/// Refines an ordered partition to the coarsest equitable refinement.
///
/// Cells split by neighbour count into the splitter cell, in ascending
/// count order, so the result depends only on the labelled structure.
pub(crate) fn refine(g: &Graph, cells: &mut Vec<u64>) {
    'restart: loop {
        for si in 0..cells.len() {
            let splitter = cells[si];
            for ci in 0..cells.len() {
                let cell = cells[ci];
                if cell.count_ones() < 2 {
                    continue;
                }
                let mut groups: Vec<(u32, u64)> = Vec::new();
                for v in Bits(cell) {
                    let c = (g.row(v) & splitter).count_ones();
                    match groups.iter_mut().find(|(k, _)| *k == c) {
                        Some((_, m)) => *m |= 1u64 << v,
                        None => groups.push((c, 1u64 << v)),
                    }
                }
                if groups.len() > 1 {
                    groups.sort_unstable_by_key(|&(c, _)| c);
                    cells.splice(ci..=ci, groups.into_iter().map(|(_, m)| m));
                    continue 'restart;
                }
            }
        }
        return;
    }
}
