//! Brute-force oracles and random inputs shared by the integration tests.
//! The oracles use only adjacency queries; input generators may use the
//! library's pattern search to stay inside a family.

#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use vcrit::{Graph, PatternId};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.order();
    (0..n).map(|u| (0..n).map(|v| g.has_edge(u, v)).collect()).collect()
}

pub fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

/// Smallest k admitting a proper colouring, by trying every assignment.
pub fn chromatic_exhaustive(g: &Graph) -> usize {
    let n = g.order();
    let edges = g.edges();
    for k in 1..=n {
        let mut colors = vec![0usize; n];
        loop {
            if edges.iter().all(|&(u, v)| colors[u] != colors[v]) {
                return k;
            }
            // odometer increment
            let mut i = 0;
            while i < n && colors[i] + 1 == k {
                colors[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
            colors[i] += 1;
        }
    }
    0
}

/// Plain backtracking k-colourability, for orders where exhaustion is too slow.
pub fn colorable_backtracking(g: &Graph, k: usize) -> bool {
    fn go(adj: &[Vec<bool>], k: usize, colors: &mut Vec<usize>, used: usize) -> bool {
        let v = colors.len();
        if v == adj.len() {
            return true;
        }
        for c in 0..k.min(used + 1) {
            if (0..v).all(|u| !adj[v][u] || colors[u] != c) {
                colors.push(c);
                if go(adj, k, colors, used.max(c + 1)) {
                    return true;
                }
                colors.pop();
            }
        }
        false
    }
    go(&adjacency(g), k, &mut Vec::new(), 0)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    heap(n, &mut p, &mut out);
    out
}

fn heap(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(p.clone());
        return;
    }
    for i in 0..k {
        heap(k - 1, p, out);
        if k.is_multiple_of(2) {
            p.swap(i, k - 1);
        } else {
            p.swap(0, k - 1);
        }
    }
}

/// Isomorphism by trying every bijection.
pub fn isomorphic_brute(a: &Graph, b: &Graph) -> bool {
    if a.order() != b.order() || a.edge_count() != b.edge_count() {
        return false;
    }
    let (aa, bb) = (adjacency(a), adjacency(b));
    let n = a.order();
    permutations(n)
        .iter()
        .any(|p| (0..n).all(|u| (u + 1..n).all(|v| aa[u][v] == bb[p[u]][p[v]])))
}

/// Whether `pattern` occurs as an induced subgraph, by checking every vertex
/// subset of the right size against every bijection.
pub fn contains_induced_brute(host: &Graph, pattern: &Graph) -> bool {
    let (n, m) = (host.order(), pattern.order());
    if m > n {
        return false;
    }
    if m == 0 {
        return true;
    }
    let h = adjacency(host);
    let p = adjacency(pattern);
    let mut pdeg: Vec<usize> = p.iter().map(|r| r.iter().filter(|&&x| x).count()).collect();
    pdeg.sort_unstable();
    let perms = permutations(m);
    let mut subset: Vec<usize> = (0..m).collect();
    loop {
        let mut deg: Vec<usize> = subset
            .iter()
            .map(|&u| subset.iter().filter(|&&v| h[u][v]).count())
            .collect();
        deg.sort_unstable();
        if deg == pdeg
            && perms
                .iter()
                .any(|q| (0..m).all(|i| (i + 1..m).all(|j| p[i][j] == h[subset[q[i]]][subset[q[j]]])))
        {
            return true;
        }
        // next m-subset in lexicographic order
        let mut i = m;
        while i > 0 && subset[i - 1] == n - m + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        subset[i - 1] += 1;
        for j in i..m {
            subset[j] = subset[j - 1] + 1;
        }
    }
}

/// graph6 written straight from the format definition: order byte, then
/// the upper triangle column by column in groups of six bits, each plus 63.
pub fn graph6_reference(g: &Graph) -> String {
    let n = g.order();
    assert!(n <= 62);
    let mut out = vec![(n + 63) as u8];
    let mut bits = Vec::new();
    for v in 1..n {
        for u in 0..v {
            bits.push(g.has_edge(u, v));
        }
    }
    for chunk in bits.chunks(6) {
        let mut x = 0u8;
        for (i, &b) in chunk.iter().enumerate() {
            if b {
                x |= 1 << (5 - i);
            }
        }
        out.push(x + 63);
    }
    String::from_utf8(out).unwrap()
}

/// Independence number by subset enumeration.
pub fn alpha_brute(g: &Graph) -> usize {
    let n = g.order();
    let adj = adjacency(g);
    (0u64..1 << n)
        .filter(|s| (0..n).all(|u| s >> u & 1 == 0 || (u + 1..n).all(|v| s >> v & 1 == 0 || !adj[u][v])))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

pub fn clique_brute(g: &Graph) -> usize {
    alpha_brute(&g.complement())
}

/// A random (2P2, bull)-free graph: random edges are added one by one and
/// kept only if the graph stays in the family, half of the time until every
/// pair has been tried. Half of the results lose one random vertex.
pub fn random_family_graph(rng: &mut StdRng, max_order: usize) -> Graph {
    let n = rng.gen_range(1..=max_order);
    let patterns = [PatternId::TwoP2.build().unwrap(), PatternId::Bull.build().unwrap()];
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(rng);
    let keep = if rng.gen_bool(0.5) {
        pairs.len()
    } else {
        rng.gen_range(0..=pairs.len())
    };
    let mut edges = Vec::new();
    for &e in &pairs[..keep] {
        edges.push(e);
        let g = Graph::new(n, &edges).unwrap();
        if patterns.iter().any(|p| vcrit::find_induced(&g, p).is_some()) {
            edges.pop();
        }
    }
    let g = Graph::new(n, &edges).unwrap();
    if n > 1 && rng.gen_bool(0.5) {
        let drop = rng.gen_range(0..n);
        return g.remove_vertex(drop);
    }
    g
}

pub fn random_permutation(rng: &mut StdRng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}
