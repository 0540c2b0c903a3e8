//! Named forbidden graphs and induced-subgraph detection.
//!
//! Pattern names double as command-line vocabulary: `2P2`, `bull`,
//! `banner`, `chair`, `claw+P1`, `K3+P1`, `P3+P1`, and parametric forms
//! such as `squid:4:2`, `hl:2`, `P3+lP1:3`, `K1l+P1:4`, `K:5`, `C:5`,
//! `P:4`, `E:3` and `union(C:5,K:1)`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Bits, Graph, GraphError, VertexSet, MAX_ORDER};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PatternId {
    Complete(usize),
    Cycle(usize),
    Path(usize),
    Empty(usize),
    /// Disjoint union, left pattern first.
    Union(Box<PatternId>, Box<PatternId>),
    TwoP2,
    /// `P3 + l P1`.
    P3PlusEllP1(usize),
    Bull,
    Chair,
    ClawPlusP1,
    Banner,
    /// `(m, l)`-squid: `C_m` with `l` leaves on one cycle vertex.
    Squid(usize, usize),
    /// `(3, l)`-squid.
    Hl(usize),
    /// `K_{1,l} + P1`.
    K1EllPlusP1(usize),
    K3PlusP1,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("unknown pattern name `{0}`")]
    UnknownName(String),
    #[error("bad parameter in `{0}`")]
    BadParameter(String),
    #[error("invalid parameters for {name}: {reason}")]
    InvalidParameters { name: String, reason: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl PatternId {
    pub fn squid(m: usize, leaves: usize) -> PatternId {
        PatternId::Squid(m, leaves)
    }

    /// Number of vertices of the built pattern.
    pub fn order(&self) -> usize {
        use PatternId::*;
        match self {
            Complete(n) | Path(n) | Empty(n) | Cycle(n) => *n,
            Union(a, b) => a.order() + b.order(),
            TwoP2 => 4,
            P3PlusEllP1(l) => 3 + l,
            Bull | Chair | ClawPlusP1 | Banner => 5,
            Squid(m, l) => m + l,
            Hl(l) => 3 + l,
            K1EllPlusP1(l) => l + 2,
            K3PlusP1 => 4,
        }
    }

    pub fn validate(&self) -> Result<(), PatternError> {
        use PatternId::*;
        let bad = |reason: &str| {
            Err(PatternError::InvalidParameters {
                name: self.to_string(),
                reason: reason.to_string(),
            })
        };
        match self {
            Complete(n) | Path(n) | Empty(n) if *n == 0 => return bad("order must be at least 1"),
            Cycle(m) if *m < 3 => return bad("cycle length must be at least 3"),
            Squid(m, _) if !(3..=4).contains(m) => return bad("squid cycle length must be 3 or 4"),
            Squid(_, 0) | Hl(0) | K1EllPlusP1(0) => return bad("leaf count must be at least 1"),
            Union(a, b) => {
                a.validate()?;
                b.validate()?;
            }
            _ => {}
        }
        if self.order() > MAX_ORDER {
            return bad("pattern order exceeds the graph size limit");
        }
        Ok(())
    }

    /// Builds the pattern with its fixed labelling.
    ///
    /// - squid(4, l): vertices 0..=3 are u1..u4 with cycle u1-u2-u4-u3-u1,
    ///   leaves w1..wl (vertices 4..) hang on u4.
    /// - squid(3, l) / hl(l): triangle 0,1,2, leaves (3..) hang on 0.
    /// - bull: triangle 0,1,2, leaf 3 on 0 and leaf 4 on 1.
    /// - chair: squid(4,2) restricted to u1,u2,u4,w1,w2.
    /// - P3 + l P1: path 0-1-2, isolated 3.. ; stars: centre 0, isolated last.
    pub fn build(&self) -> Result<Graph, PatternError> {
        use PatternId::*;
        self.validate()?;
        let g = match self {
            Complete(n) => Graph::complete(*n)?,
            Empty(n) => Graph::empty(*n)?,
            Path(n) => Graph::new(*n, &(1..*n).map(|i| (i - 1, i)).collect::<Vec<_>>())?,
            Cycle(m) => Graph::new(*m, &(0..*m).map(|i| (i, (i + 1) % m)).collect::<Vec<_>>())?,
            Union(a, b) => disjoint_union(&a.build()?, &b.build()?)?,
            TwoP2 => Graph::new(4, &[(0, 1), (2, 3)])?,
            P3PlusEllP1(l) => Graph::new(3 + l, &[(0, 1), (1, 2)])?,
            Bull => Graph::new(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 4)])?,
            Chair => Squid(4, 2)
                .build()?
                .induced_subgraph(VertexSet::from_vertices([0, 1, 3, 4, 5])),
            ClawPlusP1 => K1EllPlusP1(3).build()?,
            Banner => Squid(4, 1).build()?,
            Squid(4, l) => {
                let mut edges = vec![(0, 1), (0, 2), (1, 3), (2, 3)];
                edges.extend((0..*l).map(|i| (3, 4 + i)));
                Graph::new(4 + l, &edges)?
            }
            Squid(_, l) | Hl(l) => {
                let mut edges = vec![(0, 1), (0, 2), (1, 2)];
                edges.extend((0..*l).map(|i| (0, 3 + i)));
                Graph::new(3 + l, &edges)?
            }
            K1EllPlusP1(l) => Graph::new(l + 2, &(1..=*l).map(|i| (0, i)).collect::<Vec<_>>())?,
            K3PlusP1 => Graph::new(4, &[(0, 1), (0, 2), (1, 2)])?,
        };
        Ok(g)
    }
}

fn disjoint_union(a: &Graph, b: &Graph) -> Result<Graph, GraphError> {
    let shift = a.order();
    let mut edges = a.edges();
    edges.extend(b.edges().into_iter().map(|(u, v)| (u + shift, v + shift)));
    Graph::new(a.order() + b.order(), &edges)
}

impl fmt::Display for PatternId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use PatternId::*;
        match self {
            Complete(n) => write!(f, "K:{n}"),
            Cycle(m) => write!(f, "C:{m}"),
            Path(n) => write!(f, "P:{n}"),
            Empty(n) => write!(f, "E:{n}"),
            Union(a, b) => write!(f, "union({a},{b})"),
            TwoP2 => f.write_str("2P2"),
            P3PlusEllP1(1) => f.write_str("P3+P1"),
            P3PlusEllP1(l) => write!(f, "P3+lP1:{l}"),
            Bull => f.write_str("bull"),
            Chair => f.write_str("chair"),
            ClawPlusP1 => f.write_str("claw+P1"),
            Banner => f.write_str("banner"),
            Squid(m, l) => write!(f, "squid:{m}:{l}"),
            Hl(l) => write!(f, "hl:{l}"),
            K1EllPlusP1(l) => write!(f, "K1l+P1:{l}"),
            K3PlusP1 => f.write_str("K3+P1"),
        }
    }
}

impl FromStr for PatternId {
    type Err = PatternError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        use PatternId::*;
        let s = s.trim();
        if let Some(inner) = s.strip_prefix("union(").and_then(|r| r.strip_suffix(')')) {
            let parts = split_top_level(inner);
            if parts.len() != 2 {
                return Err(PatternError::BadParameter(s.to_string()));
            }
            let id = Union(Box::new(parts[0].parse()?), Box::new(parts[1].parse()?));
            id.validate()?;
            return Ok(id);
        }
        let mut fields = s.split(':');
        let name = fields.next().unwrap_or_default();
        let params: Vec<usize> = fields
            .map(|p| p.parse().map_err(|_| PatternError::BadParameter(s.to_string())))
            .collect::<Result<_, _>>()?;
        let arity = |want: usize| {
            if params.len() == want {
                Ok(())
            } else {
                Err(PatternError::BadParameter(s.to_string()))
            }
        };
        let id = match name.to_ascii_lowercase().as_str() {
            "2p2" => arity(0).map(|_| TwoP2)?,
            "bull" => arity(0).map(|_| Bull)?,
            "chair" | "fork" => arity(0).map(|_| Chair)?,
            "claw+p1" => arity(0).map(|_| ClawPlusP1)?,
            "banner" => arity(0).map(|_| Banner)?,
            "k3+p1" => arity(0).map(|_| K3PlusP1)?,
            "p3+p1" => arity(0).map(|_| P3PlusEllP1(1))?,
            "p3+lp1" => arity(1).map(|_| P3PlusEllP1(params[0]))?,
            "squid" => arity(2).map(|_| Squid(params[0], params[1]))?,
            "hl" => arity(1).map(|_| Hl(params[0]))?,
            "k1l+p1" => arity(1).map(|_| K1EllPlusP1(params[0]))?,
            "k" => arity(1).map(|_| Complete(params[0]))?,
            "c" => arity(1).map(|_| Cycle(params[0]))?,
            "p" => arity(1).map(|_| Path(params[0]))?,
            "e" => arity(1).map(|_| Empty(params[0]))?,
            _ => return Err(PatternError::UnknownName(s.to_string())),
        };
        id.validate()?;
        Ok(id)
    }
}

/// Splits on commas outside parentheses.
pub fn split_top_level(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(s[start..].trim());
    out.retain(|p| !p.is_empty());
    out
}

/// Parses a comma-separated pattern list such as `2P2,squid:4:2`.
pub fn parse_pattern_list(s: &str) -> Result<Vec<PatternId>, PatternError> {
    split_top_level(s).into_iter().map(str::parse).collect()
}

/// Injective map from pattern vertices to host vertices; `map[i]` is the image of `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    pub fn image(&self) -> VertexSet {
        self.map.iter().copied().collect()
    }

    /// Checks injectivity and the induced condition in both directions.
    pub fn is_valid(&self, host: &Graph, pattern: &Graph) -> bool {
        if self.map.len() != pattern.order()
            || self.map.iter().any(|&v| v >= host.order())
            || self.image().len() != self.map.len()
        {
            return false;
        }
        (0..pattern.order()).all(|a| (0..a).all(|b| pattern.has_edge(a, b) == host.has_edge(self.map[a], self.map[b])))
    }
}

/// Lexicographically first induced embedding of `pattern` into `host`.
pub fn find_induced(host: &Graph, pattern: &Graph) -> Option<Embedding> {
    let mut m = Matcher::new(host, pattern)?;
    m.extend(0, host.vertices().0).then(|| Embedding {
        map: m.map[..pattern.order()].to_vec(),
    })
}

/// First induced embedding whose image contains `anchor`.
///
/// Used where the host minus `anchor` is already known to be free.
pub fn find_induced_through(host: &Graph, pattern: &Graph, anchor: usize) -> Option<Embedding> {
    let mut m = Matcher::new(host, pattern)?;
    for p in 0..pattern.order() {
        if host.degree(anchor) < pattern.degree(p) {
            continue;
        }
        m.anchor = Some((p, anchor));
        if m.extend(0, host.vertices().0) {
            return Some(Embedding {
                map: m.map[..pattern.order()].to_vec(),
            });
        }
    }
    None
}

struct Matcher<'a> {
    host: &'a Graph,
    pattern: &'a Graph,
    map: [usize; MAX_ORDER],
    host_degree: [u8; MAX_ORDER],
    anchor: Option<(usize, usize)>,
}

impl<'a> Matcher<'a> {
    fn new(host: &'a Graph, pattern: &'a Graph) -> Option<Self> {
        if pattern.order() > host.order() {
            return None;
        }
        let mut host_degree = [0u8; MAX_ORDER];
        for (v, d) in host_degree.iter_mut().enumerate().take(host.order()) {
            *d = host.degree(v) as u8;
        }
        Some(Matcher {
            host,
            pattern,
            map: [0; MAX_ORDER],
            host_degree,
            anchor: None,
        })
    }

    /// Maps pattern vertex `i` onwards; `free` holds unused host vertices.
    fn extend(&mut self, i: usize, free: u64) -> bool {
        if i == self.pattern.order() {
            return true;
        }
        let prow = self.pattern.row(i);
        let mut cand = free;
        for j in 0..i {
            let hrow = self.host.row(self.map[j]);
            if prow >> j & 1 == 1 {
                cand &= hrow;
            } else {
                cand &= !hrow;
            }
        }
        match self.anchor {
            Some((p, a)) if p == i => cand &= 1u64 << a,
            Some((_, a)) => cand &= !(1u64 << a),
            None => {}
        }
        let need = self.pattern.degree(i) as u8;
        for v in Bits(cand) {
            if self.host_degree[v] < need {
                continue;
            }
            self.map[i] = v;
            if self.extend(i + 1, free & !(1u64 << v)) {
                return true;
            }
        }
        false
    }
}

/// A forbidden pattern found in a host.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub pattern: PatternId,
    pub embedding: Embedding,
}

/// `None` when `host` contains none of `patterns`, else the first hit.
pub fn find_violation(host: &Graph, patterns: &[PatternId]) -> Result<Option<Violation>, PatternError> {
    for p in patterns {
        let pg = p.build()?;
        if let Some(embedding) = find_induced(host, &pg) {
            return Ok(Some(Violation {
                pattern: p.clone(),
                embedding,
            }));
        }
    }
    Ok(None)
}

pub fn is_free(host: &Graph, patterns: &[PatternId]) -> Result<bool, PatternError> {
    Ok(find_violation(host, patterns)?.is_none())
}

/// Same test over pre-built pattern graphs.
pub fn is_free_of(host: &Graph, patterns: &[Graph]) -> bool {
    patterns.iter().all(|p| find_induced(host, p).is_none())
}
