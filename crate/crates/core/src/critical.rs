//! Databases of k-vertex-critical graphs with independence number at most 2.
//!
//! Every k-vertex-critical (P3+P1)-free graph has alpha <= 2 and at most
//! 2k-1 vertices, so the whole class is the set of critical complements
//! of triangle-free graphs on k..=2k-1 vertices. A critical graph also has
//! minimum degree k-1, which caps the complement's maximum degree at n-k
//! and prunes the search at every level.

use std::collections::BTreeMap;
use std::fmt;
use std::io::{self, BufRead, Write};

use thiserror::Error;

use crate::canon::{canonical_labeling, CanonicalCode};
use crate::coloring::is_critical;
use crate::generate::{self, ClassSpec, Strategy};
use crate::graph::Graph;
use crate::graph6::{self, Graph6Reader, StreamError};
use crate::pattern::{find_violation, PatternError, PatternId};

pub const MIN_K: usize = 2;
pub const MAX_K: usize = 7;
/// Largest order accepted by [`enumerate_triangle_free`].
pub const MAX_TRIANGLE_FREE_ORDER: usize = 14;

#[derive(Debug, Error)]
pub enum CriticalError {
    #[error("k = {0} is outside the supported range {MIN_K}..={MAX_K}")]
    UnsupportedK(usize),
    #[error("order {0} is outside the supported range 1..={MAX_TRIANGLE_FREE_ORDER}")]
    UnsupportedOrder(usize),
    #[error("table range must be 4..=7, got {0}")]
    UnsupportedTableRange(usize),
    #[error(transparent)]
    Pattern(#[from] PatternError),
    #[error(transparent)]
    Stream(#[from] StreamError),
    #[error("database entry {index} is not {k}-vertex-critical")]
    NotCritical { index: usize, k: usize },
    #[error("database entry {index} contains forbidden {pattern}")]
    NotInFamily { index: usize, pattern: PatternId },
    #[error("database entries {first} and {second} are isomorphic")]
    Duplicate { first: usize, second: usize },
}

/// Isomorph-free triangle-free graphs on `n` vertices, canonically labelled.
pub fn enumerate_triangle_free(n: usize) -> Result<Vec<Graph>, CriticalError> {
    enumerate_triangle_free_with(n, Strategy::Augmentation)
}

pub fn enumerate_triangle_free_with(n: usize, strategy: Strategy) -> Result<Vec<Graph>, CriticalError> {
    if !(1..=MAX_TRIANGLE_FREE_ORDER).contains(&n) {
        return Err(CriticalError::UnsupportedOrder(n));
    }
    Ok(generate::generate(&ClassSpec::triangle_free(), n, strategy))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalDatabase {
    pub k: usize,
    /// Forbidden patterns every entry avoids; always includes P3+P1.
    pub family: Vec<PatternId>,
    /// Canonically labelled, sorted by (order, canonical code).
    pub entries: Vec<Graph>,
}

impl CriticalDatabase {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn counts_by_order(&self) -> BTreeMap<usize, usize> {
        let mut counts = BTreeMap::new();
        for g in &self.entries {
            *counts.entry(g.order()).or_insert(0) += 1;
        }
        counts
    }

    /// `k n count` lines, one per order present.
    pub fn manifest(&self) -> String {
        self.counts_by_order()
            .iter()
            .map(|(n, c)| format!("{} {} {}\n", self.k, n, c))
            .collect()
    }

    /// Family label used in file names, e.g. `2P2-bull`.
    pub fn family_label(&self) -> String {
        let named: Vec<String> = self
            .family
            .iter()
            .filter(|p| **p != PatternId::P3PlusEllP1(1))
            .map(|p| p.to_string())
            .collect();
        let label = if named.is_empty() {
            PatternId::P3PlusEllP1(1).to_string()
        } else {
            named.join("-")
        };
        label
            .chars()
            .map(|c| {
                if c.is_ascii_alphanumeric() || c == '+' || c == '-' {
                    c
                } else {
                    '.'
                }
            })
            .collect()
    }

    /// `crit_k{K}_{family}.g6`.
    pub fn file_name(&self) -> String {
        format!("crit_k{}_{}.g6", self.k, self.family_label())
    }

    pub fn write_graph6<W: Write>(&self, sink: W) -> io::Result<()> {
        graph6::write_graph6_stream(&self.entries, sink)
    }

    /// Loads entries and brings them into canonical sorted form, without
    /// checking criticality (see [`CriticalDatabase::validate`]).
    pub fn read_graph6<R: BufRead>(k: usize, family: Vec<PatternId>, source: R) -> Result<Self, CriticalError> {
        let mut keyed = Vec::new();
        for item in Graph6Reader::new(source) {
            let (_, g) = item?;
            let lab = canonical_labeling(&g);
            keyed.push((lab.code(), lab.graph));
        }
        Ok(Self::from_keyed(k, family, keyed))
    }

    fn from_keyed(k: usize, family: Vec<PatternId>, mut keyed: Vec<(CanonicalCode, Graph)>) -> Self {
        keyed.sort_by(|a, b| a.0.cmp(&b.0));
        CriticalDatabase {
            k,
            family,
            entries: keyed.into_iter().map(|(_, g)| g).collect(),
        }
    }

    /// Checks every entry: k-vertex-critical, free of the family, pairwise non-isomorphic.
    pub fn validate(&self) -> Result<(), CriticalError> {
        let mut seen: BTreeMap<CanonicalCode, usize> = BTreeMap::new();
        for (index, g) in self.entries.iter().enumerate() {
            if !is_critical(g, self.k) {
                return Err(CriticalError::NotCritical { index, k: self.k });
            }
            if let Some(v) = find_violation(g, &self.family)? {
                return Err(CriticalError::NotInFamily {
                    index,
                    pattern: v.pattern,
                });
            }
            if let Some(first) = seen.insert(g.canonical_form(), index) {
                return Err(CriticalError::Duplicate { first, second: index });
            }
        }
        Ok(())
    }

    /// Whether every k-vertex-critical graph avoiding `family` is an entry,
    /// assuming the database holds all critical graphs avoiding its own family.
    ///
    /// Each database pattern must contain some pattern of `family`. The
    /// exception is P3+P1 and patterns with alpha >= 3 in an alpha <= 2
    /// database: those are covered only when critical graphs avoiding
    /// `family` are known to be (P3+P1)-free, which holds for 2P2 together
    /// with the bull, the banner, or an induced subgraph of P3+P1.
    pub fn covers(&self, family: &[PatternId]) -> Result<bool, PatternError> {
        let asked = family.iter().map(|p| p.build()).collect::<Result<Vec<_>, _>>()?;
        let p3p1 = PatternId::P3PlusEllP1(1).build()?;
        let two_p2 = PatternId::TwoP2.build()?;
        let known = [PatternId::Bull.build()?, PatternId::Banner.build()?];
        let forces_alpha_two = asked.iter().any(|h| crate::pattern::find_induced(&p3p1, h).is_some())
            || (asked.iter().any(|h| h.is_isomorphic(&two_p2))
                && asked.iter().any(|h| known.iter().any(|b| b.is_isomorphic(h))));
        for q in &self.family {
            let q = q.build()?;
            if asked.iter().any(|h| crate::pattern::find_induced(&q, h).is_some()) {
                continue;
            }
            let alpha_two_pattern = q.is_isomorphic(&p3p1) || q.independence_number() >= 3;
            if forces_alpha_two && alpha_two_pattern && self.family.contains(&PatternId::P3PlusEllP1(1)) {
                continue;
            }
            return Ok(false);
        }
        Ok(true)
    }
}

/// All k-vertex-critical (P3+P1)-free graphs.
pub fn enumerate_critical_p3p1free(k: usize) -> Result<CriticalDatabase, CriticalError> {
    enumerate_critical_with(k, &[], Strategy::Augmentation)
}

/// All k-vertex-critical graphs that are (P3+P1)-free and avoid `forbidden`.
///
/// A forbidden `H` whose complement is triangle-free is pushed into the
/// complement search as a forbidden induced complement of `H`; the others
/// have alpha >= 3 and cannot occur. The final family check runs on every
/// entry either way.
pub fn enumerate_critical(k: usize, forbidden: &[PatternId]) -> Result<CriticalDatabase, CriticalError> {
    enumerate_critical_with(k, forbidden, Strategy::Augmentation)
}

pub fn enumerate_critical_with(
    k: usize,
    forbidden: &[PatternId],
    strategy: Strategy,
) -> Result<CriticalDatabase, CriticalError> {
    if !(MIN_K..=MAX_K).contains(&k) {
        return Err(CriticalError::UnsupportedK(k));
    }
    let mut family = vec![PatternId::P3PlusEllP1(1)];
    for p in forbidden {
        if !family.contains(p) {
            family.push(p.clone());
        }
    }
    let mut pushed = Vec::new();
    for p in forbidden {
        let co = p.build()?.complement();
        if co.clique_number() < 3 {
            pushed.push(co);
        }
    }
    let mut keyed = Vec::new();
    for n in k..=2 * k - 1 {
        let class = ClassSpec {
            triangle_free: true,
            forbidden: pushed.clone(),
            max_degree: Some(n - k),
        };
        let found = generate::generate_filtered(&class, n, strategy, |t| {
            let g = t.graph.complement();
            if !is_critical(&g, k) {
                return None;
            }
            let lab = canonical_labeling(&g);
            Some((lab.code(), lab.graph))
        });
        keyed.extend(found.into_iter().map(|(_, x)| x));
    }
    let db = CriticalDatabase::from_keyed(k, family.clone(), keyed);
    filter_family(&db, &family)
}

/// k-vertex-critical graphs on `k..=max_order` vertices avoiding
/// `forbidden`, found by generating the whole hereditary class directly
/// (no independence-number assumption). Sorted by (order, canonical code).
pub fn enumerate_critical_direct(
    k: usize,
    forbidden: &[PatternId],
    max_order: usize,
) -> Result<Vec<Graph>, CriticalError> {
    if k == 0 {
        return Err(CriticalError::UnsupportedK(k));
    }
    if max_order > MAX_TRIANGLE_FREE_ORDER {
        return Err(CriticalError::UnsupportedOrder(max_order));
    }
    let class = ClassSpec {
        triangle_free: false,
        forbidden: forbidden.iter().map(|p| p.build()).collect::<Result<_, _>>()?,
        max_degree: None,
    };
    let mut out = Vec::new();
    for n in k..=max_order {
        let found = generate::generate_filtered(&class, n, Strategy::Augmentation, |g| {
            (g.graph.min_degree() + 1 >= k && is_critical(&g.graph, k)).then(|| g.graph.clone())
        });
        out.extend(found.into_iter().map(|(_, g)| g));
    }
    Ok(out)
}

/// Keeps the entries that avoid every pattern in `forbidden`.
pub fn filter_family(db: &CriticalDatabase, forbidden: &[PatternId]) -> Result<CriticalDatabase, CriticalError> {
    let built = forbidden.iter().map(|p| p.build()).collect::<Result<Vec<_>, _>>()?;
    let mut family = db.family.clone();
    for p in forbidden {
        if !family.contains(p) {
            family.push(p.clone());
        }
    }
    Ok(CriticalDatabase {
        k: db.k,
        family,
        entries: db
            .entries
            .iter()
            .filter(|g| crate::pattern::is_free_of(g, &built))
            .cloned()
            .collect(),
    })
}

/// Counts per (k, n) of k-vertex-critical graphs.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CountsTable {
    pub rows: BTreeMap<(usize, usize), usize>,
    pub totals: BTreeMap<usize, usize>,
}

impl CountsTable {
    pub fn from_databases<'a>(dbs: impl IntoIterator<Item = &'a CriticalDatabase>) -> Self {
        let mut table = CountsTable::default();
        for db in dbs {
            table.totals.insert(db.k, db.len());
            for (n, c) in db.counts_by_order() {
                table.rows.insert((db.k, n), c);
            }
        }
        table
    }

    pub fn get(&self, k: usize, n: usize) -> usize {
        self.rows.get(&(k, n)).copied().unwrap_or(0)
    }

    pub fn total(&self, k: usize) -> usize {
        self.totals.get(&k).copied().unwrap_or(0)
    }

    pub fn ks(&self) -> Vec<usize> {
        self.totals.keys().copied().collect()
    }
}

/// One row per order, one column per k, then a `total` row.
impl fmt::Display for CountsTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ks = self.ks();
        let (Some(&lo), Some(&hi)) = (ks.first(), ks.last()) else {
            return Ok(());
        };
        write!(f, "n")?;
        for k in &ks {
            write!(f, " {k}-vertex-critical")?;
        }
        writeln!(f)?;
        for n in lo..=2 * hi - 1 {
            write!(f, "{n}")?;
            for &k in &ks {
                write!(f, " {}", self.get(k, n))?;
            }
            writeln!(f)?;
        }
        write!(f, "total")?;
        for &k in &ks {
            write!(f, " {}", self.total(k))?;
        }
        writeln!(f)
    }
}

/// Counts of k-vertex-critical (2P2, bull)- or equivalently (2P2, banner)-free
/// graphs for `k = 4..=k_max`.
pub fn reproduce_counts_table(k_max: usize) -> Result<CountsTable, CriticalError> {
    if !(4..=MAX_K).contains(&k_max) {
        return Err(CriticalError::UnsupportedTableRange(k_max));
    }
    let dbs = (4..=k_max)
        .map(|k| enumerate_critical(k, &[PatternId::TwoP2]))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CountsTable::from_databases(&dbs))
}
