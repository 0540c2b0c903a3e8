//! Executable checks of structural facts about vertex-critical 2P2-free graphs.
//!
//! Each audit evaluates one universally quantified predicate over a finite
//! population (a regenerated database, or graphs found by direct search)
//! and records every counterexample.

use std::fmt;

use thiserror::Error;

use crate::critical::{
    enumerate_critical, enumerate_critical_direct, filter_family, CriticalDatabase, CriticalError, MAX_K, MIN_K,
};
use crate::graph::{Bits, Graph, VertexSet};
use crate::graph6::encode_graph6;
use crate::pattern::{find_induced, PatternError, PatternId};

/// Orders above this are checked with singleton independent parts only. A
/// vertex with a neighbour in S has a neighbour in some singleton of S, and
/// every singleton is itself a valid independent part, so nothing is lost.
pub const EXHAUSTIVE_EMBEDDING_ORDER: usize = 10;
/// Default order bound for direct-search populations.
pub const DEFAULT_DIRECT_ORDER: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Lemma {
    /// No two nonadjacent vertices with `N(a) ⊆ N(b)`.
    NoComparableVertices,
    /// Non-neighbours of a nonuniversal vertex induce a connected graph on >= 2 vertices.
    NonneighborhoodConnected,
    /// Outside `N[v2]`, neighbours of the independent part of an induced
    /// `P3 + l P1` are complete to the path ends.
    NeighborsOfIndependentPart,
    /// Critical (2P2, bull)-free graphs are (P3+P1)-free.
    BullForcesP3P1Free,
    /// Critical (2P2, squid(4,l))-free graphs are (P3 + cP1)-free, c = (l-1)(k-1)+1.
    SquidForcesP3cP1Free { k: usize, leaves: usize },
    /// Critical (2P2, hl(l))-free graphs are squid(4, 2l-1)-free.
    HlForcesSquidFree { leaves: usize },
}

impl fmt::Display for Lemma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Lemma::NoComparableVertices => f.write_str("no-comparable-vertices"),
            Lemma::NonneighborhoodConnected => f.write_str("nonneighborhood-connected"),
            Lemma::NeighborsOfIndependentPart => f.write_str("neighbors-of-independent-part"),
            Lemma::BullForcesP3P1Free => f.write_str("bull-forces-P3+P1-free"),
            Lemma::SquidForcesP3cP1Free { k, leaves } => match squid_c(*k, *leaves) {
                1 => write!(f, "squid:4:{leaves}-forces-P3+P1-free@k={k}"),
                c => write!(f, "squid:4:{leaves}-forces-P3+{c}P1-free@k={k}"),
            },
            Lemma::HlForcesSquidFree { leaves } => {
                write!(f, "hl:{leaves}-forces-squid:4:{}-free", 2 * leaves - 1)
            }
        }
    }
}

/// `c = (l - 1)(k - 1) + 1`.
pub fn squid_c(k: usize, leaves: usize) -> usize {
    (leaves - 1) * (k - 1) + 1
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditViolation {
    pub graph: Graph,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditReport {
    pub lemma: Lemma,
    pub population: String,
    pub checked: usize,
    /// Set when the population is not known to be the complete class.
    pub sampled: bool,
    pub violations: Vec<AuditViolation>,
}

impl AuditReport {
    fn new(lemma: Lemma, population: impl Into<String>) -> Self {
        AuditReport {
            lemma,
            population: population.into(),
            checked: 0,
            sampled: false,
            violations: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn violation(&mut self, g: &Graph, detail: String) {
        self.violations.push(AuditViolation {
            graph: g.clone(),
            detail,
        });
    }
}

impl fmt::Display for AuditReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} population={}{} checked={} violations={}",
            self.lemma,
            self.population,
            if self.sampled { " (sampled)" } else { "" },
            self.checked,
            self.violations.len()
        )
    }
}

#[derive(Debug, Error)]
pub enum AuditError {
    #[error("input graph contains an induced 2P2 on {0:?}")]
    NotTwoP2Free(Vec<usize>),
    #[error("unsupported audit parameters: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Critical(#[from] CriticalError),
    #[error(transparent)]
    Pattern(#[from] PatternError),
}

fn g6(g: &Graph) -> String {
    encode_graph6(g).unwrap_or_default()
}

pub fn audit_no_comparable(graphs: &[Graph], population: &str) -> AuditReport {
    let mut report = AuditReport::new(Lemma::NoComparableVertices, population);
    for g in graphs {
        report.checked += 1;
        if let Some(p) = g.has_comparable_vertices() {
            report.violation(g, format!("{}: N({}) ⊆ N({})", g6(g), p.a, p.b));
        }
    }
    report
}

pub fn audit_nonneighborhood_connected(db: &CriticalDatabase) -> AuditReport {
    audit_nonneighborhood_connected_in(&db.entries, &format!("db:{}", db.file_name()))
}

pub fn audit_nonneighborhood_connected_in(graphs: &[Graph], population: &str) -> AuditReport {
    let mut report = AuditReport::new(Lemma::NonneighborhoodConnected, population);
    for g in graphs {
        report.checked += 1;
        for v in 0..g.order() {
            let outside = g.vertices().difference(g.neighbors(v).union(VertexSet::singleton(v)));
            if outside.is_empty() {
                continue;
            }
            if outside.len() < 2 || !g.is_connected_within(outside) {
                report.violation(g, format!("{}: non-neighbours of {v} are {outside:?}", g6(g)));
            }
        }
    }
    report
}

/// Checks induced `P3 + l P1` configurations in a 2P2-free graph.
pub fn audit_neighbors_of_s(g: &Graph) -> Result<AuditReport, AuditError> {
    let two_p2 = PatternId::TwoP2.build()?;
    if let Some(e) = find_induced(g, &two_p2) {
        return Err(AuditError::NotTwoP2Free(e.map));
    }
    let mut report = AuditReport::new(Lemma::NeighborsOfIndependentPart, g6(g));
    report.checked = 1;
    for detail in neighbors_of_s_failures(g, g.order() <= EXHAUSTIVE_EMBEDDING_ORDER) {
        report.violation(g, detail);
    }
    Ok(report)
}

/// Failing configurations, without the 2P2-free precondition.
pub fn neighbors_of_s_failures(g: &Graph, all_subsets: bool) -> Vec<String> {
    let mut out = Vec::new();
    for v2 in 0..g.order() {
        let nv2 = g.neighbors(v2);
        for v1 in nv2 {
            for v3 in nv2 {
                if v3 <= v1 || g.has_edge(v1, v3) {
                    continue;
                }
                let path = VertexSet::from_vertices([v1, v2, v3]);
                let mut free = g.vertices().difference(path);
                for p in path {
                    free = free.difference(g.neighbors(p));
                }
                let outside_v2 = g.vertices().difference(nv2).difference(VertexSet::singleton(v2));
                let mut check = |s: VertexSet| {
                    let mut touching = VertexSet::EMPTY;
                    for x in s {
                        touching = touching.union(g.neighbors(x));
                    }
                    for u in touching.intersection(outside_v2) {
                        if !(g.has_edge(u, v1) && g.has_edge(u, v3)) {
                            out.push(format!("{}: path {v1}-{v2}-{v3}, S={s:?}, u={u}", g6(g)));
                        }
                    }
                };
                if all_subsets {
                    for_each_independent_subset(g, free, &mut check);
                } else {
                    for s in free {
                        check(VertexSet::singleton(s));
                    }
                }
            }
        }
    }
    out
}

fn for_each_independent_subset(g: &Graph, pool: VertexSet, f: &mut impl FnMut(VertexSet)) {
    fn rec(g: &Graph, rest: u64, current: u64, f: &mut impl FnMut(VertexSet)) {
        for v in Bits(rest) {
            let next = current | 1u64 << v;
            f(VertexSet(next));
            let above = rest & !((2u64 << v) - 1) & !g.row(v);
            rec(g, above, next, f);
        }
    }
    rec(g, pool.0, 0, f);
}

fn audit_pattern_free(
    lemma: Lemma,
    graphs: &[Graph],
    population: &str,
    pattern: &PatternId,
) -> Result<AuditReport, AuditError> {
    let p = pattern.build()?;
    let mut report = AuditReport::new(lemma, population);
    for g in graphs {
        report.checked += 1;
        if let Some(e) = find_induced(g, &p) {
            report.violation(g, format!("{}: induced {pattern} on {:?}", g6(g), e.map));
        }
    }
    Ok(report)
}

fn check_k(k: usize) -> Result<(), AuditError> {
    if (MIN_K..=MAX_K).contains(&k) {
        Ok(())
    } else {
        Err(AuditError::Unsupported(format!("k = {k} outside {MIN_K}..={MAX_K}")))
    }
}

/// Over the regenerated (2P2, bull)-free database for `k`.
pub fn audit_bull_lemma(k: usize) -> Result<AuditReport, AuditError> {
    check_k(k)?;
    let db = enumerate_critical(k, &[PatternId::TwoP2, PatternId::Bull])?;
    audit_bull_lemma_in(&db.entries, &format!("db:{}", db.file_name()))
}

pub fn audit_bull_lemma_in(graphs: &[Graph], population: &str) -> Result<AuditReport, AuditError> {
    audit_pattern_free(
        Lemma::BullForcesP3P1Free,
        graphs,
        population,
        &PatternId::P3PlusEllP1(1),
    )
}

/// Same predicate over every critical (2P2, bull)-free graph of order at
/// most `max_order` found by direct search, with no independence bound.
pub fn audit_bull_lemma_direct(k: usize, max_order: usize) -> Result<AuditReport, AuditError> {
    check_k(k)?;
    let graphs = enumerate_critical_direct(k, &[PatternId::TwoP2, PatternId::Bull], max_order)?;
    let mut report = audit_bull_lemma_in(&graphs, &format!("direct:k={k},n<={max_order}"))?;
    report.sampled = max_order < 2 * k - 1;
    Ok(report)
}

/// Leaf count 1 runs over the alpha <= 2 banner database (complete);
/// larger leaf counts over critical graphs of order at most
/// [`DEFAULT_DIRECT_ORDER`] found by direct search (sampled).
pub fn audit_squid_lemma(k: usize, leaves: usize) -> Result<AuditReport, AuditError> {
    audit_squid_lemma_with(k, leaves, DEFAULT_DIRECT_ORDER)
}

pub fn audit_squid_lemma_with(k: usize, leaves: usize, max_order: usize) -> Result<AuditReport, AuditError> {
    check_k(k)?;
    if leaves == 0 {
        return Err(AuditError::Unsupported("squid needs at least one leaf".into()));
    }
    let squid = PatternId::Squid(4, leaves);
    if leaves == 1 {
        let db = enumerate_critical(k, &[PatternId::TwoP2, squid])?;
        return audit_squid_lemma_in(k, leaves, &db.entries, &format!("db:{}", db.file_name()), false);
    }
    let graphs = enumerate_critical_direct(k, &[PatternId::TwoP2, squid], max_order)?;
    audit_squid_lemma_in(k, leaves, &graphs, &format!("direct:k={k},n<={max_order}"), true)
}

pub fn audit_squid_lemma_in(
    k: usize,
    leaves: usize,
    graphs: &[Graph],
    population: &str,
    sampled: bool,
) -> Result<AuditReport, AuditError> {
    if leaves == 0 || k == 0 {
        return Err(AuditError::Unsupported(
            "squid needs at least one leaf and k >= 1".into(),
        ));
    }
    let target = PatternId::P3PlusEllP1(squid_c(k, leaves));
    let mut report = audit_pattern_free(Lemma::SquidForcesP3cP1Free { k, leaves }, graphs, population, &target)?;
    report.sampled = sampled;
    Ok(report)
}

/// Population: the alpha <= 2 (2P2)-free database filtered to hl(l)-free
/// entries (complete for one leaf), plus for more leaves the direct-search
/// critical graphs of order at most [`DEFAULT_DIRECT_ORDER`].
pub fn audit_hl_lemma(k: usize, leaves: usize) -> Result<AuditReport, AuditError> {
    audit_hl_lemma_with(k, leaves, DEFAULT_DIRECT_ORDER)
}

pub fn audit_hl_lemma_with(k: usize, leaves: usize, max_order: usize) -> Result<AuditReport, AuditError> {
    check_k(k)?;
    if leaves == 0 {
        return Err(AuditError::Unsupported("hl needs at least one leaf".into()));
    }
    let hl = PatternId::Hl(leaves);
    let db = filter_family(&enumerate_critical(k, &[PatternId::TwoP2])?, std::slice::from_ref(&hl))?;
    let mut graphs = db.entries.clone();
    let mut population = format!("db:{}", db.file_name());
    if leaves > 1 {
        for g in enumerate_critical_direct(k, &[PatternId::TwoP2, hl], max_order)? {
            if !graphs.iter().any(|h| h.is_isomorphic(&g)) {
                graphs.push(g);
            }
        }
        population.push_str(&format!("+direct:n<={max_order}"));
    }
    audit_hl_lemma_in(leaves, &graphs, &population, leaves > 1)
}

pub fn audit_hl_lemma_in(
    leaves: usize,
    graphs: &[Graph],
    population: &str,
    sampled: bool,
) -> Result<AuditReport, AuditError> {
    let mut report = audit_pattern_free(
        Lemma::HlForcesSquidFree { leaves },
        graphs,
        population,
        &PatternId::Squid(4, 2 * leaves - 1),
    )?;
    report.sampled = sampled;
    Ok(report)
}

/// Configuration-level check over every entry of a 2P2-free database.
pub fn audit_neighbors_of_s_db(db: &CriticalDatabase) -> Result<AuditReport, AuditError> {
    let mut report = AuditReport::new(Lemma::NeighborsOfIndependentPart, format!("db:{}", db.file_name()));
    for g in &db.entries {
        let r = audit_neighbors_of_s(g)?;
        report.checked += 1;
        report.violations.extend(r.violations);
    }
    Ok(report)
}

/// The standard suite for one k over the (2P2, bull) and (2P2, banner) databases.
pub fn run_audits(k: usize) -> Result<Vec<AuditReport>, AuditError> {
    check_k(k)?;
    let mut reports = Vec::new();
    for h in [PatternId::Bull, PatternId::Banner] {
        let db = enumerate_critical(k, &[PatternId::TwoP2, h])?;
        let label = format!("db:{}", db.file_name());
        reports.push(audit_no_comparable(&db.entries, &label));
        reports.push(audit_nonneighborhood_connected(&db));
        reports.push(audit_neighbors_of_s_db(&db)?);
    }
    reports.push(audit_bull_lemma(k)?);
    reports.push(audit_bull_lemma_direct(k, DEFAULT_DIRECT_ORDER.min(2 * k - 1))?);
    reports.push(audit_squid_lemma(k, 1)?);
    reports.push(audit_hl_lemma(k, 1)?);
    Ok(reports)
}
