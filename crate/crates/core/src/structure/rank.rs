use std::collections::BTreeSet;

use serde::Serialize;

use super::minprimes::min_y_count;
use crate::error::{Error, Result};
use crate::graph::{canonical_form, enumerate_connected, Family, Graph};
use crate::par;

/// Position of a rank relative to `[2m - 1, 2^m - 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum BoundStatus {
    BelowMin,
    AtMin,
    Interior,
    AtMax,
    AboveMax,
}

/// Class group invariants of one graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ClassGroupReport {
    pub n: usize,
    pub m: usize,
    pub degrees: Vec<usize>,
    pub min_y_count: u64,
    pub rank: u64,
    pub is_connected: bool,
    pub lower_bound: Option<u64>,
    pub upper_bound: Option<u64>,
    /// Only populated for connected graphs with at least one edge.
    pub bound_status: Option<BoundStatus>,
}

/// `2m - 1` and `2^m - 1`.
pub fn rank_bounds(m: usize) -> Result<(u64, u64)> {
    let m64 = m as u64;
    let lower = (2 * m64).saturating_sub(1);
    let upper = 1u64
        .checked_shl(m as u32)
        .filter(|_| m < 64)
        .ok_or(Error::Overflow("2^m"))?
        - 1;
    Ok((lower, upper))
}

/// Rank of the divisor class group: `sum_i (2^deg(i) - 1) - |E|`.
/// Isolated vertices contribute nothing.
pub fn class_group_rank(g: &Graph) -> Result<ClassGroupReport> {
    let m = g.edge_count();
    let count = min_y_count(g)?;
    let rank = count - m as u64;
    let is_connected = g.is_connected();
    let (lower_bound, upper_bound, bound_status) = if is_connected && m > 0 {
        match rank_bounds(m) {
            Ok((lo, hi)) => {
                let status = if rank < lo {
                    BoundStatus::BelowMin
                } else if rank == lo {
                    BoundStatus::AtMin
                } else if rank < hi {
                    BoundStatus::Interior
                } else if rank == hi {
                    BoundStatus::AtMax
                } else {
                    BoundStatus::AboveMax
                };
                (Some(lo), Some(hi), Some(status))
            }
            Err(_) => (None, None, None),
        }
    } else {
        (None, None, None)
    };
    Ok(ClassGroupReport {
        n: g.n(),
        m,
        degrees: g.degrees(),
        min_y_count: count,
        rank,
        is_connected,
        lower_bound,
        upper_bound,
        bound_status,
    })
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SurveyEntry {
    pub graph: Graph,
    pub rank: u64,
    pub bound_status: BoundStatus,
    pub is_path: bool,
    pub is_star: bool,
}

/// Ranks of every connected graph with `m` edges up to isomorphism.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SurveyReport {
    pub m: usize,
    pub lower_bound: u64,
    pub upper_bound: u64,
    pub entries: Vec<SurveyEntry>,
    pub achievable_ranks: Vec<u64>,
    pub violations: Vec<String>,
}

impl SurveyReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the bounds on every connected graph with `m` edges, and that the
/// lower bound is attained only by the path and the upper only by the star.
pub fn survey(m: usize, force: bool) -> Result<SurveyReport> {
    let graphs = enumerate_connected(m, m + 1, force)?;
    let (lower, upper) = rank_bounds(m)?;
    let path_code = canonical_form(&Family::Path(m).build()?).1;
    let star_code = canonical_form(&Family::Star(m).build()?).1;
    let reports = par::map(&graphs, class_group_rank);

    let mut entries = Vec::with_capacity(graphs.len());
    let mut violations = Vec::new();
    for (g, report) in graphs.into_iter().zip(reports) {
        let report = report?;
        // Enumerated graphs are already canonical.
        let code = canonical_form(&g).1;
        let n = g.n();
        let is_path = n == m + 1 && code == path_code;
        let is_star = n == m + 1 && code == star_code;
        let status = report
            .bound_status
            .expect("enumerated graphs are connected");
        let rank = report.rank;
        if !(lower..=upper).contains(&rank) {
            violations.push(format!("{g}: rank {rank} outside [{lower}, {upper}]"));
        }
        if (rank == lower) != is_path {
            violations.push(format!(
                "{g}: rank {rank}, lower bound {lower}, path {is_path}"
            ));
        }
        if (rank == upper) != is_star {
            violations.push(format!(
                "{g}: rank {rank}, upper bound {upper}, star {is_star}"
            ));
        }
        entries.push(SurveyEntry {
            graph: g,
            rank,
            bound_status: status,
            is_path,
            is_star,
        });
    }
    let achievable: BTreeSet<u64> = entries.iter().map(|e| e.rank).collect();
    Ok(SurveyReport {
        m,
        lower_bound: lower,
        upper_bound: upper,
        entries,
        achievable_ranks: achievable.into_iter().collect(),
        violations,
    })
}

/// A graph realising a requested class group rank.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankRealisation {
    pub label: String,
    pub graph: Graph,
    pub rank: u64,
}

/// Odd ranks come from paths, even ranks from 6 on from cycles. Ranks 2
/// and 4 are below every connected graph's lower bound for the edge counts
/// that could reach them, so they use disjoint unions; the rank adds over
/// components.
pub fn find_graph_with_rank(r: u64) -> Result<RankRealisation> {
    let (label, graph) = match r {
        0 => return Err(Error::NonPositiveRank),
        2 => {
            let e = Family::Path(1).build()?;
            ("path:1 + path:1".to_string(), e.disjoint_union(&e))
        }
        4 => {
            let p = Family::Path(2).build()?;
            let e = Family::Path(1).build()?;
            ("path:2 + path:1".to_string(), p.disjoint_union(&e))
        }
        r if r % 2 == 1 => {
            let f = Family::Path(r.div_ceil(2) as usize);
            (f.to_string(), f.build()?)
        }
        r => {
            let f = Family::Cycle((r / 2) as usize);
            (f.to_string(), f.build()?)
        }
    };
    let rank = class_group_rank(&graph)?.rank;
    debug_assert_eq!(rank, r, "{label}");
    Ok(RankRealisation { label, graph, rank })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::family;

    fn rank(spec: &str) -> u64 {
        class_group_rank(&family(spec).unwrap()).unwrap().rank
    }

    #[test]
    fn families() {
        for m in 1..=10u64 {
            assert_eq!(rank(&format!("path:{m}")), 2 * m - 1);
            assert_eq!(rank(&format!("star:{m}")), (1 << m) - 1);
        }
        for m in 3..=10u64 {
            assert_eq!(rank(&format!("cycle:{m}")), 2 * m);
        }
        assert_eq!(rank("complete:3"), 6);
    }

    #[test]
    fn bound_status() {
        let r = class_group_rank(&family("path:4").unwrap()).unwrap();
        assert_eq!(r.bound_status, Some(BoundStatus::AtMin));
        let r = class_group_rank(&family("star:4").unwrap()).unwrap();
        assert_eq!(r.bound_status, Some(BoundStatus::AtMax));
        let r = class_group_rank(&family("cycle:4").unwrap()).unwrap();
        assert_eq!(r.bound_status, Some(BoundStatus::Interior));
        let disconnected = Graph::from_edges(4, &[(1, 2), (3, 4)]).unwrap();
        let r = class_group_rank(&disconnected).unwrap();
        assert_eq!(r.bound_status, None);
        assert_eq!(r.rank, 2);
    }

    #[test]
    fn isolated_vertices_do_not_change_rank() {
        let g = Graph::from_edges(5, &[(1, 2), (2, 3)]).unwrap();
        assert_eq!(class_group_rank(&g).unwrap().rank, 3);
        assert_eq!(class_group_rank(&Graph::empty(3)).unwrap().rank, 0);
    }

    #[test]
    fn surveys() {
        assert_eq!(survey(1, false).unwrap().achievable_ranks, vec![1]);
        assert_eq!(survey(3, false).unwrap().achievable_ranks, vec![5, 6, 7]);
        let four = survey(4, false).unwrap();
        assert_eq!(four.achievable_ranks, vec![7, 8, 9, 10, 15]);
        assert!(four.passed());
    }

    #[test]
    fn realisations() {
        assert_eq!(find_graph_with_rank(7).unwrap().label, "path:4");
        assert_eq!(find_graph_with_rank(8).unwrap().label, "cycle:4");
        let two = find_graph_with_rank(2).unwrap();
        assert_eq!(two.graph.edges(), &[(1, 2), (3, 4)]);
        assert!(!two.graph.is_connected());
        for r in 1..=30 {
            assert_eq!(find_graph_with_rank(r).unwrap().rank, r);
        }
        assert_eq!(find_graph_with_rank(0), Err(Error::NonPositiveRank));
    }
}
