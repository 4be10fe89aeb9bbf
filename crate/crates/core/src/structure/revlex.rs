use serde::Serialize;

use crate::algebra::{
    buchberger_with_stats, initial_ideal, is_reduced, pairwise_disjoint, radical_height,
    MonomialOrder,
};
use crate::graph::Graph;
use crate::ideals::build_pg;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RevlexReport {
    /// The generators themselves form the reduced basis.
    #[serde(rename = "isReducedGB")]
    pub is_reduced_gb: bool,
    pub additions: usize,
    pub height: usize,
    /// Initial monomials have pairwise disjoint supports.
    pub complete_intersection: bool,
}

impl RevlexReport {
    pub fn passed(&self, edges: usize) -> bool {
        self.is_reduced_gb
            && self.additions == 0
            && self.height == edges
            && self.complete_intersection
    }
}

/// Completes the diagonal minors under degrevlex and reports whether
/// anything had to be added.
pub fn verify_revlex_gb(g: &Graph) -> RevlexReport {
    let gens = build_pg(g, MonomialOrder::DegRevLex);
    let (gb, stats) = buchberger_with_stats(&gens);
    let ini = initial_ideal(&gb);
    let supports: Vec<Vec<u32>> = ini
        .iter()
        .map(|m| m.powers().iter().map(|&(p, _)| p).collect())
        .collect();
    let complete_intersection = ini.len() == g.edge_count() && pairwise_disjoint(&supports);
    let height = radical_height(&ini).expect("P_G is a proper ideal");
    RevlexReport {
        is_reduced_gb: gb == gens && is_reduced(&gb),
        additions: stats.additions,
        height,
        complete_intersection,
    }
}
