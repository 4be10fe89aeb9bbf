use std::collections::BTreeSet;

use serde::Serialize;

use super::minprimes::minimal_primes;
use crate::algebra::{GeneratorSet, MonomialOrder, VariableId};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ideals::{augment_with_antidiagonal, build_pg, witness_ideal};
use crate::oracles::{check_field, evaluate, FieldPoint};
use crate::par;

/// Largest number of points enumerated without `force`.
pub const POINT_GUARD: u64 = 1_000_000;

/// Point-set comparison over a finite field. This is evidence for the
/// decomposition, not a proof of radicality.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct VarietyReport {
    pub edge: [usize; 2],
    pub field: u64,
    pub variables: usize,
    pub points_checked: u64,
    pub lhs_points: u64,
    pub rhs_points: u64,
    pub equal: bool,
    /// Index of the first point on which the two sides disagree.
    pub first_mismatch: Option<u64>,
}

#[derive(Clone, Copy)]
struct Tally {
    lhs: u64,
    rhs: u64,
    mismatch: Option<u64>,
}

impl Tally {
    const EMPTY: Tally = Tally {
        lhs: 0,
        rhs: 0,
        mismatch: None,
    };

    fn merge(self, other: Tally) -> Tally {
        let mismatch = match (self.mismatch, other.mismatch) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        Tally {
            lhs: self.lhs + other.lhs,
            rhs: self.rhs + other.rhs,
            mismatch,
        }
    }
}

fn vanishes(ideal: &GeneratorSet, pt: &FieldPoint, q: u64) -> bool {
    ideal
        .iter()
        .all(|p| evaluate(p, pt, q).expect("every used variable is assigned") == 0)
}

/// Compares `V(P_G, x[j,i])` with the union of the witness varieties over
/// `F_q`, enumerating every assignment of the variables that occur.
pub fn variety_check(
    g: &Graph,
    edge: (usize, usize),
    q: u64,
    force: bool,
) -> Result<VarietyReport> {
    check_field(q)?;
    let order = MonomialOrder::DegRevLex;
    let lhs = augment_with_antidiagonal(g, edge, order)?;
    let witnesses = minimal_primes(g, edge)?;
    let rhs: Vec<GeneratorSet> = witnesses
        .iter()
        .map(|w| witness_ideal(g, w, order))
        .collect::<Result<_>>()?;

    // The variables of P_G itself count as involved even when the rewritten
    // left side no longer mentions them.
    let pg = build_pg(g, order);
    let n = g.n() as u32;
    let used: BTreeSet<u32> = [&pg, &lhs]
        .into_iter()
        .chain(&rhs)
        .flat_map(|ideal| ideal.iter())
        .flat_map(|p| p.terms())
        .flat_map(|(m, _)| m.powers().iter().map(|&(pos, _)| pos).collect::<Vec<_>>())
        .collect();
    let support: Vec<VariableId> = used
        .iter()
        .map(|&p| VariableId::from_position(p, n))
        .collect();
    let total = u32::try_from(support.len())
        .ok()
        .and_then(|k| q.checked_pow(k))
        .unwrap_or(u64::MAX);
    if total > POINT_GUARD && !force {
        return Err(Error::Guard {
            what: "variety points",
            value: total,
            limit: POINT_GUARD,
        });
    }

    let tally = par::fold_range(
        0..total,
        Tally::EMPTY,
        |index| {
            let pt = FieldPoint::from_index(n, &support, q, index);
            let in_lhs = vanishes(&lhs, &pt, q);
            let in_rhs = rhs.iter().any(|ideal| vanishes(ideal, &pt, q));
            Tally {
                lhs: in_lhs as u64,
                rhs: in_rhs as u64,
                mismatch: (in_lhs != in_rhs).then_some(index),
            }
        },
        Tally::merge,
    );
    let (i, j) = witnesses.first().map_or(edge, |w| w.edge);
    Ok(VarietyReport {
        edge: [i, j],
        field: q,
        variables: support.len(),
        points_checked: total,
        lhs_points: tally.lhs,
        rhs_points: tally.rhs,
        equal: tally.mismatch.is_none(),
        first_mismatch: tally.mismatch,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::family;

    #[test]
    fn single_edge_over_f2() {
        let r = variety_check(&family("path:1").unwrap(), (1, 2), 2, false).unwrap();
        assert_eq!(r.variables, 4);
        assert_eq!(r.points_checked, 16);
        assert!(r.equal);
        // x21 = 0 and x11*x22 = 0: 3 choices of (x11, x22), x12 free.
        assert_eq!(r.lhs_points, 6);
        assert_eq!(r.rhs_points, 6);
    }

    #[test]
    fn examples() {
        assert!(
            variety_check(&family("path:2").unwrap(), (1, 2), 3, false)
                .unwrap()
                .equal
        );
        assert!(
            variety_check(&family("complete:3").unwrap(), (1, 2), 2, false)
                .unwrap()
                .equal
        );
        assert!(
            variety_check(&family("star:3").unwrap(), (1, 2), 2, false)
                .unwrap()
                .equal
        );
    }

    #[test]
    fn detects_a_missing_component() {
        // Dropping x[j,i] from the left side enlarges its variety.
        let g = family("path:1").unwrap();
        let q = 2;
        let lhs = build_pg(&g, MonomialOrder::DegRevLex);
        let support: Vec<VariableId> = (0..4).map(|p| VariableId::from_position(p, 2)).collect();
        let count = (0..16)
            .filter(|&k| vanishes(&lhs, &FieldPoint::from_index(2, &support, q, k), q))
            .count();
        assert!(count > 6);
    }

    #[test]
    fn guards() {
        let g = family("complete:4").unwrap();
        assert!(matches!(
            variety_check(&g, (1, 2), 3, false),
            Err(Error::Guard { .. })
        ));
        assert_eq!(
            variety_check(&g, (1, 2), 7, false),
            Err(Error::UnsupportedField(7))
        );
        assert!(variety_check(&g, (1, 5), 2, false).is_err());
    }
}
