//! Height of squarefree monomial ideals as a minimum vertex cover of the
//! generator supports.

use super::monomial::Monomial;
use crate::error::{Error, Result};

/// Height of the ideal generated by `mins`, which must be squarefree and
/// divisibility-minimal.
///
/// Pairwise disjoint supports form a regular sequence and the height is the
/// number of generators; otherwise an exact branch-and-bound search finds a
/// smallest set of variables meeting every support.
pub fn monomial_ideal_height(mins: &[Monomial]) -> Result<usize> {
    for (k, m) in mins.iter().enumerate() {
        if m.is_one() {
            return Err(Error::UnitIdeal);
        }
        if !m.is_squarefree() {
            return Err(Error::NotSquarefree(m.to_string()));
        }
        if mins
            .iter()
            .enumerate()
            .any(|(h, other)| h != k && other.divides(m))
        {
            return Err(Error::NotMinimal(m.to_string()));
        }
    }
    let supports: Vec<Vec<u32>> = mins
        .iter()
        .map(|m| m.powers().iter().map(|&(p, _)| p).collect())
        .collect();
    if pairwise_disjoint(&supports) {
        return Ok(supports.len());
    }
    Ok(min_hitting_set(&supports))
}

/// Height of an arbitrary monomial ideal, computed on its radical.
pub fn radical_height(monos: &[Monomial]) -> Result<usize> {
    let Some(first) = monos.first() else {
        return Ok(0);
    };
    let radicals: Vec<Monomial> = monos.iter().map(Monomial::radical).collect();
    let order = super::order::MonomialOrder::Lex;
    debug_assert!(monos.iter().all(|m| m.n() == first.n()));
    monomial_ideal_height(&super::groebner::minimalize(radicals, order))
}

pub fn pairwise_disjoint(supports: &[Vec<u32>]) -> bool {
    let mut seen: Vec<u32> = supports.iter().flatten().copied().collect();
    let total = seen.len();
    seen.sort_unstable();
    seen.dedup();
    seen.len() == total
}

fn min_hitting_set(supports: &[Vec<u32>]) -> usize {
    let mut best = greedy_cover(supports);
    let mut chosen = Vec::new();
    search(supports, &mut chosen, &mut best);
    best
}

fn is_hit(set: &[u32], chosen: &[u32]) -> bool {
    set.iter().any(|v| chosen.contains(v))
}

fn greedy_cover(supports: &[Vec<u32>]) -> usize {
    let mut chosen: Vec<u32> = Vec::new();
    for s in supports {
        if !is_hit(s, &chosen) {
            chosen.push(s[0]);
        }
    }
    chosen.len()
}

// Lower bound: a greedy packing of pairwise disjoint unhit supports.
fn packing_bound(supports: &[Vec<u32>], chosen: &[u32]) -> usize {
    let mut used: Vec<u32> = Vec::new();
    let mut count = 0;
    for s in supports {
        if !is_hit(s, chosen) && !is_hit(s, &used) {
            used.extend_from_slice(s);
            count += 1;
        }
    }
    count
}

fn search(supports: &[Vec<u32>], chosen: &mut Vec<u32>, best: &mut usize) {
    let branch = supports
        .iter()
        .filter(|s| !is_hit(s, chosen))
        .min_by_key(|s| s.len());
    let Some(branch) = branch else {
        *best = (*best).min(chosen.len());
        return;
    };
    if chosen.len() + packing_bound(supports, chosen) >= *best {
        return;
    }
    for &v in branch {
        chosen.push(v);
        search(supports, chosen, best);
        chosen.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(pairs: &[(u32, u32)]) -> Monomial {
        Monomial::from_pairs(3, pairs)
    }

    #[test]
    fn disjoint_supports() {
        let mins = [m(&[(1, 2), (2, 1)]), m(&[(2, 3), (3, 2)])];
        assert_eq!(monomial_ideal_height(&mins), Ok(2));
    }

    #[test]
    fn shared_variable() {
        let mins = [m(&[(1, 1), (2, 2)]), m(&[(2, 2), (3, 3)])];
        assert_eq!(monomial_ideal_height(&mins), Ok(1));
    }

    #[test]
    fn contract_violations() {
        let not_minimal = [m(&[(1, 2), (2, 1)]), m(&[(1, 1), (2, 2)]), m(&[(2, 1)])];
        assert!(matches!(
            monomial_ideal_height(&not_minimal),
            Err(Error::NotMinimal(_))
        ));
        let square = [m(&[(1, 1), (1, 1)])];
        assert!(matches!(
            monomial_ideal_height(&square),
            Err(Error::NotSquarefree(_))
        ));
        assert_eq!(
            monomial_ideal_height(&[Monomial::one(3)]),
            Err(Error::UnitIdeal)
        );
        assert_eq!(monomial_ideal_height(&[]), Ok(0));
    }

    #[test]
    fn radical_of_non_squarefree() {
        let monos = [m(&[(1, 1), (1, 1)]), m(&[(1, 1), (2, 2)]), m(&[(3, 3)])];
        assert_eq!(radical_height(&monos), Ok(2));
    }

    #[test]
    fn triangle_cover_needs_two() {
        let mins = [
            m(&[(1, 1), (2, 2)]),
            m(&[(2, 2), (3, 3)]),
            m(&[(1, 1), (3, 3)]),
        ];
        assert_eq!(monomial_ideal_height(&mins), Ok(2));
    }
}
