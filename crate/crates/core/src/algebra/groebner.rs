use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;

use serde::Serialize;

use super::monomial::Monomial;
use super::order::MonomialOrder;
use super::poly::{normal_form_in, spoly, GeneratorSet, TwoTermPoly};

/// Counters collected by one completion run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CompletionStats {
    pub pairs_total: usize,
    pub pairs_coprime: usize,
    pub pairs_reduced_to_zero: usize,
    pub additions: usize,
}

// Critical pair, ordered by (lcm degree, lcm in the active order, indices).
struct Pair {
    order: MonomialOrder,
    lcm: Monomial,
    i: usize,
    j: usize,
}

impl PartialEq for Pair {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Pair {}

impl PartialOrd for Pair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Pair {
    fn cmp(&self, other: &Self) -> Ordering {
        self.lcm
            .degree()
            .cmp(&other.lcm.degree())
            .then_with(|| self.order.cmp(&self.lcm, &other.lcm))
            .then_with(|| (self.i, self.j).cmp(&(other.i, other.j)))
    }
}

/// Buchberger completion with the normal selection strategy and the
/// product criterion. The result is a Gröbner basis, not necessarily reduced.
pub fn buchberger(gens: &GeneratorSet) -> GeneratorSet {
    buchberger_with_stats(gens).0
}

pub fn buchberger_with_stats(gens: &GeneratorSet) -> (GeneratorSet, CompletionStats) {
    let order = gens.order();
    let mut basis: Vec<TwoTermPoly> = gens.gens().to_vec();
    let mut stats = CompletionStats::default();
    let mut queue = BinaryHeap::new();

    let push_pairs = |queue: &mut BinaryHeap<Reverse<Pair>>, basis: &[TwoTermPoly], j: usize| {
        let lj = basis[j].lead().expect("nonzero");
        for (i, g) in basis[..j].iter().enumerate() {
            let li = g.lead().expect("nonzero");
            queue.push(Reverse(Pair {
                order,
                lcm: li.lcm(lj),
                i,
                j,
            }));
        }
    };
    for j in 0..basis.len() {
        push_pairs(&mut queue, &basis, j);
    }

    while let Some(Reverse(pair)) = queue.pop() {
        stats.pairs_total += 1;
        let (f, g) = (&basis[pair.i], &basis[pair.j]);
        if f.lead()
            .expect("nonzero")
            .is_coprime(g.lead().expect("nonzero"))
        {
            stats.pairs_coprime += 1;
            continue;
        }
        let s = spoly(f, g, order).expect("basis elements are nonzero");
        let r = normal_form_in(&s, &basis, order);
        if r.is_zero() {
            stats.pairs_reduced_to_zero += 1;
            continue;
        }
        basis.push(r);
        push_pairs(&mut queue, &basis, basis.len() - 1);
    }

    let out = GeneratorSet::new(gens.n(), order, basis).expect("grid preserved");
    stats.additions = out.len().saturating_sub(gens.len());
    (out, stats)
}

/// True when every S-polynomial of the set reduces to zero against it.
pub fn is_groebner_basis(gb: &GeneratorSet) -> bool {
    let gens = gb.gens();
    (0..gens.len()).all(|j| {
        (0..j).all(|i| {
            let s = spoly(&gens[i], &gens[j], gb.order()).expect("nonzero");
            normal_form_in(&s, gens, gb.order()).is_zero()
        })
    })
}

/// Reduced Gröbner basis from a Gröbner basis: no leading monomial divides
/// another and no trailing monomial is divisible by any leading monomial.
pub fn reduce_basis(gb: &GeneratorSet) -> GeneratorSet {
    let order = gb.order();
    let gens = gb.gens();
    let minimal: Vec<TwoTermPoly> = gens
        .iter()
        .enumerate()
        .filter(|&(k, g)| {
            let lead = g.lead().expect("nonzero");
            !gens.iter().enumerate().any(|(h, other)| {
                let l = other.lead().expect("nonzero");
                h != k && l.divides(lead) && (l != lead || h < k)
            })
        })
        .map(|(_, g)| g.clone())
        .collect();

    let reduced = minimal.iter().map(|g| match g {
        TwoTermPoly::Binom { lead, trail } => {
            match normal_form_in(&TwoTermPoly::Mono(trail.clone()), &minimal, order) {
                TwoTermPoly::Zero => TwoTermPoly::Mono(lead.clone()),
                TwoTermPoly::Mono(t) => TwoTermPoly::binomial(lead.clone(), t, order),
                TwoTermPoly::Binom { .. } => unreachable!("a monomial reduces to a monomial"),
            }
        }
        other => other.clone(),
    });
    GeneratorSet::new(gb.n(), order, reduced.collect::<Vec<_>>()).expect("grid preserved")
}

/// True when `gb` is already a reduced Gröbner basis.
pub fn is_reduced(gb: &GeneratorSet) -> bool {
    let gens = gb.gens();
    gens.iter().enumerate().all(|(k, g)| {
        let others = || {
            gens.iter()
                .enumerate()
                .filter(move |&(h, _)| h != k)
                .map(|(_, o)| o.lead().expect("nonzero"))
        };
        let lead = g.lead().expect("nonzero");
        let lead_ok = !others().any(|l| l.divides(lead));
        let trail_ok = g
            .trail()
            .is_none_or(|t| !gens.iter().any(|o| o.lead().expect("nonzero").divides(t)));
        lead_ok && trail_ok
    }) && is_groebner_basis(gb)
}

/// Minimal monomial generators of the ideal of leading monomials, greatest first.
pub fn initial_ideal(gb: &GeneratorSet) -> Vec<Monomial> {
    let leads: Vec<Monomial> = gb.iter().filter_map(|g| g.lead().cloned()).collect();
    minimalize(leads, gb.order())
}

/// Drops duplicates and monomials divisible by another in the list, then
/// sorts greatest first.
pub fn minimalize(mut monos: Vec<Monomial>, order: MonomialOrder) -> Vec<Monomial> {
    monos.sort_by(|a, b| order.cmp(b, a));
    monos.dedup();
    let keep: Vec<bool> = monos
        .iter()
        .enumerate()
        .map(|(k, m)| {
            !monos
                .iter()
                .enumerate()
                .any(|(h, other)| h != k && other.divides(m))
        })
        .collect();
    monos
        .into_iter()
        .zip(keep)
        .filter_map(|(m, k)| k.then_some(m))
        .collect()
}
