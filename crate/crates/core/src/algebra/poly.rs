use std::cmp::Ordering;
use std::fmt;

use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use super::monomial::Monomial;
use super::order::MonomialOrder;
use crate::error::{Error, Result};

/// A polynomial with at most two terms and coefficients in `{+1, -1}`.
///
/// This class is closed under S-polynomials and reduction by members of
/// the class, so every intermediate of the completion lives here and the
/// engine is valid over any coefficient field. A binomial is stored as
/// `lead - trail` with `lead > trail` in the order it was built with; an
/// overall unit sign is irrelevant for ideal membership and is dropped.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TwoTermPoly {
    Zero,
    Mono(Monomial),
    Binom { lead: Monomial, trail: Monomial },
}

impl TwoTermPoly {
    /// `a - b` up to sign, oriented by `order`.
    pub fn binomial(a: Monomial, b: Monomial, order: MonomialOrder) -> Self {
        match order.cmp(&a, &b) {
            Ordering::Equal => TwoTermPoly::Zero,
            Ordering::Greater => TwoTermPoly::Binom { lead: a, trail: b },
            Ordering::Less => TwoTermPoly::Binom { lead: b, trail: a },
        }
    }

    pub fn monomial(m: Monomial) -> Self {
        TwoTermPoly::Mono(m)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, TwoTermPoly::Zero)
    }

    pub fn lead(&self) -> Option<&Monomial> {
        match self {
            TwoTermPoly::Zero => None,
            TwoTermPoly::Mono(m) => Some(m),
            TwoTermPoly::Binom { lead, .. } => Some(lead),
        }
    }

    pub fn trail(&self) -> Option<&Monomial> {
        match self {
            TwoTermPoly::Binom { trail, .. } => Some(trail),
            _ => None,
        }
    }

    pub fn n(&self) -> Option<u32> {
        self.lead().map(Monomial::n)
    }

    /// Total degree (maximum over terms); zero for the zero polynomial.
    pub fn degree(&self) -> u32 {
        match self {
            TwoTermPoly::Zero => 0,
            TwoTermPoly::Mono(m) => m.degree(),
            TwoTermPoly::Binom { lead, trail } => lead.degree().max(trail.degree()),
        }
    }

    /// Terms in descending order with their signs.
    pub fn terms(&self) -> Vec<(&Monomial, i8)> {
        match self {
            TwoTermPoly::Zero => Vec::new(),
            TwoTermPoly::Mono(m) => vec![(m, 1)],
            TwoTermPoly::Binom { lead, trail } => vec![(lead, 1), (trail, -1)],
        }
    }

    /// Re-orients a binomial for another order.
    pub fn oriented(self, order: MonomialOrder) -> Self {
        match self {
            TwoTermPoly::Binom { lead, trail } => TwoTermPoly::binomial(lead, trail, order),
            other => other,
        }
    }

    /// True when the polynomial is `u - v` with `u != v` (no monomial or zero).
    pub fn is_binomial(&self) -> bool {
        matches!(self, TwoTermPoly::Binom { .. })
    }
}

impl fmt::Display for TwoTermPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TwoTermPoly::Zero => f.write_str("0"),
            TwoTermPoly::Mono(m) => write!(f, "{m}"),
            TwoTermPoly::Binom { lead, trail } => write!(f, "{lead} - {trail}"),
        }
    }
}

#[derive(Serialize)]
struct TermRecord {
    vars: Vec<[u32; 2]>,
    sign: i8,
}

impl Serialize for TwoTermPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<TermRecord> = self
            .terms()
            .into_iter()
            .map(|(m, sign)| TermRecord {
                vars: m
                    .vars_with_multiplicity()
                    .into_iter()
                    .map(|v| [v.row, v.col])
                    .collect(),
                sign,
            })
            .collect();
        let mut s = serializer.serialize_struct("Polynomial", 2)?;
        s.serialize_field("render", &self.to_string())?;
        s.serialize_field("terms", &terms)?;
        s.end()
    }
}

/// An ordered, duplicate-free list of nonzero two-term polynomials over a
/// fixed grid and monomial order.
///
/// Elements are sorted by leading monomial, greatest first, then by
/// trailing monomial (monomials before binomials on ties).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSet {
    n: u32,
    order: MonomialOrder,
    gens: Vec<TwoTermPoly>,
}

impl GeneratorSet {
    /// Builds a generator set, orienting every element for `order` and
    /// dropping zeros and duplicates.
    pub fn new<I>(n: u32, order: MonomialOrder, polys: I) -> Result<Self>
    where
        I: IntoIterator<Item = TwoTermPoly>,
    {
        let mut gens = Vec::new();
        for p in polys {
            if let Some(m) = p.n() {
                if m != n {
                    return Err(Error::GridMismatch { left: n, right: m });
                }
            }
            let p = p.oriented(order);
            if !p.is_zero() {
                gens.push(p);
            }
        }
        gens.sort_by(|a, b| compare_elements(order, a, b).reverse());
        gens.dedup();
        Ok(GeneratorSet { n, order, gens })
    }

    pub fn empty(n: u32, order: MonomialOrder) -> Self {
        GeneratorSet {
            n,
            order,
            gens: Vec::new(),
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn gens(&self) -> &[TwoTermPoly] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, TwoTermPoly> {
        self.gens.iter()
    }

    pub fn into_gens(self) -> Vec<TwoTermPoly> {
        self.gens
    }

    /// Union of two generator sets over the same grid and order.
    pub fn union(&self, other: &GeneratorSet) -> Result<GeneratorSet> {
        if self.n != other.n {
            return Err(Error::GridMismatch {
                left: self.n,
                right: other.n,
            });
        }
        GeneratorSet::new(
            self.n,
            self.order,
            self.gens.iter().chain(other.gens.iter()).cloned(),
        )
    }

    /// The same generators sorted for another order.
    pub fn with_order(&self, order: MonomialOrder) -> GeneratorSet {
        GeneratorSet::new(self.n, order, self.gens.iter().cloned()).expect("same grid")
    }

    /// True when every element of `self` is an element of `other`.
    pub fn is_subset_of(&self, other: &GeneratorSet) -> bool {
        self.gens.iter().all(|g| other.gens.contains(g))
    }
}

impl<'a> IntoIterator for &'a GeneratorSet {
    type Item = &'a TwoTermPoly;
    type IntoIter = std::slice::Iter<'a, TwoTermPoly>;

    fn into_iter(self) -> Self::IntoIter {
        self.gens.iter()
    }
}

impl fmt::Display for GeneratorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for GeneratorSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.gens.serialize(serializer)
    }
}

fn compare_elements(order: MonomialOrder, a: &TwoTermPoly, b: &TwoTermPoly) -> Ordering {
    match (a.lead(), b.lead()) {
        (Some(la), Some(lb)) => order
            .cmp(la, lb)
            .then_with(|| match (a.trail(), b.trail()) {
                (Some(ta), Some(tb)) => order.cmp(ta, tb),
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (None, None) => Ordering::Equal,
            }),
        (Some(_), None) => Ordering::Greater,
        (None, Some(_)) => Ordering::Less,
        (None, None) => Ordering::Equal,
    }
}

/// The S-polynomial `(L/lt f) f - (L/lt g) g` with `L = lcm(lt f, lt g)`.
pub fn spoly(f: &TwoTermPoly, g: &TwoTermPoly, order: MonomialOrder) -> Result<TwoTermPoly> {
    let (lf, lg) = match (f.lead(), g.lead()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(Error::ZeroPolynomial),
    };
    if lf.n() != lg.n() {
        return Err(Error::GridMismatch {
            left: lf.n(),
            right: lg.n(),
        });
    }
    let l = lf.lcm(lg);
    // The leading terms cancel, leaving the scaled trails (if any).
    let scaled_trail = |p: &TwoTermPoly, lead: &Monomial| {
        p.trail()
            .map(|t| l.checked_div(lead).expect("lcm is a multiple").mul(t))
    };
    Ok(match (scaled_trail(f, lf), scaled_trail(g, lg)) {
        (None, None) => TwoTermPoly::Zero,
        (Some(u), None) | (None, Some(u)) => TwoTermPoly::Mono(u),
        (Some(u), Some(v)) => TwoTermPoly::binomial(u, v, order),
    })
}

/// Index of the first basis element whose leading monomial divides `t`.
fn find_divisor(t: &Monomial, basis: &[TwoTermPoly]) -> Option<usize> {
    basis
        .iter()
        .position(|g| g.lead().is_some_and(|l| l.divides(t)))
}

/// One rewrite of `t` by `g`: `None` when `g` is a monomial (term deleted).
fn rewrite(t: &Monomial, g: &TwoTermPoly) -> Option<Monomial> {
    let lead = g.lead().expect("basis elements are nonzero");
    let cofactor = t.checked_div(lead).expect("divisor found");
    g.trail().map(|tr| cofactor.mul(tr))
}

/// Fully reduces `p` by `basis`, always rewriting the leading term first
/// and picking the lowest-index divisor.
pub fn normal_form_in(p: &TwoTermPoly, basis: &[TwoTermPoly], order: MonomialOrder) -> TwoTermPoly {
    let mut p = p.clone();
    loop {
        p = match p {
            TwoTermPoly::Zero => return TwoTermPoly::Zero,
            TwoTermPoly::Mono(m) => match find_divisor(&m, basis) {
                None => return TwoTermPoly::Mono(m),
                Some(k) => match rewrite(&m, &basis[k]) {
                    None => TwoTermPoly::Zero,
                    Some(u) => TwoTermPoly::Mono(u),
                },
            },
            TwoTermPoly::Binom { lead, trail } => {
                if let Some(k) = find_divisor(&lead, basis) {
                    match rewrite(&lead, &basis[k]) {
                        None => TwoTermPoly::Mono(trail),
                        Some(u) => TwoTermPoly::binomial(u, trail, order),
                    }
                } else if let Some(k) = find_divisor(&trail, basis) {
                    match rewrite(&trail, &basis[k]) {
                        None => TwoTermPoly::Mono(lead),
                        Some(u) => TwoTermPoly::binomial(lead, u, order),
                    }
                } else {
                    return TwoTermPoly::Binom { lead, trail };
                }
            }
        };
    }
}

/// Normal form of `p` against a generator set.
pub fn normal_form(p: &TwoTermPoly, basis: &GeneratorSet) -> Result<TwoTermPoly> {
    if let Some(m) = p.n() {
        if m != basis.n() {
            return Err(Error::GridMismatch {
                left: m,
                right: basis.n(),
            });
        }
    }
    let p = p.clone().oriented(basis.order());
    Ok(normal_form_in(&p, basis.gens(), basis.order()))
}
