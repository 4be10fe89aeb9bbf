//! Textbook Buchberger over exact rationals with an unrestricted number of
//! terms. Shares no arithmetic with [`crate::algebra`]: monomials are dense
//! exponent vectors and both orders are re-implemented here.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::{MonomialOrder, TwoTermPoly, VariableId};

/// Dense exponent vector over `n*n` variables in row-major position order.
pub type DenseMonomial = Vec<u32>;

fn dense_cmp(order: MonomialOrder, a: &[u32], b: &[u32]) -> Ordering {
    match order {
        MonomialOrder::Lex => {
            for (x, y) in a.iter().zip(b) {
                if x != y {
                    return x.cmp(y);
                }
            }
            Ordering::Equal
        }
        MonomialOrder::DegRevLex => {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            if da != db {
                return da.cmp(&db);
            }
            for (x, y) in a.iter().zip(b).rev() {
                if x != y {
                    return y.cmp(x);
                }
            }
            Ordering::Equal
        }
    }
}

/// A polynomial with rational coefficients, terms sorted greatest first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenericPoly {
    order: MonomialOrder,
    terms: Vec<(DenseMonomial, BigRational)>,
}

impl GenericPoly {
    pub fn zero(order: MonomialOrder) -> Self {
        GenericPoly {
            order,
            terms: Vec::new(),
        }
    }

    pub fn from_terms(order: MonomialOrder, terms: Vec<(DenseMonomial, BigRational)>) -> Self {
        let mut p = GenericPoly::zero(order);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Converts a two-term polynomial: `lead - trail`, or `+mono`.
    pub fn from_two_term(p: &TwoTermPoly, order: MonomialOrder) -> Self {
        let dense = |m: &crate::algebra::Monomial| {
            let n = m.n();
            let mut e = vec![0; (n * n) as usize];
            for v in m.vars_with_multiplicity() {
                e[v.position(n) as usize] += 1;
            }
            e
        };
        let terms = p
            .terms()
            .into_iter()
            .map(|(m, sign)| (dense(m), BigRational::from_integer(BigInt::from(sign))))
            .collect();
        GenericPoly::from_terms(order, terms)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(DenseMonomial, BigRational)] {
        &self.terms
    }

    pub fn leading(&self) -> Option<&(DenseMonomial, BigRational)> {
        self.terms.first()
    }

    fn add_term(&mut self, m: DenseMonomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let order = self.order;
        match self
            .terms
            .binary_search_by(|(t, _)| dense_cmp(order, &m, t))
        {
            Ok(k) => {
                let sum = &self.terms[k].1 + &c;
                if sum.is_zero() {
                    self.terms.remove(k);
                } else {
                    self.terms[k].1 = sum;
                }
            }
            Err(k) => self.terms.insert(k, (m, c)),
        }
    }

    /// `self - c * m * other`
    fn sub_scaled(&self, c: &BigRational, m: &[u32], other: &GenericPoly) -> GenericPoly {
        let mut out = self.clone();
        for (t, d) in &other.terms {
            let prod: DenseMonomial = t.iter().zip(m).map(|(a, b)| a + b).collect();
            out.add_term(prod, -(c * d));
        }
        out
    }

    fn monic(&self) -> GenericPoly {
        match self.leading() {
            None => self.clone(),
            Some((_, lc)) => {
                let inv = lc.recip();
                GenericPoly {
                    order: self.order,
                    terms: self
                        .terms
                        .iter()
                        .map(|(m, c)| (m.clone(), c * &inv))
                        .collect(),
                }
            }
        }
    }

    /// Evaluates at an integer point reduced modulo `q`.
    pub fn evaluate_mod(&self, values: &[u64], q: u64) -> Option<u64> {
        let qi = BigInt::from(q);
        let mut acc = BigInt::zero();
        for (m, c) in &self.terms {
            let mut v = BigInt::one();
            for (pos, &e) in m.iter().enumerate() {
                if e > 0 {
                    v *= BigInt::from(values[pos]).pow(e);
                }
            }
            // c = num/den; need den invertible mod q.
            let den = c.denom().mod_floor_pos(&qi);
            let inv = mod_inverse(&den, &qi)?;
            acc += v * c.numer() * inv;
        }
        let r = acc.mod_floor_pos(&qi);
        Some(r.to_string().parse().expect("small residue"))
    }
}

trait ModFloor {
    fn mod_floor_pos(&self, q: &BigInt) -> BigInt;
}

impl ModFloor for BigInt {
    fn mod_floor_pos(&self, q: &BigInt) -> BigInt {
        let r = self % q;
        if r.is_negative() {
            r + q
        } else {
            r
        }
    }
}

fn mod_inverse(a: &BigInt, q: &BigInt) -> Option<BigInt> {
    let mut k = BigInt::one();
    while &k < q {
        if (a * &k) % q == BigInt::one() {
            return Some(k);
        }
        k += 1;
    }
    None
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn quotient(b: &[u32], a: &[u32]) -> DenseMonomial {
    b.iter().zip(a).map(|(y, x)| y - x).collect()
}

/// Full multivariate division: the remainder of `p` by `divisors`.
pub fn remainder(p: &GenericPoly, divisors: &[GenericPoly]) -> GenericPoly {
    let mut p = p.clone();
    let mut rem = GenericPoly::zero(p.order);
    while let Some((m, c)) = p.leading().cloned() {
        let hit = divisors
            .iter()
            .find(|d| d.leading().is_some_and(|(lm, _)| divides(lm, &m)));
        match hit {
            Some(d) => {
                let (lm, lc) = d.leading().expect("nonzero divisor");
                let coeff = &c / lc;
                p = p.sub_scaled(&coeff, &quotient(&m, lm), d);
            }
            None => {
                rem.add_term(m.clone(), c.clone());
                p.terms.remove(0);
            }
        }
    }
    rem
}

fn s_polynomial(f: &GenericPoly, g: &GenericPoly) -> GenericPoly {
    let (mf, cf) = f.leading().expect("nonzero");
    let (mg, cg) = g.leading().expect("nonzero");
    let lcm: DenseMonomial = mf.iter().zip(mg).map(|(a, b)| *a.max(b)).collect();
    let left = GenericPoly::zero(f.order).sub_scaled(&-cf.recip(), &quotient(&lcm, mf), f);
    left.sub_scaled(&cg.recip(), &quotient(&lcm, mg), g)
}

/// The monic reduced Gröbner basis, sorted by leading monomial (greatest first).
///
/// Naive pair processing: every pair is examined, no criteria are applied,
/// and the loop repeats until a full pass adds nothing.
pub fn generic_buchberger(gens: &[GenericPoly], order: MonomialOrder) -> Vec<GenericPoly> {
    let mut basis: Vec<GenericPoly> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    loop {
        let mut added = false;
        let snapshot = basis.len();
        for j in 0..snapshot {
            for i in 0..j {
                let s = s_polynomial(&basis[i], &basis[j]);
                let r = remainder(&s, &basis);
                if !r.is_zero() {
                    basis.push(r);
                    added = true;
                }
            }
        }
        if !added {
            break;
        }
    }

    // Minimalize: drop elements whose leading monomial is divisible by another's.
    let mut minimal: Vec<GenericPoly> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        let lm = &g.leading().expect("nonzero").0;
        let redundant = basis.iter().enumerate().any(|(h, other)| {
            let lo = &other.leading().expect("nonzero").0;
            h != k && divides(lo, lm) && (lo != lm || h < k)
        });
        if !redundant {
            minimal.push(g.monic());
        }
    }
    // Tail-reduce each element by the others.
    let mut reduced = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<GenericPoly> = minimal
            .iter()
            .enumerate()
            .filter(|&(h, _)| h != k)
            .map(|(_, p)| p.clone())
            .collect();
        reduced.push(remainder(&minimal[k], &others).monic());
    }
    reduced.sort_by(|a, b| {
        dense_cmp(
            order,
            &b.leading().expect("nonzero").0,
            &a.leading().expect("nonzero").0,
        )
    });
    reduced
}

/// Renders a dense monomial like the main engine does.
pub fn render_dense(m: &[u32], n: u32) -> String {
    let mut parts = Vec::new();
    for (pos, &e) in m.iter().enumerate() {
        if e == 0 {
            continue;
        }
        let v = VariableId::from_position(pos as u32, n);
        if e == 1 {
            parts.push(v.to_string());
        } else {
            parts.push(format!("{v}^{e}"));
        }
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}
