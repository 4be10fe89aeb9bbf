use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The variable `x[row,col]` of an `n x n` grid.
///
/// Variables are totally ordered by their position `(row-1)*n + (col-1)`:
/// a smaller position is a greater variable, so `x[1,1] > x[1,2] > ... > x[n,n]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VariableId {
    pub row: u32,
    pub col: u32,
}

impl VariableId {
    pub fn new(row: u32, col: u32, n: u32) -> Result<Self> {
        for v in [row, col] {
            if v == 0 || v > n {
                return Err(Error::VertexOutOfRange {
                    vertex: v as usize,
                    n: n as usize,
                });
            }
        }
        Ok(VariableId { row, col })
    }

    pub fn position(&self, n: u32) -> u32 {
        (self.row - 1) * n + (self.col - 1)
    }

    pub fn from_position(position: u32, n: u32) -> Self {
        VariableId {
            row: position / n + 1,
            col: position % n + 1,
        }
    }
}

impl fmt::Display for VariableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x[{},{}]", self.row, self.col)
    }
}

/// A monomial over the `n x n` grid, stored as `(position, exponent)` pairs
/// sorted by position with no zero exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    n: u32,
    powers: Vec<(u32, u32)>,
    degree: u32,
}

impl Monomial {
    /// The monomial 1.
    pub fn one(n: u32) -> Self {
        Monomial {
            n,
            powers: Vec::new(),
            degree: 0,
        }
    }

    pub fn var(v: VariableId, n: u32) -> Self {
        Monomial {
            n,
            powers: vec![(v.position(n), 1)],
            degree: 1,
        }
    }

    /// Product of the listed variables, with repetition.
    pub fn from_vars<I: IntoIterator<Item = VariableId>>(n: u32, vars: I) -> Self {
        let mut positions: Vec<u32> = vars.into_iter().map(|v| v.position(n)).collect();
        positions.sort_unstable();
        let mut powers: Vec<(u32, u32)> = Vec::with_capacity(positions.len());
        for p in positions {
            match powers.last_mut() {
                Some((q, e)) if *q == p => *e += 1,
                _ => powers.push((p, 1)),
            }
        }
        let degree = powers.iter().map(|&(_, e)| e).sum();
        Monomial { n, powers, degree }
    }

    /// Shorthand for building test and template monomials from `(row, col)`
    /// pairs. Panics on out-of-range indices.
    pub fn from_pairs(n: u32, pairs: &[(u32, u32)]) -> Self {
        Self::from_vars(
            n,
            pairs
                .iter()
                .map(|&(r, c)| VariableId::new(r, c, n).expect("index in range")),
        )
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.powers.is_empty()
    }

    /// `(position, exponent)` pairs in increasing position order.
    pub fn powers(&self) -> &[(u32, u32)] {
        &self.powers
    }

    pub fn exponent(&self, v: VariableId) -> u32 {
        let p = v.position(self.n);
        self.powers
            .binary_search_by_key(&p, |&(q, _)| q)
            .map(|i| self.powers[i].1)
            .unwrap_or(0)
    }

    /// Variables with positive exponent, greatest first.
    pub fn support(&self) -> impl Iterator<Item = VariableId> + '_ {
        self.powers
            .iter()
            .map(move |&(p, _)| VariableId::from_position(p, self.n))
    }

    /// Variables repeated by exponent, greatest first.
    pub fn vars_with_multiplicity(&self) -> Vec<VariableId> {
        self.powers
            .iter()
            .flat_map(|&(p, e)| {
                std::iter::repeat_n(VariableId::from_position(p, self.n), e as usize)
            })
            .collect()
    }

    pub fn is_squarefree(&self) -> bool {
        self.powers.iter().all(|&(_, e)| e == 1)
    }

    /// The product of the support (radical of the principal ideal).
    pub fn radical(&self) -> Monomial {
        Monomial {
            n: self.n,
            powers: self.powers.iter().map(|&(p, _)| (p, 1)).collect(),
            degree: self.powers.len() as u32,
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.merge(other, |a, b| a + b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        self.merge(other, u32::max)
    }

    /// True when the two monomials share no variable.
    pub fn is_coprime(&self, other: &Monomial) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.powers.len() && j < other.powers.len() {
            match self.powers[i].0.cmp(&other.powers[j].0) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    }

    /// True when `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        if self.degree > other.degree {
            return false;
        }
        let mut j = 0;
        for &(p, e) in &self.powers {
            while j < other.powers.len() && other.powers[j].0 < p {
                j += 1;
            }
            match other.powers.get(j) {
                Some(&(q, f)) if q == p && f >= e => j += 1,
                _ => return false,
            }
        }
        true
    }

    /// `self / divisor`, or `None` when the division is not exact.
    pub fn checked_div(&self, divisor: &Monomial) -> Option<Monomial> {
        if !divisor.divides(self) {
            return None;
        }
        let mut powers = Vec::with_capacity(self.powers.len());
        let mut j = 0;
        for &(p, e) in &self.powers {
            let mut e = e;
            if j < divisor.powers.len() && divisor.powers[j].0 == p {
                e -= divisor.powers[j].1;
                j += 1;
            }
            if e > 0 {
                powers.push((p, e));
            }
        }
        Some(Monomial {
            n: self.n,
            powers,
            degree: self.degree - divisor.degree,
        })
    }

    fn merge(&self, other: &Monomial, combine: impl Fn(u32, u32) -> u32) -> Monomial {
        debug_assert_eq!(self.n, other.n);
        let mut powers = Vec::with_capacity(self.powers.len() + other.powers.len());
        let (mut i, mut j) = (0, 0);
        loop {
            let a = self.powers.get(i);
            let b = other.powers.get(j);
            match (a, b) {
                (None, None) => break,
                (Some(&(p, e)), None) => {
                    powers.push((p, combine(e, 0)));
                    i += 1;
                }
                (None, Some(&(q, f))) => {
                    powers.push((q, combine(0, f)));
                    j += 1;
                }
                (Some(&(p, e)), Some(&(q, f))) => {
                    if p < q {
                        powers.push((p, combine(e, 0)));
                        i += 1;
                    } else if q < p {
                        powers.push((q, combine(0, f)));
                        j += 1;
                    } else {
                        powers.push((p, combine(e, f)));
                        i += 1;
                        j += 1;
                    }
                }
            }
        }
        let degree = powers.iter().map(|&(_, e)| e).sum();
        Monomial {
            n: self.n,
            powers,
            degree,
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.powers.is_empty() {
            return f.write_str("1");
        }
        for (k, &(p, e)) in self.powers.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            write!(f, "{}", VariableId::from_position(p, self.n))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positions_follow_row_major_order() {
        assert_eq!(VariableId { row: 1, col: 1 }.position(3), 0);
        assert_eq!(VariableId { row: 2, col: 1 }.position(3), 3);
        assert_eq!(
            VariableId::from_position(5, 3),
            VariableId { row: 2, col: 3 }
        );
        assert!(VariableId::new(0, 1, 3).is_err());
        assert!(VariableId::new(1, 4, 3).is_err());
    }

    #[test]
    fn arithmetic() {
        let a = Monomial::from_pairs(3, &[(1, 1), (2, 2)]);
        let b = Monomial::from_pairs(3, &[(2, 2), (3, 3)]);
        let l = a.lcm(&b);
        assert_eq!(l, Monomial::from_pairs(3, &[(1, 1), (2, 2), (3, 3)]));
        assert_eq!(l.degree(), 3);
        assert_eq!(a.mul(&b).exponent(VariableId { row: 2, col: 2 }), 2);
        assert!(a.divides(&l));
        assert!(!l.divides(&a));
        assert_eq!(l.checked_div(&a), Some(Monomial::from_pairs(3, &[(3, 3)])));
        assert_eq!(a.checked_div(&b), None);
        assert!(!a.is_coprime(&b));
        assert!(a.is_coprime(&Monomial::from_pairs(3, &[(1, 2)])));
    }

    #[test]
    fn squarefree() {
        assert!(Monomial::from_pairs(2, &[(1, 2), (2, 1)]).is_squarefree());
        assert!(!Monomial::from_pairs(2, &[(1, 1), (1, 1)]).is_squarefree());
        assert!(Monomial::one(2).is_squarefree());
    }

    #[test]
    fn display() {
        assert_eq!(
            Monomial::from_pairs(2, &[(2, 2), (1, 1)]).to_string(),
            "x[1,1]*x[2,2]"
        );
        assert_eq!(
            Monomial::from_pairs(2, &[(1, 1), (1, 1)]).to_string(),
            "x[1,1]^2"
        );
        assert_eq!(Monomial::one(2).to_string(), "1");
    }
}
