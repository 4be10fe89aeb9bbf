use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::monomial::Monomial;
use crate::error::{Error, Result};

/// The two monomial orders used on the grid ring.
///
/// `DegRevLex` is the graded reverse lexicographic order. Plain reverse lex
/// is not a well-order, and the graded version selects the anti-diagonal
/// `x[i,j]*x[j,i]` as leading term of every diagonal minor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    Lex,
    DegRevLex,
}

impl MonomialOrder {
    /// Compares monomials over the same grid; mismatched grids are rejected.
    pub fn compare(self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.n() != b.n() {
            return Err(Error::GridMismatch {
                left: a.n(),
                right: b.n(),
            });
        }
        Ok(self.cmp(a, b))
    }

    /// Unchecked comparison used on hot paths where the grid is known to agree.
    pub fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => lex(a.powers(), b.powers()),
            MonomialOrder::DegRevLex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| revlex(a.powers(), b.powers())),
        }
    }

    pub fn max<'a>(self, a: &'a Monomial, b: &'a Monomial) -> &'a Monomial {
        if self.cmp(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}

// At the smallest position where exponents differ, the larger exponent wins.
fn lex(a: &[(u32, u32)], b: &[(u32, u32)]) -> Ordering {
    let (mut i, mut j) = (0, 0);
    loop {
        match (a.get(i), b.get(j)) {
            (None, None) => return Ordering::Equal,
            (Some(_), None) => return Ordering::Greater,
            (None, Some(_)) => return Ordering::Less,
            (Some(&(p, e)), Some(&(q, f))) => {
                if p < q {
                    return Ordering::Greater;
                }
                if q < p {
                    return Ordering::Less;
                }
                if e != f {
                    return e.cmp(&f);
                }
                i += 1;
                j += 1;
            }
        }
    }
}

// At the largest position where exponents differ, the smaller exponent wins.
fn revlex(a: &[(u32, u32)], b: &[(u32, u32)]) -> Ordering {
    let (mut i, mut j) = (a.len(), b.len());
    loop {
        match (i.checked_sub(1), j.checked_sub(1)) {
            (None, None) => return Ordering::Equal,
            (Some(_), None) => return Ordering::Less,
            (None, Some(_)) => return Ordering::Greater,
            (Some(ii), Some(jj)) => {
                let (p, e) = a[ii];
                let (q, f) = b[jj];
                if p > q {
                    return Ordering::Less;
                }
                if q > p {
                    return Ordering::Greater;
                }
                if e != f {
                    return f.cmp(&e);
                }
                i = ii;
                j = jj;
            }
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MonomialOrder::Lex => "lex",
            MonomialOrder::DegRevLex => "degrevlex",
        })
    }
}

impl FromStr for MonomialOrder {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "lex" => Ok(MonomialOrder::Lex),
            "degrevlex" | "revlex" => Ok(MonomialOrder::DegRevLex),
            other => Err(format!("unknown monomial order `{other}`")),
        }
    }
}
