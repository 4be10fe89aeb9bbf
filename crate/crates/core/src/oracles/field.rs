use crate::algebra::{Monomial, TwoTermPoly, VariableId};
use crate::error::{Error, Result};

use super::generic::GenericPoly;

/// Prime fields accepted by the point enumeration.
pub const SUPPORTED_FIELDS: [u64; 3] = [2, 3, 5];

pub fn check_field(q: u64) -> Result<()> {
    if SUPPORTED_FIELDS.contains(&q) {
        Ok(())
    } else {
        Err(Error::UnsupportedField(q))
    }
}

/// An assignment of residues mod `q` to some variables of the `n x n` grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldPoint {
    n: u32,
    values: Vec<Option<u8>>,
}

impl FieldPoint {
    pub fn new(n: u32) -> Self {
        FieldPoint {
            n,
            values: vec![None; (n * n) as usize],
        }
    }

    /// The point with `support[k]` set to digit `k` of `index` in base `q`.
    pub fn from_index(n: u32, support: &[VariableId], q: u64, mut index: u64) -> Self {
        let mut p = FieldPoint::new(n);
        for &v in support {
            p.set(v, (index % q) as u8);
            index /= q;
        }
        p
    }

    pub fn set(&mut self, v: VariableId, value: u8) {
        self.values[v.position(self.n) as usize] = Some(value);
    }

    pub fn get(&self, v: VariableId) -> Option<u8> {
        self.values[v.position(self.n) as usize]
    }

    fn value_at(&self, position: u32) -> Result<u64> {
        self.values[position as usize]
            .map(u64::from)
            .ok_or_else(|| {
                let v = VariableId::from_position(position, self.n);
                Error::MissingAssignment {
                    row: v.row,
                    col: v.col,
                }
            })
    }

    fn monomial_value(&self, m: &Monomial, q: u64) -> Result<u64> {
        let mut acc = 1 % q;
        for &(p, e) in m.powers() {
            let x = self.value_at(p)?;
            for _ in 0..e {
                acc = acc * x % q;
            }
        }
        Ok(acc)
    }
}

/// Value of a two-term polynomial at `pt`, reduced mod `q`.
pub fn evaluate(p: &TwoTermPoly, pt: &FieldPoint, q: u64) -> Result<u64> {
    Ok(match p {
        TwoTermPoly::Zero => 0,
        TwoTermPoly::Mono(m) => pt.monomial_value(m, q)?,
        TwoTermPoly::Binom { lead, trail } => {
            let a = pt.monomial_value(lead, q)?;
            let b = pt.monomial_value(trail, q)?;
            (a + q - b) % q
        }
    })
}

/// Value of a rational polynomial at `pt`, reduced mod `q`.
pub fn evaluate_generic(p: &GenericPoly, pt: &FieldPoint, q: u64) -> Result<u64> {
    let mut dense = vec![0u64; pt.values.len()];
    for (m, _) in p.terms() {
        for (pos, &e) in m.iter().enumerate() {
            if e > 0 {
                dense[pos] = pt.value_at(pos as u32)?;
            }
        }
    }
    p.evaluate_mod(&dense, q).ok_or(Error::UnsupportedField(q))
}
