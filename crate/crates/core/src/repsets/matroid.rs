use super::field::{find_field_prime, PrimeField};
use crate::error::{Error, Result};

/// Vandermonde representation of the uniform matroid of rank `r` on `m`
/// elements: column `j` is `(1, j, j^2, ..., j^(r-1))` over a prime field with
/// at least `m` elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniformMatroidRep {
    field: PrimeField,
    rank: usize,
    columns: Vec<Vec<u64>>,
}

/// Vandermonde matroid of rank `r` on `m` elements over the field of
/// [`find_field_prime`]`(m)`.
pub fn vandermonde_matroid(m: usize, r: usize) -> Result<UniformMatroidRep> {
    let field = PrimeField::new(find_field_prime(m))?;
    UniformMatroidRep::with_field(field, m, r)
}

impl UniformMatroidRep {
    /// Builds the representation over an explicit field, which must have at
    /// least `m` elements so the evaluation points are distinct.
    pub fn with_field(field: PrimeField, m: usize, r: usize) -> Result<Self> {
        if r == 0 || m == 0 {
            return Err(Error::InvalidInput(format!(
                "matroid needs positive rank and universe (rank {r}, universe {m})"
            )));
        }
        if r > m {
            return Err(Error::RankExceedsUniverse { rank: r, universe: m });
        }
        if (m as u64) > field.modulus() {
            return Err(Error::InvalidInput(format!(
                "field of size {} too small for {m} evaluation points",
                field.modulus()
            )));
        }
        let columns = (0..m as u64)
            .map(|x| {
                let mut col = Vec::with_capacity(r);
                let mut power = 1 % field.modulus();
                for _ in 0..r {
                    col.push(power);
                    power = field.mul(power, x);
                }
                col
            })
            .collect();
        Ok(UniformMatroidRep {
            field,
            rank: r,
            columns,
        })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn universe(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, j: usize) -> &[u64] {
        &self.columns[j]
    }

    /// Linear independence of the columns indexed by `set`.
    pub fn is_independent(&self, set: &[usize]) -> Result<bool> {
        let mut basis = RowBasis::new(self.field, self.rank);
        for &j in set {
            if j >= self.universe() {
                return Err(Error::OutsideUniverse {
                    element: j,
                    universe: self.universe(),
                });
            }
            if !basis.insert(self.columns[j].clone()) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Incrementally maintained row echelon basis over a prime field.
#[derive(Debug, Clone)]
pub(crate) struct RowBasis {
    field: PrimeField,
    width: usize,
    /// Normalized rows (pivot entry 1) with their pivot columns.
    rows: Vec<(usize, Vec<u64>)>,
}

impl RowBasis {
    pub(crate) fn new(field: PrimeField, width: usize) -> Self {
        RowBasis {
            field,
            width,
            rows: Vec::new(),
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.rows.len()
    }

    /// Adds `v` if it is independent of the rows so far; reports whether it was.
    pub(crate) fn insert(&mut self, mut v: Vec<u64>) -> bool {
        debug_assert_eq!(v.len(), self.width);
        let f = self.field;
        for (pivot, row) in &self.rows {
            let c = v[*pivot];
            if c != 0 {
                for (x, &y) in v.iter_mut().zip(row).skip(*pivot) {
                    *x = f.sub(*x, f.mul(c, y));
                }
            }
        }
        let Some(pivot) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = f.inv(v[pivot]).expect("nonzero pivot");
        for x in &mut v[pivot..] {
            *x = f.mul(*x, inv);
        }
        self.rows.push((pivot, v));
        true
    }
}

/// Determinant of a square matrix by Gaussian elimination.
pub(crate) fn determinant(field: PrimeField, mut m: Vec<Vec<u64>>) -> u64 {
    let n = m.len();
    let mut det = 1;
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| m[r][col] != 0) else {
            return 0;
        };
        if p != col {
            m.swap(p, col);
            det = field.sub(0, det);
        }
        det = field.mul(det, m[col][col]);
        let inv = field.inv(m[col][col]).expect("nonzero pivot");
        for r in col + 1..n {
            let c = field.mul(m[r][col], inv);
            if c != 0 {
                for j in col..n {
                    let sub = field.mul(c, m[col][j]);
                    m[r][j] = field.sub(m[r][j], sub);
                }
            }
        }
    }
    det
}
