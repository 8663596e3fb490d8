//! Sparse row echelon forms and small dense solves over a field.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::field::Field;

pub(crate) type Row<F> = Vec<(usize, F)>;

/// Rows in echelon form keyed by their first column; each pivot is 1.
pub(crate) struct Echelon<F> {
    pivots: BTreeMap<usize, Row<F>>,
}

impl<F: Field> Echelon<F> {
    pub fn new() -> Self {
        Echelon {
            pivots: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Adds a row sorted by column; returns whether it raised the rank.
    pub fn insert(&mut self, mut row: Row<F>) -> bool {
        loop {
            let Some((col, c)) = row.first().cloned() else {
                return false;
            };
            match self.pivots.get(&col) {
                Some(p) => row = axpy(&row, &c, p),
                None => {
                    let inv = c.inv().expect("nonzero pivot");
                    for r in row.iter_mut() {
                        r.1 = r.1.mul(&inv);
                    }
                    self.pivots.insert(col, row);
                    return true;
                }
            }
        }
    }
}

/// `a - c * b` on sorted sparse rows.
pub(crate) fn axpy<F: Field>(a: &Row<F>, c: &F, b: &Row<F>) -> Row<F> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, c.mul(&b[j].1).neg()));
            j += 1;
        } else {
            let v = a[i].1.sub(&c.mul(&b[j].1));
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Solves `Σ_k x_k · cols[k] = rhs` for a square nonsingular system given
/// by its columns (dense, length n each).
pub(crate) fn solve_columns<F: Field>(cols: &[Vec<F>], rhs: &[F]) -> Option<Vec<F>> {
    let n = cols.len();
    // rows of the augmented matrix
    let mut m: Vec<Vec<F>> = (0..n)
        .map(|i| {
            let mut r: Vec<F> = cols.iter().map(|c| c[i].clone()).collect();
            r.push(rhs[i].clone());
            r
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, p);
        let inv = m[col][col].inv()?;
        for v in m[col].iter_mut() {
            *v = v.mul(&inv);
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for k in col..=n {
                    let v = m[r][k].sub(&f.mul(&m[col][k]));
                    m[r][k] = v;
                }
            }
        }
    }
    Some(m.into_iter().map(|mut r| r.pop().expect("augmented")).collect())
}
