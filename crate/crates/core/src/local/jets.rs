//! Colength by linear algebra on jets, independent of the standard-basis
//! engine: the rank of `{ x^t · g : g a generator }` truncated below a
//! degree bound, inside the space of all jets below that bound.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::linalg::{Echelon, Row};
use super::lpoly::{monomials_of_degree, Coeff};
use crate::poly::{ExpVec, Poly};

/// `dim K[x]/(I + m^bound)`.
pub(crate) fn truncated_dimension<F: Coeff>(gens: &[Poly], arity: usize, bound: u32) -> u32 {
    let mut index: BTreeMap<ExpVec, usize> = BTreeMap::new();
    for d in 0..bound {
        for e in monomials_of_degree(arity, d) {
            let k = index.len();
            index.insert(e, k);
        }
    }
    let ncols = index.len();
    let mut ech = Echelon::new();
    for g in gens {
        let terms: Vec<(ExpVec, F)> = g
            .terms()
            .filter(|(e, _)| e.degree() < bound)
            .map(|(e, c)| (*e, F::from_ratio(c)))
            .collect();
        let Some(ord) = terms.iter().map(|(e, _)| e.degree()).min() else {
            continue;
        };
        for d in 0..bound.saturating_sub(ord) {
            for t in monomials_of_degree(arity, d) {
                let mut row: Row<F> = terms
                    .iter()
                    .map(|(e, c)| (e.mul(&t), c))
                    .filter(|(e, _)| e.degree() < bound)
                    .map(|(e, c)| (index[&e], c.clone()))
                    .collect();
                row.sort_by_key(|r| r.0);
                ech.insert(row);
            }
        }
    }
    (ncols - ech.rank()) as u32
}

