//! Polynomials truncated at a total-degree bound, kept sorted by the local
//! (anti-graded, reverse-lexicographic tie-break) ordering.

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::field::{Field, ParamRatio, Rational};
use crate::poly::{ExpVec, Poly, Ring};

/// Coefficient field usable by the local engines.
pub trait Coeff: Field {
    fn from_ratio(c: &ParamRatio) -> Self;
    fn to_ratio(&self) -> ParamRatio;
}

impl Coeff for Rational {
    fn from_ratio(c: &ParamRatio) -> Self {
        c.as_rational().expect("parameter-free coefficient")
    }
    fn to_ratio(&self) -> ParamRatio {
        ParamRatio::from_rational(self.clone())
    }
}

impl Coeff for ParamRatio {
    fn from_ratio(c: &ParamRatio) -> Self {
        c.clone()
    }
    fn to_ratio(&self) -> ParamRatio {
        self.clone()
    }
}

/// Local ordering: `Greater` means `a` leads `b`.
///
/// Lower total degree leads; ties are broken by degree-reverse-lex, so
/// among monomials of one degree `x^d` leads and the last variable's pure
/// power comes last.
pub fn local_cmp(a: &ExpVec, b: &ExpVec) -> Ordering {
    match b.degree().cmp(&a.degree()) {
        Ordering::Equal => {}
        o => return o,
    }
    for i in (0..a.0.len()).rev() {
        match a.0[i].cmp(&b.0[i]) {
            Ordering::Equal => continue,
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

#[derive(Clone, Debug, PartialEq)]
pub struct LPoly<F> {
    pub terms: Vec<(ExpVec, F)>,
}

impl<F: Coeff> LPoly<F> {
    pub fn zero() -> Self {
        LPoly { terms: Vec::new() }
    }

    pub fn monomial(e: ExpVec, c: F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LPoly {
            terms: alloc::vec![(e, c)],
        }
    }

    pub fn from_poly(p: &Poly, bound: u32) -> Self {
        let mut terms: Vec<(ExpVec, F)> = p
            .terms()
            .filter(|(e, _)| e.degree() < bound)
            .map(|(e, c)| (*e, F::from_ratio(c)))
            .collect();
        terms.sort_by(|a, b| local_cmp(&b.0, &a.0));
        LPoly { terms }
    }

    pub fn to_poly(&self, ring: &Arc<Ring>) -> Poly {
        Poly::from_terms(ring, self.terms.iter().map(|(e, c)| (*e, c.to_ratio())))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&(ExpVec, F)> {
        self.terms.first()
    }

    pub fn lead_exp(&self) -> ExpVec {
        self.terms[0].0
    }


    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LPoly {
            terms: self.terms.iter().map(|(e, a)| (*e, a.mul(c))).collect(),
        }
    }

    /// Rescales so the leading coefficient is 1; returns the factor used.
    pub fn make_monic(&mut self) -> F {
        let inv = self.terms[0].1.inv().expect("nonzero lead");
        if !inv.is_one() {
            for t in &mut self.terms {
                t.1 = t.1.mul(&inv);
            }
        }
        inv
    }

    /// `self - c * x^t * g`, dropping terms of degree `>= bound`.
    ///
    /// Multiplication by a monomial preserves the ordering, so this is a
    /// single merge.
    pub fn sub_mul(&self, c: &F, t: &ExpVec, g: &LPoly<F>, bound: u32) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut i = 0;
        let mut shifted = g
            .terms
            .iter()
            .map(|(e, a)| (e.mul(t), a))
            .filter(|(e, _)| e.degree() < bound)
            .peekable();
        while let Some((e, a)) = shifted.peek() {
            if i < self.terms.len() {
                match local_cmp(&self.terms[i].0, e) {
                    Ordering::Greater => {
                        out.push(self.terms[i].clone());
                        i += 1;
                        continue;
                    }
                    Ordering::Equal => {
                        let v = self.terms[i].1.sub(&c.mul(a));
                        if !v.is_zero() {
                            out.push((*e, v));
                        }
                        i += 1;
                        shifted.next();
                        continue;
                    }
                    Ordering::Less => {}
                }
            }
            out.push((*e, c.mul(a).neg()));
            shifted.next();
        }
        out.extend_from_slice(&self.terms[i..]);
        LPoly { terms: out }
    }

    pub fn add(&self, other: &LPoly<F>) -> Self {
        self.sub_mul(&F::one().neg(), &ExpVec::ZERO, other, u32::MAX)
    }


}

/// All exponent vectors of the given total degree in `arity` variables.
pub fn monomials_of_degree(arity: usize, degree: u32) -> Vec<ExpVec> {
    fn rec(arity: usize, i: usize, left: u32, cur: &mut ExpVec, out: &mut Vec<ExpVec>) {
        if i + 1 == arity {
            cur.0[i] = left as u16;
            out.push(*cur);
            cur.0[i] = 0;
            return;
        }
        for k in (0..=left).rev() {
            cur.0[i] = k as u16;
            rec(arity, i + 1, left - k, cur, out);
        }
        cur.0[i] = 0;
    }
    let mut out = Vec::new();
    let mut cur = ExpVec::ZERO;
    rec(arity, 0, degree, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_prefers_low_degree_then_revlex() {
        let e = |a: u16, b: u16| ExpVec::new(&[a, b]);
        assert_eq!(local_cmp(&e(1, 0), &e(2, 0)), Ordering::Greater);
        assert_eq!(local_cmp(&e(4, 0), &e(3, 1)), Ordering::Greater);
        assert_eq!(local_cmp(&e(1, 3), &e(0, 4)), Ordering::Greater);
        assert_eq!(local_cmp(&e(0, 0), &e(0, 1)), Ordering::Greater);
    }

    #[test]
    fn degree_enumeration_counts() {
        assert_eq!(monomials_of_degree(2, 4).len(), 5);
        assert_eq!(monomials_of_degree(3, 3).len(), 10);
        assert_eq!(monomials_of_degree(1, 7), alloc::vec![ExpVec::new(&[7])]);
    }
}
