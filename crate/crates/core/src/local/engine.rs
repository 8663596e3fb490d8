//! Standard bases in the truncated local algebra `K[x]/m^bound`.
//!
//! With a local degree ordering every leading term has the lowest total
//! degree of its polynomial, so Buchberger's algorithm run on polynomials
//! truncated at `bound` computes the leading ideal of `I + m^bound` exactly
//! below degree `bound`. A degree `d < bound` with no standard monomials
//! proves `m^d ⊆ I`, after which the staircase is the true one.

use alloc::collections::BinaryHeap;
use alloc::vec::Vec;
use core::cmp::Reverse;

use super::lpoly::{monomials_of_degree, Coeff, LPoly};
use crate::poly::ExpVec;

pub(crate) struct Engine<F> {
    pub bound: u32,
    pub arity: usize,
    pub basis: Vec<LPoly<F>>,
    /// Cofactors of each basis element on the input generators.
    pub reps: Option<Vec<Vec<LPoly<F>>>>,
}

fn unit_rep<F: Coeff>(n: usize, j: usize, c: F) -> Vec<LPoly<F>> {
    let mut r: Vec<LPoly<F>> = (0..n).map(|_| LPoly::zero()).collect();
    r[j] = LPoly::monomial(ExpVec::ZERO, c);
    r
}

fn rep_sub_mul<F: Coeff>(
    acc: &mut [LPoly<F>],
    c: &F,
    t: &ExpVec,
    other: &[LPoly<F>],
    bound: u32,
) {
    for (a, o) in acc.iter_mut().zip(other) {
        if !o.is_zero() {
            *a = a.sub_mul(c, t, o, bound);
        }
    }
}

impl<F: Coeff> Engine<F> {
    pub fn run(gens: &[LPoly<F>], arity: usize, bound: u32, track: bool) -> Self {
        let n = gens.len();
        let mut eng = Engine {
            bound,
            arity,
            basis: Vec::new(),
            reps: track.then(Vec::new),
        };
        let mut pairs: BinaryHeap<Reverse<(u32, usize, usize)>> = BinaryHeap::new();
        for (j, g) in gens.iter().enumerate() {
            if g.is_zero() {
                continue;
            }
            let rep = track.then(|| unit_rep(n, j, F::one()));
            let (h, rep) = eng.reduce_lead(g.clone(), rep);
            eng.insert(h, rep, &mut pairs);
        }
        while let Some(Reverse((_, i, j))) = pairs.pop() {
            let (h, rep) = eng.s_poly(i, j);
            let (h, rep) = eng.reduce_lead(h, rep);
            eng.insert(h, rep, &mut pairs);
        }
        eng.minimalize();
        eng
    }

    fn insert(
        &mut self,
        mut h: LPoly<F>,
        mut rep: Option<Vec<LPoly<F>>>,
        pairs: &mut BinaryHeap<Reverse<(u32, usize, usize)>>,
    ) {
        if h.is_zero() {
            return;
        }
        let inv = h.make_monic();
        if let Some(r) = rep.as_mut() {
            for p in r.iter_mut() {
                *p = p.scale(&inv);
            }
        }
        let k = self.basis.len();
        let lk = h.lead_exp();
        for (i, g) in self.basis.iter().enumerate() {
            let li = g.lead_exp();
            let l = li.lcm(&lk);
            if l.degree() >= self.bound || li.is_coprime(&lk) {
                continue;
            }
            pairs.push(Reverse((l.degree(), i, k)));
        }
        self.basis.push(h);
        if let (Some(reps), Some(r)) = (self.reps.as_mut(), rep) {
            reps.push(r);
        }
    }

    fn s_poly(&self, i: usize, j: usize) -> (LPoly<F>, Option<Vec<LPoly<F>>>) {
        let (gi, gj) = (&self.basis[i], &self.basis[j]);
        let l = gi.lead_exp().lcm(&gj.lead_exp());
        let ti = gi.lead_exp().quotient_of(&l).expect("lcm");
        let tj = gj.lead_exp().quotient_of(&l).expect("lcm");
        let minus_one = F::one().neg();
        let h = LPoly::zero().sub_mul(&minus_one, &ti, gi, self.bound);
        let h = h.sub_mul(&F::one(), &tj, gj, self.bound);
        let rep = self.reps.as_ref().map(|reps| {
            let mut r: Vec<LPoly<F>> = (0..reps[i].len()).map(|_| LPoly::zero()).collect();
            rep_sub_mul(&mut r, &minus_one, &ti, &reps[i], self.bound);
            rep_sub_mul(&mut r, &F::one(), &tj, &reps[j], self.bound);
            r
        });
        (h, rep)
    }

    fn divisor_of(&self, e: &ExpVec) -> Option<usize> {
        self.basis.iter().position(|g| g.lead_exp().divides(e))
    }

    /// Reduces until the leading term is not divisible by any basis lead.
    fn reduce_lead(
        &self,
        mut h: LPoly<F>,
        mut rep: Option<Vec<LPoly<F>>>,
    ) -> (LPoly<F>, Option<Vec<LPoly<F>>>) {
        while let Some((e, c)) = h.lead() {
            let Some(k) = self.divisor_of(e) else { break };
            let t = self.basis[k].lead_exp().quotient_of(e).expect("divides");
            let c = c.clone();
            h = h.sub_mul(&c, &t, &self.basis[k], self.bound);
            if let (Some(r), Some(reps)) = (rep.as_mut(), self.reps.as_ref()) {
                rep_sub_mul(r, &c, &t, &reps[k], self.bound);
            }
        }
        (h, rep)
    }

    /// Drops elements with a redundant lead, then reduces the tails.
    fn minimalize(&mut self) {
        let leads: Vec<ExpVec> = self.basis.iter().map(|g| g.lead_exp()).collect();
        let keep: Vec<bool> = (0..leads.len())
            .map(|i| {
                !(0..leads.len()).any(|j| {
                    j != i && leads[j].divides(&leads[i]) && (leads[j] != leads[i] || j < i)
                })
            })
            .collect();
        let mut basis = Vec::new();
        let mut reps = self.reps.as_ref().map(|_| Vec::new());
        for (i, g) in core::mem::take(&mut self.basis).into_iter().enumerate() {
            if keep[i] {
                basis.push(g);
                if let (Some(out), Some(src)) = (reps.as_mut(), self.reps.as_ref()) {
                    out.push(src[i].clone());
                }
            }
        }
        self.basis = basis;
        self.reps = reps;
        for i in 0..self.basis.len() {
            let g = self.basis[i].clone();
            let rep = self.reps.as_ref().map(|r| r[i].clone());
            let (lead, rest) = g.terms.split_first().expect("nonzero");
            let tail = LPoly {
                terms: rest.to_vec(),
            };
            let (nf, q) = self.normal_form(&tail, true);
            let mut out = nf;
            out.terms.insert(0, lead.clone());
            if let (Some(mut r), Some(reps)) = (rep, self.reps.as_ref()) {
                for (k, qk) in q.iter().enumerate() {
                    for (t, c) in &qk.terms {
                        rep_sub_mul(&mut r, c, t, &reps[k], self.bound);
                    }
                }
                self.reps.as_mut().expect("tracked")[i] = r;
            }
            self.basis[i] = out;
        }
    }

    /// Full normal form of `h` and the quotients on the basis elements,
    /// i.e. `h = Σ q_k b_k + nf` modulo `m^bound`.
    pub fn normal_form(&self, h: &LPoly<F>, want_quotients: bool) -> (LPoly<F>, Vec<LPoly<F>>) {
        let mut q: Vec<LPoly<F>> = if want_quotients {
            (0..self.basis.len()).map(|_| LPoly::zero()).collect()
        } else {
            Vec::new()
        };
        let mut rem = LPoly::zero();
        let mut h = h.clone();
        while let Some((e, c)) = h.terms.first().cloned() {
            match self.divisor_of(&e) {
                Some(k) => {
                    let t = self.basis[k].lead_exp().quotient_of(&e).expect("divides");
                    h = h.sub_mul(&c, &t, &self.basis[k], self.bound);
                    if want_quotients {
                        q[k] = q[k].add(&LPoly::monomial(t, c));
                    }
                }
                None => {
                    rem.terms.push((e, c));
                    h.terms.remove(0);
                }
            }
        }
        (rem, q)
    }

    pub fn leads(&self) -> Vec<ExpVec> {
        self.basis.iter().map(|g| g.lead_exp()).collect()
    }

    pub fn is_standard(&self, e: &ExpVec) -> bool {
        self.divisor_of(e).is_none()
    }

    /// Standard monomials of each degree below the bound, or up to (and
    /// excluding) the first empty degree, which certifies finiteness.
    pub fn staircase(&self) -> Staircase {
        let mut monos = Vec::new();
        for d in 0..self.bound {
            let layer: Vec<ExpVec> = monomials_of_degree(self.arity, d)
                .into_iter()
                .filter(|e| self.is_standard(e))
                .collect();
            if layer.is_empty() {
                return Staircase {
                    monomials: monos,
                    empty_degree: Some(d),
                };
            }
            monos.extend(layer);
        }
        Staircase {
            monomials: monos,
            empty_degree: None,
        }
    }
}

pub(crate) struct Staircase {
    pub monomials: Vec<ExpVec>,
    pub empty_degree: Option<u32>,
}
