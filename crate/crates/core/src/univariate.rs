//! Dense univariate polynomials over an integral domain.
//!
//! Provides pseudo-division and the subresultant PRS, which give gcds and
//! resultants using only exact division in the coefficient domain.

use alloc::vec::Vec;

use crate::field::{Domain, Field};

/// Coefficients in increasing degree; no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct UniPoly<R> {
    coeffs: Vec<R>,
}

impl<R: Domain> UniPoly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: R) -> Self {
        Self::new(alloc::vec![c])
    }

    /// `c * t^k`
    pub fn monomial(c: R, k: usize) -> Self {
        let mut v = alloc::vec![R::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> R {
        self.coeffs.last().cloned().unwrap_or_else(R::zero)
    }

    /// Multiplicity of the root `t = 0`.
    pub fn low_order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Divides out the largest power of `t`.
    pub fn strip_low(&self) -> Self {
        match self.low_order() {
            None => Self::zero(),
            Some(k) => UniPoly {
                coeffs: self.coeffs[k..].to_vec(),
            },
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Self::new(v)
    }

    pub fn neg(&self) -> Self {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut v = alloc::vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                v[i + j] = v[i + j].add(&a.mul(b));
            }
        }
        Self::new(v)
    }

    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = alloc::vec![R::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs: v }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.mul(&R::from_i64(k as i64)))
                .collect(),
        )
    }

    pub fn eval(&self, t: &R) -> R {
        let mut acc = R::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(t).add(c);
        }
        acc
    }

    /// Divides every coefficient exactly by `c`.
    pub fn div_scalar(&self, c: &R) -> Option<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| a.exact_div(c))
            .collect::<Option<Vec<_>>>()?;
        Some(UniPoly { coeffs })
    }

    /// `lc(rhs)^(deg self - deg rhs + 1) * self mod rhs`.
    pub fn pseudo_rem(&self, rhs: &Self) -> Self {
        let db = rhs.degree().expect("pseudo-division by zero");
        let Some(da) = self.degree() else {
            return Self::zero();
        };
        if da < db {
            return self.clone();
        }
        let lb = rhs.lc();
        let mut r = self.clone();
        let mut steps = da - db + 1;
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.lc();
            r = r.scale(&lb).sub(&rhs.scale(&lr).shift(dr - db));
            steps -= 1;
        }
        if steps > 0 {
            let mut f = R::one();
            for _ in 0..steps {
                f = f.mul(&lb);
            }
            r = r.scale(&f);
        }
        r
    }

    /// Exact polynomial division over the domain.
    pub fn div_exact(&self, rhs: &Self) -> Option<Self> {
        let db = rhs.degree().expect("division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let da = self.degree().unwrap();
        if da < db {
            return None;
        }
        let lb = rhs.lc();
        let mut r = self.clone();
        let mut q = alloc::vec![R::zero(); da - db + 1];
        while let Some(dr) = r.degree() {
            if dr < db {
                return None;
            }
            let c = r.lc().exact_div(&lb)?;
            r = r.sub(&rhs.scale(&c).shift(dr - db));
            q[dr - db] = c;
        }
        Some(Self::new(q))
    }

    /// Resultant by the subresultant algorithm; exact division only.
    pub fn resultant(&self, rhs: &Self) -> R {
        let (Some(mut da), Some(mut db)) = (self.degree(), rhs.degree()) else {
            return R::zero();
        };
        let (mut a, mut b) = (self.clone(), rhs.clone());
        let mut sign_neg = false;
        if da < db {
            core::mem::swap(&mut a, &mut b);
            core::mem::swap(&mut da, &mut db);
            sign_neg = (da * db) % 2 == 1;
        }
        if db == 0 {
            let r = pow(&b.lc(), da);
            return if sign_neg { r.neg() } else { r };
        }
        let mut g = R::one();
        let mut h = R::one();
        loop {
            let (deg_a, deg_b) = (a.degree().unwrap(), b.degree().unwrap());
            let delta = deg_a - deg_b;
            if deg_a % 2 == 1 && deg_b % 2 == 1 {
                sign_neg = !sign_neg;
            }
            let r = a.pseudo_rem(&b);
            if r.is_zero() {
                return R::zero();
            }
            a = b;
            let divisor = g.mul(&pow(&h, delta));
            b = r.div_scalar(&divisor).expect("subresultant division is exact");
            g = a.lc();
            h = if delta == 0 {
                h
            } else {
                pow(&g, delta)
                    .exact_div(&pow(&h, delta - 1))
                    .expect("subresultant division is exact")
            };
            if b.degree() == Some(0) {
                break;
            }
        }
        let deg_a = a.degree().unwrap();
        let num = pow(&b.lc(), deg_a);
        let res = if deg_a == 0 {
            num.mul(&h)
        } else {
            num.exact_div(&pow(&h, deg_a - 1))
                .expect("subresultant division is exact")
        };
        if sign_neg {
            res.neg()
        } else {
            res
        }
    }

    /// Last nonzero element of the subresultant PRS: a gcd up to a factor
    /// from the coefficient domain.
    pub fn subresultant_gcd(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let (mut a, mut b) = if self.degree() >= rhs.degree() {
            (self.clone(), rhs.clone())
        } else {
            (rhs.clone(), self.clone())
        };
        let mut g = R::one();
        let mut h = R::one();
        loop {
            let delta = a.degree().unwrap() - b.degree().unwrap();
            let r = a.pseudo_rem(&b);
            if r.is_zero() {
                return b;
            }
            if r.degree() == Some(0) {
                return Self::constant(R::one());
            }
            a = b;
            b = r
                .div_scalar(&g.mul(&pow(&h, delta)))
                .expect("subresultant division is exact");
            g = a.lc();
            h = if delta == 0 {
                h
            } else {
                pow(&g, delta)
                    .exact_div(&pow(&h, delta - 1))
                    .expect("subresultant division is exact")
            };
        }
    }
}

impl<F: Field> UniPoly<F> {
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let inv = self.lc().inv().expect("nonzero leading coefficient");
        self.scale(&inv)
    }

    pub fn div_rem(&self, rhs: &Self) -> (Self, Self) {
        let db = rhs.degree().expect("division by zero polynomial");
        let inv = rhs.lc().inv().expect("nonzero leading coefficient");
        let mut r = self.clone();
        let mut q = alloc::vec![F::zero(); self.coeffs.len().saturating_sub(db)];
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let c = r.lc().mul(&inv);
            r = r.sub(&rhs.scale(&c).shift(dr - db));
            q[dr - db] = c;
        }
        (Self::new(q), r)
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, rhs: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), rhs.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Product of the distinct irreducible factors.
    pub fn squarefree_part(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }
}

fn pow<R: Domain>(base: &R, e: usize) -> R {
    let mut acc = R::one();
    for _ in 0..e {
        acc = acc.mul(base);
    }
    acc
}

impl<R: Domain> Domain for UniPoly<R> {
    fn zero() -> Self {
        UniPoly::zero()
    }
    fn one() -> Self {
        UniPoly::constant(R::one())
    }
    fn from_i64(v: i64) -> Self {
        UniPoly::constant(R::from_i64(v))
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        UniPoly::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        UniPoly::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        UniPoly::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        UniPoly::neg(self)
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        self.div_exact(rhs)
    }
}
