use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt::Write;

use super::{Domain, Field, Rational};

/// Maximum number of distinct symbols a [`ParamPoly`] can carry.
pub const MAX_SYMBOLS: usize = 8;

/// Exponent vector of a parameter monomial.
///
/// Ordered graded-lexicographically: total degree first, then the first
/// symbol is the most significant.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, Debug)]
pub struct PMono(pub [u16; MAX_SYMBOLS]);

impl PMono {
    pub const ONE: PMono = PMono([0; MAX_SYMBOLS]);

    pub fn var(i: usize) -> Self {
        let mut e = [0; MAX_SYMBOLS];
        e[i] = 1;
        PMono(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, o: &PMono) -> PMono {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(o.0.iter()) {
            *a = a.checked_add(*b).expect("parameter exponent overflow");
        }
        PMono(e)
    }

    pub fn divides(&self, o: &PMono) -> bool {
        self.0.iter().zip(o.0.iter()).all(|(a, b)| a <= b)
    }

    /// `o / self`, if `self` divides `o`.
    pub fn quotient_of(&self, o: &PMono) -> Option<PMono> {
        let mut e = [0; MAX_SYMBOLS];
        for i in 0..MAX_SYMBOLS {
            e[i] = o.0[i].checked_sub(self.0[i])?;
        }
        Some(PMono(e))
    }

    pub fn gcd(&self, o: &PMono) -> PMono {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(o.0.iter()) {
            *a = (*a).min(*b);
        }
        PMono(e)
    }
}

impl Ord for PMono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for PMono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial over ℚ in up to [`MAX_SYMBOLS`] symbols.
///
/// Terms are kept sorted by strictly decreasing monomial, with no zero
/// coefficients, so structural equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct ParamPoly {
    terms: Vec<(PMono, Rational)>,
}

impl ParamPoly {
    pub fn zero() -> Self {
        ParamPoly { terms: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            ParamPoly {
                terms: alloc::vec![(PMono::ONE, c)],
            }
        }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn var(i: usize) -> Self {
        assert!(i < MAX_SYMBOLS);
        ParamPoly {
            terms: alloc::vec![(PMono::var(i), Rational::one())],
        }
    }

    pub fn monomial(m: PMono, c: Rational) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            ParamPoly {
                terms: alloc::vec![(m, c)],
            }
        }
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates.
    pub fn from_terms(mut terms: Vec<(PMono, Rational)>) -> Self {
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(PMono, Rational)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = &*lc + &c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        ParamPoly { terms: out }
    }

    pub fn terms(&self) -> &[(PMono, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    pub fn is_one(&self) -> bool {
        matches!(self.terms.as_slice(), [(m, c)] if m.is_one() && c.is_one())
    }

    pub fn leading(&self) -> Option<&(PMono, Rational)> {
        self.terms.first()
    }

    pub fn leading_coeff(&self) -> Rational {
        self.terms
            .first()
            .map(|t| t.1.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u16> {
        self.terms.iter().map(|(m, _)| m.0[var]).max()
    }

    /// Bit mask of symbols that occur.
    pub fn support_mask(&self) -> u32 {
        let mut mask = 0u32;
        for (m, _) in &self.terms {
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    mask |= 1 << i;
                }
            }
        }
        mask
    }

    /// Greatest monomial dividing every term.
    pub fn monomial_content(&self) -> PMono {
        let mut it = self.terms.iter();
        let Some((first, _)) = it.next() else {
            return PMono::ONE;
        };
        it.fold(*first, |acc, (m, _)| acc.gcd(m))
    }

    pub fn neg(&self) -> Self {
        ParamPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        ParamPoly {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn mul_term(&self, m: &PMono, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        ParamPoly {
            terms: self.terms.iter().map(|(a, b)| (a.mul(m), b * c)).collect(),
        }
    }

    fn merge(&self, rhs: &Self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &rhs.terms);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for t in &b[j..] {
            let c = if negate { -&t.1 } else { t.1.clone() };
            out.push((t.0, c));
        }
        ParamPoly { terms: out }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.merge(rhs, false)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.merge(rhs, true)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if let [(m, c)] = rhs.terms.as_slice() {
            return self.mul_term(m, c);
        }
        if let [(m, c)] = self.terms.as_slice() {
            return rhs.mul_term(m, c);
        }
        let mut prods = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                prods.push((ma.mul(mb), ca * cb));
            }
        }
        Self::from_terms(prods)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Multivariate division; `None` unless `rhs` divides `self` exactly.
    pub fn div_exact(&self, rhs: &Self) -> Option<Self> {
        assert!(!rhs.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some(c) = rhs.as_constant() {
            return Some(self.scale(&Field::inv(&c).expect("nonzero")));
        }
        if let [(m, c)] = rhs.terms.as_slice() {
            let inv = Field::inv(c).expect("nonzero");
            let mut terms = Vec::with_capacity(self.terms.len());
            for (a, b) in &self.terms {
                terms.push((m.quotient_of(a)?, b * &inv));
            }
            return Some(ParamPoly { terms });
        }
        let (lm, lc) = &rhs.terms[0];
        let lc_inv = Field::inv(lc).expect("nonzero");
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.terms.first().cloned() {
            let q = lm.quotient_of(&m)?;
            let qc = &c * &lc_inv;
            rem = rem.sub(&rhs.mul_term(&q, &qc));
            quot.push((q, qc));
        }
        Some(ParamPoly { terms: quot })
    }

    /// Monic normalization: divides by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.terms.first() {
            None => Self::zero(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&Field::inv(c).expect("nonzero")),
        }
    }

    /// Coefficients with respect to `var`, index = power of `var`.
    pub fn coeffs_in(&self, var: usize) -> Vec<ParamPoly> {
        let Some(deg) = self.degree_in(var) else {
            return Vec::new();
        };
        let mut buckets: Vec<Vec<(PMono, Rational)>> = alloc::vec![Vec::new(); deg as usize + 1];
        for (m, c) in &self.terms {
            let mut rest = *m;
            let k = rest.0[var];
            rest.0[var] = 0;
            buckets[k as usize].push((rest, c.clone()));
        }
        buckets.into_iter().map(Self::from_terms).collect()
    }

    /// Inverse of [`ParamPoly::coeffs_in`].
    pub fn from_coeffs_in(var: usize, coeffs: &[ParamPoly]) -> Self {
        let mut terms = Vec::new();
        for (k, c) in coeffs.iter().enumerate() {
            for (m, a) in &c.terms {
                let mut mm = *m;
                mm.0[var] = u16::try_from(k).expect("degree overflow");
                terms.push((mm, a.clone()));
            }
        }
        Self::from_terms(terms)
    }

    /// Substitutes `value` for symbol `var`.
    pub fn eval_var(&self, var: usize, value: &Rational) -> Self {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut mm = *m;
            let k = mm.0[var];
            mm.0[var] = 0;
            let v = if k == 0 { c.clone() } else { c * &value.pow(k as u32) };
            terms.push((mm, v));
        }
        Self::from_terms(terms)
    }

    /// Renames symbols: symbol `i` becomes `map[i]`.
    pub fn remap(&self, map: &[usize]) -> Self {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut e = [0u16; MAX_SYMBOLS];
            for (i, &k) in m.0.iter().enumerate() {
                if k > 0 {
                    e[map[i]] += k;
                }
            }
            terms.push((PMono(e), c.clone()));
        }
        Self::from_terms(terms)
    }

    pub fn derivative(&self, var: usize) -> Self {
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            let k = m.0[var];
            if k == 0 {
                continue;
            }
            let mut mm = *m;
            mm.0[var] = k - 1;
            terms.push((mm, c * &Rational::from_int(k as i64)));
        }
        Self::from_terms(terms)
    }

    /// Writes the polynomial using `names` for symbols.
    ///
    /// Output is accepted back by the polynomial parser.
    pub fn write_with(&self, out: &mut String, names: &[&str]) {
        if self.terms.is_empty() {
            out.push('0');
            return;
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if idx > 0 {
                out.push_str(if neg { " - " } else { " + " });
            } else if neg {
                out.push('-');
            }
            let a = c.abs();
            let mono = write_mono(m, names);
            if mono.is_empty() {
                let _ = write!(out, "{a}");
            } else if a.is_one() {
                out.push_str(&mono);
            } else {
                let _ = write!(out, "{a}*{mono}");
            }
        }
    }

    pub fn to_string_with(&self, names: &[&str]) -> String {
        let mut s = String::new();
        self.write_with(&mut s, names);
        s
    }
}

fn write_mono(m: &PMono, names: &[&str]) -> String {
    let mut s = String::new();
    for (i, &e) in m.0.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !s.is_empty() {
            s.push('*');
        }
        let name = names.get(i).copied().unwrap_or("?");
        if e == 1 {
            s.push_str(name);
        } else {
            let _ = write!(s, "{name}^{e}");
        }
    }
    s
}

impl Domain for ParamPoly {
    fn zero() -> Self {
        ParamPoly::zero()
    }
    fn one() -> Self {
        ParamPoly::one()
    }
    fn from_i64(v: i64) -> Self {
        ParamPoly::constant(Rational::from_int(v))
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn is_one(&self) -> bool {
        ParamPoly::is_one(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        ParamPoly::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        ParamPoly::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        ParamPoly::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        ParamPoly::neg(self)
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        self.div_exact(rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a() -> ParamPoly {
        ParamPoly::var(0)
    }

    fn c(v: i64) -> ParamPoly {
        ParamPoly::constant(Rational::from_int(v))
    }

    #[test]
    fn difference_of_squares_divides() {
        let num = a().mul(&a()).sub(&c(4));
        let den = a().sub(&c(2));
        let q = num.div_exact(&den).unwrap();
        assert_eq!(q, a().add(&c(2)));
        assert!(num.div_exact(&a()).is_none());
    }

    #[test]
    fn coefficient_split_roundtrip() {
        let b = ParamPoly::var(1);
        let p = a().mul(&a()).mul(&b).add(&b.pow(3)).sub(&c(7));
        let parts = p.coeffs_in(1);
        assert_eq!(parts.len(), 4);
        assert_eq!(ParamPoly::from_coeffs_in(1, &parts), p);
    }

    #[test]
    fn printing() {
        let p = a().pow(2).sub(&c(4));
        assert_eq!(p.to_string_with(&["a"]), "a^2 - 4");
        assert_eq!(c(0).to_string_with(&["a"]), "0");
    }
}
