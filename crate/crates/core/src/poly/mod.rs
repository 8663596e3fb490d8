//! Sparse multivariate polynomials in the main variables with coefficients
//! in the parameter field.

mod parse;

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{Domain, Field, ParamRatio, Rational, MAX_SYMBOLS};

pub use parse::parse_poly;

/// Maximum number of main variables.
pub const MAX_VARS: usize = 4;

/// Maximum number of parameter symbols (two slots stay free so that the
/// main variables of a plane germ fit into one parameter polynomial).
pub const MAX_PARAMS: usize = MAX_SYMBOLS - 2;

/// Exponent vector over the main variables; unused slots are zero.
///
/// `Ord` is graded lexicographic (first variable most significant).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ExpVec(pub [u16; MAX_VARS]);

impl ExpVec {
    pub const ZERO: ExpVec = ExpVec([0; MAX_VARS]);

    pub fn new(exps: &[u16]) -> Self {
        assert!(exps.len() <= MAX_VARS, "too many exponents");
        let mut e = [0; MAX_VARS];
        e[..exps.len()].copy_from_slice(exps);
        ExpVec(e)
    }

    pub fn unit(i: usize) -> Self {
        let mut e = [0; MAX_VARS];
        e[i] = 1;
        ExpVec(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn get(&self, i: usize) -> u16 {
        self.0[i]
    }

    pub fn mul(&self, o: &ExpVec) -> ExpVec {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(o.0.iter()) {
            *a = a.checked_add(*b).expect("exponent overflow");
        }
        ExpVec(e)
    }

    pub fn divides(&self, o: &ExpVec) -> bool {
        self.0.iter().zip(o.0.iter()).all(|(a, b)| a <= b)
    }

    /// `o / self` if `self` divides `o`.
    pub fn quotient_of(&self, o: &ExpVec) -> Option<ExpVec> {
        let mut e = [0; MAX_VARS];
        for i in 0..MAX_VARS {
            e[i] = o.0[i].checked_sub(self.0[i])?;
        }
        Some(ExpVec(e))
    }

    pub fn lcm(&self, o: &ExpVec) -> ExpVec {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(o.0.iter()) {
            *a = (*a).max(*b);
        }
        ExpVec(e)
    }

    pub fn is_coprime(&self, o: &ExpVec) -> bool {
        self.0.iter().zip(o.0.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn as_slice(&self, arity: usize) -> &[u16] {
        &self.0[..arity]
    }
}

impl Ord for ExpVec {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ExpVec {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ExpVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Variable and parameter names of a polynomial ring.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Ring {
    vars: Vec<String>,
    params: Vec<String>,
}

fn valid_ident(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Ring {
    pub fn new<S: AsRef<str>>(vars: &[S], params: &[S]) -> Result<Arc<Ring>> {
        let vars: Vec<String> = vars.iter().map(|s| s.as_ref().to_string()).collect();
        let params: Vec<String> = params.iter().map(|s| s.as_ref().to_string()).collect();
        if vars.is_empty() || vars.len() > MAX_VARS {
            return Err(Error::ArityUnsupported { arity: vars.len() });
        }
        if params.len() > MAX_PARAMS {
            return Err(Error::InvalidRing(alloc::format!(
                "at most {MAX_PARAMS} parameters"
            )));
        }
        let mut all: Vec<&String> = vars.iter().chain(params.iter()).collect();
        if let Some(bad) = all.iter().find(|s| !valid_ident(s)) {
            return Err(Error::InvalidRing(alloc::format!("invalid name `{bad}`")));
        }
        all.sort();
        if all.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidRing("duplicate symbol".into()));
        }
        Ok(Arc::new(Ring { vars, params }))
    }

    /// The plane ring in `x, y` with the given parameters.
    pub fn plane(params: &[&str]) -> Arc<Ring> {
        Ring::new(&["x", "y"], params).expect("valid plane ring")
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn param_index(&self, name: &str) -> Option<usize> {
        self.params.iter().position(|v| v == name)
    }

    pub fn param_names(&self) -> Vec<&str> {
        self.params.iter().map(|s| s.as_str()).collect()
    }

    /// The same variables with extra parameters appended (skipping names
    /// already present).
    pub fn with_params(&self, extra: &[&str]) -> Result<Arc<Ring>> {
        let mut params = self.params.clone();
        for p in extra {
            if !params.iter().any(|q| q == p) {
                params.push((*p).into());
            }
        }
        Ring::new(&self.vars, &params)
    }

    /// Monomial text such as `x^2*y`, or `1` for the unit monomial.
    pub fn mono_string(&self, e: &ExpVec) -> String {
        let mut s = String::new();
        for (i, name) in self.vars.iter().enumerate() {
            let k = e.0[i];
            if k == 0 {
                continue;
            }
            if !s.is_empty() {
                s.push('*');
            }
            s.push_str(name);
            if k > 1 {
                s.push('^');
                s.push_str(&k.to_string());
            }
        }
        if s.is_empty() {
            s.push('1');
        }
        s
    }
}

/// A polynomial over ℚ(parameters) in the ring's main variables.
#[derive(Clone)]
pub struct Poly {
    ring: Arc<Ring>,
    terms: BTreeMap<ExpVec, ParamRatio>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring)
            && self.terms == other.terms
    }
}

impl Eq for Poly {}

impl core::hash::Hash for Poly {
    fn hash<H: core::hash::Hasher>(&self, state: &mut H) {
        self.ring.hash(state);
        for (e, c) in &self.terms {
            e.hash(state);
            c.hash(state);
        }
    }
}

impl Poly {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Poly {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: &Arc<Ring>, c: ParamRatio) -> Self {
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.insert(ExpVec::ZERO, c);
        }
        p
    }

    pub fn var(ring: &Arc<Ring>, i: usize) -> Self {
        assert!(i < ring.arity());
        Self::monomial(ring, ExpVec::unit(i), ParamRatio::one())
    }

    /// The parameter with index `i`, as a constant polynomial.
    pub fn param(ring: &Arc<Ring>, i: usize) -> Self {
        assert!(i < ring.params().len());
        Self::constant(ring, ParamRatio::symbol(i))
    }

    pub fn monomial(ring: &Arc<Ring>, e: ExpVec, c: ParamRatio) -> Self {
        debug_assert!(e.0[ring.arity()..].iter().all(|&k| k == 0));
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.insert(e, c);
        }
        p
    }

    pub fn from_terms(ring: &Arc<Ring>, terms: impl IntoIterator<Item = (ExpVec, ParamRatio)>) -> Self {
        let mut p = Self::zero(ring);
        for (e, c) in terms {
            p.add_term(e, &c);
        }
        p
    }

    /// Parses `text` in `ring`.
    pub fn parse(ring: &Arc<Ring>, text: &str) -> Result<Self> {
        parse_poly(text, ring)
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn arity(&self) -> usize {
        self.ring.arity()
    }

    /// Terms in increasing graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExpVec, &ParamRatio)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &ExpVec) -> ParamRatio {
        self.terms.get(e).cloned().unwrap_or_else(ParamRatio::zero)
    }

    pub fn support(&self) -> Vec<ExpVec> {
        self.terms.keys().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant_term(&self) -> ParamRatio {
        self.coeff(&ExpVec::ZERO)
    }

    /// True when no coefficient involves a parameter.
    pub fn is_rational(&self) -> bool {
        self.terms.values().all(|c| c.as_rational().is_some())
    }

    pub fn add_term(&mut self, e: ExpVec, c: &ParamRatio) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                let s = v.add(c);
                if s.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(e, c.clone());
            }
        }
    }

    fn check_ring(&self, other: &Poly) {
        assert!(
            Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring,
            "polynomials from different rings"
        );
    }

    pub fn scale(&self, c: &ParamRatio) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(e, a)| (*e, a.mul(c))).collect(),
        }
    }

    pub fn mul_term(&self, e: &ExpVec, c: &ParamRatio) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.mul(e), a.mul(c))).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::constant(&self.ring, ParamRatio::one());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal partial derivative with respect to variable `var`.
    pub fn partial(&self, var: usize) -> Self {
        assert!(var < self.arity());
        let mut out = Self::zero(&self.ring);
        for (e, c) in &self.terms {
            let k = e.0[var];
            if k == 0 {
                continue;
            }
            let mut d = *e;
            d.0[var] = k - 1;
            out.terms.insert(d, c.mul(&ParamRatio::from_int(k as i64)));
        }
        out
    }

    pub fn partial_by_name(&self, var: &str) -> Result<Self> {
        let i = self.ring.var_index(var).ok_or_else(|| Error::UnknownSymbol {
            name: var.into(),
        })?;
        Ok(self.partial(i))
    }

    /// All first partial derivatives.
    pub fn gradient(&self) -> Vec<Poly> {
        (0..self.arity()).map(|i| self.partial(i)).collect()
    }

    /// Minimal total degree of a term; `None` for the zero polynomial.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.degree()).min()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.degree()).max()
    }

    /// Terms of total degree `< bound`.
    pub fn truncate(&self, bound: u32) -> Self {
        Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.degree() < bound)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    /// Ring homomorphism sending variable `i` to `images[i]` (or to the
    /// same-named variable of the target ring when `None`).
    pub fn substitute(&self, images: &[Option<Poly>]) -> Result<Self> {
        if images.len() != self.arity() {
            return Err(Error::ArityMismatch(alloc::format!(
                "{} images for {} variables",
                images.len(),
                self.arity()
            )));
        }
        let target = images
            .iter()
            .flatten()
            .next()
            .map(|p| p.ring.clone())
            .unwrap_or_else(|| self.ring.clone());
        if images.iter().flatten().any(|p| *p.ring != *target) {
            return Err(Error::ArityMismatch("images live in different rings".into()));
        }
        if target.params() != self.ring.params() {
            return Err(Error::ArityMismatch("parameter lists differ".into()));
        }
        let mut resolved = Vec::with_capacity(images.len());
        for (i, img) in images.iter().enumerate() {
            resolved.push(match img {
                Some(p) => p.clone(),
                None => {
                    let name = &self.ring.vars()[i];
                    let j = target.var_index(name).ok_or_else(|| {
                        Error::ArityMismatch(alloc::format!("variable `{name}` has no image"))
                    })?;
                    Poly::var(&target, j)
                }
            });
        }
        // Cache powers of each image.
        let mut powers: Vec<Vec<Poly>> = resolved
            .iter()
            .map(|p| alloc::vec![Poly::constant(&target, ParamRatio::one()), p.clone()])
            .collect();
        let mut out = Poly::zero(&target);
        for (e, c) in &self.terms {
            let mut term = Poly::constant(&target, c.clone());
            for (i, cache) in powers.iter_mut().enumerate() {
                let k = e.0[i] as usize;
                while cache.len() <= k {
                    let next = &cache[cache.len() - 1] * &resolved[i];
                    cache.push(next);
                }
                if k > 0 {
                    term = &term * &cache[k];
                }
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// Substitution keyed by variable name.
    pub fn substitute_named(&self, images: &[(&str, Poly)]) -> Result<Self> {
        let mut slots: Vec<Option<Poly>> = alloc::vec![None; self.arity()];
        for (name, p) in images {
            let i = self.ring.var_index(name).ok_or_else(|| Error::UnknownSymbol {
                name: (*name).into(),
            })?;
            slots[i] = Some(p.clone());
        }
        self.substitute(&slots)
    }

    /// Substitutes rational values for named parameters; the result lives
    /// in the ring with those parameters removed.
    pub fn specialize(&self, assignment: &[(&str, Rational)]) -> Result<Self> {
        let mut values = Vec::new();
        for (name, v) in assignment {
            let i = self.ring.param_index(name).ok_or_else(|| Error::UnknownSymbol {
                name: (*name).into(),
            })?;
            values.push((i, v.clone()));
        }
        let keep: Vec<String> = self
            .ring
            .params()
            .iter()
            .enumerate()
            .filter(|(i, _)| !values.iter().any(|(j, _)| j == i))
            .map(|(_, p)| p.clone())
            .collect();
        let ring = Ring::new(self.ring.vars(), &keep)?;
        let mut map = alloc::vec![0usize; MAX_SYMBOLS];
        let mut next = 0;
        for (i, slot) in map.iter_mut().enumerate().take(self.ring.params().len()) {
            if !values.iter().any(|(j, _)| *j == i) {
                *slot = next;
                next += 1;
            }
        }
        let mut out = Poly::zero(&ring);
        for (e, c) in &self.terms {
            let v = c.specialize(&values).map_err(|_| Error::PoleAtAssignment)?;
            out.add_term(*e, &v.remap(&map));
        }
        Ok(out)
    }

    /// Re-expresses the polynomial in a ring whose variables and parameters
    /// include (by name) those of `self`.
    pub fn embed(&self, ring: &Arc<Ring>) -> Result<Self> {
        if Arc::ptr_eq(&self.ring, ring) || *self.ring == **ring {
            return Ok(Poly {
                ring: ring.clone(),
                terms: self.terms.clone(),
            });
        }
        let mut vmap = Vec::new();
        for v in self.ring.vars() {
            vmap.push(ring.var_index(v).ok_or_else(|| Error::UnknownSymbol { name: v.clone() })?);
        }
        let mut pmap = alloc::vec![0usize; MAX_SYMBOLS];
        for (i, p) in self.ring.params().iter().enumerate() {
            pmap[i] = ring
                .param_index(p)
                .ok_or_else(|| Error::UnknownSymbol { name: p.clone() })?;
        }
        let identity_params = pmap[..self.ring.params().len()]
            .iter()
            .enumerate()
            .all(|(i, &j)| i == j);
        let mut out = Poly::zero(ring);
        for (e, c) in &self.terms {
            let mut f = ExpVec::ZERO;
            for (i, &j) in vmap.iter().enumerate() {
                f.0[j] = e.0[i];
            }
            let c = if identity_params { c.clone() } else { c.remap(&pmap) };
            out.add_term(f, &c);
        }
        Ok(out)
    }

    /// Canonical text, highest graded-lex term first.
    pub fn to_text(&self) -> String {
        let names = self.ring.param_names();
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let mono = if *e == ExpVec::ZERO {
                String::new()
            } else {
                self.ring.mono_string(e)
            };
            let neg = c.is_simple() && c.leading_sign() < 0;
            let cabs = if neg { c.neg() } else { c.clone() };
            let ctext = cabs.to_string_with(&names);
            if idx > 0 {
                s.push_str(if neg { " - " } else { " + " });
            } else if neg {
                s.push('-');
            }
            let body = if mono.is_empty() {
                if cabs.is_simple() {
                    ctext
                } else {
                    alloc::format!("({ctext})")
                }
            } else if cabs.is_one() {
                mono
            } else if cabs.is_simple() {
                alloc::format!("{ctext}*{mono}")
            } else {
                alloc::format!("({ctext})*{mono}")
            };
            s.push_str(&body);
        }
        s
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self.to_text())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.check_ring(rhs);
        let (big, small) = if self.len() >= rhs.len() { (self, rhs) } else { (rhs, self) };
        let mut out = big.clone();
        for (e, c) in &small.terms {
            out.add_term(*e, c);
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.check_ring(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, &c.neg());
        }
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.check_ring(rhs);
        let mut out = Poly::zero(&self.ring);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea.mul(eb), &ca.mul(cb));
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(e, c)| (*e, c.neg())).collect(),
        }
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                $tr::$m(&self, &rhs)
            }
        }
    };
}

owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

/// Divides every coefficient by a nonzero scalar.
pub fn div_scalar(p: &Poly, c: &ParamRatio) -> Result<Poly> {
    let inv = c.inv().ok_or(Error::DivisionByZero)?;
    Ok(p.scale(&inv))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring_a() -> Arc<Ring> {
        Ring::plane(&["a"])
    }

    fn p(ring: &Arc<Ring>, s: &str) -> Poly {
        Poly::parse(ring, s).unwrap()
    }

    #[test]
    fn partial_of_x9_germ() {
        let r = ring_a();
        let f = p(&r, "x^4+y^4+a*x^2*y^2");
        assert_eq!(f.partial(0), p(&r, "4*x^3+2*a*x*y^2"));
        assert_eq!(f.partial(1), p(&r, "4*y^3+2*a*x^2*y"));
        assert!(p(&r, "y^4").partial(0).is_zero());
    }

    #[test]
    fn partial_of_deformed_germ() {
        let r = Ring::plane(&["a", "s"]);
        let f = p(&r, "x^4+(y^2+s*x)^2+a*x^2*(y^2+s*x)");
        // hand expansion: d/dy = 4y(y^2+sx) + 2a x^2 y
        let expected = p(&r, "4*y^3 + 4*s*x*y + 2*a*x^2*y");
        assert_eq!(f.partial(1), expected);
        assert_eq!(f.partial(1), p(&r, "4*y*(y^2+s*x)+2*a*x^2*y"));
    }

    #[test]
    fn coordinate_change_reproduces_expansion() {
        let r = Ring::plane(&["a", "s"]);
        let f = p(&r, "x^4+(y^2+s*x)^2+a*x^2*(y^2+s*x)");
        let g = f
            .substitute_named(&[("x", p(&r, "x - s*y^2")), ("y", p(&r, "s*y"))])
            .unwrap();
        let expected = p(
            &r,
            "s^2*x^2 + a*s^3*x*y^4 + s^4*y^8 + a*s*x^3 + x^4 - 2*a*s^2*x^2*y^2 \
             - 4*s*x^3*y^2 + 6*s^2*x^2*y^4 - 4*s^3*x*y^6",
        );
        assert_eq!(g, expected);
    }

    #[test]
    fn identity_and_zero_substitutions() {
        let r = ring_a();
        let f = p(&r, "x^4+y^4+a*x^2*y^2");
        assert_eq!(f.substitute(&[None, None]).unwrap(), f);
        let g = f.substitute_named(&[("y", Poly::zero(&r))]).unwrap();
        assert_eq!(g, p(&r, "x^4"));
        assert!(matches!(
            f.substitute(&[None]),
            Err(Error::ArityMismatch(_))
        ));
    }

    #[test]
    fn orders() {
        let r = ring_a();
        assert_eq!(p(&r, "x^4+y^4+a*x^2*y^2").order(), Some(4));
        assert_eq!(p(&r, "x^3+x^4+y^4").order(), Some(3));
        assert_eq!(Poly::zero(&r).order(), None);
    }

    #[test]
    fn specialization_drops_parameter() {
        let r = Ring::plane(&["a", "s"]);
        let f = p(&r, "s^2*(a^2-4)*x + a*y");
        let g = f
            .specialize(&[("s", Rational::frac(1, 7)), ("a", Rational::zero())])
            .unwrap();
        assert!(g.ring().params().is_empty());
        assert_eq!(g.to_text(), "-4/49*x");
        let h = p(&r, "x/(a-2)").specialize(&[("a", Rational::from_int(2))]);
        assert_eq!(h, Err(Error::PoleAtAssignment));
    }

    #[test]
    fn canonical_text() {
        let r = ring_a();
        assert_eq!(p(&r, "y^4 + x^4 + a*x^2*y^2").to_text(), "x^4 + a*x^2*y^2 + y^4");
        assert_eq!(p(&r, "-x + 2*a/(a^2-4)*y - 1").to_text(), "-x + (2*a/(a^2 - 4))*y - 1");
        assert_eq!(p(&r, "(a^2-4)*x").to_text(), "(a^2 - 4)*x");
        assert_eq!(Poly::zero(&r).to_text(), "0");
    }

    #[test]
    fn embedding_reorders_parameters() {
        let r1 = Ring::plane(&["b"]);
        let r2 = Ring::plane(&["a", "b"]);
        let f = p(&r1, "b*x^2 + y");
        let g = f.embed(&r2).unwrap();
        assert_eq!(g, p(&r2, "b*x^2 + y"));
    }
}
