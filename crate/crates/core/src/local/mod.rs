//! Computations in the local ring at the origin: standard bases for a
//! local degree ordering, colengths, Milnor numbers, versal monomial bases
//! and membership certificates.

mod engine;
mod jets;
mod linalg;
mod lpoly;
mod resultant;

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use engine::{Engine, Staircase};
pub use lpoly::{local_cmp, Coeff};
use lpoly::LPoly;
pub use resultant::resultant_mu;

use crate::error::{Error, Result};
use crate::field::{Domain, ParamRatio, Rational};
use crate::poly::{ExpVec, Poly, Ring};

/// Default total-degree cap for standard-basis computations.
pub const DEFAULT_DEGREE_CAP: u32 = 64;
/// Default largest jet degree tried by the jet method.
pub const DEFAULT_JET_CAP: u32 = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdealTag {
    Jacobian,
    MaxTimesJacobian,
}

/// Generators of an ideal of the local ring, all in one ring.
#[derive(Debug, Clone, PartialEq)]
pub struct IdealGens {
    ring: Arc<Ring>,
    generators: Vec<Poly>,
    tag: Option<IdealTag>,
}

impl IdealGens {
    /// Drops zero generators; at least one must remain.
    pub fn new(generators: Vec<Poly>) -> Result<Self> {
        let ring = generators
            .first()
            .map(|g| g.ring().clone())
            .ok_or(Error::ZeroPolynomial)?;
        if generators.iter().any(|g| **g.ring() != *ring) {
            return Err(Error::ArityMismatch("generators live in different rings".into()));
        }
        let generators: Vec<Poly> = generators.into_iter().filter(|g| !g.is_zero()).collect();
        if generators.is_empty() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(IdealGens {
            ring,
            generators,
            tag: None,
        })
    }

    /// The Jacobian ideal `(∂f/∂x₁, …, ∂f/∂xₙ)`. May be the zero ideal.
    pub fn jacobian(f: &Poly) -> Self {
        IdealGens {
            ring: f.ring().clone(),
            generators: f.gradient().into_iter().filter(|g| !g.is_zero()).collect(),
            tag: Some(IdealTag::Jacobian),
        }
    }

    /// `m · (∇f)`, generated by `xᵢ · ∂f/∂xⱼ` (j outer, i inner).
    pub fn max_times_jacobian(f: &Poly) -> Self {
        let ring = f.ring().clone();
        let mut generators = Vec::new();
        for d in f.gradient() {
            if d.is_zero() {
                continue;
            }
            for i in 0..ring.arity() {
                generators.push(&Poly::var(&ring, i) * &d);
            }
        }
        IdealGens {
            ring,
            generators,
            tag: Some(IdealTag::MaxTimesJacobian),
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    pub fn tag(&self) -> Option<IdealTag> {
        self.tag
    }
}

/// Dimension of a local quotient.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Colength {
    Finite(u32),
    Infinite,
}

impl Colength {
    pub fn finite(self) -> Option<u32> {
        match self {
            Colength::Finite(n) => Some(n),
            Colength::Infinite => None,
        }
    }
}

impl fmt::Display for Colength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Colength::Finite(n) => write!(f, "{n}"),
            Colength::Infinite => f.write_str("infinity"),
        }
    }
}

/// Monomial ordering used for leading terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LocalOrdering {
    /// Lower total degree first; ties by reverse lexicographic order.
    NegDegRevLex,
}

/// Standard monomials spanning the local quotient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientBasis {
    pub standard_monomials: Vec<ExpVec>,
    pub colength: u32,
}

/// A certified standard basis of an ideal with finite colength.
#[derive(Debug, Clone)]
pub struct StandardBasis {
    pub elements: Vec<Poly>,
    pub leading_exponents: Vec<ExpVec>,
    pub ordering: LocalOrdering,
    pub quotient: QuotientBasis,
    /// Every monomial of this degree lies in the ideal.
    pub saturation_degree: u32,
    /// Polynomials are exact through total degree `bound - 1`.
    pub bound: u32,
    pub degree_cap: u32,
    ideal: IdealGens,
    /// Cofactors of each element on the ideal generators, exact below `bound`.
    representations: Option<Vec<Vec<Poly>>>,
}

impl StandardBasis {
    pub fn ideal(&self) -> &IdealGens {
        &self.ideal
    }

    pub fn representations(&self) -> Option<&[Vec<Poly>]> {
        self.representations.as_deref()
    }

    /// A monomial basis of the quotient chosen degree by degree, preferring
    /// within a degree the monomials with the smallest largest exponent.
    ///
    /// Unlike the staircase this need not come from a monomial ordering, so
    /// it can contain `x²y²` where every ordering would pick `x⁴` or `y⁴`.
    pub fn representatives(&self) -> Vec<ExpVec> {
        if has_params(&self.ideal.ring) {
            pick_representatives::<ParamRatio>(self, &self.engine::<ParamRatio>(), false)
                .into_iter()
                .map(|r| r.0)
                .collect()
        } else {
            pick_representatives::<Rational>(self, &self.engine::<Rational>(), false)
                .into_iter()
                .map(|r| r.0)
                .collect()
        }
    }

    fn engine<F: Coeff>(&self) -> Engine<F> {
        Engine {
            bound: self.bound,
            arity: self.ideal.ring.arity(),
            basis: self
                .elements
                .iter()
                .map(|e| LPoly::from_poly(e, self.bound))
                .collect(),
            reps: None,
        }
    }
}

type Picked<F> = (ExpVec, LPoly<F>, Vec<LPoly<F>>);

fn preference(a: &ExpVec, b: &ExpVec) -> core::cmp::Ordering {
    let top = |e: &ExpVec| e.0.iter().copied().max().unwrap_or(0);
    top(a).cmp(&top(b)).then(b.0.cmp(&a.0))
}

/// Greedy monomial basis of the quotient with each pick's normal form and
/// quotients on the basis elements.
fn pick_representatives<F: Coeff>(
    basis: &StandardBasis,
    engine: &Engine<F>,
    with_quotients: bool,
) -> Vec<Picked<F>> {
    let stairs = &basis.quotient.standard_monomials;
    let mu = stairs.len();
    let column = |e: &ExpVec| stairs.iter().position(|s| s == e).expect("standard");
    let mut ech = linalg::Echelon::new();
    let mut out = Vec::new();
    for d in 0..basis.saturation_degree {
        let mut layer = lpoly::monomials_of_degree(engine.arity, d);
        layer.sort_by(preference);
        for e in layer {
            if out.len() == mu {
                return out;
            }
            let (nf, q) = engine.normal_form(&LPoly::monomial(e, F::one()), with_quotients);
            let mut row: linalg::Row<F> = nf.terms.iter().map(|(s, c)| (column(s), c.clone())).collect();
            row.sort_by_key(|r| r.0);
            if ech.insert(row) {
                out.push((e, nf, q));
            }
        }
    }
    out
}

/// Options for the standard-basis driver.
#[derive(Debug, Clone, Copy)]
pub struct BasisOptions {
    pub degree_cap: u32,
    pub track_representations: bool,
}

impl Default for BasisOptions {
    fn default() -> Self {
        BasisOptions {
            degree_cap: DEFAULT_DEGREE_CAP,
            track_representations: false,
        }
    }
}

fn has_params(ring: &Ring) -> bool {
    !ring.params().is_empty()
}

struct Attempt<F> {
    engine: Engine<F>,
    stairs: Staircase,
}

fn attempt<F: Coeff>(ideal: &IdealGens, bound: u32, track: bool) -> Attempt<F> {
    let gens: Vec<LPoly<F>> = ideal
        .generators
        .iter()
        .map(|g| LPoly::from_poly(g, bound))
        .collect();
    let engine = Engine::run(&gens, ideal.ring.arity(), bound, track);
    let stairs = engine.staircase();
    Attempt { engine, stairs }
}

/// Bounds tried by iterative deepening, ending at `cap + 1`.
fn bounds(ideal: &IdealGens, cap: u32) -> Vec<u32> {
    let last = cap + 1;
    let ord = ideal
        .generators
        .iter()
        .filter_map(|g| g.order())
        .max()
        .unwrap_or(0);
    let mut b = (2 * ord + 2).clamp(2, last);
    let mut out = alloc::vec![b];
    while b < last {
        b = (b + b / 2 + 1).min(last);
        out.push(b);
    }
    out
}

enum Outcome<F> {
    Finite(Attempt<F>),
    /// Undecided at the cap: the last two attempts.
    Open(Attempt<F>, Option<Attempt<F>>),
}

fn deepen<F: Coeff>(ideal: &IdealGens, cap: u32, track: bool) -> Outcome<F> {
    let mut prev: Option<Attempt<F>> = None;
    let mut last: Option<Attempt<F>> = None;
    for b in bounds(ideal, cap) {
        let a = attempt::<F>(ideal, b, track);
        if a.stairs.empty_degree.is_some() {
            return Outcome::Finite(a);
        }
        prev = last.take();
        last = Some(a);
    }
    Outcome::Open(last.expect("at least one bound"), prev)
}

fn into_basis<F: Coeff>(ideal: &IdealGens, a: Attempt<F>, cap: u32) -> StandardBasis {
    let ring = &ideal.ring;
    let elements: Vec<Poly> = a.engine.basis.iter().map(|g| g.to_poly(ring)).collect();
    let representations = a.engine.reps.as_ref().map(|reps| {
        reps.iter()
            .map(|r| r.iter().map(|c| c.to_poly(ring)).collect())
            .collect()
    });
    let monos = a.stairs.monomials;
    StandardBasis {
        elements,
        leading_exponents: a.engine.leads(),
        ordering: LocalOrdering::NegDegRevLex,
        quotient: QuotientBasis {
            colength: monos.len() as u32,
            standard_monomials: monos,
        },
        saturation_degree: a.stairs.empty_degree.expect("finite"),
        bound: a.engine.bound,
        degree_cap: cap,
        ideal: ideal.clone(),
        representations,
    }
}

fn cap_exceeded<F: Coeff>(a: &Attempt<F>, cap: u32) -> Error {
    Error::CapExceeded {
        cap,
        partial: a.stairs.monomials.clone(),
    }
}

fn basis_in<F: Coeff>(ideal: &IdealGens, opts: BasisOptions) -> Result<StandardBasis> {
    match deepen::<F>(ideal, opts.degree_cap, opts.track_representations) {
        Outcome::Finite(a) => Ok(into_basis(ideal, a, opts.degree_cap)),
        Outcome::Open(a, _) => Err(cap_exceeded(&a, opts.degree_cap)),
    }
}

/// Standard basis of `ideal`, certified when the staircase is finite.
pub fn standard_basis(ideal: &IdealGens, degree_cap: u32) -> Result<StandardBasis> {
    standard_basis_with(
        ideal,
        BasisOptions {
            degree_cap,
            ..BasisOptions::default()
        },
    )
}

pub fn standard_basis_with(ideal: &IdealGens, opts: BasisOptions) -> Result<StandardBasis> {
    if opts.degree_cap == 0 || ideal.generators.is_empty() {
        return Err(Error::CapExceeded {
            cap: opts.degree_cap,
            partial: Vec::new(),
        });
    }
    if has_params(&ideal.ring) {
        basis_in::<ParamRatio>(ideal, opts)
    } else {
        basis_in::<Rational>(ideal, opts)
    }
}

/// The colength and the degree that settled it.
fn colength_in<F: Coeff>(ideal: &IdealGens, cap: u32) -> Result<(Colength, u32)> {
    match deepen::<F>(ideal, cap, false) {
        Outcome::Finite(a) => Ok((
            Colength::Finite(a.stairs.monomials.len() as u32),
            a.stairs.empty_degree.expect("finite"),
        )),
        Outcome::Open(a, prev) => {
            if let Some(p) = prev {
                if ray_is_free(&a, &p) {
                    return Ok((Colength::Infinite, cap));
                }
            }
            Err(cap_exceeded(&a, cap))
        }
    }
}

/// Some coordinate axis carries no leading exponent at either of the last
/// two bounds, and the leading exponents below the smaller bound agree.
fn ray_is_free<F: Coeff>(last: &Attempt<F>, prev: &Attempt<F>) -> bool {
    let arity = last.engine.arity;
    let pure_axes = |leads: &[ExpVec]| -> Vec<bool> {
        (0..arity)
            .map(|i| {
                leads
                    .iter()
                    .any(|e| e.degree() == e.get(i) as u32)
            })
            .collect()
    };
    let (l1, l0) = (last.engine.leads(), prev.engine.leads());
    let (a1, a0) = (pure_axes(&l1), pure_axes(&l0));
    if !(0..arity).any(|i| !a1[i] && !a0[i]) {
        return false;
    }
    let below = prev.engine.bound;
    let mut s1: Vec<ExpVec> = l1.into_iter().filter(|e| e.degree() < below).collect();
    let mut s0 = l0;
    s1.sort();
    s0.sort();
    s1 == s0
}

/// `dim O/I`, with `Infinite` reported by the ray heuristic at the default cap.
pub fn colength(ideal: &IdealGens) -> Result<Colength> {
    colength_with(ideal, DEFAULT_DEGREE_CAP)
}

pub fn colength_with(ideal: &IdealGens, degree_cap: u32) -> Result<Colength> {
    colength_detail(ideal, degree_cap).map(|(v, _)| v)
}

fn colength_detail(ideal: &IdealGens, degree_cap: u32) -> Result<(Colength, u32)> {
    if ideal.generators.is_empty() {
        return Ok((Colength::Infinite, 0));
    }
    if has_params(&ideal.ring) {
        colength_in::<ParamRatio>(ideal, degree_cap)
    } else {
        colength_in::<Rational>(ideal, degree_cap)
    }
}

/// Colength from jets below degree `cap`, certified by agreement with the
/// jets below `cap + 1` (no standard monomial of degree `cap` remains).
pub fn jet_colength(ideal: &IdealGens, cap: u32) -> Result<u32> {
    let arity = ideal.ring.arity();
    let dim = |b: u32| {
        if has_params(&ideal.ring) {
            jets::truncated_dimension::<ParamRatio>(&ideal.generators, arity, b)
        } else {
            jets::truncated_dimension::<Rational>(&ideal.generators, arity, b)
        }
    };
    let d = dim(cap);
    if d == dim(cap + 1) {
        Ok(d)
    } else {
        Err(Error::NotStabilized { cap })
    }
}

/// Smallest stabilized jet colength with cap at most `jet_cap`.
fn jets_method(ideal: &IdealGens, jet_cap: u32) -> Result<(u32, u32)> {
    let arity = ideal.ring.arity();
    let dim = |b: u32| {
        if has_params(&ideal.ring) {
            jets::truncated_dimension::<ParamRatio>(&ideal.generators, arity, b)
        } else {
            jets::truncated_dimension::<Rational>(&ideal.generators, arity, b)
        }
    };
    let mut cur = dim(1);
    for cap in 1..=jet_cap {
        let next = dim(cap + 1);
        if next == cur {
            return Ok((cur, cap));
        }
        cur = next;
    }
    Err(Error::NotStabilized { cap: jet_cap })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    StandardBasis,
    Jets,
    Resultant,
    All,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::StandardBasis => "standard_basis",
            Method::Jets => "jets",
            Method::Resultant => "resultant",
            Method::All => "all",
        }
    }
}

impl core::str::FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> core::result::Result<Self, String> {
        match s {
            "standard_basis" | "sb" => Ok(Method::StandardBasis),
            "jets" => Ok(Method::Jets),
            "resultant" => Ok(Method::Resultant),
            "all" => Ok(Method::All),
            _ => Err(format!("unknown method `{s}`")),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct MilnorOptions {
    pub degree_cap: u32,
    pub jet_cap: u32,
    pub seed: u64,
}

impl Default for MilnorOptions {
    fn default() -> Self {
        MilnorOptions {
            degree_cap: DEFAULT_DEGREE_CAP,
            jet_cap: DEFAULT_JET_CAP,
            seed: 0,
        }
    }
}

/// A Milnor number together with what each method returned.
#[derive(Debug, Clone, PartialEq)]
pub struct MilnorOutcome {
    pub value: Colength,
    pub per_method: Vec<(Method, Colength)>,
    /// Largest degree cap any method needed.
    pub cap_used: u32,
}

/// `μ(f) = dim O/(∇f)` with default options.
pub fn milnor(f: &Poly, method: Method) -> Result<Colength> {
    milnor_with(f, method, &MilnorOptions::default()).map(|o| o.value)
}

pub fn milnor_with(f: &Poly, method: Method, opts: &MilnorOptions) -> Result<MilnorOutcome> {
    if !f.constant_term().is_zero() {
        return Err(Error::NonzeroConstant);
    }
    let ideal = IdealGens::jacobian(f);
    let run_sb = || -> Result<(Colength, u32)> {
        colength_detail(&ideal, opts.degree_cap)
    };
    let run_jets = || -> Result<(Colength, u32)> {
        if ideal.generators.is_empty() {
            return Err(Error::NotStabilized { cap: opts.jet_cap });
        }
        jets_method(&ideal, opts.jet_cap).map(|(v, c)| (Colength::Finite(v), c))
    };
    let run_res = || -> Result<(Colength, u32)> {
        match resultant_mu(f, opts.seed) {
            Ok(v) => Ok((Colength::Finite(v), 0)),
            Err(Error::NonIsolated) => Ok((Colength::Infinite, 0)),
            Err(e) => Err(e),
        }
    };
    let single = |m: Method, r: Result<(Colength, u32)>| {
        r.map(|(value, cap_used)| MilnorOutcome {
            value,
            per_method: alloc::vec![(m, value)],
            cap_used,
        })
    };
    match method {
        Method::StandardBasis => single(method, run_sb()),
        Method::Jets => single(method, run_jets()),
        Method::Resultant => single(method, run_res()),
        Method::All => {
            let (sb, sb_cap) = run_sb()?;
            let mut per_method = alloc::vec![(Method::StandardBasis, sb)];
            let mut cap_used = sb_cap;
            match run_jets() {
                Ok((v, c)) => {
                    per_method.push((Method::Jets, v));
                    cap_used = cap_used.max(c);
                }
                // jets never stabilize on a non-isolated point
                Err(Error::NotStabilized { .. }) if sb == Colength::Infinite => {}
                Err(e) => return Err(e),
            }
            if f.arity() == 2 {
                per_method.push((Method::Resultant, run_res()?.0));
            }
            if per_method.iter().any(|(_, v)| *v != sb) {
                let listing: Vec<String> = per_method
                    .iter()
                    .map(|(m, v)| format!("{}={v}", m.name()))
                    .collect();
                return Err(Error::OracleDisagreement(listing.join(", ")));
            }
            Ok(MilnorOutcome {
                value: sb,
                per_method,
                cap_used,
            })
        }
    }
}

/// Monomials whose classes form a basis of `m / m(∇f)`, listed by degree
/// and then with higher powers of the first variable first.
pub fn versal_basis(f: &Poly) -> Result<Vec<ExpVec>> {
    versal_basis_with(f, DEFAULT_DEGREE_CAP)
}

pub fn versal_basis_with(f: &Poly, degree_cap: u32) -> Result<Vec<ExpVec>> {
    let ideal = IdealGens::max_times_jacobian(f);
    if ideal.generators.is_empty() {
        return Err(Error::NonIsolated);
    }
    if colength_with(&ideal, degree_cap)? == Colength::Infinite {
        return Err(Error::NonIsolated);
    }
    let b = standard_basis(&ideal, degree_cap)?;
    let mut out: Vec<ExpVec> = b
        .representatives()
        .into_iter()
        .filter(|e| *e != ExpVec::ZERO)
        .collect();
    out.sort_by(|a, b| a.degree().cmp(&b.degree()).then(b.0.cmp(&a.0)));
    Ok(out)
}

/// Result of reducing a polynomial by a standard basis.
#[derive(Debug, Clone, PartialEq)]
pub struct LocalReduction {
    pub normal_form: Poly,
    /// Cofactors on the basis elements.
    pub cofactors: Vec<Poly>,
    /// Cofactors on the ideal generators, when representations are known.
    pub generator_cofactors: Option<Vec<Poly>>,
    /// Identities hold modulo monomials of this degree and above.
    pub bound: u32,
}

/// Normal form of `g` modulo the ideal of `basis`, with cofactors when
/// `with_certificate` is set.
///
/// The normal form is exact: the ideal contains every monomial of degree
/// `basis.saturation_degree`. Cofactor identities hold below `bound`, which
/// is raised past the degree of `g` when needed.
pub fn local_reduce(g: &Poly, basis: &StandardBasis, with_certificate: bool) -> Result<LocalReduction> {
    if **g.ring() != *basis.ideal.ring {
        return Err(Error::ArityMismatch("polynomial and basis live in different rings".into()));
    }
    let deg = g.total_degree().unwrap_or(0);
    if deg > basis.degree_cap {
        return Err(Error::CapExceeded {
            cap: basis.degree_cap,
            partial: basis.quotient.standard_monomials.clone(),
        });
    }
    if has_params(&basis.ideal.ring) {
        reduce_in::<ParamRatio>(g, basis, with_certificate, deg)
    } else {
        reduce_in::<Rational>(g, basis, with_certificate, deg)
    }
}

fn reduce_in<F: Coeff>(g: &Poly, basis: &StandardBasis, cert: bool, deg: u32) -> Result<LocalReduction> {
    let ring = basis.ideal.ring.clone();
    let refreshed;
    let b = if cert && (deg >= basis.bound || basis.representations.is_none()) {
        let a = attempt::<F>(&basis.ideal, basis.bound.max(deg + 1), true);
        refreshed = into_basis(&basis.ideal, a, basis.degree_cap);
        &refreshed
    } else {
        basis
    };
    let engine: Engine<F> = b.engine();
    let (nf, mut q) = engine.normal_form(&LPoly::from_poly(g, b.bound), cert);
    // re-express the remainder in the representative monomials
    let mut normal_form = Poly::zero(&ring);
    if !nf.is_zero() {
        let picks = pick_representatives::<F>(b, &engine, cert);
        let stairs = &b.quotient.standard_monomials;
        let dense = |p: &LPoly<F>| -> Vec<F> {
            let mut v = alloc::vec![F::zero(); stairs.len()];
            for (e, c) in &p.terms {
                v[stairs.iter().position(|s| s == e).expect("standard")] = c.clone();
            }
            v
        };
        let cols: Vec<Vec<F>> = picks.iter().map(|p| dense(&p.1)).collect();
        let lambda = linalg::solve_columns(&cols, &dense(&nf)).expect("representatives form a basis");
        for ((e, _, qp), l) in picks.iter().zip(&lambda) {
            if l.is_zero() {
                continue;
            }
            normal_form.add_term(*e, &l.to_ratio());
            if cert {
                for (qk, qpk) in q.iter_mut().zip(qp) {
                    *qk = qk.sub_mul(l, &ExpVec::ZERO, qpk, u32::MAX);
                }
            }
        }
    }
    if !cert {
        return Ok(LocalReduction {
            normal_form,
            cofactors: Vec::new(),
            generator_cofactors: None,
            bound: b.bound,
        });
    }
    let cofactors: Vec<Poly> = q.iter().map(|c| c.to_poly(&ring)).collect();
    let generator_cofactors = b.representations.as_ref().map(|reps| {
        let n = b.ideal.generators.len();
        let mut out: Vec<Poly> = (0..n).map(|_| Poly::zero(&ring)).collect();
        for (qk, rk) in cofactors.iter().zip(reps) {
            for (o, r) in out.iter_mut().zip(rk) {
                *o = &*o + &(qk * r);
            }
        }
        out.into_iter().map(|p| p.truncate(b.bound)).collect()
    });
    Ok(LocalReduction {
        normal_form,
        cofactors,
        generator_cofactors,
        bound: b.bound,
    })
}

/// `g - Σ cᵢ·hᵢ - r` has no terms below `bound`.
pub fn certificate_holds(g: &Poly, hs: &[Poly], cofactors: &[Poly], r: &Poly, bound: u32) -> bool {
    if hs.len() != cofactors.len() {
        return false;
    }
    let mut acc = g - r;
    for (h, c) in hs.iter().zip(cofactors) {
        acc = &acc - &(h * c);
    }
    acc.truncate(bound).is_zero()
}

#[cfg(test)]
mod tests;
