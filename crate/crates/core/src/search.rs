//! Exhaustive search over curve-shaped specializations `u_m = c·s^w` of the
//! versal unfolding, reporting the smallest nonzero jump found.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use sha2::{Digest, Sha256};

use crate::deform::{make_family_with, FamilyOptions};
use crate::error::{Error, Result};
use crate::field::{Domain, ParamRatio, Rational};
use crate::local::{milnor_with, versal_basis_with};
use crate::poly::{ExpVec, Poly, Ring};

/// Largest number of families a grid may describe.
pub const DEFAULT_BUDGET: u64 = 10_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchGrid {
    pub directions: Vec<ExpVec>,
    pub coefficients: Vec<Rational>,
    pub weights: Vec<u32>,
    pub max_active: usize,
}

/// One direction switched on with coefficient `coeff` and weight `weight`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Choice {
    pub direction: ExpVec,
    pub coeff: Rational,
    pub weight: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RecordStatus {
    Ok,
    GenericNonIsolated,
    Failed(String),
}

impl RecordStatus {
    pub fn name(&self) -> &'static str {
        match self {
            RecordStatus::Ok => "ok",
            RecordStatus::GenericNonIsolated => "generic_non_isolated",
            RecordStatus::Failed(_) => "failed",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchRecord {
    pub hash: String,
    pub base_hash: String,
    pub base: String,
    pub total: String,
    pub symbol: String,
    pub assignment: Vec<Choice>,
    pub mu_generic: Option<u32>,
    pub jump: Option<u32>,
    pub status: RecordStatus,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchSummary {
    pub mu_base: u32,
    pub min_nonzero_jump: Option<u32>,
    pub witness: Option<SearchRecord>,
    pub histogram: BTreeMap<u32, u64>,
    pub records: Vec<SearchRecord>,
}

/// Hex SHA-256 of `text`.
pub fn content_hash(text: &str) -> String {
    let digest = Sha256::digest(text.as_bytes());
    let mut out = String::with_capacity(64);
    for b in digest {
        out.push_str(&format!("{b:02x}"));
    }
    out
}

/// Canonical text of a germ: its ring followed by its terms.
pub fn canonical_text(f: &Poly) -> String {
    let r = f.ring();
    format!("vars={};params={};f={}", r.vars().join(","), r.params().join(","), f.to_text())
}

pub fn family_hash(total: &Poly, base: &Poly, symbol: &str) -> String {
    content_hash(&format!(
        "family;symbol={symbol};total={};base={}",
        canonical_text(total),
        canonical_text(base)
    ))
}

pub fn base_hash(base: &Poly) -> String {
    content_hash(&format!("base;{}", canonical_text(base)))
}

/// Reads a direction such as `x*y^2`; it must be a single monic monomial.
pub fn parse_direction(ring: &alloc::sync::Arc<Ring>, text: &str) -> Result<ExpVec> {
    let p = Poly::parse(ring, text)?;
    match p.terms().collect::<Vec<_>>().as_slice() {
        [(e, c)] if c.is_one() && **e != ExpVec::ZERO => Ok(**e),
        _ => Err(Error::InvalidGrid(format!("direction {text:?} is not a monomial"))),
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    let mut r: u64 = 1;
    for i in 0..k {
        r = r.saturating_mul(n - i) / (i + 1);
    }
    r
}

impl SearchGrid {
    fn nonzero_coeffs(&self) -> Vec<&Rational> {
        self.coefficients.iter().filter(|c| !c.is_zero()).collect()
    }

    /// Number of families the grid describes, including the constant one.
    pub fn size(&self) -> u64 {
        let per = (self.nonzero_coeffs().len() as u64).saturating_mul(self.weights.len() as u64);
        let n = self.directions.len() as u64;
        (0..=self.max_active.min(self.directions.len()) as u64)
            .map(|k| binomial(n, k).saturating_mul(per.saturating_pow(k as u32)))
            .fold(0u64, |a, b| a.saturating_add(b))
    }

    /// Checks the grid against `f0` and the family budget.
    pub fn validate(&self, f0: &Poly, budget: u64) -> Result<()> {
        if self.directions.is_empty() || self.coefficients.is_empty() || self.weights.is_empty() {
            return Err(Error::EmptyGrid);
        }
        let arity = f0.arity();
        for (i, d) in self.directions.iter().enumerate() {
            if self.directions[..i].contains(d) {
                return Err(Error::InvalidGrid(format!(
                    "direction {} repeated",
                    f0.ring().mono_string(d)
                )));
            }
            if d.0[arity..].iter().any(|&k| k != 0) {
                return Err(Error::InvalidGrid("direction outside the ring".to_string()));
            }
        }
        if self.weights.contains(&0) {
            return Err(Error::InvalidGrid("weights must be positive".to_string()));
        }
        let versal = versal_basis_with(f0, crate::local::DEFAULT_DEGREE_CAP)?;
        if let Some(d) = self.directions.iter().find(|d| !versal.contains(d)) {
            return Err(Error::InvalidGrid(format!(
                "direction {} is not in the versal basis",
                f0.ring().mono_string(d)
            )));
        }
        let size = self.size();
        if size > budget {
            return Err(Error::GridTooLarge { size, budget });
        }
        Ok(())
    }

    /// Every assignment in enumeration order: by number of active
    /// directions, then by active index set, then by (coefficient, weight)
    /// choices, all lexicographically.
    pub fn assignments(&self) -> Vec<Vec<Choice>> {
        let coeffs = self.nonzero_coeffs();
        let options: Vec<(&Rational, u32)> = coeffs
            .iter()
            .flat_map(|c| self.weights.iter().map(move |w| (*c, *w)))
            .collect();
        let n = self.directions.len();
        let mut out = Vec::new();
        for k in 0..=self.max_active.min(n) {
            if k > 0 && options.is_empty() {
                break;
            }
            let mut subset: Vec<usize> = (0..k).collect();
            loop {
                let mut picks = alloc::vec![0usize; k];
                loop {
                    out.push(
                        subset
                            .iter()
                            .zip(&picks)
                            .map(|(&d, &o)| Choice {
                                direction: self.directions[d],
                                coeff: options[o].0.clone(),
                                weight: options[o].1,
                            })
                            .collect(),
                    );
                    let Some(i) = (0..k).rev().find(|&i| picks[i] + 1 < options.len()) else {
                        break;
                    };
                    picks[i] += 1;
                    for p in &mut picks[i + 1..] {
                        *p = 0;
                    }
                }
                let Some(i) = (0..k).rev().find(|&i| subset[i] < n - k + i) else {
                    break;
                };
                subset[i] += 1;
                for j in i + 1..k {
                    subset[j] = subset[j - 1] + 1;
                }
            }
        }
        out
    }
}

/// Name for the deformation symbol that does not clash with the ring.
pub fn fresh_symbol(ring: &Ring) -> String {
    let mut s = String::from("s");
    while ring.var_index(&s).is_some() || ring.param_index(&s).is_some() {
        s.push('_');
    }
    s
}

/// `f0 + Σ c·s^w·x^m` over the ring of `f0` extended by `symbol`.
pub fn build_family(f0: &Poly, symbol: &str, assignment: &[Choice]) -> Result<Poly> {
    let ring = f0.ring().with_params(&[symbol])?;
    let s = ring.param_index(symbol).expect("symbol just added");
    let mut total = f0.embed(&ring)?;
    for ch in assignment {
        let c = ParamRatio::from_rational(ch.coeff.clone())
            .mul(&ParamRatio::symbol(s).pow(ch.weight));
        total.add_term(ch.direction, &c);
    }
    Ok(total)
}

/// Evaluates one grid point; failures are recorded, never raised.
pub fn evaluate(f0: &Poly, mu_base: u32, assignment: &[Choice], opts: &FamilyOptions) -> SearchRecord {
    let symbol = fresh_symbol(f0.ring());
    let bh = base_hash(f0);
    let mut rec = SearchRecord {
        hash: String::new(),
        base_hash: bh,
        base: f0.to_text(),
        total: String::new(),
        symbol: symbol.clone(),
        assignment: assignment.to_vec(),
        mu_generic: None,
        jump: None,
        status: RecordStatus::Ok,
    };
    let total = match build_family(f0, &symbol, assignment) {
        Ok(t) => t,
        Err(e) => {
            rec.status = RecordStatus::Failed(e.to_string());
            rec.hash = content_hash(&format!("unbuilt;{}", canonical_text(f0)));
            return rec;
        }
    };
    rec.total = total.to_text();
    rec.hash = family_hash(&total, f0, &symbol);
    match make_family_with(&total, f0, &symbol, opts) {
        Ok(fam) => {
            let g = crate::deform::generic_mu_with(&fam, crate::deform::Mode::Symbolic, opts)
                .expect("symbolic mode is infallible");
            rec.mu_generic = Some(g);
            rec.jump = Some(mu_base.saturating_sub(g));
        }
        Err(Error::GenericNonIsolated) => rec.status = RecordStatus::GenericNonIsolated,
        Err(e) => rec.status = RecordStatus::Failed(e.to_string()),
    }
    rec
}

/// Milnor number of the base germ, which must be isolated.
pub fn base_mu(f0: &Poly, opts: &FamilyOptions) -> Result<u32> {
    milnor_with(f0, opts.method, &opts.milnor)?
        .value
        .finite()
        .ok_or(Error::NonIsolated)
}

/// Histogram, minimum nonzero jump and first witness, from records in
/// enumeration order.
pub fn summarize(mu_base: u32, records: Vec<SearchRecord>) -> SearchSummary {
    let mut histogram = BTreeMap::new();
    for j in records.iter().filter_map(|r| r.jump) {
        *histogram.entry(j).or_insert(0u64) += 1;
    }
    let min_nonzero_jump = histogram.keys().copied().find(|&j| j > 0);
    let witness = min_nonzero_jump.and_then(|m| records.iter().find(|r| r.jump == Some(m)).cloned());
    SearchSummary {
        mu_base,
        min_nonzero_jump,
        witness,
        histogram,
        records,
    }
}

pub fn search_min_jump(f0: &Poly, grid: &SearchGrid) -> Result<SearchSummary> {
    search_min_jump_with(f0, grid, DEFAULT_BUDGET, &FamilyOptions::default())
}

pub fn search_min_jump_with(
    f0: &Poly,
    grid: &SearchGrid,
    budget: u64,
    opts: &FamilyOptions,
) -> Result<SearchSummary> {
    let mu0 = base_mu(f0, opts)?;
    grid.validate(f0, budget)?;
    let records = grid
        .assignments()
        .iter()
        .map(|a| evaluate(f0, mu0, a, opts))
        .collect();
    Ok(summarize(mu0, records))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::sync::Arc;
    use alloc::vec;

    fn plane() -> Arc<Ring> {
        Ring::plane(&[])
    }

    fn dirs(r: &Arc<Ring>, names: &[&str]) -> Vec<ExpVec> {
        names.iter().map(|d| parse_direction(r, d).unwrap()).collect()
    }

    fn rats(values: &[i64]) -> Vec<Rational> {
        values.iter().map(|&v| Rational::from_int(v)).collect()
    }

    fn x9_grid(r: &Arc<Ring>) -> SearchGrid {
        SearchGrid {
            directions: dirs(r, &["x^2", "x*y^2"]),
            coefficients: rats(&[0, 1, 2]),
            weights: vec![1, 2],
            max_active: 2,
        }
    }

    #[test]
    fn grid_sizes() {
        let r = plane();
        let g = x9_grid(&r);
        assert_eq!(g.size(), 25);
        assert_eq!(g.assignments().len(), 25);
        let w = SearchGrid {
            directions: dirs(&r, &["x^3", "x^2*y^2", "x*y^4"]),
            coefficients: rats(&[0, 1, 3]),
            weights: vec![1, 2, 3],
            max_active: 3,
        };
        assert_eq!(w.size(), 343);
        assert_eq!(w.assignments().len(), 343);
        let mut one = g.clone();
        one.max_active = 1;
        assert_eq!(one.size(), 9);
    }

    #[test]
    fn grid_validation() {
        let r = plane();
        let f0 = Poly::parse(&r, "x^4 + y^4").unwrap();
        let mut g = x9_grid(&r);
        assert_eq!(g.validate(&f0, DEFAULT_BUDGET), Ok(()));
        assert_eq!(
            g.validate(&f0, 10),
            Err(Error::GridTooLarge { size: 25, budget: 10 })
        );
        g.directions.push(g.directions[0]);
        assert!(matches!(g.validate(&f0, DEFAULT_BUDGET), Err(Error::InvalidGrid(_))));
        g.directions = dirs(&r, &["x^4"]);
        assert!(matches!(g.validate(&f0, DEFAULT_BUDGET), Err(Error::InvalidGrid(_))));
        g.directions.clear();
        assert_eq!(g.validate(&f0, DEFAULT_BUDGET), Err(Error::EmptyGrid));
        assert!(parse_direction(&r, "2*x").is_err());
    }

    #[test]
    fn x9_search_finds_jump_two() {
        let r = plane();
        let f0 = Poly::parse(&r, "x^4 + y^4").unwrap();
        let out = search_min_jump(&f0, &x9_grid(&r)).unwrap();
        assert_eq!(out.mu_base, 9);
        assert_eq!(out.min_nonzero_jump, Some(2));
        assert!(!out.histogram.contains_key(&1));
        assert_eq!(out.histogram.values().sum::<u64>(), 25);
        let w = out.witness.unwrap();
        assert_eq!(w.jump, Some(2));
        assert_eq!(w.mu_generic, Some(7));
        assert_eq!(w.assignment.len(), 2);
    }

    #[test]
    fn zero_coefficients_give_constant_family() {
        let r = plane();
        let f0 = Poly::parse(&r, "x^4 + y^4").unwrap();
        let mut g = x9_grid(&r);
        g.coefficients = rats(&[0]);
        let out = search_min_jump(&f0, &g).unwrap();
        assert_eq!(out.min_nonzero_jump, None);
        assert_eq!(out.witness, None);
        assert_eq!(out.histogram, BTreeMap::from([(0, 1)]));
    }

    #[test]
    fn hashes_are_stable() {
        let r = plane();
        let f0 = Poly::parse(&r, "x^4 + y^4").unwrap();
        let a = evaluate(&f0, 9, &[], &FamilyOptions::default());
        let b = evaluate(&f0, 9, &[], &FamilyOptions::default());
        assert_eq!(a.hash, b.hash);
        assert_eq!(a.hash.len(), 64);
        assert_eq!(
            content_hash("abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
        );
    }
}
