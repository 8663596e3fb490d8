//! One-parameter deformations `f(s, z)` of a germ, their generic Milnor
//! number and jump, and suspension by squares of fresh variables.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::{Domain, ParamRatio, Rational};
use crate::local::{milnor_with, Colength, Method, MilnorOptions};
use crate::poly::{ExpVec, Poly, Ring, MAX_VARS};

/// Values of the deformation symbol used by sampled mode.
pub const SAMPLES: [(i64, i64); 5] = [(1, 101), (1, 103), (1, 107), (1, 109), (1, 113)];

/// A validated deformation: `total` specializes to `base` at `symbol = 0`,
/// vanishes at the origin for every value of the symbol, and has an
/// isolated critical point for a generic value.
#[derive(Debug, Clone)]
pub struct Family {
    pub total: Poly,
    pub base: Poly,
    pub symbol: String,
    generic: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Symbolic,
    Sampled,
}

/// How Milnor numbers inside families are computed.
#[derive(Debug, Clone, Copy)]
pub struct FamilyOptions {
    pub method: Method,
    pub milnor: MilnorOptions,
}

impl Default for FamilyOptions {
    fn default() -> Self {
        FamilyOptions {
            method: Method::StandardBasis,
            milnor: MilnorOptions::default(),
        }
    }
}

fn mu(f: &Poly, opts: &FamilyOptions) -> Result<Colength> {
    milnor_with(f, opts.method, &opts.milnor).map(|o| o.value)
}

pub fn make_family(total: &Poly, base: &Poly, symbol: &str) -> Result<Family> {
    make_family_with(total, base, symbol, &FamilyOptions::default())
}

pub fn make_family_with(
    total: &Poly,
    base: &Poly,
    symbol: &str,
    opts: &FamilyOptions,
) -> Result<Family> {
    if total.ring().param_index(symbol).is_none() {
        return Err(Error::UnknownSymbol {
            name: symbol.into(),
        });
    }
    let at_zero = total.specialize(&[(symbol, Rational::from_int(0))])?;
    let mismatch = || Error::BaseMismatch {
        symbol: symbol.into(),
    };
    let base = if base.ring().param_index(symbol).is_some() {
        let b = base.specialize(&[(symbol, Rational::from_int(0))])?;
        if b.embed(base.ring())? != *base {
            return Err(mismatch());
        }
        b
    } else {
        base.clone()
    };
    let base_here = base.embed(at_zero.ring())?;
    if at_zero != base_here {
        return Err(mismatch());
    }
    if !total.constant_term().is_zero() {
        return Err(Error::NonzeroAtOrigin);
    }
    let generic = match mu(total, opts)? {
        Colength::Finite(m) => m,
        Colength::Infinite => return Err(Error::GenericNonIsolated),
    };
    Ok(Family {
        total: total.clone(),
        base: base_here,
        symbol: symbol.into(),
        generic,
    })
}

/// Generic Milnor number of the fibres `s ≠ 0`.
///
/// Symbolic mode treats the symbol as transcendental. Sampled mode takes
/// the minimum over [`SAMPLES`] and requires it to be attained twice.
pub fn generic_mu(family: &Family, mode: Mode) -> Result<u32> {
    generic_mu_with(family, mode, &FamilyOptions::default())
}

pub fn generic_mu_with(family: &Family, mode: Mode, opts: &FamilyOptions) -> Result<u32> {
    match mode {
        Mode::Symbolic => Ok(family.generic),
        Mode::Sampled => {
            let values: Vec<Option<u32>> = SAMPLES
                .iter()
                .map(|&(n, d)| sample_mu(family, &Rational::frac(n, d), opts))
                .collect::<Result<_>>()?;
            combine_samples(&values)
        }
    }
}

/// Milnor number at one value of the symbol; `None` when that fibre is not
/// isolated.
pub fn sample_mu(family: &Family, value: &Rational, opts: &FamilyOptions) -> Result<Option<u32>> {
    let fiber = family.total.specialize(&[(&family.symbol, value.clone())])?;
    Ok(mu(&fiber, opts)?.finite())
}

/// Minimum of the finite sample values, attained at least twice.
pub fn combine_samples(values: &[Option<u32>]) -> Result<u32> {
    let finite: Vec<u32> = values.iter().flatten().copied().collect();
    let min = *finite.iter().min().ok_or(Error::GenericNonIsolated)?;
    if finite.iter().filter(|&&v| v == min).count() < 2 {
        return Err(Error::SampleInconsistent { min });
    }
    Ok(min)
}

/// `μ(base) − μ(generic fibre)`.
pub fn family_jump(family: &Family) -> Result<u32> {
    family_jump_with(family, &FamilyOptions::default())
}

pub fn family_jump_with(family: &Family, opts: &FamilyOptions) -> Result<u32> {
    let m0 = mu(&family.base, opts)?.finite().ok_or(Error::NonIsolated)?;
    Ok(m0.saturating_sub(family.generic))
}

/// `f + z_{n+1}² + … + z_{n+k}²` in a ring with `k` fresh variables.
pub fn suspend(f: &Poly, k: usize) -> Result<Poly> {
    let ring = f.ring();
    let n = ring.arity();
    if n + k > MAX_VARS {
        return Err(Error::ArityUnsupported { arity: n + k });
    }
    let taken = |name: &str| ring.var_index(name).is_some() || ring.param_index(name).is_some();
    let mut vars: Vec<String> = ring.vars().to_vec();
    for i in n + 1..=n + k {
        let mut name = format!("z{i}");
        while taken(&name) || vars.contains(&name) {
            name.push('_');
        }
        vars.push(name);
    }
    let big = Ring::new(&vars, ring.params())?;
    let mut g = f.embed(&big)?;
    for i in n..n + k {
        g.add_term(ExpVec::unit(i).mul(&ExpVec::unit(i)), &ParamRatio::from_int(1));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::sync::Arc;

    fn ring() -> Arc<Ring> {
        Ring::plane(&["a", "b", "s"])
    }

    fn p(text: &str) -> Poly {
        Poly::parse(&ring(), text).unwrap()
    }

    fn base(text: &str) -> Poly {
        Poly::parse(&Ring::plane(&["a", "b"]), text).unwrap()
    }

    #[test]
    fn x9_family() {
        let f = make_family(
            &p("x^4 + (y^2 + s*x)^2 + a*x^2*(y^2 + s*x)"),
            &base("x^4 + y^4 + a*x^2*y^2"),
            "s",
        )
        .unwrap();
        assert_eq!(generic_mu(&f, Mode::Symbolic), Ok(7));
        assert_eq!(family_jump(&f), Ok(2));
    }

    #[test]
    fn w10_family() {
        let f = make_family(
            &p("x^4 + (y^2 + s*x)^3 + b*x^2*y^4"),
            &base("x^4 + y^6 + b*x^2*y^4"),
            "s",
        )
        .unwrap();
        assert_eq!(generic_mu(&f, Mode::Symbolic), Ok(14));
        assert_eq!(family_jump(&f), Ok(1));
    }

    #[test]
    fn constant_family() {
        let f = make_family(&p("x^4 + y^4 + a*x^2*y^2"), &base("x^4 + y^4 + a*x^2*y^2"), "s").unwrap();
        assert_eq!(generic_mu(&f, Mode::Symbolic), Ok(9));
        assert_eq!(generic_mu(&f, Mode::Sampled), Ok(9));
        assert_eq!(family_jump(&f), Ok(0));
    }

    #[test]
    fn invalid_families() {
        let b = base("x^4 + y^4 + a*x^2*y^2");
        assert_eq!(
            make_family(&p("x^4 + y^4 + a*x^2*y^2 + s"), &b, "s").unwrap_err(),
            Error::NonzeroAtOrigin
        );
        assert_eq!(
            make_family(&p("x^4 + y^4 + s*x^2"), &b, "s").unwrap_err(),
            Error::BaseMismatch { symbol: "s".into() }
        );
        assert_eq!(
            make_family(&p("x^4 + s*x^4"), &base("x^4"), "s").unwrap_err(),
            Error::GenericNonIsolated
        );
    }

    #[test]
    fn sample_combination() {
        assert_eq!(combine_samples(&[Some(7), Some(7), Some(8)]), Ok(7));
        assert_eq!(
            combine_samples(&[Some(6), Some(7), Some(7)]),
            Err(Error::SampleInconsistent { min: 6 })
        );
        assert_eq!(combine_samples(&[None, None]), Err(Error::GenericNonIsolated));
    }

    #[test]
    fn suspension() {
        let r = Ring::plane(&["a"]);
        let f = Poly::parse(&r, "x^4 + y^4 + a*x^2*y^2").unwrap();
        let g = suspend(&f, 1).unwrap();
        assert_eq!(g.ring().vars(), &["x", "y", "z3"]);
        assert_eq!(crate::milnor(&g, Method::All), Ok(Colength::Finite(9)));
        let r1 = Ring::new(&["x"], &[] as &[&str]).unwrap();
        let x2 = Poly::parse(&r1, "x^2").unwrap();
        let s = suspend(&x2, 1).unwrap();
        assert_eq!(s.to_text(), "x^2 + z2^2");
        assert_eq!(crate::milnor(&s, Method::All), Ok(Colength::Finite(1)));
        let c = Poly::parse(&Ring::plane(&[]), "x^3 + y^3").unwrap();
        assert_eq!(crate::milnor(&suspend(&c, 1).unwrap(), Method::Jets), Ok(Colength::Finite(4)));
        assert_eq!(suspend(&c, 3), Err(Error::ArityUnsupported { arity: 5 }));
    }
}
