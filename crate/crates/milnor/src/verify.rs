//! The reproduction suite behind `verify-paper`: every published value the
//! library can recompute, grouped by tag.

use std::sync::Arc;
use std::time::Instant;

use milnor_core::corpus::random_convenient_germs;
use milnor_core::deform::{
    family_jump_with, generic_mu_with, make_family_with, suspend, FamilyOptions, Mode,
};
use milnor_core::local::{certificate_holds, standard_basis_with, BasisOptions};
use milnor_core::newton::{newton_number, nondegenerate};
use milnor_core::search::{parse_direction, SearchGrid, DEFAULT_BUDGET};
use milnor_core::{
    colength, local_reduce, milnor_with, versal_basis, Colength, IdealGens, Method,
    MilnorOptions, Poly, Rational, Ring,
};
use serde::Serialize;

use crate::search::parallel_search;

pub const X9: &str = "x^4 + y^4 + a*x^2*y^2";
pub const X9_FAMILY: &str = "x^4 + (y^2 + s*x)^2 + a*x^2*(y^2 + s*x)";
pub const X9_FAMILY_BAR: &str = "s^2*x^2 + a*s^3*x*y^4 + s^4*y^8 + a*s*x^3 + x^4 \
                                 - 2*a*s^2*x^2*y^2 - 4*s*x^3*y^2 + 6*s^2*x^2*y^4 - 4*s^3*x*y^6";
pub const W10: &str = "x^4 + y^6 + b*x^2*y^4";
pub const W10_FAMILY: &str = "x^4 + (y^2 + s*x)^3 + b*x^2*y^4";
pub const W10_FAMILY_BAR: &str = "s^3*x^3 + (s^4 + b*s^6)*y^8 + x^4 - 4*s*x^3*y^2 \
                                  + (6*s^2 + b*s^4)*x^2*y^4 - (4*s^3 + 2*b*s^5)*x*y^6";

/// Seed and size of the random germ corpus.
pub const CORPUS_SEED: u64 = 20240601;
pub const CORPUS_SIZE: usize = 60;

#[derive(Debug, Clone, Copy, Default)]
pub struct VerifyOptions {
    pub milnor: MilnorOptions,
    pub workers: Option<usize>,
}

pub struct Check {
    pub id: &'static str,
    pub tags: &'static [&'static str],
    pub claim: &'static str,
    run: fn(&VerifyOptions) -> Result<String, String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Outcome {
    pub id: &'static str,
    pub tags: &'static [&'static str],
    pub claim: &'static str,
    pub passed: bool,
    pub detail: String,
    #[serde(skip)]
    pub elapsed_ms: u128,
}

pub fn checks() -> Vec<Check> {
    vec![
        Check {
            id: "x9-milnor",
            tags: &["X9"],
            claim: "mu(x^4 + y^4 + a x^2 y^2) = 9",
            run: x9_milnor,
        },
        Check {
            id: "x9-versal",
            tags: &["X9"],
            claim: "versal basis is x^i y^j with 0 < i + j <= 3 plus x^2 y^2; colength of m.J is mu + 2",
            run: x9_versal,
        },
        Check {
            id: "x9-reduction",
            tags: &["X9"],
            claim: "x^5, x^3 y, y^5, x y^3 lie in m.J; x^4 and y^4 are -a/2 x^2 y^2 modulo m.J",
            run: x9_reduction,
        },
        Check {
            id: "x9-family",
            tags: &["X9"],
            claim: "coordinate change gives the stated normal form with nu = mu = 7; jump 2",
            run: x9_family,
        },
        Check {
            id: "w10-family",
            tags: &["W10"],
            claim: "mu(x^4 + y^6 + b x^2 y^4) = 15; deformed fibre has nu = mu = 14; jump 1",
            run: w10_family,
        },
        Check {
            id: "suspension",
            tags: &["suspension"],
            claim: "mu(f + z^2) = mu(f)",
            run: suspension,
        },
        Check {
            id: "corpus",
            tags: &["corpus"],
            claim: "mu >= nu with equality exactly for non-degenerate germs; routes agree; colength(m.J) = mu + 2",
            run: corpus,
        },
        Check {
            id: "x9-degenerate-boundary",
            tags: &["X9", "degenerate"],
            claim: "at a = 2 the germ (x^2 + y^2)^2 is degenerate with infinite mu",
            run: degenerate_boundary,
        },
        Check {
            id: "x9-search",
            tags: &["X9", "search"],
            claim: "grid search over x^4 + y^4 finds jump 2 and never jump 1",
            run: x9_search,
        },
        Check {
            id: "w10-search",
            tags: &["W10", "search"],
            claim: "grid search over x^4 + y^6 finds jump 1",
            run: w10_search,
        },
        Check {
            id: "x9-order-three-enumeration",
            tags: &["X9", "enumeration"],
            claim: "non-degenerate x^2 (eps x + zeta y) + P4 with a nonzero cubic part have nu <= 6",
            run: order_three_enumeration,
        },
    ]
}

/// Runs the checks carrying `only` (all when `None`), in suite order.
pub fn run(only: Option<&str>, opts: &VerifyOptions) -> Vec<Outcome> {
    checks()
        .into_iter()
        .filter(|c| only.is_none_or(|t| c.tags.iter().any(|x| x.eq_ignore_ascii_case(t)) || c.id == t))
        .map(|c| {
            let t = Instant::now();
            let r = (c.run)(opts);
            let (passed, detail) = match r {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            Outcome {
                id: c.id,
                tags: c.tags,
                claim: c.claim,
                passed,
                detail,
                elapsed_ms: t.elapsed().as_millis(),
            }
        })
        .collect()
}

fn ring() -> Arc<Ring> {
    Ring::plane(&["a", "b", "s"])
}

fn p(text: &str) -> Poly {
    Poly::parse(&ring(), text).expect("built-in polynomial")
}

fn at(f: &Poly, name: &str, v: i64) -> Poly {
    f.specialize(&[(name, Rational::from_int(v))]).expect("no pole")
}

fn expect<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

fn mu(f: &Poly, m: Method, o: &VerifyOptions) -> Result<Colength, String> {
    milnor_with(f, m, &o.milnor).map(|r| r.value).map_err(|e| e.to_string())
}

fn family_opts(o: &VerifyOptions) -> FamilyOptions {
    FamilyOptions {
        method: Method::StandardBasis,
        milnor: o.milnor,
    }
}

fn x9_milnor(o: &VerifyOptions) -> Result<String, String> {
    let f = p(X9);
    expect("standard basis, a symbolic", mu(&f, Method::StandardBasis, o)?, Colength::Finite(9))?;
    for a in [1, 3] {
        let g = at(&f, "a", a);
        expect(&format!("jets, a = {a}"), mu(&g, Method::Jets, o)?, Colength::Finite(9))?;
        expect(&format!("resultant, a = {a}"), mu(&g, Method::Resultant, o)?, Colength::Finite(9))?;
    }
    Ok("9 by standard basis, jets and resultant".into())
}

fn x9_versal(o: &VerifyOptions) -> Result<String, String> {
    let f = p(X9);
    let r = f.ring().clone();
    let basis: Vec<String> = versal_basis(&f)
        .map_err(|e| e.to_string())?
        .iter()
        .map(|e| r.mono_string(e))
        .collect();
    let want = ["x", "y", "x^2", "x*y", "y^2", "x^3", "x^2*y", "x*y^2", "y^3", "x^2*y^2"];
    expect("versal basis", basis.clone(), want.iter().map(|s| s.to_string()).collect())?;
    let c = milnor_core::local::colength_with(&IdealGens::max_times_jacobian(&f), o.milnor.degree_cap)
        .map_err(|e| e.to_string())?;
    expect("colength of m.J", c, Colength::Finite(11))?;
    Ok(format!("{} monomials; colength 11", basis.len()))
}

fn x9_reduction(o: &VerifyOptions) -> Result<String, String> {
    let f = p(X9);
    let ideal = IdealGens::max_times_jacobian(&f);
    let b = standard_basis_with(
        &ideal,
        BasisOptions {
            degree_cap: o.milnor.degree_cap,
            track_representations: true,
        },
    )
    .map_err(|e| e.to_string())?;
    let cases = [
        ("x^5", "0"),
        ("x^3*y", "0"),
        ("y^5", "0"),
        ("x*y^3", "0"),
        ("x^4", "-a/2*x^2*y^2"),
        ("y^4", "-a/2*x^2*y^2"),
    ];
    for (g, nf) in cases {
        let g = p(g);
        let red = local_reduce(&g, &b, true).map_err(|e| e.to_string())?;
        expect(&format!("normal form of {g}"), red.normal_form.clone(), p(nf))?;
        let gc = red.generator_cofactors.as_ref().ok_or("no cofactors")?;
        if !certificate_holds(&g, ideal.generators(), gc, &red.normal_form, red.bound) {
            return Err(format!("cofactors of {g} do not recombine"));
        }
    }
    Ok("4 members, 2 reductions, all certificates recombine".into())
}

fn coordinate_change(f: &Poly) -> Poly {
    f.substitute(&[Some(p("x - s*y^2")), Some(p("s*y"))])
        .expect("same ring")
}

fn family_check(
    o: &VerifyOptions,
    total: &str,
    base: &str,
    bar: &str,
    mu_base: u32,
    mu_generic: u32,
) -> Result<String, String> {
    let (total, base) = (p(total), p(base));
    let moved = coordinate_change(&total);
    expect("coordinate change", moved.to_text(), p(bar).to_text())?;
    expect("nu after the change", newton_number(&moved).map_err(|e| e.to_string())?, mu_generic)?;
    expect("non-degenerate after the change", nondegenerate(&moved), Ok(true))?;
    expect("mu(base)", mu(&base, Method::StandardBasis, o)?, Colength::Finite(mu_base))?;
    let fo = family_opts(o);
    let fam = make_family_with(&total, &base, "s", &fo).map_err(|e| e.to_string())?;
    expect("generic mu", generic_mu_with(&fam, Mode::Symbolic, &fo), Ok(mu_generic))?;
    expect("sampled generic mu", generic_mu_with(&fam, Mode::Sampled, &fo), Ok(mu_generic))?;
    let jump = family_jump_with(&fam, &fo).map_err(|e| e.to_string())?;
    expect("jump", jump, mu_base - mu_generic)?;
    Ok(format!("mu {mu_base} -> {mu_generic}, jump {jump}"))
}

fn x9_family(o: &VerifyOptions) -> Result<String, String> {
    family_check(o, X9_FAMILY, X9, X9_FAMILY_BAR, 9, 7)
}

fn w10_family(o: &VerifyOptions) -> Result<String, String> {
    family_check(o, W10_FAMILY, W10, W10_FAMILY_BAR, 15, 14)
}

fn suspension(o: &VerifyOptions) -> Result<String, String> {
    let r = Ring::plane(&[]);
    for (text, want) in [
        ("x^4 + y^4 + x^2*y^2", 9),
        ("x^4 + y^4 + 3*x^2*y^2", 9),
        ("x^2 + y^3", 2),
        ("x^3 + y^3", 4),
    ] {
        let f = Poly::parse(&r, text).expect("built-in polynomial");
        let g = suspend(&f, 1).map_err(|e| e.to_string())?;
        expect(&format!("mu({text})"), mu(&f, Method::StandardBasis, o)?, Colength::Finite(want))?;
        expect(&format!("mu({text} + z3^2)"), mu(&g, Method::All, o)?, Colength::Finite(want))?;
    }
    Ok("4 germs".into())
}

fn corpus(o: &VerifyOptions) -> Result<String, String> {
    let mut checked = 0;
    let mut degenerate = 0;
    for f in random_convenient_germs(CORPUS_SEED, CORPUS_SIZE, 6) {
        let m = match mu(&f, Method::All, o)? {
            Colength::Finite(m) => m,
            Colength::Infinite => continue,
        };
        let nu = newton_number(&f).map_err(|e| e.to_string())?;
        let nd = nondegenerate(&f).map_err(|e| e.to_string())?;
        if m < nu {
            return Err(format!("{f}: mu {m} < nu {nu}"));
        }
        if (m == nu) != nd {
            return Err(format!("{f}: mu {m}, nu {nu}, non-degenerate {nd}"));
        }
        let c = colength(&IdealGens::max_times_jacobian(&f)).map_err(|e| e.to_string())?;
        if m > 0 && c != Colength::Finite(m + 2) {
            return Err(format!("{f}: colength(m.J) = {c}, mu = {m}"));
        }
        degenerate += usize::from(!nd);
        checked += 1;
    }
    if checked < 50 {
        return Err(format!("only {checked} isolated germs"));
    }
    Ok(format!("{checked} germs, {degenerate} degenerate"))
}

fn degenerate_boundary(o: &VerifyOptions) -> Result<String, String> {
    let f = at(&p(X9), "a", 2);
    expect("equals (x^2 + y^2)^2", f.clone(), at(&p("(x^2 + y^2)^2"), "a", 2))?;
    expect("non-degenerate", nondegenerate(&f), Ok(false))?;
    expect("mu", mu(&f, Method::All, o)?, Colength::Infinite)?;
    Ok("degenerate, mu = infinity".into())
}

fn grid(ring: &Arc<Ring>, dirs: &[&str], coeffs: &[i64], weights: &[u32], max_active: usize) -> SearchGrid {
    SearchGrid {
        directions: dirs
            .iter()
            .map(|d| parse_direction(ring, d).expect("built-in direction"))
            .collect(),
        coefficients: coeffs.iter().map(|&c| Rational::from_int(c)).collect(),
        weights: weights.to_vec(),
        max_active,
    }
}

/// The documented grid around `x^4 + y^4`.
pub fn x9_grid(ring: &Arc<Ring>) -> SearchGrid {
    grid(ring, &["x^2", "x*y^2"], &[0, 1, 2], &[1, 2], 2)
}

/// The documented grid around `x^4 + y^6`.
pub fn w10_grid(ring: &Arc<Ring>) -> SearchGrid {
    grid(ring, &["x^3", "x^2*y^2", "x*y^4"], &[0, 1, 3], &[1, 2, 3], 3)
}

fn x9_search(o: &VerifyOptions) -> Result<String, String> {
    let r = Ring::plane(&[]);
    let f0 = Poly::parse(&r, "x^4 + y^4").expect("built-in polynomial");
    let out = parallel_search(&f0, &x9_grid(&r), DEFAULT_BUDGET, &family_opts(o), o.workers)
        .map_err(|e| e.to_string())?;
    expect("min nonzero jump", out.min_nonzero_jump, Some(2))?;
    if out.histogram.contains_key(&1) {
        return Err("histogram contains jump 1".into());
    }
    Ok(format!("{} families, histogram {:?}", out.records.len(), out.histogram))
}

fn w10_search(o: &VerifyOptions) -> Result<String, String> {
    let r = Ring::plane(&[]);
    let f0 = Poly::parse(&r, "x^4 + y^6").expect("built-in polynomial");
    let out = parallel_search(&f0, &w10_grid(&r), DEFAULT_BUDGET, &family_opts(o), o.workers)
        .map_err(|e| e.to_string())?;
    expect("min nonzero jump", out.min_nonzero_jump, Some(1))?;
    Ok(format!("{} families, histogram {:?}", out.records.len(), out.histogram))
}

/// `x²(εx + ζy) + P₄` with `(ε, ζ) ≠ (0, 0)` in `{0, 1}²` and `P₄` a quartic
/// with coefficients in `{0, 1}` containing `x⁴` and `y⁴`.
pub fn order_three_germs() -> Vec<Poly> {
    let r = Ring::plane(&[]);
    let mut out = Vec::new();
    for (e, z) in [(1, 0), (0, 1), (1, 1)] {
        for mask in 0..8u32 {
            let mid: Vec<String> = ["x^3*y", "x^2*y^2", "x*y^3"]
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, m)| m.to_string())
                .collect();
            let mut text = format!("x^2*({e}*x + {z}*y) + x^4 + y^4");
            for m in mid {
                text.push_str(" + ");
                text.push_str(&m);
            }
            out.push(Poly::parse(&r, &text).expect("built-in polynomial"));
        }
    }
    out
}

fn order_three_enumeration(_: &VerifyOptions) -> Result<String, String> {
    let mut nondeg = 0;
    let mut max_nu = 0;
    for f in order_three_germs() {
        if nondegenerate(&f).map_err(|e| e.to_string())? {
            let nu = newton_number(&f).map_err(|e| e.to_string())?;
            if nu > 6 {
                return Err(format!("{f}: nu {nu} > 6"));
            }
            nondeg += 1;
            max_nu = max_nu.max(nu);
        }
    }
    if nondeg == 0 {
        return Err("no non-degenerate germ".into());
    }
    Ok(format!("{nondeg} non-degenerate germs, max nu {max_nu}"))
}
