//! Intersection multiplicity of the two partials of a plane germ through
//! the order of a resultant, after a random unimodular linear change.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::lpoly::Coeff;
use crate::error::{Error, Result};
use crate::field::{poly_gcd, Domain, ParamPoly, ParamRatio, PMono, Rational};
use crate::poly::{ExpVec, Poly};
use crate::univariate::UniPoly;

/// Draws allowed per call before giving up on transversality.
const MAX_DRAWS: u32 = 64;

type Matrix = [i64; 4];

/// `i₀(f_x, f_y)` for a plane germ.
///
/// Two distinct coordinate changes that pass the transversality test must
/// give the same order, otherwise the result is `OracleDisagreement`.
pub fn resultant_mu(f: &Poly, seed: u64) -> Result<u32> {
    if f.arity() != 2 {
        return Err(Error::ArityUnsupported { arity: f.arity() });
    }
    let mut fx = f.partial(0);
    let mut fy = f.partial(1);
    if !fx.constant_term().is_zero() || !fy.constant_term().is_zero() {
        return Ok(0);
    }
    if let Some((p, q)) = cancel_unit_factor(&fx, &fy)? {
        fx = p;
        fy = q;
    }
    if f.ring().params().is_empty() {
        orders::<Rational>(&fx, &fy, seed)
    } else {
        orders::<ParamRatio>(&fx, &fy, seed)
    }
}

fn orders<F: Coeff>(fx: &Poly, fy: &Poly, seed: u64) -> Result<u32> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut found: Vec<(Matrix, u32)> = Vec::new();
    for _ in 0..MAX_DRAWS {
        let m = draw_unimodular(&mut rng);
        if found.iter().any(|(n, _)| *n == m) {
            continue;
        }
        let g1 = to_bivariate::<F>(&transform(fx, &m)?);
        let g2 = to_bivariate::<F>(&transform(fy, &m)?);
        if !transversal(&g1, &g2) {
            continue;
        }
        let res = g1.resultant(&g2);
        let Some(ord) = res.low_order() else {
            return Err(Error::NonIsolated);
        };
        found.push((m, ord as u32));
        if found.len() == 2 {
            let (a, b) = (found[0].1, found[1].1);
            if a != b {
                return Err(Error::OracleDisagreement(format!(
                    "resultant orders {a} and {b} under changes {:?} and {:?}",
                    found[0].0, found[1].0
                )));
            }
            return Ok(a);
        }
    }
    Err(Error::NoTransversalChange {
        attempts: MAX_DRAWS,
    })
}

fn draw_unimodular(rng: &mut ChaCha8Rng) -> Matrix {
    loop {
        let m: Matrix = core::array::from_fn(|_| rng.random_range(-3..=3));
        let det = m[0] * m[3] - m[1] * m[2];
        if det == 1 || det == -1 {
            return m;
        }
    }
}

/// `p(a x + b y, c x + d y)`.
fn transform(p: &Poly, m: &Matrix) -> Result<Poly> {
    let ring = p.ring();
    let lin = |u: i64, v: i64| {
        Poly::from_terms(
            ring,
            [
                (ExpVec::new(&[1, 0]), ParamRatio::from_int(u)),
                (ExpVec::new(&[0, 1]), ParamRatio::from_int(v)),
            ],
        )
    };
    p.substitute(&[Some(lin(m[0], m[1])), Some(lin(m[2], m[3]))])
}

/// Polynomial in `x` whose coefficients are polynomials in `y`.
fn to_bivariate<F: Coeff>(p: &Poly) -> UniPoly<UniPoly<F>> {
    let mut rows: BTreeMap<usize, Vec<F>> = BTreeMap::new();
    for (e, c) in p.terms() {
        let (i, j) = (e.get(0) as usize, e.get(1) as usize);
        let row = rows.entry(i).or_default();
        if row.len() <= j {
            row.resize(j + 1, F::zero());
        }
        row[j] = F::from_ratio(c);
    }
    let deg = rows.keys().next_back().map_or(0, |d| d + 1);
    let mut coeffs = alloc::vec![UniPoly::zero(); deg];
    for (i, row) in rows {
        coeffs[i] = UniPoly::new(row);
    }
    UniPoly::new(coeffs)
}

/// One of the polynomials keeps its `x`-degree at `y = 0`, and the two
/// meet the line `y = 0` only at the origin. Then `ord_y Res_x` counts
/// exactly the intersections at the origin.
fn transversal<F: Coeff>(g1: &UniPoly<UniPoly<F>>, g2: &UniPoly<UniPoly<F>>) -> bool {
    let at0 = |g: &UniPoly<UniPoly<F>>| UniPoly::new(g.coeffs().iter().map(|c| c.coeff(0)).collect());
    let keeps_degree = |g: &UniPoly<UniPoly<F>>| !g.lc().coeff(0).is_zero();
    if !keeps_degree(g1) && !keeps_degree(g2) {
        return false;
    }
    let h = at0(g1).gcd(&at0(g2));
    !h.is_zero() && h.coeffs().iter().filter(|c| !c.is_zero()).count() == 1
}

/// When the partials share a factor, divides it out if it is a unit at the
/// origin; a shared factor through the origin is a curve of critical points.
fn cancel_unit_factor(fx: &Poly, fy: &Poly) -> Result<Option<(Poly, Poly)>> {
    let ring = fx.ring();
    let np = ring.params().len();
    let (p, q) = (cleared(fx, np), cleared(fy, np));
    let g = poly_gcd(&p, &q);
    if g.is_zero() {
        return Err(Error::NonIsolated);
    }
    if g.degree_in(np).unwrap_or(0) == 0 && g.degree_in(np + 1).unwrap_or(0) == 0 {
        return Ok(None);
    }
    let unit_at_origin = g
        .terms()
        .iter()
        .any(|(m, _)| m.0[np] == 0 && m.0[np + 1] == 0);
    if !unit_at_origin {
        return Err(Error::NonIsolated);
    }
    let back = |h: &ParamPoly| {
        let mut by_exp: BTreeMap<ExpVec, Vec<(PMono, Rational)>> = BTreeMap::new();
        for (m, c) in h.terms() {
            let e = ExpVec::new(&[m.0[np], m.0[np + 1]]);
            let mut pm = *m;
            pm.0[np] = 0;
            pm.0[np + 1] = 0;
            by_exp.entry(e).or_default().push((pm, c.clone()));
        }
        Poly::from_terms(
            ring,
            by_exp
                .into_iter()
                .map(|(e, t)| (e, ParamRatio::from_poly(ParamPoly::from_terms(t)))),
        )
    };
    let pq = p.div_exact(&g).expect("gcd divides");
    let qq = q.div_exact(&g).expect("gcd divides");
    Ok(Some((back(&pq), back(&qq))))
}

/// The polynomial times a common denominator, as a polynomial in the
/// parameters followed by `x`, `y`.
fn cleared(p: &Poly, np: usize) -> ParamPoly {
    let mut l = ParamPoly::one();
    for (_, c) in p.terms() {
        let d = c.denom();
        if !d.is_one() {
            let g = poly_gcd(&l, d);
            l = l.mul(&d.div_exact(&g).expect("gcd divides"));
        }
    }
    let mut out = ParamPoly::zero();
    for (e, c) in p.terms() {
        let k = c.numer().mul(&l.div_exact(c.denom()).expect("common multiple"));
        let mut m = PMono::ONE;
        m.0[np] = e.get(0);
        m.0[np + 1] = e.get(1);
        out = out.add(&k.mul_term(&m, &Rational::from_int(1)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;

    fn mu(text: &str, params: &[&str]) -> Result<u32> {
        let ring = Ring::plane(params);
        resultant_mu(&Poly::parse(&ring, text).unwrap(), 7)
    }

    #[test]
    fn cusp_and_smooth() {
        assert_eq!(mu("x^2 + y^3", &[]), Ok(2));
        assert_eq!(mu("x + y^2", &[]), Ok(0));
        assert_eq!(mu("x^2 + y^2", &[]), Ok(1));
    }

    #[test]
    fn x9_germs() {
        assert_eq!(mu("x^4 + y^4 + x^2*y^2", &[]), Ok(9));
        assert_eq!(mu("x^4 + y^4 + a*x^2*y^2", &["a"]), Ok(9));
    }

    #[test]
    fn shared_unit_factor_is_removed() {
        // f = g + g^2/2 has gradient (1 + g)·∇g
        assert_eq!(mu("x^2 + y^3 + (x^2 + y^3)^2/2", &[]), Ok(2));
    }

    #[test]
    fn non_isolated() {
        assert_eq!(mu("(x^2 + y^2)^2", &[]), Err(Error::NonIsolated));
        assert_eq!(mu("x^2", &[]), Err(Error::NonIsolated));
        assert_eq!(mu("0", &[]), Err(Error::NonIsolated));
    }

    #[test]
    fn seeds_agree() {
        let ring = Ring::plane(&[]);
        let f = Poly::parse(&ring, "x^3 + x*y^4 + y^7").unwrap();
        let v: Vec<u32> = (0..5).map(|s| resultant_mu(&f, s).unwrap()).collect();
        assert!(v.iter().all(|&m| m == v[0]));
    }
}
