//! Multivariate gcd over ℚ: recursive content/primitive-part split with the
//! subresultant PRS in the main variable.

use alloc::vec::Vec;

use super::{Domain, PMono, ParamPoly, Rational, MAX_SYMBOLS};
use crate::univariate::UniPoly;

/// Monic gcd (leading coefficient 1 in graded-lex order); `gcd(0, 0) = 0`.
pub fn poly_gcd(a: &ParamPoly, b: &ParamPoly) -> ParamPoly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return ParamPoly::one();
    }
    if a == b {
        return a.monic();
    }

    let (ma, mb) = (a.monomial_content(), b.monomial_content());
    let mono = ma.gcd(&mb);
    let a = strip_monomial(a, &ma);
    let b = strip_monomial(b, &mb);
    let mono_poly = ParamPoly::monomial(mono, Rational::one());
    if a.is_constant() || b.is_constant() {
        return mono_poly;
    }
    mono_poly.mul(&gcd_stripped(&a, &b)).monic()
}

/// Gcd of a list of polynomials.
pub fn poly_content_gcd<'a>(polys: impl IntoIterator<Item = &'a ParamPoly>) -> ParamPoly {
    let mut acc = ParamPoly::zero();
    for p in polys {
        acc = poly_gcd(&acc, p);
        if acc.is_one() {
            break;
        }
    }
    acc
}

fn strip_monomial(p: &ParamPoly, m: &PMono) -> ParamPoly {
    if m.is_one() {
        return p.clone();
    }
    p.div_exact(&ParamPoly::monomial(*m, Rational::one()))
        .expect("monomial content divides")
}

fn gcd_stripped(a: &ParamPoly, b: &ParamPoly) -> ParamPoly {
    let (sa, sb) = (a.support_mask(), b.support_mask());
    // A symbol present in only one argument: the gcd divides that
    // argument's content with respect to the symbol.
    for v in 0..MAX_SYMBOLS {
        let bit = 1u32 << v;
        if sa & bit != 0 && sb & bit == 0 {
            return poly_gcd(&content_in(a, v), b);
        }
        if sb & bit != 0 && sa & bit == 0 {
            return poly_gcd(a, &content_in(b, v));
        }
    }
    let common = sa & sb;
    if common.count_ones() == 1 {
        let v = common.trailing_zeros() as usize;
        return univariate_gcd(a, b, v);
    }
    let v = (0..MAX_SYMBOLS)
        .filter(|&v| common & (1 << v) != 0)
        .min_by_key(|&v| {
            (
                a.degree_in(v).unwrap_or(0).max(b.degree_in(v).unwrap_or(0)),
                v,
            )
        })
        .expect("nonconstant arguments share a symbol");

    let ua = UniPoly::new(a.coeffs_in(v));
    let ub = UniPoly::new(b.coeffs_in(v));
    let ca = poly_content_gcd(ua.coeffs());
    let cb = poly_content_gcd(ub.coeffs());
    let pa = ua.div_scalar(&ca).expect("content divides");
    let pb = ub.div_scalar(&cb).expect("content divides");
    let c = poly_gcd(&ca, &cb);
    let g = pa.subresultant_gcd(&pb);
    let gc = poly_content_gcd(g.coeffs());
    let g = g.div_scalar(&gc).expect("content divides");
    c.mul(&ParamPoly::from_coeffs_in(v, g.coeffs())).monic()
}

fn content_in(p: &ParamPoly, v: usize) -> ParamPoly {
    poly_content_gcd(p.coeffs_in(v).iter())
}

fn univariate_gcd(a: &ParamPoly, b: &ParamPoly, v: usize) -> ParamPoly {
    let to_q = |p: &ParamPoly| -> UniPoly<Rational> {
        UniPoly::new(
            p.coeffs_in(v)
                .iter()
                .map(|c| c.as_constant().expect("univariate"))
                .collect(),
        )
    };
    let g = to_q(a).gcd(&to_q(b));
    let coeffs: Vec<ParamPoly> = g
        .coeffs()
        .iter()
        .map(|c| ParamPoly::constant(c.clone()))
        .collect();
    ParamPoly::from_coeffs_in(v, &coeffs).monic()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(i: usize) -> ParamPoly {
        ParamPoly::var(i)
    }

    fn c(k: i64) -> ParamPoly {
        ParamPoly::constant(Rational::from_int(k))
    }

    #[test]
    fn bivariate_common_factor() {
        let (a, s) = (v(0), v(1));
        let f = a.mul(&s).add(&c(1));
        let p = f.mul(&a.sub(&s)).mul(&s.pow(2));
        let q = f.mul(&a.add(&c(3))).mul(&s);
        let g = poly_gcd(&p, &q);
        assert_eq!(g, f.mul(&s).monic());
    }

    #[test]
    fn coprime_is_one() {
        let (a, b) = (v(0), v(1));
        let p = a.pow(2).add(&b.pow(2)).add(&c(1));
        let q = a.sub(&b);
        assert!(poly_gcd(&p, &q).is_one());
    }

    #[test]
    fn trivariate() {
        let (a, b, s) = (v(0), v(1), v(2));
        let f = a.mul(&b).sub(&s.pow(2)).add(&c(2));
        let g1 = a.add(&b).add(&s);
        let h = b.pow(3).sub(&a.mul(&s));
        let p = f.mul(&g1).mul(&g1);
        let q = f.mul(&h).mul(&g1);
        assert_eq!(poly_gcd(&p, &q), f.mul(&g1).monic());
    }

    #[test]
    fn content_only_in_one_argument() {
        let (a, s) = (v(0), v(1));
        // p = (a - 1) s^2 + (a - 1) s, q = a^2 - 1
        let p = a.sub(&c(1)).mul(&s.pow(2).add(&s));
        let q = a.pow(2).sub(&c(1));
        assert_eq!(poly_gcd(&p, &q), a.sub(&c(1)));
    }
}
