use std::sync::Arc;

use milnor_core::newton::{
    face_poly, newton_number, newton_polygon, nondegenerate, nondegenerate_on, support_points,
};
use milnor_core::univariate::UniPoly;
use milnor_core::{
    milnor, resultant_mu, Colength, Domain, ExpVec, Field, Method, ParamPoly, ParamRatio, Poly,
    Rational, Ring,
};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=9).prop_map(|(n, d)| Rational::frac(n, d))
}

fn param_poly() -> impl Strategy<Value = ParamPoly> {
    prop::collection::vec((0usize..2, 0u32..3, -4i64..=4), 0..4).prop_map(|terms| {
        let mut p = ParamPoly::zero();
        for (i, k, c) in terms {
            let t = ParamPoly::var(i);
            let mut m = ParamPoly::constant(Rational::from_int(c));
            for _ in 0..k {
                m = m.mul(&t);
            }
            p = p.add(&m);
        }
        p
    })
}

fn param_ratio() -> impl Strategy<Value = ParamRatio> {
    (param_poly(), param_poly()).prop_filter_map("zero denominator", |(n, d)| {
        ParamRatio::new(n, d.add(&ParamPoly::one()))
    })
}

fn ring() -> Arc<Ring> {
    Ring::plane(&["a"])
}

/// Polynomials in x, y over ℚ(a) with small support.
fn poly(max_exp: u16) -> impl Strategy<Value = Poly> {
    prop::collection::vec((0..=max_exp, 0..=max_exp, -5i64..=5, 0u32..2), 0..6).prop_map(
        |terms| {
            let r = ring();
            let a = ParamRatio::symbol(0);
            Poly::from_terms(
                &r,
                terms.into_iter().map(|(i, j, c, k)| {
                    (
                        ExpVec::new(&[i, j]),
                        ParamRatio::from_int(c).mul(&a.pow(k)),
                    )
                }),
            )
        },
    )
}

/// Convenient rational germs of order at least two with support in a box.
fn convenient_germ() -> impl Strategy<Value = Poly> {
    (
        2u16..=6,
        2u16..=6,
        prop::collection::vec((0u16..6, 0u16..6, -3i64..=3), 0..5),
    )
        .prop_map(|(a, b, extra)| {
            let r = Ring::plane(&[]);
            let mut f = Poly::zero(&r);
            f.add_term(ExpVec::new(&[a, 0]), &ParamRatio::from_int(1));
            f.add_term(ExpVec::new(&[0, b]), &ParamRatio::from_int(1));
            for (i, j, c) in extra {
                if i + j >= 2 && j > 0 && i > 0 {
                    f.add_term(ExpVec::new(&[i, j]), &ParamRatio::from_int(c));
                }
            }
            f
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_field_axioms(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        if !a.is_zero() {
            prop_assert!(a.mul(&a.inv().unwrap()).is_one());
            prop_assert!(Rational::from_int(1).div(&a).unwrap().mul(&a).is_one());
        }
    }

    #[test]
    fn param_ratio_field_axioms(a in param_ratio(), b in param_ratio(), c in param_ratio()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.add(&b).sub(&b), a.clone());
        if !a.is_zero() {
            prop_assert!(a.mul(&a.inv().unwrap()).is_one());
            prop_assert_eq!(b.div(&a).unwrap().mul(&a), b);
        }
    }

    #[test]
    fn canonical_form_is_idempotent(a in param_ratio()) {
        let again = ParamRatio::new(a.numer().clone(), a.denom().clone()).unwrap();
        prop_assert_eq!(again, a);
    }

    #[test]
    fn specialization_is_a_homomorphism(p in poly(3), q in poly(3), v in -6i64..=6) {
        let at = [("a", Rational::from_int(v))];
        let s = |f: &Poly| f.specialize(&at).unwrap();
        prop_assert_eq!(s(&(&p * &q)), &s(&p) * &s(&q));
        prop_assert_eq!(s(&(&p + &q)), &s(&p) + &s(&q));
    }

    #[test]
    fn text_round_trip(p in poly(4)) {
        prop_assert_eq!(Poly::parse(&ring(), &p.to_text()).unwrap(), p);
    }

    #[test]
    fn leibniz_rule(p in poly(3), q in poly(3), var in 0usize..2) {
        let lhs = (&p * &q).partial(var);
        let rhs = &(&p.partial(var) * &q) + &(&p * &q.partial(var));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn substitution_is_a_homomorphism(p in poly(2), q in poly(2), u in poly(2), w in poly(2)) {
        let images = [Some(u), Some(w)];
        let s = |f: &Poly| f.substitute(&images).unwrap();
        prop_assert_eq!(s(&(&p * &q)), &s(&p) * &s(&q));
        prop_assert_eq!(s(&(&p - &q)), &s(&p) - &s(&q));
    }

    #[test]
    fn order_is_additive(p in poly(4), q in poly(4)) {
        prop_assume!(!p.is_zero() && !q.is_zero());
        prop_assert_eq!((&p * &q).order(), Some(p.order().unwrap() + q.order().unwrap()));
    }

    #[test]
    fn face_polynomials_satisfy_euler(f in convenient_germ()) {
        let poly = newton_polygon(&f).unwrap();
        for seg in &poly.segments {
            let face = face_poly(&f, seg).unwrap();
            let (p, q, d) = seg.weights();
            let r = face.ring().clone();
            let euler = &(&Poly::var(&r, 0) * &face.partial(0))
                .scale(&ParamRatio::from_int(p as i64))
                + &(&Poly::var(&r, 1) * &face.partial(1)).scale(&ParamRatio::from_int(q as i64));
            prop_assert_eq!(euler, face.scale(&ParamRatio::from_int(d as i64)));
        }
    }

    #[test]
    fn newton_number_is_symmetric_and_monotone(f in convenient_germ(), i in 0u16..6, j in 0u16..6) {
        let r = f.ring().clone();
        let swapped = f.substitute(&[Some(Poly::var(&r, 1)), Some(Poly::var(&r, 0))]).unwrap();
        let nu = newton_number(&f).unwrap();
        prop_assert_eq!(newton_number(&swapped).unwrap(), nu);
        prop_assume!(i + j >= 2 && f.coeff(&ExpVec::new(&[i, j])).is_zero());
        let mut g = f.clone();
        g.add_term(ExpVec::new(&[i, j]), &ParamRatio::from_int(1));
        prop_assert!(newton_number(&g).unwrap() <= nu);
    }
}

/// Whether the partials of a face polynomial share a root in the torus,
/// by eliminating x from `∂ₓf(x, 1)` and `∂ᵧf(x, 1)` with a resultant.
fn partials_meet_in_torus(face: &Poly) -> bool {
    let at_y1 = |g: &Poly| {
        let deg = g.terms().map(|(e, _)| e.get(0) as usize).max().unwrap_or(0);
        let mut c = vec![Rational::from_int(0); deg + 1];
        for (e, v) in g.terms() {
            let k = e.get(0) as usize;
            c[k] = c[k].add(&v.as_rational().unwrap());
        }
        UniPoly::new(c).strip_low()
    };
    let (p, q) = (at_y1(&face.partial(0)), at_y1(&face.partial(1)));
    if p.is_zero() || q.is_zero() {
        // one partial vanishes identically: any torus root of the other
        let other = if p.is_zero() { q } else { p };
        return other.is_zero() || other.degree().unwrap() > 0;
    }
    p.resultant(&q).is_zero()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn face_verdicts_agree_with_elimination(f in convenient_germ()) {
        for seg in &newton_polygon(&f).unwrap().segments {
            let face = face_poly(&f, seg).unwrap();
            prop_assume!(face.total_degree().unwrap() <= 6);
            let v = nondegenerate_on(&f, seg).unwrap();
            prop_assert_eq!(v.nondegenerate, !partials_meet_in_torus(&face), "{}", face);
        }
    }

    #[test]
    fn hull_is_sound(f in convenient_germ()) {
        let poly = newton_polygon(&f).unwrap();
        let pts = support_points(&f);
        for seg in &poly.segments {
            let (p, q, d) = seg.weights();
            for &(i, j) in &pts {
                prop_assert!(p * i + q * j >= d);
            }
        }
        for v in &poly.vertices {
            prop_assert!(pts.contains(v));
        }
    }

    #[test]
    fn terms_above_the_polygon_do_not_change_nu(f in convenient_germ(), i in 0u16..8, j in 0u16..8) {
        let poly = newton_polygon(&f).unwrap();
        let above = poly.segments.iter().all(|s| {
            let (p, q, d) = s.weights();
            p * i as u32 + q * j as u32 > d
        }) && poly.x_intercept.is_some_and(|a| i as u32 >= a || j > 0)
            && poly.y_intercept.is_some_and(|b| j as u32 >= b || i > 0);
        prop_assume!(above);
        let mut g = f.clone();
        g.add_term(ExpVec::new(&[i, j]), &ParamRatio::from_int(7));
        prop_assert_eq!(newton_number(&g), newton_number(&f));
    }

    #[test]
    fn nondegeneracy_agrees_with_resultant_oracle(f in convenient_germ()) {
        let nu = newton_number(&f).unwrap();
        match resultant_mu(&f, 5) {
            Ok(mu) => {
                prop_assert!(mu >= nu);
                prop_assert_eq!(mu == nu, nondegenerate(&f).unwrap());
            }
            Err(milnor_core::Error::NonIsolated) => {
                prop_assert!(!nondegenerate(&f).unwrap());
                prop_assert_eq!(milnor(&f, Method::StandardBasis), Ok(Colength::Infinite));
            }
            Err(e) => prop_assert!(false, "{e}"),
        }
    }
}
