use alloc::vec;
use alloc::vec::Vec;

use super::*;

fn ring(params: &[&str]) -> Arc<Ring> {
    Ring::plane(params)
}

fn p(r: &Arc<Ring>, text: &str) -> Poly {
    Poly::parse(r, text).unwrap()
}

fn ideal(r: &Arc<Ring>, gens: &[&str]) -> IdealGens {
    IdealGens::new(gens.iter().map(|g| p(r, g)).collect()).unwrap()
}

fn e(a: u16, b: u16) -> ExpVec {
    ExpVec::new(&[a, b])
}

#[test]
fn maximal_ideal_basis() {
    let r = ring(&[]);
    let b = standard_basis(&ideal(&r, &["x", "y"]), 10).unwrap();
    assert_eq!(b.elements, vec![p(&r, "x"), p(&r, "y")]);
    assert_eq!(b.leading_exponents, vec![e(1, 0), e(0, 1)]);
    assert_eq!(b.quotient.colength, 1);
}

#[test]
fn non_isolated_ideal_exceeds_cap() {
    let r = ring(&[]);
    match standard_basis(&ideal(&r, &["x^2", "x*y"]), 12) {
        Err(Error::CapExceeded { cap: 12, partial }) => {
            assert!(partial.contains(&e(0, 12)));
            assert!(!partial.contains(&e(2, 0)));
        }
        other => panic!("{other:?}"),
    }
    assert_eq!(colength(&ideal(&r, &["x^2", "x*y"])), Ok(Colength::Infinite));
}

#[test]
fn x9_jacobian_colength() {
    let r = ring(&["a"]);
    let i = ideal(&r, &["4*x^3 + 2*a*x*y^2", "4*y^3 + 2*a*x^2*y"]);
    let b = standard_basis(&i, 64).unwrap();
    assert_eq!(b.quotient.colength, 9);
}

#[test]
fn colength_examples() {
    let r = ring(&["b"]);
    assert_eq!(colength(&ideal(&r, &["x^2", "y^3"])), Ok(Colength::Finite(6)));
    let f = p(&r, "x^4 + y^6 + b*x^2*y^4");
    assert_eq!(colength(&IdealGens::jacobian(&f)), Ok(Colength::Finite(15)));
    let g = p(&r, "(x^2 + y^2)^2");
    assert_eq!(colength(&IdealGens::jacobian(&g)), Ok(Colength::Infinite));
}

#[test]
fn unit_ideal() {
    let r = ring(&[]);
    let i = ideal(&r, &["1 + x", "y^2"]);
    assert_eq!(colength(&i), Ok(Colength::Finite(0)));
    let b = standard_basis(&i, 8).unwrap();
    let red = local_reduce(&p(&r, "x^3 + 5*y"), &b, true).unwrap();
    assert!(red.normal_form.is_zero());
}

#[test]
fn milnor_examples() {
    let r = ring(&["a", "s"]);
    assert_eq!(milnor(&p(&r, "x^2 + y^2"), Method::All), Ok(Colength::Finite(1)));
    assert_eq!(
        milnor(&p(&r, "x^4 + y^4 + a*x^2*y^2"), Method::All),
        Ok(Colength::Finite(9))
    );
    assert_eq!(milnor(&p(&r, "x + y^2"), Method::All), Ok(Colength::Finite(0)));
    assert_eq!(milnor(&p(&r, "1 + x^2"), Method::All), Err(Error::NonzeroConstant));
    assert_eq!(
        milnor(&p(&r, "(x^2 + y^2)^2"), Method::All),
        Ok(Colength::Infinite)
    );
}

#[test]
fn deformed_x9_has_milnor_number_seven() {
    // f̄_s after the coordinate change, parameters a and s symbolic
    let r = ring(&["a", "s"]);
    let f = p(
        &r,
        "s^2*x^2 + a*s^3*x*y^4 + s^4*y^8 + a*s*x^3 + x^4 - 2*a*s^2*x^2*y^2 \
         - 4*s*x^3*y^2 + 6*s^2*x^2*y^4 - 4*s^3*x*y^6",
    );
    let m = milnor_with(&f, Method::All, &MilnorOptions::default()).unwrap();
    assert_eq!(m.value, Colength::Finite(7));
}

#[test]
fn jet_colength_examples() {
    let r = ring(&[]);
    assert_eq!(jet_colength(&ideal(&r, &["x", "y"]), 5), Ok(1));
    assert_eq!(jet_colength(&ideal(&r, &["x^2", "y^3"]), 8), Ok(6));
    let f = p(&r, "x^4 + y^4 + x^2*y^2");
    assert_eq!(jet_colength(&IdealGens::jacobian(&f), 10), Ok(9));
    assert_eq!(
        jet_colength(&IdealGens::jacobian(&f), 3),
        Err(Error::NotStabilized { cap: 3 })
    );
}

#[test]
fn forced_small_jet_cap_fails() {
    let r = ring(&["a"]);
    let f = p(&r, "x^4 + y^4 + a*x^2*y^2");
    let opts = MilnorOptions {
        jet_cap: 2,
        ..MilnorOptions::default()
    };
    assert_eq!(
        milnor_with(&f, Method::All, &opts),
        Err(Error::NotStabilized { cap: 2 })
    );
}

#[test]
fn versal_bases() {
    let r = ring(&["a"]);
    let f = p(&r, "x^4 + y^4 + a*x^2*y^2");
    let expected = vec![
        e(1, 0),
        e(0, 1),
        e(2, 0),
        e(1, 1),
        e(0, 2),
        e(3, 0),
        e(2, 1),
        e(1, 2),
        e(0, 3),
        e(2, 2),
    ];
    assert_eq!(versal_basis(&f), Ok(expected));
    assert_eq!(versal_basis(&p(&r, "x^2 + y^2")), Ok(vec![e(1, 0), e(0, 1)]));
    assert_eq!(
        versal_basis(&p(&r, "x^3 + y^3")),
        Ok(vec![e(1, 0), e(0, 1), e(2, 0), e(1, 1), e(0, 2)])
    );
    assert_eq!(versal_basis(&p(&r, "x^2")), Err(Error::NonIsolated));
}

#[test]
fn x5_certificate_on_jacobian_generators() {
    let r = ring(&["a"]);
    let f = p(&r, "x^4 + y^4 + a*x^2*y^2");
    let mj = IdealGens::max_times_jacobian(&f);
    let b = standard_basis_with(
        &mj,
        BasisOptions {
            degree_cap: 64,
            track_representations: true,
        },
    )
    .unwrap();
    let g = p(&r, "x^5");
    let red = local_reduce(&g, &b, true).unwrap();
    assert!(red.normal_form.is_zero());
    assert!(certificate_holds(&g, &b.elements, &red.cofactors, &red.normal_form, red.bound));
    let gc = red.generator_cofactors.clone().unwrap();
    assert!(certificate_holds(&g, mj.generators(), &gc, &red.normal_form, red.bound));

    // the cofactors stated for x⁵ recombine exactly
    let grad = f.gradient();
    let c1 = p(&r, "x^2/4 + 2*a*y^2/(4*(a^2 - 4))");
    let c2 = p(&r, "-a^2*x*y/(4*(a^2 - 4))");
    assert_eq!(&(&c1 * &grad[0]) + &(&c2 * &grad[1]), g);
    let d1 = p(&r, "-y/(a^2 - 4)");
    let d2 = p(&r, "a*x/(2*(a^2 - 4))");
    assert_eq!(&(&d1 * &grad[0]) + &(&d2 * &grad[1]), p(&r, "x^3*y"));
}

#[test]
fn x4_reduces_to_balanced_monomial() {
    let r = ring(&["a"]);
    let f = p(&r, "x^4 + y^4 + a*x^2*y^2");
    let b = standard_basis(&IdealGens::max_times_jacobian(&f), 64).unwrap();
    for g in ["x^4", "y^4"] {
        let red = local_reduce(&p(&r, g), &b, true).unwrap();
        assert_eq!(red.normal_form, p(&r, "-a/2*x^2*y^2"));
        assert!(certificate_holds(
            &p(&r, g),
            &b.elements,
            &red.cofactors,
            &red.normal_form,
            red.bound
        ));
    }
}

#[test]
fn three_variables() {
    let r = Ring::new(&["x", "y", "z"], &[] as &[&str]).unwrap();
    let f = p(&r, "x^2 + y^3 + z^4");
    for m in [Method::StandardBasis, Method::Jets, Method::All] {
        assert_eq!(milnor(&f, m), Ok(Colength::Finite(6)));
    }
    assert_eq!(milnor(&f, Method::Resultant), Err(Error::ArityUnsupported { arity: 3 }));
}

#[test]
fn prop2_identity_examples() {
    let r = ring(&[]);
    for (text, mu) in [("x^3 + y^4", 6u32), ("x^2*y + y^5", 6), ("x^5 + y^5", 16)] {
        let f = p(&r, text);
        assert_eq!(milnor(&f, Method::All), Ok(Colength::Finite(mu)));
        assert_eq!(
            colength(&IdealGens::max_times_jacobian(&f)),
            Ok(Colength::Finite(mu + 2))
        );
        let v: Vec<ExpVec> = versal_basis(&f).unwrap();
        assert_eq!(v.len() as u32, mu + 1);
    }
}
