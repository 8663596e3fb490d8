use std::sync::Arc;

use milnor_core::deform::{family_jump, generic_mu, make_family, suspend, Mode};
use milnor_core::newton::{newton_number, nondegenerate};
use milnor_core::search::{parse_direction, search_min_jump, SearchGrid};
use milnor_core::{milnor, Colength, Method, Poly, Rational, Ring};

const X9_TOTAL: &str = "x^4 + (y^2 + s*x)^2 + a*x^2*(y^2 + s*x)";
const X9_BAR: &str = "s^2*x^2 + a*s^3*x*y^4 + s^4*y^8 + a*s*x^3 + x^4 - 2*a*s^2*x^2*y^2 \
                      - 4*s*x^3*y^2 + 6*s^2*x^2*y^4 - 4*s^3*x*y^6";
const W10_TOTAL: &str = "x^4 + (y^2 + s*x)^3 + b*x^2*y^4";
const W10_BAR: &str = "s^3*x^3 + (s^4 + b*s^6)*y^8 + x^4 - 4*s*x^3*y^2 \
                       + (6*s^2 + b*s^4)*x^2*y^4 - (4*s^3 + 2*b*s^5)*x*y^6";

fn ring() -> Arc<Ring> {
    Ring::plane(&["a", "b", "s"])
}

fn p(text: &str) -> Poly {
    Poly::parse(&ring(), text).unwrap()
}

fn change_of_coordinates(f: &Poly) -> Poly {
    f.substitute(&[Some(p("x - s*y^2")), Some(p("s*y"))]).unwrap()
}

#[test]
fn x9_coordinate_change_matches_stated_form() {
    let bar = change_of_coordinates(&p(X9_TOTAL));
    assert_eq!(bar, p(X9_BAR));
    assert_eq!(newton_number(&bar), Ok(7));
    assert_eq!(nondegenerate(&bar), Ok(true));
    assert_eq!(milnor(&bar, Method::All), Ok(Colength::Finite(7)));
}

#[test]
fn w10_coordinate_change_matches_stated_form() {
    let bar = change_of_coordinates(&p(W10_TOTAL));
    assert_eq!(bar, p(W10_BAR));
    assert_eq!(newton_number(&bar), Ok(14));
    assert_eq!(nondegenerate(&bar), Ok(true));
    assert_eq!(milnor(&bar, Method::StandardBasis), Ok(Colength::Finite(14)));
}

#[test]
fn generic_mu_is_invariant_under_the_coordinate_change() {
    for (total, base, mu) in [
        (X9_TOTAL, "x^4 + y^4 + a*x^2*y^2", 7),
        (W10_TOTAL, "x^4 + y^6 + b*x^2*y^4", 14),
    ] {
        let f = p(total);
        let moved = change_of_coordinates(&f);
        let direct = make_family(&f, &p(base), "s").unwrap();
        assert_eq!(generic_mu(&direct, Mode::Symbolic), Ok(mu));
        assert_eq!(generic_mu(&direct, Mode::Sampled), Ok(mu));
        // the change degenerates at s = 0, so compare generic fibres only
        assert_eq!(milnor(&moved, Method::StandardBasis), Ok(Colength::Finite(mu)));
    }
}

#[test]
fn paper_family_jumps() {
    let x9 = make_family(&p(X9_TOTAL), &p("x^4 + y^4 + a*x^2*y^2"), "s").unwrap();
    assert_eq!(family_jump(&x9), Ok(2));
    let w10 = make_family(&p(W10_TOTAL), &p("x^4 + y^6 + b*x^2*y^4"), "s").unwrap();
    assert_eq!(milnor(&w10.base, Method::All), Ok(Colength::Finite(15)));
    assert_eq!(family_jump(&w10), Ok(1));
}

#[test]
fn families_at_specific_parameter_values() {
    for a in [0i64, 1, 3, -5] {
        let total = p(X9_TOTAL)
            .specialize(&[("a", Rational::from_int(a))])
            .unwrap();
        let base = p("x^4 + y^4 + a*x^2*y^2")
            .specialize(&[("a", Rational::from_int(a))])
            .unwrap();
        let fam = make_family(&total, &base, "s").unwrap();
        assert_eq!(family_jump(&fam), Ok(2), "a = {a}");
    }
}

#[test]
fn suspension_preserves_paper_milnor_numbers() {
    let r = Ring::plane(&[]);
    for (text, mu) in [
        ("x^4 + y^4 + x^2*y^2", 9),
        ("x^4 + y^4 + 3*x^2*y^2", 9),
        ("x^2 + y^3", 2),
        ("x^3 + y^3", 4),
    ] {
        let f = Poly::parse(&r, text).unwrap();
        for k in 1..=2 {
            let g = suspend(&f, k).unwrap();
            assert_eq!(milnor(&g, Method::StandardBasis), Ok(Colength::Finite(mu)), "{text} k={k}");
        }
    }
}

#[test]
fn w10_grid_finds_jump_one() {
    let r = Ring::plane(&[]);
    let f0 = Poly::parse(&r, "x^4 + y^6").unwrap();
    let grid = SearchGrid {
        directions: ["x^3", "x^2*y^2", "x*y^4"]
            .iter()
            .map(|d| parse_direction(&r, d).unwrap())
            .collect(),
        coefficients: [0, 1, 3].iter().map(|&c| Rational::from_int(c)).collect(),
        weights: vec![1, 2, 3],
        max_active: 3,
    };
    let out = search_min_jump(&f0, &grid).unwrap();
    assert_eq!(out.mu_base, 15);
    assert_eq!(out.min_nonzero_jump, Some(1));
    assert_eq!(out.records.len(), 343);
    for r in &out.records {
        assert!(r.jump.is_none_or(|j| j <= 15));
    }
}
