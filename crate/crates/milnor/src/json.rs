//! JSON views of core values.

use milnor_core::local::LocalReduction;
use milnor_core::newton::{FaceVerdict, NewtonPolygon, Segment};
use milnor_core::{Colength, ExpVec, ParamRatio, Poly, Ring};
use serde_json::{json, Value};

pub fn exps(e: &ExpVec, arity: usize) -> Value {
    json!(e.as_slice(arity))
}

pub fn ratio(c: &ParamRatio, ring: &Ring) -> Value {
    Value::String(c.to_string_with(&ring.param_names()))
}

/// `{text, terms: [{exps, coeff}]}` with terms in increasing order.
pub fn poly(p: &Poly) -> Value {
    let ring = p.ring();
    let terms: Vec<Value> = p
        .terms()
        .map(|(e, c)| json!({"exps": exps(e, ring.arity()), "coeff": ratio(c, ring)}))
        .collect();
    json!({"text": p.to_text(), "terms": terms})
}

pub fn colength(c: Colength) -> Value {
    match c {
        Colength::Finite(n) => json!(n),
        Colength::Infinite => json!("infinity"),
    }
}

pub fn monomial(ring: &Ring, e: &ExpVec) -> Value {
    Value::String(ring.mono_string(e))
}

fn ratio_list(cs: &[ParamRatio], ring: &Ring) -> Value {
    Value::Array(cs.iter().map(|c| ratio(c, ring)).collect())
}

pub fn segment(s: &Segment) -> Value {
    let (p, q, d) = s.weights();
    json!({
        "start": [s.start.0, s.start.1],
        "end": [s.end.0, s.end.1],
        "weights": [p, q],
        "degree": d,
        "lattice_length": s.length(),
    })
}

pub fn verdict(v: &FaceVerdict, ring: &Ring) -> Value {
    let c = &v.certificate;
    json!({
        "segment": segment(&c.segment),
        "verdict": v.nondegenerate,
        "certificate": {
            "g": ratio_list(&c.g, ring),
            "gcd": ratio_list(&c.gcd, ring),
            "repeated_factor": c.repeated_factor.as_ref().map(|r| ratio_list(r, ring)),
        },
    })
}

pub fn polygon(p: &NewtonPolygon) -> Value {
    json!({
        "vertices": p.vertices.iter().map(|v| [v.0, v.1]).collect::<Vec<_>>(),
        "segments": p.segments.iter().map(segment).collect::<Vec<_>>(),
        "a": p.x_intercept,
        "b": p.y_intercept,
        "S": p.area.as_ref().map(|s| s.to_string()),
        "convenient": p.is_convenient(),
    })
}

pub fn reduction(r: &LocalReduction, generators: &[Poly], verified: bool) -> Value {
    json!({
        "normal_form": poly(&r.normal_form),
        "member": r.normal_form.is_zero(),
        "bound": r.bound,
        "generators": generators.iter().map(|g| g.to_text()).collect::<Vec<_>>(),
        "cofactors": r
            .generator_cofactors
            .as_ref()
            .map(|cs| cs.iter().map(|c| c.to_text()).collect::<Vec<_>>()),
        "verified": verified,
    })
}
