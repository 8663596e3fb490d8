//! Seeded random plane germs for property checks.

use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::{ParamRatio, Rational};
use crate::poly::{ExpVec, Poly, Ring};

/// Convenient plane germs with support in `[0, size)²`, no constant or
/// linear part, and small integer coefficients.
///
/// About a third are built around a square of a binomial so that the
/// corpus also exercises degenerate faces.
pub fn random_convenient_germs(seed: u64, count: usize, size: u16) -> Vec<Poly> {
    assert!(size >= 3, "box must admit quadratic terms");
    let ring = Ring::plane(&[]);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let nonzero = |rng: &mut ChaCha8Rng| {
        let c: i64 = rng.random_range(1..=3);
        if rng.random_bool(0.5) {
            -c
        } else {
            c
        }
    };
    while out.len() < count {
        let mut f = Poly::zero(&ring);
        let top = size - 1;
        let a = rng.random_range(2..=top);
        let b = rng.random_range(2..=top);
        f.add_term(ExpVec::new(&[a, 0]), &ParamRatio::from_int(nonzero(&mut rng)));
        f.add_term(ExpVec::new(&[0, b]), &ParamRatio::from_int(nonzero(&mut rng)));
        if rng.random_bool(1.0 / 3.0) {
            // add (α x^p + β y^q)²
            let p = rng.random_range(1..=top / 2);
            let q = rng.random_range(1..=top / 2);
            let al = Rational::from_int(nonzero(&mut rng));
            let be = Rational::from_int(nonzero(&mut rng));
            let bin = Poly::from_terms(
                &ring,
                [
                    (ExpVec::new(&[p, 0]), ParamRatio::from_rational(al)),
                    (ExpVec::new(&[0, q]), ParamRatio::from_rational(be)),
                ],
            );
            f = &f + &bin.pow(2);
        }
        let extra = rng.random_range(0..=4);
        for _ in 0..extra {
            let i = rng.random_range(0..size);
            let j = rng.random_range(0..size);
            if i + j < 2 {
                continue;
            }
            f.add_term(ExpVec::new(&[i, j]), &ParamRatio::from_int(nonzero(&mut rng)));
        }
        let pts = f.support();
        let convenient = pts.iter().any(|e| e.0[1] == 0) && pts.iter().any(|e| e.0[0] == 0);
        let in_box = pts.iter().all(|e| e.0[0] < size && e.0[1] < size);
        if convenient && in_box && f.order().is_some_and(|o| o >= 2) {
            out.push(f);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_reproducible_and_convenient() {
        let a = random_convenient_germs(7, 20, 6);
        assert_eq!(a, random_convenient_germs(7, 20, 6));
        for f in &a {
            assert!(crate::newton::newton_polygon(f).unwrap().is_convenient());
            assert!(f.total_degree().unwrap() <= 10);
        }
    }
}
