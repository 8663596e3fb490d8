//! Newton polygons of plane germs, the Newton number and Kouchnirenko
//! non-degeneracy.

use alloc::vec::Vec;

use num_integer::Integer;

use crate::error::{Axis, Error, Result};
use crate::field::{Domain, ParamRatio, Rational};
use crate::poly::{ExpVec, Poly};
use crate::univariate::UniPoly;

/// A lattice point `(i, j)` standing for the monomial `x^i y^j`.
pub type Point = (u32, u32);

/// A compact face of the Newton polygon, from `start` (upper left) to
/// `end` (lower right).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Segment {
    pub start: Point,
    pub end: Point,
    /// Primitive step `(dx, dy)`: moving along the segment adds `dx` to `i`
    /// and subtracts `dy` from `j`.
    pub step: (u32, u32),
}

impl Segment {
    fn new(start: Point, end: Point) -> Self {
        let (w, h) = (end.0 - start.0, start.1 - end.1);
        let g = w.gcd(&h);
        Segment {
            start,
            end,
            step: (w / g, h / g),
        }
    }

    /// Weights `(p, q)` and degree `d` with `p·i + q·j = d` on the segment.
    pub fn weights(&self) -> (u32, u32, u32) {
        let (dx, dy) = self.step;
        (dy, dx, dy * self.start.0 + dx * self.start.1)
    }

    /// Number of primitive steps from `start` to `end`.
    pub fn length(&self) -> u32 {
        (self.end.0 - self.start.0) / self.step.0
    }

    fn weighted_degree(&self, e: Point) -> u32 {
        let (p, q, _) = self.weights();
        p * e.0 + q * e.1
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPolygon {
    /// Increasing `i`, decreasing `j`.
    pub vertices: Vec<Point>,
    pub segments: Vec<Segment>,
    /// `a`: the vertex on the `i` axis, if any.
    pub x_intercept: Option<u32>,
    /// `b`: the vertex on the `j` axis, if any.
    pub y_intercept: Option<u32>,
    /// Area between the axes and the polygon, when convenient.
    pub area: Option<Rational>,
}

impl NewtonPolygon {
    pub fn is_convenient(&self) -> bool {
        self.x_intercept.is_some() && self.y_intercept.is_some()
    }

    pub fn has_segment(&self, s: &Segment) -> bool {
        self.segments.contains(s)
    }
}

fn check_plane(f: &Poly) -> Result<()> {
    if f.arity() != 2 {
        return Err(Error::ArityUnsupported { arity: f.arity() });
    }
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(())
}

pub fn support_points(f: &Poly) -> Vec<Point> {
    f.support()
        .iter()
        .map(|e| (e.get(0) as u32, e.get(1) as u32))
        .collect()
}

fn cross(o: Point, a: Point, b: Point) -> i64 {
    let (ox, oy) = (o.0 as i64, o.1 as i64);
    (a.0 as i64 - ox) * (b.1 as i64 - oy) - (a.1 as i64 - oy) * (b.0 as i64 - ox)
}

/// Vertices of the boundary of `conv(points + ℝ₊²)`.
pub fn lower_hull(points: &[Point]) -> Vec<Point> {
    if points.is_empty() {
        return Vec::new();
    }
    // lowest point in each column
    let mut cols: Vec<Point> = Vec::new();
    let mut sorted = points.to_vec();
    sorted.sort();
    for p in sorted {
        match cols.last() {
            Some(q) if q.0 == p.0 => {}
            _ => cols.push(p),
        }
    }
    let ymin = cols.iter().map(|p| p.1).min().expect("nonempty");
    let last = cols.iter().position(|p| p.1 == ymin).expect("attained");
    let mut hull: Vec<Point> = Vec::new();
    for &p in &cols[..=last] {
        if hull.last().is_some_and(|h| h.1 <= p.1) {
            continue;
        }
        while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
            hull.pop();
        }
        hull.push(p);
    }
    hull
}

pub fn newton_polygon(f: &Poly) -> Result<NewtonPolygon> {
    check_plane(f)?;
    Ok(polygon_of(&support_points(f)))
}

/// Newton polygon of a nonempty lattice point set.
pub fn polygon_of(points: &[Point]) -> NewtonPolygon {
    let vertices = lower_hull(points);
    let segments: Vec<Segment> = vertices.windows(2).map(|w| Segment::new(w[0], w[1])).collect();
    let y_intercept = vertices.first().filter(|v| v.0 == 0).map(|v| v.1);
    let x_intercept = vertices.last().filter(|v| v.1 == 0).map(|v| v.0);
    let area = (x_intercept.is_some() && y_intercept.is_some()).then(|| {
        let twice: u64 = vertices
            .windows(2)
            .map(|w| (w[1].0 - w[0].0) as u64 * (w[0].1 + w[1].1) as u64)
            .sum();
        Rational::frac(twice as i64, 2)
    });
    NewtonPolygon {
        vertices,
        segments,
        x_intercept,
        y_intercept,
        area,
    }
}

/// `ν(f) = 2S − a − b + 1` for a convenient germ.
pub fn newton_number(f: &Poly) -> Result<u32> {
    let poly = newton_polygon(f)?;
    newton_number_of(&poly)
}

pub fn newton_number_of(poly: &NewtonPolygon) -> Result<u32> {
    let b = poly.y_intercept.ok_or(Error::NotConvenient { missing: Axis::Y })?;
    let a = poly.x_intercept.ok_or(Error::NotConvenient { missing: Axis::X })?;
    let twice_s = (poly.area.as_ref().expect("convenient") * &Rational::from_int(2))
        .to_i64()
        .expect("lattice area");
    Ok((twice_s - a as i64 - b as i64 + 1).max(0) as u32)
}

/// `f + x^n + y^n`, which is convenient.
pub fn make_convenient(f: &Poly, n: u16) -> Poly {
    let one = ParamRatio::from_int(1);
    let mut g = f.clone();
    g.add_term(ExpVec::new(&[n, 0]), &one);
    g.add_term(ExpVec::new(&[0, n]), &one);
    g
}

/// Terms of `f` whose exponents lie on `seg`.
pub fn face_poly(f: &Poly, seg: &Segment) -> Result<Poly> {
    let poly = newton_polygon(f)?;
    if !poly.has_segment(seg) {
        return Err(Error::SegmentMismatch);
    }
    let d = seg.weights().2;
    Ok(Poly::from_terms(
        f.ring(),
        f.terms()
            .filter(|(e, _)| seg.weighted_degree((e.get(0) as u32, e.get(1) as u32)) == d)
            .map(|(e, c)| (*e, c.clone())),
    ))
}

/// Evidence for a non-degeneracy verdict on one segment.
///
/// The face polynomial is `x^i₀ y^j₀ · g(t)` with `(i₀, j₀)` the segment
/// start and `t` the smallest monomial ratio stepping between its support
/// points; `g` is listed by increasing power of `t`.
#[derive(Debug, Clone, PartialEq)]
pub struct FaceCertificate {
    pub segment: Segment,
    pub g: Vec<ParamRatio>,
    /// Monic `gcd(g, g')`; constant exactly when the verdict is true.
    pub gcd: Vec<ParamRatio>,
    /// When degenerate, the squarefree part of the gcd: its square
    /// divides `g`.
    pub repeated_factor: Option<Vec<ParamRatio>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FaceVerdict {
    pub nondegenerate: bool,
    pub certificate: FaceCertificate,
}

pub fn nondegenerate_on(f: &Poly, seg: &Segment) -> Result<FaceVerdict> {
    let face = face_poly(f, seg)?;
    Ok(verdict_on(&face, seg))
}

fn verdict_on(face: &Poly, seg: &Segment) -> FaceVerdict {
    let steps: Vec<(u32, &ParamRatio)> = face
        .terms()
        .map(|(e, c)| ((e.get(0) as u32 - seg.start.0) / seg.step.0, c))
        .collect();
    let stride = steps.iter().fold(0u32, |g, (k, _)| g.gcd(k)).max(1);
    let n = (seg.length() / stride) as usize;
    let mut coeffs = alloc::vec![ParamRatio::zero(); n + 1];
    for (k, c) in steps {
        coeffs[(k / stride) as usize] = c.clone();
    }
    let g = UniPoly::new(coeffs).strip_low();
    let h = g.gcd(&g.derivative());
    let nondegenerate = h.degree() == Some(0);
    let repeated_factor = (!nondegenerate).then(|| h.squarefree_part().into_coeffs());
    FaceVerdict {
        nondegenerate,
        certificate: FaceCertificate {
            segment: *seg,
            g: g.into_coeffs(),
            gcd: h.into_coeffs(),
            repeated_factor,
        },
    }
}

/// Verdicts on every segment of the polygon.
pub fn face_verdicts(f: &Poly) -> Result<Vec<FaceVerdict>> {
    let poly = newton_polygon(f)?;
    poly.segments
        .iter()
        .map(|s| {
            let d = s.weights().2;
            let face = Poly::from_terms(
                f.ring(),
                f.terms()
                    .filter(|(e, _)| s.weighted_degree((e.get(0) as u32, e.get(1) as u32)) == d)
                    .map(|(e, c)| (*e, c.clone())),
            );
            Ok(verdict_on(&face, s))
        })
        .collect()
}

/// Kouchnirenko non-degenerate on every segment.
pub fn nondegenerate(f: &Poly) -> Result<bool> {
    Ok(face_verdicts(f)?.iter().all(|v| v.nondegenerate))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;
    use alloc::sync::Arc;
    use alloc::vec;

    fn ring() -> Arc<Ring> {
        Ring::plane(&["a", "s", "b"])
    }

    fn p(text: &str) -> Poly {
        Poly::parse(&ring(), text).unwrap()
    }

    const FBAR_S: &str = "s^2*x^2 + a*s^3*x*y^4 + s^4*y^8 + a*s*x^3 + x^4 - 2*a*s^2*x^2*y^2 \
                          - 4*s*x^3*y^2 + 6*s^2*x^2*y^4 - 4*s^3*x*y^6";

    const FBAR_W10: &str = "s^3*x^3 + (s^4 + b*s^6)*y^8 + x^4 - 4*s*x^3*y^2 \
                            + (6*s^2 + b*s^4)*x^2*y^4 - (4*s^3 + 2*b*s^5)*x*y^6";

    #[test]
    fn x9_polygon() {
        let poly = newton_polygon(&p("x^4 + y^4 + a*x^2*y^2")).unwrap();
        assert_eq!(poly.vertices, vec![(0, 4), (4, 0)]);
        assert_eq!(poly.segments.len(), 1);
        assert_eq!((poly.x_intercept, poly.y_intercept), (Some(4), Some(4)));
        assert_eq!(poly.area, Some(Rational::from_int(8)));
        assert_eq!(newton_number(&p("x^4 + y^4 + a*x^2*y^2")), Ok(9));
    }

    #[test]
    fn deformed_polygon() {
        let f = p(FBAR_S);
        let poly = newton_polygon(&f).unwrap();
        assert_eq!(poly.vertices, vec![(0, 8), (2, 0)]);
        assert_eq!(poly.area, Some(Rational::from_int(8)));
        assert_eq!(newton_number(&f), Ok(7));
        let face = face_poly(&f, &poly.segments[0]).unwrap();
        assert_eq!(face, p("s^2*x^2 + a*s^3*x*y^4 + s^4*y^8"));
        assert!(nondegenerate(&f).unwrap());
    }

    #[test]
    fn w10_face() {
        let f = p(FBAR_W10);
        let poly = newton_polygon(&f).unwrap();
        assert_eq!(poly.vertices, vec![(0, 8), (3, 0)]);
        assert_eq!(poly.area, Some(Rational::from_int(12)));
        assert_eq!(newton_number(&f), Ok(14));
        let face = face_poly(&f, &poly.segments[0]).unwrap();
        assert_eq!(face, p("s^3*x^3 + (s^4 + b*s^6)*y^8"));
        assert!(nondegenerate(&f).unwrap());
        assert_eq!(newton_number(&p("x^4 + y^6 + b*x^2*y^4")), Ok(15));
    }

    #[test]
    fn not_convenient() {
        let poly = newton_polygon(&p("x^3")).unwrap();
        assert_eq!(poly.vertices, vec![(3, 0)]);
        assert_eq!(poly.y_intercept, None);
        assert_eq!(newton_number(&p("x^3")), Err(Error::NotConvenient { missing: Axis::Y }));
        assert_eq!(newton_number(&p("y^2 + x*y")), Err(Error::NotConvenient { missing: Axis::X }));
        assert_eq!(newton_number(&make_convenient(&p("x^3"), 5)), Ok(8));
    }

    #[test]
    fn errors() {
        assert_eq!(newton_polygon(&p("0")), Err(Error::ZeroPolynomial));
        let r3 = Ring::new(&["x", "y", "z"], &[] as &[&str]).unwrap();
        let f = Poly::parse(&r3, "x^2 + y^2 + z^2").unwrap();
        assert_eq!(newton_polygon(&f), Err(Error::ArityUnsupported { arity: 3 }));
        let other = Segment::new((0, 3), (3, 0));
        assert_eq!(face_poly(&p("x^4 + y^4"), &other), Err(Error::SegmentMismatch));
    }

    #[test]
    fn degeneracy() {
        let f = p("x^4 + y^4 + a*x^2*y^2");
        let seg = newton_polygon(&f).unwrap().segments[0];
        let v = nondegenerate_on(&f, &seg).unwrap();
        assert!(v.nondegenerate);
        assert_eq!(v.certificate.g.len(), 3);

        let sq = p("x^4 + y^4 + 2*x^2*y^2");
        let v = nondegenerate_on(&sq, &seg).unwrap();
        assert!(!v.nondegenerate);
        // g = (1 + t)^2, gcd = 1 + t
        assert_eq!(v.certificate.gcd, vec![ParamRatio::from_int(1), ParamRatio::from_int(1)]);
        assert!(v.certificate.repeated_factor.is_some());

        assert!(nondegenerate(&p("x^4 + y^6 + b*x^2*y^4")).unwrap());
        assert!(nondegenerate(&p("x^2 + y^3")).unwrap());
    }

    #[test]
    fn weights_and_length() {
        let s = Segment::new((0, 8), (2, 0));
        assert_eq!(s.step, (1, 4));
        assert_eq!(s.weights(), (4, 1, 8));
        assert_eq!(s.length(), 2);
    }
}
