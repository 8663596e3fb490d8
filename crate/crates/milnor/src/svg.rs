//! SVG drawing of a Newton polygon.

use std::fmt::Write;

use milnor_core::newton::{NewtonPolygon, Point};

const CELL: u32 = 40;
const MARGIN: u32 = 40;

/// Standalone SVG 1.1 document: lattice grid, support points, shaded
/// Newton diagram and the polygon itself.
pub fn polygon_svg(poly: &NewtonPolygon, support: &[Point]) -> String {
    let extent = support
        .iter()
        .flat_map(|p| [p.0, p.1])
        .chain(poly.vertices.iter().flat_map(|p| [p.0, p.1]))
        .max()
        .unwrap_or(0)
        + 1;
    let side = 2 * MARGIN + extent * CELL;
    let px = |i: u32| MARGIN + i * CELL;
    let py = |j: u32| side - MARGIN - j * CELL;
    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{side}" height="{side}" viewBox="0 0 {side} {side}">"#
    );
    let _ = writeln!(s, r#"<rect width="{side}" height="{side}" fill="white"/>"#);
    let _ = writeln!(s, r##"<g stroke="#dddddd" stroke-width="1">"##);
    for k in 0..=extent {
        let _ = writeln!(s, r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#, px(k), py(0), px(k), py(extent));
        let _ = writeln!(s, r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#, px(0), py(k), px(extent), py(k));
    }
    let _ = writeln!(s, "</g>");

    // Γ₊ clipped to the drawing area
    if let (Some(first), Some(last)) = (poly.vertices.first(), poly.vertices.last()) {
        let mut pts = vec![(px(first.0), py(extent))];
        pts.extend(poly.vertices.iter().map(|v| (px(v.0), py(v.1))));
        pts.push((px(extent), py(last.1)));
        pts.push((px(extent), py(extent)));
        let list: Vec<String> = pts.iter().map(|(x, y)| format!("{x},{y}")).collect();
        let _ = writeln!(
            s,
            r##"<polygon points="{}" fill="#9ecae1" fill-opacity="0.5" stroke="none"/>"##,
            list.join(" ")
        );
        let line: Vec<String> = poly
            .vertices
            .iter()
            .map(|v| format!("{},{}", px(v.0), py(v.1)))
            .collect();
        let _ = writeln!(
            s,
            r##"<polyline points="{}" fill="none" stroke="#08519c" stroke-width="3"/>"##,
            line.join(" ")
        );
    }

    let _ = writeln!(s, r##"<g stroke="black" stroke-width="2">"##);
    let _ = writeln!(s, r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#, px(0), py(0), px(extent), py(0));
    let _ = writeln!(s, r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#, px(0), py(0), px(0), py(extent));
    let _ = writeln!(s, "</g>");
    let _ = writeln!(s, r#"<g font-family="sans-serif" font-size="12" text-anchor="middle">"#);
    for k in 0..=extent {
        let _ = writeln!(s, r#"<text x="{}" y="{}">{k}</text>"#, px(k), py(0) + 18);
        let _ = writeln!(s, r#"<text x="{}" y="{}">{k}</text>"#, px(0) - 14, py(k) + 4);
    }
    let _ = writeln!(s, "</g>");

    let mut sorted = support.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    for p in sorted {
        let on = poly.vertices.contains(&p);
        let fill = if on { "#08519c" } else { "#636363" };
        let _ = writeln!(s, r#"<circle cx="{}" cy="{}" r="5" fill="{fill}"/>"#, px(p.0), py(p.1));
    }
    let _ = writeln!(s, "</svg>");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use milnor_core::newton::{newton_polygon, support_points};
    use milnor_core::{Poly, Ring};

    #[test]
    fn svg_is_deterministic_and_well_formed() {
        let f = Poly::parse(&Ring::plane(&[]), "x^4 + x^2*y^2 + y^4 + x^3*y^3").unwrap();
        let poly = newton_polygon(&f).unwrap();
        let a = polygon_svg(&poly, &support_points(&f));
        assert_eq!(a, polygon_svg(&poly, &support_points(&f)));
        assert!(a.starts_with("<?xml"));
        assert!(a.trim_end().ends_with("</svg>"));
        assert_eq!(a.matches("<circle").count(), 4);
        assert_eq!(a.matches("<polyline").count(), 1);
    }
}
