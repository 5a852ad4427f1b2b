//! Static SVG drawings of lattice polygons.

use std::fmt::Write;

use crate::lattice::{BalancedFamily, LatticePolygon, LatticeVector, PolygonKind};

const CELL: i64 = 40;

struct Frame {
    lo: LatticeVector,
    hi: LatticeVector,
}

impl Frame {
    fn x(&self, m: i64) -> i64 {
        (m - self.lo.m) * CELL + CELL / 2
    }

    fn y(&self, n: i64) -> i64 {
        (self.hi.n - n) * CELL + CELL / 2
    }

    fn width(&self) -> i64 {
        (self.hi.m - self.lo.m + 1) * CELL
    }

    fn height(&self) -> i64 {
        (self.hi.n - self.lo.n + 1) * CELL
    }
}

/// Draws `q` over the lattice of its bounding box padded by one, with the
/// vectors of `family` as arrows from the origin. Output is byte-identical
/// for equal inputs.
pub fn render_svg(q: &LatticePolygon, family: Option<&BalancedFamily>) -> String {
    let mut pts: Vec<LatticeVector> = q.vertices().to_vec();
    if let Some(fam) = family {
        pts.push(LatticeVector::ZERO);
        pts.extend(fam.entries().iter().map(|&(v, _)| v));
    }
    let lo = LatticeVector::new(
        pts.iter().map(|p| p.m).min().unwrap_or(0) - 1,
        pts.iter().map(|p| p.n).min().unwrap_or(0) - 1,
    );
    let hi = LatticeVector::new(
        pts.iter().map(|p| p.m).max().unwrap_or(0) + 1,
        pts.iter().map(|p| p.n).max().unwrap_or(0) + 1,
    );
    let fr = Frame { lo, hi };

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = fr.width(),
        h = fr.height()
    );
    if family.is_some() {
        out.push_str(concat!(
            r#"<defs><marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" markerWidth="6" markerHeight="6" orient="auto">"#,
            r##"<path d="M0,0 L10,5 L0,10 z" fill="#b2182b"/></marker></defs>"##,
            "\n"
        ));
    }
    let _ = writeln!(out, r#"<rect width="{}" height="{}" fill="white"/>"#, fr.width(), fr.height());

    let path: Vec<String> = q.vertices().iter().map(|v| format!("{},{}", fr.x(v.m), fr.y(v.n))).collect();
    match q.kind() {
        PolygonKind::Polygon => {
            let _ = writeln!(
                out,
                r##"<path d="M{} Z" fill="#9ecae1" fill-opacity="0.7" stroke="#08519c" stroke-width="2"/>"##,
                path.join(" L")
            );
        }
        PolygonKind::Segment => {
            let _ = writeln!(out, r##"<path d="M{}" stroke="#08519c" stroke-width="3"/>"##, path.join(" L"));
        }
        PolygonKind::Point => {}
    }

    for n in (lo.n..=hi.n).rev() {
        for m in lo.m..=hi.m {
            let _ = writeln!(out, r##"<circle cx="{}" cy="{}" r="2" fill="#636363"/>"##, fr.x(m), fr.y(n));
        }
    }
    for v in q.vertices() {
        let _ = writeln!(out, r##"<circle cx="{}" cy="{}" r="4" fill="#08519c"/>"##, fr.x(v.m), fr.y(v.n));
    }

    if let Some(fam) = family {
        for &(v, mult) in fam.entries() {
            let _ = writeln!(
                out,
                r##"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="#b2182b" stroke-width="{}" marker-end="url(#arrow)"/>"##,
                fr.x(0),
                fr.y(0),
                fr.x(v.m),
                fr.y(v.n),
                1 + mult.min(4)
            );
        }
    }
    out.push_str("</svg>\n");
    out
}
