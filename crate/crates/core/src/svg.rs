//! Deterministic SVG pictures of regions in the g-vector plane.
//!
//! Coordinates are written as 12-digit decimal approximations of the exact
//! values; the viewport comes from exact integer bounding boxes, so the same
//! input always yields the same bytes.

use std::fmt::Write;

use crate::geometry::{Exclusion, QPoint, Region, RegionKind};
use crate::laurent::GVector;
use crate::numeric::{QuadNum, Rational};
use crate::AlgebraParams;

const DIGITS: usize = 12;
const PIXELS_PER_UNIT: i64 = 40;

/// Fill styles for the regions a figure can hold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Style {
    Dominance,
    Opposite,
    Support,
}

impl Style {
    fn class(self) -> &'static str {
        match self {
            Style::Dominance => "dominance",
            Style::Opposite => "opposite",
            Style::Support => "support",
        }
    }
}

/// A picture built up from regions, lattice dots and a marked g-vector.
#[derive(Debug, Clone)]
pub struct Figure {
    params: AlgebraParams,
    title: String,
    regions: Vec<(Region, Style)>,
    dots: Vec<GVector>,
    marks: Vec<GVector>,
}

impl Figure {
    pub fn new(params: AlgebraParams, title: impl Into<String>) -> Self {
        Figure { params, title: title.into(), regions: Vec::new(), dots: Vec::new(), marks: Vec::new() }
    }

    pub fn region(mut self, region: Region, style: Style) -> Self {
        self.regions.push((region, style));
        self
    }

    pub fn dots(mut self, points: impl IntoIterator<Item = GVector>) -> Self {
        self.dots.extend(points);
        self
    }

    pub fn mark(mut self, g: GVector) -> Self {
        self.marks.push(g);
        self
    }

    /// `(lo0, hi0, lo1, hi1)` covering everything drawn plus the origin, padded by one.
    fn viewport(&self) -> (i64, i64, i64, i64) {
        let (mut lo0, mut hi0, mut lo1, mut hi1) = (0, 0, 0, 0);
        let mut grow = |a: i64, b: i64, c: i64, d: i64| {
            lo0 = lo0.min(a);
            hi0 = hi0.max(b);
            lo1 = lo1.min(c);
            hi1 = hi1.max(d);
        };
        for (r, _) in &self.regions {
            let (a, b, c, d) = r.bounding_box();
            grow(a, b, c, d);
        }
        for g in self.dots.iter().chain(&self.marks) {
            grow(g.g0, g.g0, g.g1, g.g1);
        }
        (lo0 - 1, hi0 + 1, lo1 - 1, hi1 + 1)
    }

    pub fn render(&self) -> String {
        let (lo0, hi0, lo1, hi1) = self.viewport();
        let (w, h) = (hi0 - lo0, hi1 - lo1);
        let mut out = String::new();
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="{} {} {} {}">"#,
            w * PIXELS_PER_UNIT,
            h * PIXELS_PER_UNIT,
            lo0,
            -hi1,
            w,
            h
        );
        let _ = writeln!(out, "<title>{}</title>", escape(&self.title));
        out.push_str(concat!(
            "<style>",
            ".axis{stroke:#888;stroke-width:0.03}",
            ".cone{stroke:#c33;stroke-width:0.04;stroke-dasharray:0.2 0.1}",
            ".dominance{fill:#3a7bd5;fill-opacity:0.35;stroke:#1d4f91;stroke-width:0.05}",
            ".opposite{fill:#e0a030;fill-opacity:0.3;stroke:#a06010;stroke-width:0.05}",
            ".support{fill:#6c6;fill-opacity:0.2;stroke:#393;stroke-width:0.05}",
            ".dot{fill:#111}",
            ".mark{fill:#c33}",
            ".hole{fill:#fff;stroke:#111;stroke-width:0.04}",
            ".cut{stroke:#fff;stroke-width:0.07;stroke-dasharray:0.1 0.08}",
            "</style>\n"
        ));
        out.push_str("<g transform=\"scale(1,-1)\">\n");
        let _ = writeln!(out, r#"<line class="axis" x1="{lo0}" y1="0" x2="{hi0}" y2="0"/>"#);
        let _ = writeln!(out, r#"<line class="axis" x1="0" y1="{lo1}" x2="0" y2="{hi1}"/>"#);
        self.cone_rays(&mut out, hi0);
        for (region, style) in &self.regions {
            draw_region(&mut out, region, style.class());
        }
        for g in &self.dots {
            let _ = writeln!(out, r#"<circle class="dot" cx="{}" cy="{}" r="0.1"/>"#, g.g0, g.g1);
        }
        for g in &self.marks {
            let _ = writeln!(out, r#"<circle class="mark" cx="{}" cy="{}" r="0.16"/>"#, g.g0, g.g1);
        }
        out.push_str("</g>\n</svg>\n");
        out
    }

    /// Boundary rays `(2b, -bc ± sqrt D)` of the imaginary cone, cut at `x0 = hi0`.
    fn cone_rays(&self, out: &mut String, hi0: i64) {
        let Ok(disc) = self.params.discriminant() else { return };
        if hi0 <= 0 {
            return;
        }
        let t = Rational::new(hi0.into(), (2 * self.params.b()).into());
        let root = QuadNum::sqrt_disc(disc);
        let bc = QuadNum::from_int(-self.params.bc(), disc);
        for second in [&bc + &root, &bc - &root] {
            let y = second.scale(&t).approx(DIGITS);
            let _ = writeln!(out, r#"<line class="cone" x1="0" y1="0" x2="{hi0}" y2="{y}"/>"#);
        }
    }
}

fn coords(p: &QPoint) -> (String, String) {
    (p.x0.approx(DIGITS), p.x1.approx(DIGITS))
}

fn draw_region(out: &mut String, region: &Region, class: &str) {
    let vs = region.vertices();
    match region.kind() {
        RegionKind::Point => {
            let (x, y) = coords(&vs[0]);
            let _ = writeln!(out, r#"<circle class="{class}" cx="{x}" cy="{y}" r="0.14"/>"#);
        }
        RegionKind::Segment => {
            let ((x1, y1), (x2, y2)) = (coords(&vs[0]), coords(&vs[1]));
            let _ = writeln!(out, r#"<line class="{class}" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>"#);
        }
        RegionKind::Polygon => {
            let pts: Vec<String> = vs.iter().map(|v| {
                let (x, y) = coords(v);
                format!("{x},{y}")
            }).collect();
            let _ = writeln!(out, r#"<polygon class="{class}" points="{}"/>"#, pts.join(" "));
        }
    }
    for ex in region.excluded() {
        match ex {
            Exclusion::Point(p) => {
                let (x, y) = coords(p);
                let _ = writeln!(out, r#"<circle class="hole" cx="{x}" cy="{y}" r="0.12"/>"#);
            }
            Exclusion::OpenSegment(p, q) => {
                let ((x1, y1), (x2, y2)) = (coords(p), coords(q));
                let _ = writeln!(out, r#"<line class="cut" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>"#);
            }
        }
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::regions::{dominance_region, dominated_lattice_points, support_region};

    fn figure(b: i64, c: i64, l0: i64, l1: i64) -> String {
        let p = AlgebraParams::new(b, c).unwrap();
        let l = GVector::new(l0, l1);
        Figure::new(p, format!("P for ({b},{c}) at {l}"))
            .region(support_region(&p, l).unwrap(), Style::Support)
            .region(dominance_region(&p, l).unwrap(), Style::Dominance)
            .dots(dominated_lattice_points(&p, l).unwrap())
            .mark(l)
            .render()
    }

    #[test]
    fn deterministic() {
        assert_eq!(figure(3, 2, 4, -3), figure(3, 2, 4, -3));
    }

    #[test]
    fn contents() {
        let s = figure(3, 2, 4, -3);
        assert!(s.starts_with("<svg"));
        assert!(s.trim_end().ends_with("</svg>"));
        assert_eq!(s.matches("class=\"cone\"").count(), 2);
        assert_eq!(s.matches("<polygon").count(), 2);
        assert!(s.contains("<title>P for (3,2) at "));
        let poly = s.lines().find(|l| l.starts_with("<polygon class=\"dominance\"")).unwrap();
        let coord = poly.split('"').nth(3).unwrap().split([' ', ',']).next().unwrap();
        assert_eq!(coord.split('.').nth(1).map(str::len), Some(DIGITS));
    }

    #[test]
    fn viewport_holds_region() {
        let s = figure(2, 2, 3, -3);
        let vb: Vec<i64> = s.split("viewBox=\"").nth(1).unwrap().split('"').next().unwrap().split(' ').map(|t| t.parse().unwrap()).collect();
        // the padded box holds the origin and lambda = (3,-3); y is flipped
        assert!(vb[0] <= -1 && vb[0] + vb[2] >= 4);
        assert!(vb[1] <= -1 && vb[1] + vb[3] >= 4);
        assert!(s.contains("<line class=\"dominance\""));
        assert!(!s.contains("class=\"hole\""));
        let punctured = figure(3, 2, 1, -2);
        assert!(punctured.contains("class=\"hole\""));
        assert_eq!(punctured.matches("class=\"cut\"").count(), 2);
    }
}
