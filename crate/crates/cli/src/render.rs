//! SVG figures of scenes.
//!
//! The frame is fixed: the unit box maps to an 800×800 viewport with the y
//! axis pointing up. `fit` replaces the unit box by the padded bounding box
//! of the scene.

use circgeo::disc::{external_tangents, tangent_points, Circle, Point, Region, RegionKind, Scene};
use std::fmt::Write;

const SIZE: f64 = 800.0;

struct Frame {
    lo: Point,
    scale: f64,
}

impl Frame {
    fn unit() -> Frame {
        Frame { lo: Point::new(0.0, 0.0), scale: SIZE }
    }

    fn fitted(scene: &Scene) -> Frame {
        let mut lo = Point::new(f64::INFINITY, f64::INFINITY);
        let mut hi = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        let mut add = |p: Point, r: f64| {
            lo = Point::new(lo.x.min(p.x - r), lo.y.min(p.y - r));
            hi = Point::new(hi.x.max(p.x + r), hi.y.max(p.y + r));
        };
        for c in &scene.circles {
            add(c.circle.center, c.circle.r);
        }
        for p in scene.triangle.iter().flatten() {
            add(*p, 0.0);
        }
        let side = (hi.x - lo.x).max(hi.y - lo.y).max(1e-9) * 1.1;
        let mid = (lo + hi) * 0.5;
        Frame { lo: mid - Point::new(side / 2.0, side / 2.0), scale: SIZE / side }
    }

    fn map(&self, p: Point) -> (f64, f64) {
        ((p.x - self.lo.x) * self.scale, SIZE - (p.y - self.lo.y) * self.scale)
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

fn line(out: &mut String, f: &Frame, p: Point, q: Point, class: &str) {
    let ((x1, y1), (x2, y2)) = (f.map(p), f.map(q));
    writeln!(out, r#"  <line class="{class}" x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}"/>"#).unwrap();
}

fn polygon(out: &mut String, f: &Frame, pts: &[Point], class: &str) {
    let pts: Vec<String> = pts
        .iter()
        .map(|&p| {
            let (x, y) = f.map(p);
            format!("{x:.3},{y:.3}")
        })
        .collect();
    writeln!(out, r#"  <polygon class="{class}" points="{}"/>"#, pts.join(" ")).unwrap();
}

pub fn render_svg(scene: &Scene, regions: bool, fit: bool) -> String {
    let f = if fit { Frame::fitted(scene) } else { Frame::unit() };
    let eps = scene.tolerance;
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    )
    .unwrap();
    out.push_str(
        "  <style>.tri{fill:none;stroke:#000;stroke-width:1.5}.tan{stroke:#888;stroke-width:0.8}\
         .circ{fill:none;stroke:#1f4e9c;stroke-width:1.5}.pt{fill:#000}.reg{fill:#e8a33c;fill-opacity:0.35;stroke:none}\
         text{font:14px sans-serif;text-anchor:middle;dominant-baseline:middle}</style>\n",
    );
    let circles: Vec<(&str, Circle)> = scene.circles.iter().map(|c| (c.name.as_str(), c.circle)).collect();
    if let Some(t) = scene.triangle {
        if regions {
            for &v in &t {
                for (_, c) in &circles {
                    let r = Region::corner(RegionKind::W1, v, *c, None, eps);
                    if !r.is_empty() && c.r > 0.0 {
                        polygon(&mut out, &f, &r.polygon(), "reg");
                    }
                }
            }
        }
        polygon(&mut out, &f, &t, "tri");
        for &v in &t {
            for (_, c) in &circles {
                if let Ok((t1, t2)) = tangent_points(v, c, eps) {
                    line(&mut out, &f, v, t1, "tan");
                    line(&mut out, &f, v, t2, "tan");
                }
            }
        }
    } else {
        for (i, (_, a)) in circles.iter().enumerate() {
            for (_, b) in &circles[i + 1..] {
                for tan in external_tangents(a, b, eps).into_iter().flatten() {
                    line(&mut out, &f, tan.touch1, tan.touch2, "tan");
                }
            }
        }
    }
    for (name, c) in &circles {
        let (x, y) = f.map(c.center);
        if c.r > 0.0 {
            writeln!(out, r#"  <circle class="circ" cx="{x:.3}" cy="{y:.3}" r="{:.3}"/>"#, c.r * f.scale).unwrap();
            writeln!(out, r#"  <text x="{x:.3}" y="{y:.3}">{}</text>"#, escape(name)).unwrap();
        } else {
            writeln!(out, r#"  <circle class="pt" cx="{x:.3}" cy="{y:.3}" r="3"/>"#).unwrap();
            writeln!(out, r#"  <text x="{x:.3}" y="{:.3}">{}</text>"#, y - 12.0, escape(name)).unwrap();
        }
    }
    out.push_str("</svg>\n");
    out
}
