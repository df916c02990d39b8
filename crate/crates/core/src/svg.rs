//! SVG drawing of an embedded subdivision.

use std::fmt::Write;

use crate::angles::CevaTuple;
use crate::embed::{embed, EmbeddedSubdivision, Point};
use crate::error::Result;

pub const CANVAS: f64 = 1000.0;
pub const MARGIN: f64 = 0.05 * CANVAS;

struct Frame {
    scale: f64,
    dx: f64,
    dy: f64,
    min_x: f64,
    max_y: f64,
}

impl Frame {
    fn fit(e: &EmbeddedSubdivision) -> Frame {
        let xs = [e.a.x, e.b.x, e.c.x];
        let ys = [e.a.y, e.b.y, e.c.y];
        let min_x = xs.iter().copied().fold(f64::INFINITY, f64::min);
        let max_x = xs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let min_y = ys.iter().copied().fold(f64::INFINITY, f64::min);
        let max_y = ys.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let inner = CANVAS - 2.0 * MARGIN;
        let scale = inner / (max_x - min_x).max(max_y - min_y);
        Frame {
            scale,
            dx: MARGIN + (inner - scale * (max_x - min_x)) / 2.0,
            dy: MARGIN + (inner - scale * (max_y - min_y)) / 2.0,
            min_x,
            max_y,
        }
    }

    fn map(&self, p: Point) -> Point {
        Point::new(
            self.dx + (p.x - self.min_x) * self.scale,
            self.dy + (self.max_y - p.y) * self.scale,
        )
    }
}

fn unit(from: Point, to: Point) -> (f64, f64) {
    let (x, y) = (to.x - from.x, to.y - from.y);
    let n = x.hypot(y);
    (x / n, y / n)
}

/// Label position inside the angle at `at` between rays to `p` and `q`,
/// further out for narrow angles so neighbouring labels separate.
fn label_at(at: Point, p: Point, q: Point) -> Point {
    let (a, b) = (unit(at, p), unit(at, q));
    let (x, y) = (a.0 + b.0, a.1 + b.1);
    let n = x.hypot(y);
    let half_sin = (1.0 - (a.0 * b.0 + a.1 * b.1)).max(0.0).sqrt() / std::f64::consts::SQRT_2;
    let r = (40.0 + 14.0 / half_sin.max(1e-3)).min(200.0);
    Point::new(at.x + r * x / n, at.y + r * y / n)
}

/// SVG 1.1 document for `t`: triangle, the three cevians through `P`, the
/// point `P`, and the six angles as exact degree labels.
pub fn render_svg(t: &CevaTuple) -> Result<String> {
    let e = embed(t)?;
    let fr = Frame::fit(&e);
    let [a, b, c, p, d, ee, f] = [e.a, e.b, e.c, e.p, e.d, e.e, e.f].map(|q| fr.map(q));
    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{CANVAS}" height="{CANVAS}" viewBox="0 0 {CANVAS} {CANVAS}">"#
    );
    let _ = writeln!(
        s,
        r#"<polygon id="triangle" points="{:.3},{:.3} {:.3},{:.3} {:.3},{:.3}" fill="none" stroke="black" stroke-width="2"/>"#,
        a.x, a.y, b.x, b.y, c.x, c.y
    );
    for (id, from, to) in [("cevian-a", a, d), ("cevian-b", b, ee), ("cevian-c", c, f)] {
        let _ = writeln!(
            s,
            r#"<line id="{id}" x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="steelblue" stroke-width="1.5"/>"#,
            from.x, from.y, to.x, to.y
        );
    }
    let _ = writeln!(
        s,
        r#"<circle id="P" cx="{:.3}" cy="{:.3}" r="4" fill="crimson"/>"#,
        p.x, p.y
    );
    let [u, v, w, x, y, z] = t.entries();
    let labels = [
        ("u", u, a, p, b),
        ("v", v, b, p, c),
        ("w", w, c, p, a),
        ("x", x, a, p, c),
        ("y", y, b, p, a),
        ("z", z, c, p, b),
    ];
    for (id, val, at, r1, r2) in labels {
        let pos = label_at(at, r1, r2);
        let _ = writeln!(
            s,
            r#"<text id="{id}" x="{:.3}" y="{:.3}" font-family="sans-serif" font-size="14" text-anchor="middle" dominant-baseline="middle">{val}°</text>"#,
            pos.x, pos.y
        );
    }
    s.push_str("</svg>\n");
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn element_inventory() {
        let t = CevaTuple::from_ints([30, 10, 40, 70, 10, 20]).unwrap();
        let s = render_svg(&t).unwrap();
        assert_eq!(s.matches("<polygon").count(), 1);
        assert_eq!(s.matches("<line").count(), 3);
        assert_eq!(s.matches("<circle").count(), 1);
        assert_eq!(s.matches("<text").count(), 6);
        assert!(s.contains(">70°</text>"));
        assert_eq!(render_svg(&t).unwrap(), s);
    }

    #[test]
    fn fits_inside_margin() {
        let t = CevaTuple::from_ints([1, 1, 88, 1, 1, 88]).unwrap();
        let e = embed(&t).unwrap();
        let fr = Frame::fit(&e);
        for q in [e.a, e.b, e.c] {
            let m = fr.map(q);
            assert!(m.x >= MARGIN - 1e-9 && m.x <= CANVAS - MARGIN + 1e-9);
            assert!(m.y >= MARGIN - 1e-9 && m.y <= CANVAS - MARGIN + 1e-9);
        }
    }
}
