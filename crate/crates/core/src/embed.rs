//! Floating-point placement of a subdivision in the plane.

use serde::Serialize;

use crate::angles::CevaTuple;
use crate::error::{Error, Result};

/// Smallest angle, in degrees, accepted by [`embed`].
pub const MIN_ANGLE_DEG: f64 = 1e-6;
/// Relative tolerance of the angle residual check.
pub const RESIDUAL_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }

    fn cross(self, o: Point) -> f64 {
        self.x * o.y - self.y * o.x
    }

    fn dot(self, o: Point) -> f64 {
        self.x * o.x + self.y * o.y
    }
}

/// Vertices `A`, `B`, `C`, interior point `P`, and the cevian feet
/// `D ∈ BC`, `E ∈ CA`, `F ∈ AB`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EmbeddedSubdivision {
    pub a: Point,
    pub b: Point,
    pub c: Point,
    pub p: Point,
    pub d: Point,
    pub e: Point,
    pub f: Point,
}

/// Unsigned angle at `at` between rays to `p` and `q`, in degrees.
pub fn angle_deg(at: Point, p: Point, q: Point) -> f64 {
    let (r, s) = (p.sub(at), q.sub(at));
    r.cross(s).abs().atan2(r.dot(s)).to_degrees()
}

fn intersect(p0: Point, p1: Point, q0: Point, q1: Point) -> Result<Point> {
    let (r, s) = (p1.sub(p0), q1.sub(q0));
    let den = r.cross(s);
    if den.abs() < 1e-15 {
        return Err(Error::IllConditioned("parallel lines".into()));
    }
    let k = q0.sub(p0).cross(s) / den;
    Ok(Point::new(p0.x + k * r.x, p0.y + k * r.y))
}

impl EmbeddedSubdivision {
    /// Measured `(u, v, w, x, y, z)`: ∠PAB, ∠PBC, ∠PCA, ∠PAC, ∠PBA, ∠PCB.
    pub fn measured_angles(&self) -> [f64; 6] {
        let (a, b, c, p) = (self.a, self.b, self.c, self.p);
        [
            angle_deg(a, p, b),
            angle_deg(b, p, c),
            angle_deg(c, p, a),
            angle_deg(a, p, c),
            angle_deg(b, p, a),
            angle_deg(c, p, b),
        ]
    }

    /// Largest relative error between measured angles and `t`.
    pub fn residual(&self, t: &CevaTuple) -> f64 {
        self.measured_angles()
            .iter()
            .zip(t.entries())
            .map(|(m, e)| {
                let e = e.to_f64();
                (m - e).abs() / e
            })
            .fold(0.0, f64::max)
    }

    pub fn p_is_interior(&self) -> bool {
        let s = |u: Point, v: Point| v.sub(u).cross(self.p.sub(u));
        let (d1, d2, d3) = (s(self.a, self.b), s(self.b, self.c), s(self.c, self.a));
        (d1 > 0.0 && d2 > 0.0 && d3 > 0.0) || (d1 < 0.0 && d2 < 0.0 && d3 < 0.0)
    }
}

/// Place `A = (0,0)`, `B = (1,0)`, `C` above `AB`, and `P` where the rays
/// from `A` at angle `u` and from `B` at angle `y` meet.
///
/// The tuple is not required to satisfy Ceva; if it does not, the residual
/// check at `C` fails with [`Error::NotASolution`].
pub fn embed(t: &CevaTuple) -> Result<EmbeddedSubdivision> {
    let deg: Vec<f64> = t.entries().iter().map(|e| e.to_f64()).collect();
    if let Some(m) = deg.iter().copied().find(|&d| d < MIN_ANGLE_DEG) {
        return Err(Error::IllConditioned(format!(
            "angle {m}° below {MIN_ANGLE_DEG}°"
        )));
    }
    let [u, v, _, x, y, _] = [deg[0], deg[1], deg[2], deg[3], deg[4], deg[5]].map(f64::to_radians);
    let (ang_a, ang_b) = (u + x, v + y);
    let ang_c = std::f64::consts::PI - ang_a - ang_b;
    let ac = ang_b.sin() / ang_c.sin();
    let ap = y.sin() / (u + y).sin();
    let a = Point::new(0.0, 0.0);
    let b = Point::new(1.0, 0.0);
    let c = Point::new(ac * ang_a.cos(), ac * ang_a.sin());
    let p = Point::new(ap * u.cos(), ap * u.sin());
    let emb = EmbeddedSubdivision {
        a,
        b,
        c,
        p,
        d: intersect(a, p, b, c)?,
        e: intersect(b, p, c, a)?,
        f: intersect(c, p, a, b)?,
    };
    if !emb.p_is_interior() {
        return Err(Error::IllConditioned("P is not interior".into()));
    }
    let r = emb.residual(t);
    if r.is_nan() || r >= RESIDUAL_TOL {
        return Err(Error::NotASolution);
    }
    Ok(emb)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{family_tuple, FamilyId};
    use crate::rational::q;

    fn close(p: Point, x: f64, y: f64, tol: f64) -> bool {
        (p.x - x).abs() < tol && (p.y - y).abs() < tol
    }

    #[test]
    fn equilateral_incenter() {
        let e = embed(&CevaTuple::from_ints([30; 6]).unwrap()).unwrap();
        assert!(close(e.p, 0.5, 1.0 / (2.0 * 3f64.sqrt()), 1e-12));
        assert!(close(e.d, 0.75, 3f64.sqrt() / 4.0, 1e-12));
        assert!(close(e.f, 0.5, 0.0, 1e-12));
    }

    #[test]
    fn bisectors_meet_at_incenter() {
        let e = embed(&CevaTuple::from_ints([40, 30, 20, 40, 30, 20]).unwrap()).unwrap();
        let (la, lb, lc) = (
            (e.b.x - e.c.x).hypot(e.b.y - e.c.y),
            e.c.x.hypot(e.c.y),
            1.0,
        );
        let s = la + lb + lc;
        let ix = (la * e.a.x + lb * e.b.x + lc * e.c.x) / s;
        let iy = (la * e.a.y + lb * e.b.y + lc * e.c.y) / s;
        assert!(close(e.p, ix, iy, 1e-12));
    }

    #[test]
    fn family_angle_measured() {
        let t = family_tuple(FamilyId::F2a, &q(10, 1)).unwrap();
        let e = embed(&t).unwrap();
        assert!((angle_deg(e.a, e.p, e.b) - 30.0).abs() < 30.0 * 1e-9);
        assert!(e.residual(&t) < RESIDUAL_TOL);
    }

    #[test]
    fn rejects_non_solutions_and_tiny_angles() {
        let t = CevaTuple::from_ints([45, 45, 45, 15, 15, 15]).unwrap();
        assert!(matches!(embed(&t), Err(Error::NotASolution)));
        let tiny = family_tuple(FamilyId::F2a, &q(1, 10_000_000)).unwrap();
        assert!(matches!(embed(&tiny), Err(Error::IllConditioned(_))));
    }
}
