//! Triangles, subdivision tuples and their symmetry groups.
//!
//! All angles are degrees held as [`Rational`]. A subdivision tuple is stored
//! as `(u, v, w, x, y, z)` where, for the interior point `P`,
//! `u = ∠PAB`, `x = ∠PAC`, `v = ∠PBC`, `y = ∠PBA`, `w = ∠PCA`, `z = ∠PCB`.
//! The vertex angles are therefore `A = u + x`, `B = v + y`, `C = w + z`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

pub const STRAIGHT: i64 = 180;

/// A similarity class of triangles: three positive angles summing to 180,
/// stored in non-decreasing order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "[Rational; 3]", into = "[Rational; 3]")]
pub struct Triangle {
    angles: [Rational; 3],
}

impl Triangle {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Result<Self> {
        let mut angles = [a, b, c];
        for x in &angles {
            if !x.is_positive() {
                return Err(Error::NonPositiveAngle(x.to_string()));
            }
        }
        let sum: Rational = angles.iter().sum();
        if sum != STRAIGHT {
            return Err(Error::BadAngleSum(sum.to_string()));
        }
        angles.sort();
        Ok(Triangle { angles })
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> Result<Self> {
        Triangle::new(a.into(), b.into(), c.into())
    }

    /// Sorted angles `[smallest, middle, largest]`.
    pub fn angles(&self) -> &[Rational; 3] {
        &self.angles
    }

    pub fn smallest(&self) -> &Rational {
        &self.angles[0]
    }

    pub fn largest(&self) -> &Rational {
        &self.angles[2]
    }

    pub fn is_z_degree(&self) -> bool {
        self.angles.iter().all(Rational::is_integer)
    }

    pub fn is_isosceles(&self) -> bool {
        self.angles[0] == self.angles[1] || self.angles[1] == self.angles[2]
    }

    /// Every angle strictly below 90.
    pub fn is_acute(&self) -> bool {
        self.angles[2] < 90
    }

    pub fn is_obtuse(&self) -> bool {
        self.angles[2] > 90
    }

    /// All angles are even integers. Calling this on a triangle with a
    /// non-integer angle is a usage error.
    pub fn all_even(&self) -> Result<bool> {
        if !self.is_z_degree() {
            return Err(Error::NotIntegerDegree(self.to_string()));
        }
        Ok(self.angles.iter().all(Rational::is_even_integer))
    }

    /// Integer angles, when the triangle is integer-degree.
    pub fn to_ints(&self) -> Option<[i64; 3]> {
        Some([
            self.angles[0].to_i64()?,
            self.angles[1].to_i64()?,
            self.angles[2].to_i64()?,
        ])
    }
}

impl TryFrom<[Rational; 3]> for Triangle {
    type Error = Error;
    fn try_from([a, b, c]: [Rational; 3]) -> Result<Self> {
        Triangle::new(a, b, c)
    }
}

impl From<Triangle> for [Rational; 3] {
    fn from(t: Triangle) -> Self {
        t.angles
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = &self.angles;
        write!(f, "({a}, {b}, {c})")
    }
}

impl fmt::Debug for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Triangle{self}")
    }
}

/// Six positive angles `(u, v, w, x, y, z)` summing to 180.
///
/// Construction validates only positivity and the sum; the sine identity is
/// checked separately by [`crate::cyclotomic::ceva_holds_exact`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "[Rational; 6]", into = "[Rational; 6]")]
pub struct CevaTuple {
    entries: [Rational; 6],
}

impl CevaTuple {
    pub fn new(entries: [Rational; 6]) -> Result<Self> {
        for x in &entries {
            if !x.is_positive() {
                return Err(Error::NonPositiveAngle(x.to_string()));
            }
        }
        let sum: Rational = entries.iter().sum();
        if sum != STRAIGHT {
            return Err(Error::BadAngleSum(sum.to_string()));
        }
        Ok(CevaTuple { entries })
    }

    pub fn from_ints(e: [i64; 6]) -> Result<Self> {
        CevaTuple::new(e.map(Rational::from))
    }

    pub fn entries(&self) -> &[Rational; 6] {
        &self.entries
    }

    pub fn u(&self) -> &Rational {
        &self.entries[0]
    }
    pub fn v(&self) -> &Rational {
        &self.entries[1]
    }
    pub fn w(&self) -> &Rational {
        &self.entries[2]
    }
    pub fn x(&self) -> &Rational {
        &self.entries[3]
    }
    pub fn y(&self) -> &Rational {
        &self.entries[4]
    }
    pub fn z(&self) -> &Rational {
        &self.entries[5]
    }

    /// Labeled vertex angles `[A, B, C] = [u + x, v + y, w + z]`.
    pub fn vertex_angles(&self) -> [Rational; 3] {
        let e = &self.entries;
        [&e[0] + &e[3], &e[1] + &e[4], &e[2] + &e[5]]
    }

    /// The triangle this tuple subdivides, as a sorted similarity class.
    pub fn paired_triangle(&self) -> Triangle {
        let [a, b, c] = self.vertex_angles();
        Triangle::new(a, b, c).expect("valid tuple yields a valid triangle")
    }

    pub fn is_z_degree(&self) -> bool {
        self.entries.iter().all(Rational::is_integer)
    }

    pub fn to_ints(&self) -> Option<[i64; 6]> {
        let mut out = [0i64; 6];
        for (o, e) in out.iter_mut().zip(&self.entries) {
            *o = e.to_i64()?;
        }
        Some(out)
    }

    pub fn apply(&self, p: &Relabel) -> CevaTuple {
        CevaTuple {
            entries: std::array::from_fn(|i| self.entries[p.0[i]].clone()),
        }
    }
}

impl TryFrom<[Rational; 6]> for CevaTuple {
    type Error = Error;
    fn try_from(e: [Rational; 6]) -> Result<Self> {
        CevaTuple::new(e)
    }
}

impl From<CevaTuple> for [Rational; 6] {
    fn from(t: CevaTuple) -> Self {
        t.entries
    }
}

impl fmt::Display for CevaTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = &self.entries;
        write!(
            f,
            "({}, {}, {}, {}, {}, {})",
            e[0], e[1], e[2], e[3], e[4], e[5]
        )
    }
}

impl fmt::Debug for CevaTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CevaTuple{self}")
    }
}

/// An index permutation acting on tuples: `(g·t)[i] = t[g[i]]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Relabel(pub [usize; 6]);

impl Relabel {
    pub const IDENTITY: Relabel = Relabel([0, 1, 2, 3, 4, 5]);
    /// Vertex rotation A→C→B→A: `(u,v,w,x,y,z) → (v,w,u,y,z,x)`.
    pub const ROTATION: Relabel = Relabel([1, 2, 0, 4, 5, 3]);
    /// Mirror fixing A and swapping B, C: `(u,v,w,x,y,z) → (x,z,y,u,w,v)`.
    pub const REFLECTION: Relabel = Relabel([3, 5, 4, 0, 2, 1]);

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Relabel) -> Relabel {
        Relabel(std::array::from_fn(|i| other.0[self.0[i]]))
    }
}

const S3: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

/// The six vertex relabelings, identity first.
pub fn subdivision_group() -> Vec<Relabel> {
    let mut out = vec![Relabel::IDENTITY];
    let mut frontier = vec![Relabel::IDENTITY];
    while let Some(g) = frontier.pop() {
        for gen in [Relabel::ROTATION, Relabel::REFLECTION] {
            let h = gen.compose(&g);
            if !out.contains(&h) {
                out.push(h);
                frontier.push(h);
            }
        }
    }
    out
}

/// The 72 symmetries of the sine-product identity: independent permutations
/// of `(u,v,w)` and `(x,y,z)`, optionally swapping the two triples.
pub fn equation_group() -> Vec<Relabel> {
    let mut out = Vec::with_capacity(72);
    for swap in [false, true] {
        let (first, second) = if swap { (3, 0) } else { (0, 3) };
        for s in &S3 {
            for t in &S3 {
                out.push(Relabel([
                    first + s[0],
                    first + s[1],
                    first + s[2],
                    second + t[0],
                    second + t[1],
                    second + t[2],
                ]));
            }
        }
    }
    out
}

/// Lexicographically smallest image under the six vertex relabelings.
pub fn canonical_subdivision(t: &CevaTuple) -> CevaTuple {
    subdivision_group()
        .iter()
        .map(|g| t.apply(g))
        .min()
        .expect("group is non-empty")
}

/// Lexicographically smallest image among relabelings that keep the labeled
/// vertex angles `(A, B, C)` unchanged, i.e. the triangle's own symmetries.
pub fn canonical_labeled(t: &CevaTuple) -> CevaTuple {
    let labels = t.vertex_angles();
    subdivision_group()
        .iter()
        .map(|g| t.apply(g))
        .filter(|img| img.vertex_angles() == labels)
        .min()
        .expect("identity always qualifies")
}
