//! Known solution classes of the Ceva sine identity.
//!
//! * trivial solutions, where `(x, y, z)` is a permutation of `(u, v, w)`;
//! * four one-parameter families, affine in a rational parameter `t`;
//! * everything else is sporadic.
//!
//! Family templates are stored in `(u, v, w, x, y, z)` order. Matching a
//! triangle against a family is an exact linear solve in `t` over every
//! image of the template under the 72-element equation group.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::angles::{equation_group, CevaTuple, Relabel, Triangle};
use crate::cyclotomic::ceva_holds_exact;
use crate::error::{Error, Result};
use crate::rational::{q, Rational};

/// Largest angle of any triangle carrying a family subdivision (never attained).
pub const FAMILY_ANGLE_SUP: i64 = 135;
/// Largest angle of a triangle carrying a sporadic subdivision.
pub const SPORADIC_MAX_ANGLE: i64 = 150;

/// Smallest angle of a triangle carrying a sporadic subdivision: 180/21.
pub fn sporadic_min_angle() -> Rational {
    q(180, 21)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FamilyId {
    F2a,
    F2b,
    F2c,
    F2d,
}

impl FamilyId {
    pub const ALL: [FamilyId; 4] = [FamilyId::F2a, FamilyId::F2b, FamilyId::F2c, FamilyId::F2d];

    /// Exclusive upper end of the parameter range; the lower end is 0.
    pub fn upper(self) -> i64 {
        match self {
            FamilyId::F2a | FamilyId::F2b => 30,
            FamilyId::F2c | FamilyId::F2d => 15,
        }
    }

    pub fn in_range(self, t: &Rational) -> bool {
        t.is_positive() && *t < self.upper()
    }

    /// `(constant, slope)` per entry, in `(u, v, w, x, y, z)` order.
    pub fn template(self) -> [(i64, i64); 6] {
        match self {
            // (30, t, 60-2t, 60+t, t, 30-t)
            FamilyId::F2a => [(30, 0), (0, 1), (60, -2), (60, 1), (0, 1), (30, -1)],
            // (30, 90-3t, t, 30-t, 2t, 30+t)
            FamilyId::F2b => [(30, 0), (90, -3), (0, 1), (30, -1), (0, 2), (30, 1)],
            // (30, 30-2t, 2t, 30-2t, t, 90+t)
            FamilyId::F2c => [(30, 0), (30, -2), (0, 2), (30, -2), (0, 1), (90, 1)],
            // (60-4t, t, 60+t, 30-2t, 3t, 30+t)
            FamilyId::F2d => [(60, -4), (0, 1), (60, 1), (30, -2), (0, 3), (30, 1)],
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            FamilyId::F2a => "family-2a",
            FamilyId::F2b => "family-2b",
            FamilyId::F2c => "family-2c",
            FamilyId::F2d => "family-2d",
        }
    }

    pub fn short_name(self) -> &'static str {
        match self {
            FamilyId::F2a => "2a",
            FamilyId::F2b => "2b",
            FamilyId::F2c => "2c",
            FamilyId::F2d => "2d",
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl std::str::FromStr for FamilyId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().trim_start_matches('f') {
            "2a" => Ok(FamilyId::F2a),
            "2b" => Ok(FamilyId::F2b),
            "2c" => Ok(FamilyId::F2c),
            "2d" => Ok(FamilyId::F2d),
            _ => Err(Error::Parse(format!("unknown family {s:?}"))),
        }
    }
}

fn eval(c: (i64, i64), t: &Rational) -> Rational {
    t * c.1 + c.0
}

/// Instantiate a family at `t`, which must lie strictly inside its range.
pub fn family_tuple(f: FamilyId, t: &Rational) -> Result<CevaTuple> {
    if !f.in_range(t) {
        return Err(Error::ParameterOutOfRange {
            t: t.to_string(),
            lo: 0,
            hi: f.upper(),
        });
    }
    CevaTuple::new(f.template().map(|c| eval(c, t)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyMatch {
    pub family: FamilyId,
    pub t: Rational,
    #[serde(serialize_with = "ser_relabel")]
    pub image: Relabel,
    pub tuple: CevaTuple,
}

fn ser_relabel<S: serde::Serializer>(r: &Relabel, s: S) -> std::result::Result<S::Ok, S::Error> {
    r.0.serialize(s)
}

impl FamilyMatch {
    /// Re-instantiate from `(family, t, image)`.
    pub fn reproduce(&self) -> Result<CevaTuple> {
        Ok(family_tuple(self.family, &self.t)?.apply(&self.image))
    }
}

/// All family subdivisions whose labeled vertex angles are exactly `labels`.
///
/// Family instances that are also trivial (e.g. family 2b at `t = 15` on the
/// equilateral triangle) are dropped; see [`family_matches_with_trivial`].
pub fn family_matches_labeled(labels: &[Rational; 3]) -> Vec<FamilyMatch> {
    let mut out = family_matches_with_trivial(labels);
    out.retain(|m| trivial_class(&m.tuple).is_none());
    out
}

/// Like [`family_matches_labeled`] but keeping instances that coincide with
/// trivial solutions.
pub fn family_matches_with_trivial(labels: &[Rational; 3]) -> Vec<FamilyMatch> {
    let group = equation_group();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for f in FamilyId::ALL {
        let tpl = f.template();
        for h in &group {
            let img: [(i64, i64); 6] = std::array::from_fn(|i| tpl[h.0[i]]);
            let sums: [(i64, i64); 3] =
                std::array::from_fn(|k| (img[k].0 + img[k + 3].0, img[k].1 + img[k + 3].1));
            // No image of any family has three constant vertex sums.
            let Some(k) = sums.iter().position(|s| s.1 != 0) else {
                continue;
            };
            let (c0, c1) = sums[k];
            let t = (&labels[k] - c0) / c1;
            debug_assert_eq!(eval((c0, c1), &t), labels[k]);
            if !f.in_range(&t) {
                continue;
            }
            if sums.iter().zip(labels).any(|(s, l)| eval(*s, &t) != *l) {
                continue;
            }
            let tuple = CevaTuple::new(img.map(|c| eval(c, &t)))
                .expect("in-range family instance is a valid tuple");
            if seen.insert(tuple.clone()) {
                out.push(FamilyMatch {
                    family: f,
                    t,
                    image: *h,
                    tuple,
                });
            }
        }
    }
    out
}

/// Family subdivisions of `tri`, labeled with `A ≤ B ≤ C`.
pub fn family_matches(tri: &Triangle) -> Vec<FamilyMatch> {
    family_matches_labeled(tri.angles())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TrivialKind {
    /// Case (i): angle bisectors.
    Bisector,
    /// Case (ii): a transposition, possible only for isosceles triangles.
    Isosceles,
    /// Case (iii): a three-cycle, possible only for acute triangles.
    Acute3Cycle,
}

impl TrivialKind {
    pub fn label(self) -> &'static str {
        match self {
            TrivialKind::Bisector => "trivial-i",
            TrivialKind::Isosceles => "trivial-ii",
            TrivialKind::Acute3Cycle => "trivial-iii",
        }
    }
}

/// A trivial solution: `(x, y, z) = (t[σ0], t[σ1], t[σ2])` with `σ` acting
/// on `(u, v, w)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TrivialClass {
    pub kind: TrivialKind,
    pub sigma: [usize; 3],
}

/// Permutations in classification priority order.
const SIGMAS: [([usize; 3], TrivialKind); 6] = [
    ([0, 1, 2], TrivialKind::Bisector),
    ([0, 2, 1], TrivialKind::Isosceles),
    ([2, 1, 0], TrivialKind::Isosceles),
    ([1, 0, 2], TrivialKind::Isosceles),
    ([1, 2, 0], TrivialKind::Acute3Cycle),
    ([2, 0, 1], TrivialKind::Acute3Cycle),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Integer,
    Rational,
}

/// The continuum of case-(ii) solutions at one apex of an isosceles triangle.
///
/// For apex index `i` with fixed vertex `j`, free vertex pair `{k, l}`:
/// `t[i] = t[i+3] = apex/2`, `t[k] = s`, `t[l] = leg − s`, `s ∈ (0, leg)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoscelesContinuum {
    pub sigma: [usize; 3],
    pub labels: [Rational; 3],
}

impl IsoscelesContinuum {
    /// Apex angle index (the vertex fixed by the transposition).
    pub fn apex(&self) -> usize {
        (0..3).find(|&i| self.sigma[i] == i).expect("transposition")
    }

    /// Base angle `B = C`; the free parameter ranges over `(0, B)`.
    pub fn leg(&self) -> &Rational {
        &self.labels[(self.apex() + 1) % 3]
    }

    /// The member with free parameter `s` assigned to the first moved vertex.
    pub fn at(&self, s: &Rational) -> Result<CevaTuple> {
        let i = self.apex();
        let (k, l) = ((i + 1) % 3, (i + 2) % 3);
        let leg = self.leg().clone();
        if !s.is_positive() || *s >= leg {
            return Err(Error::ParameterOutOfRange {
                t: s.to_string(),
                lo: 0,
                hi: leg.to_i64().unwrap_or(0),
            });
        }
        let half = &self.labels[i] / 2;
        let mut e: [Rational; 6] = std::array::from_fn(|_| Rational::zero());
        e[i] = half.clone();
        e[i + 3] = half;
        e[k] = s.clone();
        e[l] = &leg - s;
        e[k + 3] = e[l].clone();
        e[l + 3] = e[k].clone();
        CevaTuple::new(e)
    }
}

#[derive(Clone, Debug, Default)]
pub struct TrivialSolutions {
    /// Labeled tuples, deduplicated as exact tuples, first class kept.
    pub tuples: Vec<(CevaTuple, TrivialClass)>,
    /// Case-(ii) continua; only populated in rational mode.
    pub continua: Vec<IsoscelesContinuum>,
}

/// Solve `u + u' = A, v + v' = B, w + w' = C` for every permutation
/// `(u', v', w')` of `(u, v, w)`, labeled `A ≤ B ≤ C`.
pub fn trivial_solutions(tri: &Triangle, mode: Mode) -> TrivialSolutions {
    trivial_solutions_labeled(tri.angles(), mode)
}

pub fn trivial_solutions_labeled(labels: &[Rational; 3], mode: Mode) -> TrivialSolutions {
    let mut out = TrivialSolutions::default();
    let mut seen = HashSet::new();
    let mut push = |t: CevaTuple, class: TrivialClass, out: &mut TrivialSolutions| {
        if mode == Mode::Integer && !t.is_z_degree() {
            return;
        }
        if seen.insert(t.clone()) {
            out.tuples.push((t, class));
        }
    };
    let [a, b, c] = labels;
    for (sigma, kind) in SIGMAS {
        let class = TrivialClass { kind, sigma };
        match kind {
            TrivialKind::Bisector => {
                let e = [a / 2, b / 2, c / 2, a / 2, b / 2, c / 2];
                push(
                    CevaTuple::new(e).expect("halves are positive"),
                    class,
                    &mut out,
                );
            }
            TrivialKind::Isosceles => {
                let cont = IsoscelesContinuum {
                    sigma,
                    labels: labels.clone(),
                };
                let i = cont.apex();
                if labels[(i + 1) % 3] != labels[(i + 2) % 3] {
                    continue;
                }
                match mode {
                    Mode::Rational => out.continua.push(cont),
                    Mode::Integer => {
                        if !labels[i].is_even_integer() {
                            continue;
                        }
                        let Some(leg) = cont.leg().to_i64() else {
                            continue;
                        };
                        for s in 1..leg {
                            let t = cont.at(&s.into()).expect("s in range");
                            push(t, class, &mut out);
                        }
                    }
                }
            }
            TrivialKind::Acute3Cycle => {
                // u + t[σ0] = A, v + t[σ1] = B, w + t[σ2] = C
                let (u, v, w) = if sigma == [1, 2, 0] {
                    ((a - b + c) / 2, (a + b - c) / 2, (b + c - a) / 2)
                } else {
                    ((a + b - c) / 2, (b + c - a) / 2, (a - b + c) / 2)
                };
                let uvw = [u, v, w];
                if !uvw.iter().all(Rational::is_positive) {
                    continue;
                }
                let e = std::array::from_fn(|i| {
                    if i < 3 {
                        uvw[i].clone()
                    } else {
                        uvw[sigma[i - 3]].clone()
                    }
                });
                let t = CevaTuple::new(e).expect("positive solution of the linear system");
                debug_assert_eq!(&t.vertex_angles(), labels);
                push(t, class, &mut out);
            }
        }
    }
    out
}

/// The trivial class of `t`, if `(x, y, z)` is a permutation of `(u, v, w)`.
pub fn trivial_class(t: &CevaTuple) -> Option<TrivialClass> {
    let e = t.entries();
    SIGMAS.iter().find_map(|&(sigma, kind)| {
        (0..3)
            .all(|i| e[3 + i] == e[sigma[i]])
            .then_some(TrivialClass { kind, sigma })
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "class", rename_all = "kebab-case")]
#[allow(clippy::large_enum_variant)]
pub enum Classification {
    Trivial(TrivialClass),
    Family(FamilyMatch),
    Sporadic,
}

impl Classification {
    pub fn label(&self) -> &'static str {
        match self {
            Classification::Trivial(c) => c.kind.label(),
            Classification::Family(m) => m.family.label(),
            Classification::Sporadic => "sporadic",
        }
    }
}

/// Classify a verified solution; trivial takes precedence over family.
pub fn classify(t: &CevaTuple) -> Result<Classification> {
    if !ceva_holds_exact(t)? {
        return Err(Error::NotASolution);
    }
    Ok(classify_unchecked(
        t,
        &family_matches_labeled(&t.vertex_angles()),
    ))
}

/// Classification given precomputed family matches for `t`'s labeled triangle.
pub fn classify_unchecked(t: &CevaTuple, matches: &[FamilyMatch]) -> Classification {
    if let Some(c) = trivial_class(t) {
        return Classification::Trivial(c);
    }
    match matches.iter().find(|m| &m.tuple == t) {
        Some(m) => Classification::Family(m.clone()),
        None => Classification::Sporadic,
    }
}

/// Extremum of an affine function of `t` over an open interval.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Extremum {
    pub value: Rational,
    pub attained: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilyBounds {
    pub family: FamilyId,
    pub sup: Extremum,
    pub inf: Extremum,
}

#[derive(Clone, Debug, Serialize)]
pub struct AngleBounds {
    pub per_family: Vec<FamilyBounds>,
    pub global_sup: Extremum,
    pub global_inf: Extremum,
}

/// Vertex angles of family triangles range over `u_i + x_j` for all `i, j`
/// (every such sum occurs in some perfect matching, hence some image).
pub fn pairing_sum_functions(f: FamilyId) -> Vec<(i64, i64)> {
    let tpl = f.template();
    let mut out = Vec::with_capacity(9);
    for i in 0..3 {
        for j in 3..6 {
            out.push((tpl[i].0 + tpl[j].0, tpl[i].1 + tpl[j].1));
        }
    }
    out
}

fn better(a: Extremum, b: Extremum, want_max: bool) -> Extremum {
    use std::cmp::Ordering::*;
    match (a.value.cmp(&b.value), want_max) {
        (Greater, true) | (Less, false) => a,
        (Less, true) | (Greater, false) => b,
        (Equal, _) => Extremum {
            attained: a.attained || b.attained,
            ..a
        },
    }
}

fn extremum_of(c: (i64, i64), upper: i64, want_max: bool) -> Extremum {
    if c.1 == 0 {
        return Extremum {
            value: c.0.into(),
            attained: true,
        };
    }
    let at_hi = c.0 + c.1 * upper;
    let v = if (c.1 > 0) == want_max { at_hi } else { c.0 };
    Extremum {
        value: v.into(),
        attained: false,
    }
}

/// Exact sup/inf of every family triangle angle over the open parameter range.
pub fn family_angle_sup() -> AngleBounds {
    let mut per_family = Vec::new();
    for f in FamilyId::ALL {
        let fns = pairing_sum_functions(f);
        let pick = |want_max| {
            fns.iter()
                .map(|&c| extremum_of(c, f.upper(), want_max))
                .reduce(|a, b| better(a, b, want_max))
                .expect("nine functions")
        };
        per_family.push(FamilyBounds {
            family: f,
            sup: pick(true),
            inf: pick(false),
        });
    }
    let global_sup = per_family
        .iter()
        .map(|b| b.sup.clone())
        .reduce(|a, b| better(a, b, true))
        .expect("four families");
    let global_inf = per_family
        .iter()
        .map(|b| b.inf.clone())
        .reduce(|a, b| better(a, b, false))
        .expect("four families");
    AngleBounds {
        per_family,
        global_sup,
        global_inf,
    }
}
