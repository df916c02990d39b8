//! Recursive subdivision: child triangles, marginal triangles, and checks
//! that repeated non-bisector subdivision runs into a triangle whose only
//! remaining subdivisions are the trivial ones.
//!
//! A triangle is *marginal* when its smallest angle is below `ε` (default 1)
//! and its largest angle exceeds 135. The family bound (every family
//! triangle has all angles below 135) and the sporadic bounds (largest at
//! most 150, smallest at least 180/21) then rule out every non-trivial
//! subdivision.

use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;

use crate::angles::{CevaTuple, Triangle};
use crate::catalog::{
    family_matches, family_tuple, pairing_sum_functions, sporadic_min_angle, FamilyId, FamilyMatch,
    FAMILY_ANGLE_SUP, SPORADIC_MAX_ANGLE,
};
use crate::census::{triangle_record, SolutionClass, TriangleRecord};
use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MarginalCriteria {
    pub small: Rational,
    pub large: Rational,
}

impl Default for MarginalCriteria {
    fn default() -> Self {
        MarginalCriteria {
            small: 1.into(),
            large: FAMILY_ANGLE_SUP.into(),
        }
    }
}

impl MarginalCriteria {
    pub fn new(small: Rational, large: Rational) -> Result<Self> {
        if !small.is_positive() || small >= large || large >= 180 {
            return Err(Error::Parse(format!(
                "marginal thresholds must satisfy 0 < {small} < {large} < 180"
            )));
        }
        Ok(MarginalCriteria { small, large })
    }
}

fn third(a: &Rational, b: &Rational) -> Rational {
    Rational::from(180) - a - b
}

fn tri(a: Rational, b: Rational, c: Rational) -> Triangle {
    Triangle::new(a, b, c).expect("child angles are positive and sum to 180")
}

/// The three triangles `PAB`, `PBC`, `PCA`.
pub fn children_cevian(t: &CevaTuple) -> [Triangle; 3] {
    let [u, v, w, x, y, z] = t.entries();
    [
        tri(u.clone(), y.clone(), third(u, y)),
        tri(v.clone(), z.clone(), third(v, z)),
        tri(w.clone(), x.clone(), third(w, x)),
    ]
}

/// The six triangles cut out by the three full cevians through `P`.
pub fn children_full(t: &CevaTuple) -> [Triangle; 6] {
    let [u, v, w, x, y, z] = t.entries();
    [
        tri(u.clone(), x + w, v + y + z),
        tri(y.clone(), u + x + w, v + z),
        tri(v.clone(), y + u, w + z + x),
        tri(z.clone(), v + y + u, w + x),
        tri(w.clone(), z + v, u + x + y),
        tri(x.clone(), w + z + v, u + y),
    ]
}

/// Distinct children under both models, sorted.
pub fn all_children(t: &CevaTuple) -> Vec<Triangle> {
    let set: BTreeSet<Triangle> = children_cevian(t)
        .into_iter()
        .chain(children_full(t))
        .collect();
    set.into_iter().collect()
}

pub fn is_marginal(t: &Triangle, crit: &MarginalCriteria) -> bool {
    t.smallest() < &crit.small && t.largest() > &crit.large
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Certificate {
    Certified,
    NotCertified,
}

/// Sporadic subdivisions are impossible by the angle bounds alone.
pub fn sporadics_excluded_by_bounds(t: &Triangle) -> bool {
    t.smallest() < &sporadic_min_angle() || t.largest() > &SPORADIC_MAX_ANGLE
}

/// Family subdivisions are impossible by the angle bound alone.
pub fn families_excluded_by_bounds(t: &Triangle) -> bool {
    t.largest() >= &FAMILY_ANGLE_SUP
}

/// `Certified` means the angle bisectors give the only subdivision with
/// rational angles: bounds exclude families and sporadics, and the triangle
/// is neither isosceles nor acute.
pub fn only_bisector_certificate(t: &Triangle) -> Certificate {
    let bounds = t.largest() > &SPORADIC_MAX_ANGLE
        || (t.smallest() < &sporadic_min_angle() && t.largest() > &FAMILY_ANGLE_SUP);
    if bounds && !t.is_isosceles() && !t.is_acute() {
        Certificate::Certified
    } else {
        Certificate::NotCertified
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "source", rename_all = "kebab-case")]
#[allow(clippy::large_enum_variant)]
pub enum NontrivialSource {
    Family(FamilyMatch),
    Sporadic,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NontrivialSubdivision {
    pub tuple: CevaTuple,
    pub source: NontrivialSource,
}

impl NontrivialSubdivision {
    pub fn label(&self) -> &'static str {
        match &self.source {
            NontrivialSource::Family(m) => m.family.label(),
            NontrivialSource::Sporadic => "sporadic",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Finding {
    /// Non-trivial subdivisions exist. `complete` is false when the list may
    /// be missing sporadic subdivisions with non-integer angles.
    Found {
        subdivisions: Vec<NontrivialSubdivision>,
        complete: bool,
    },
    /// No family subdivision and sporadics are excluded.
    None,
    /// No family subdivision, and sporadics cannot be ruled out.
    UnknownSporadicStatus,
}

static RECORDS: OnceLock<Mutex<HashMap<[i64; 3], Arc<TriangleRecord>>>> = OnceLock::new();

fn cached_record(t: &Triangle) -> Result<Arc<TriangleRecord>> {
    let key = t
        .to_ints()
        .ok_or_else(|| Error::NotIntegerDegree(t.to_string()))?;
    let map = RECORDS.get_or_init(Default::default);
    if let Some(r) = map.lock().expect("record cache poisoned").get(&key) {
        return Ok(Arc::clone(r));
    }
    let rec = Arc::new(triangle_record(t)?);
    Ok(Arc::clone(
        map.lock()
            .expect("record cache poisoned")
            .entry(key)
            .or_insert(rec),
    ))
}

/// Non-trivial (family or sporadic) subdivisions of `t`.
///
/// Families are matched exactly at any rational `t`. Sporadics are ruled out
/// by the angle bounds, or, for integer-degree triangles, looked up in the
/// integer census; otherwise their status is unknown.
pub fn nontrivial_subdivision_finder(t: &Triangle) -> Result<Finding> {
    let mut subs: Vec<NontrivialSubdivision> = family_matches(t)
        .into_iter()
        .map(|m| NontrivialSubdivision {
            tuple: m.tuple.clone(),
            source: NontrivialSource::Family(m),
        })
        .collect();
    let known = if sporadics_excluded_by_bounds(t) {
        true
    } else if t.is_z_degree() {
        let rec = cached_record(t)?;
        for &(tuple, class) in &rec.solutions {
            if class == SolutionClass::Sporadic {
                subs.push(NontrivialSubdivision {
                    tuple: CevaTuple::from_ints(tuple)?,
                    source: NontrivialSource::Sporadic,
                });
            }
        }
        true
    } else {
        false
    };
    Ok(match (subs.is_empty(), known) {
        (true, true) => Finding::None,
        (true, false) => Finding::UnknownSporadicStatus,
        (false, complete) => Finding::Found {
            subdivisions: subs,
            complete,
        },
    })
}

/// How a chain of subdivisions first reached a marginal triangle.
#[derive(Clone, Debug, Serialize)]
pub struct Chain {
    pub tuple: CevaTuple,
    /// Recursion level at which a marginal child appeared (1 = direct child).
    pub level: Option<usize>,
    pub marginal_child: Option<Triangle>,
    /// For level ≥ 2: the non-marginal child that was subdivided further,
    /// with one chain per non-trivial subdivision of it.
    pub via: Option<Via>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Via {
    pub child: Triangle,
    /// False when the child's subdivision list may miss non-integer sporadics.
    pub complete: bool,
    pub chains: Vec<Chain>,
}

impl Chain {
    pub fn reached_within(&self, max_level: usize) -> bool {
        self.level.is_some_and(|l| l <= max_level)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SmallAngleTriangle {
    pub triangle: Triangle,
    pub chains: Vec<Chain>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SampleReport {
    pub t: Rational,
    pub triangles: Vec<SmallAngleTriangle>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremReport {
    pub family: FamilyId,
    pub max_level: usize,
    pub samples: Vec<SampleReport>,
    /// Every marginal triangle met along the way.
    pub marginal_seen: Vec<Triangle>,
    /// Marginal triangles for which the finder did not return `None`.
    pub marginal_violations: Vec<Triangle>,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.marginal_violations.is_empty()
            && self.samples.iter().all(|s| {
                !s.triangles.is_empty()
                    && s.triangles.iter().all(|tr| {
                        !tr.chains.is_empty()
                            && tr.chains.iter().all(|c| c.reached_within(self.max_level))
                    })
            })
    }

    pub fn deepest_level(&self) -> usize {
        self.samples
            .iter()
            .flat_map(|s| &s.triangles)
            .flat_map(|t| &t.chains)
            .filter_map(|c| c.level)
            .max()
            .unwrap_or(0)
    }
}

/// The distinct triangles a family produces at `t`: one per perfect matching
/// of `(u, v, w)` with `(x, y, z)`.
pub fn family_triangles(f: FamilyId, t: &Rational) -> Result<Vec<Triangle>> {
    let tuple = family_tuple(f, t)?;
    let e = tuple.entries();
    const MATCHINGS: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let set: BTreeSet<Triangle> = MATCHINGS
        .iter()
        .map(|p| {
            Triangle::new(
                &e[0] + &e[3 + p[0]],
                &e[1] + &e[3 + p[1]],
                &e[2] + &e[3 + p[2]],
            )
            .expect("matching sums are positive and total 180")
        })
        .collect();
    Ok(set.into_iter().collect())
}

/// Parameter values where some family triangle has an angle equal to each
/// `offset`, near whichever range endpoints make an angle vanish.
pub fn small_angle_samples(f: FamilyId, offsets: &[Rational]) -> Vec<Rational> {
    let fns = pairing_sum_functions(f);
    let hi = f.upper();
    let lo_slope = fns
        .iter()
        .filter(|c| c.0 == 0 && c.1 > 0)
        .map(|c| c.1)
        .max();
    let hi_slope = fns
        .iter()
        .filter(|c| c.1 < 0 && c.0 + c.1 * hi == 0)
        .map(|c| -c.1)
        .max();
    let mut out = BTreeSet::new();
    for s in offsets {
        if let Some(k) = lo_slope {
            out.insert(s / k);
        }
        if let Some(k) = hi_slope {
            out.insert(Rational::from(hi) - s / k);
        }
    }
    out.into_iter().filter(|t| f.in_range(t)).collect()
}

struct Checker<'a> {
    crit: &'a MarginalCriteria,
    max_level: usize,
    marginal_seen: BTreeSet<Triangle>,
    finder_cache: HashMap<Triangle, Finding>,
}

impl Checker<'_> {
    fn find(&mut self, t: &Triangle) -> Result<Finding> {
        if let Some(f) = self.finder_cache.get(t) {
            return Ok(f.clone());
        }
        let f = nontrivial_subdivision_finder(t)?;
        self.finder_cache.insert(t.clone(), f.clone());
        Ok(f)
    }

    fn chain(&mut self, tuple: &CevaTuple, level: usize) -> Result<Chain> {
        let children = all_children(tuple);
        let marginal: Vec<&Triangle> = children
            .iter()
            .filter(|c| is_marginal(c, self.crit))
            .collect();
        self.marginal_seen
            .extend(marginal.iter().map(|t| (*t).clone()));
        if let Some(m) = marginal.first() {
            return Ok(Chain {
                tuple: tuple.clone(),
                level: Some(level),
                marginal_child: Some((*m).clone()),
                via: None,
            });
        }
        let failed = Chain {
            tuple: tuple.clone(),
            level: None,
            marginal_child: None,
            via: None,
        };
        if level >= self.max_level {
            return Ok(failed);
        }
        let mut candidates = Vec::new();
        for child in children {
            if let Finding::Found {
                subdivisions,
                complete,
            } = self.find(&child)?
            {
                candidates.push((!complete, child, subdivisions));
            }
        }
        candidates.sort_by(|a, b| (a.0, a.1.smallest()).cmp(&(b.0, b.1.smallest())));
        for (incomplete, child, subdivisions) in candidates {
            let mut sub_chains = Vec::with_capacity(subdivisions.len());
            for s in &subdivisions {
                sub_chains.push(self.chain(&s.tuple, level + 1)?);
            }
            if sub_chains.iter().all(|c| c.level.is_some()) {
                let deepest = sub_chains.iter().filter_map(|c| c.level).max();
                return Ok(Chain {
                    tuple: tuple.clone(),
                    level: deepest,
                    marginal_child: None,
                    via: Some(Via {
                        child,
                        complete: !incomplete,
                        chains: sub_chains,
                    }),
                });
            }
        }
        Ok(failed)
    }
}

/// For every sample `t`, every family triangle with an angle below `ε`, and
/// every non-trivial subdivision of it, look for a marginal child within
/// `max_level` levels (re-subdividing a non-marginal child at each level).
pub fn theorem_check(f: FamilyId, samples: &[Rational]) -> Result<TheoremReport> {
    theorem_check_with(f, samples, &MarginalCriteria::default(), 2)
}

pub fn theorem_check_with(
    f: FamilyId,
    samples: &[Rational],
    crit: &MarginalCriteria,
    max_level: usize,
) -> Result<TheoremReport> {
    let mut checker = Checker {
        crit,
        max_level,
        marginal_seen: BTreeSet::new(),
        finder_cache: HashMap::new(),
    };
    let mut reports = Vec::new();
    for t in samples {
        let small: Vec<Triangle> = family_triangles(f, t)?
            .into_iter()
            .filter(|tri| tri.smallest() < &crit.small)
            .collect();
        if small.is_empty() {
            return Err(Error::SampleRejected(format!(
                "family {f} at t={t} has no triangle with an angle below {}",
                crit.small
            )));
        }
        let mut triangles = Vec::new();
        for tri in small {
            let subs = match checker.find(&tri)? {
                Finding::Found { subdivisions, .. } => subdivisions,
                _ => Vec::new(),
            };
            let mut chains = Vec::new();
            for s in &subs {
                chains.push(checker.chain(&s.tuple, 1)?);
            }
            triangles.push(SmallAngleTriangle {
                triangle: tri,
                chains,
            });
        }
        reports.push(SampleReport {
            t: t.clone(),
            triangles,
        });
    }
    let marginal_seen: Vec<Triangle> = checker.marginal_seen.iter().cloned().collect();
    let mut marginal_violations = Vec::new();
    for m in &marginal_seen {
        if checker.find(m)? != Finding::None {
            marginal_violations.push(m.clone());
        }
    }
    Ok(TheoremReport {
        family: f,
        max_level,
        samples: reports,
        marginal_seen,
        marginal_violations,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    AvoidBisector,
    Exhaustive,
}

impl std::str::FromStr for Strategy {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "avoid-bisector" => Ok(Strategy::AvoidBisector),
            "exhaustive" => Ok(Strategy::Exhaustive),
            _ => Err(Error::Parse(format!("unknown strategy {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NodeStatus {
    /// No family or sporadic subdivision. Only trivial subdivisions remain,
    /// which is the bisectors alone unless the triangle is isosceles or acute.
    BisectorOnly,
    HasNontrivial,
    Unknown,
}

#[derive(Clone, Debug, Serialize)]
pub struct Branch {
    pub tuple: CevaTuple,
    pub class: &'static str,
    pub children: Vec<SubdivisionNode>,
}

impl Branch {
    /// Fewest steps from this subdivision to a `BisectorOnly` descendant
    /// (1 when one of its children is bisector-only).
    pub fn bisector_only_distance(&self) -> Option<usize> {
        self.children
            .iter()
            .filter_map(SubdivisionNode::bisector_only_distance)
            .min()
            .map(|d| d + 1)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SubdivisionNode {
    pub triangle: Triangle,
    pub status: NodeStatus,
    /// Set when the node was not expanded because of the depth limit.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub truncated: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub branches: Vec<Branch>,
}

impl SubdivisionNode {
    pub fn node_count(&self) -> usize {
        1 + self
            .branches
            .iter()
            .flat_map(|b| &b.children)
            .map(SubdivisionNode::node_count)
            .sum::<usize>()
    }

    /// Fewest steps down to a `BisectorOnly` node (0 for this node).
    pub fn bisector_only_distance(&self) -> Option<usize> {
        if self.status == NodeStatus::BisectorOnly {
            return Some(0);
        }
        self.branches
            .iter()
            .filter_map(Branch::bisector_only_distance)
            .min()
    }

    /// Branches applied at exactly `depth` (the root's own branches are at 0).
    pub fn branches_at(&self, depth: usize) -> Vec<&Branch> {
        if depth == 0 {
            return self.branches.iter().collect();
        }
        self.branches
            .iter()
            .flat_map(|b| &b.children)
            .flat_map(|c| c.branches_at(depth - 1))
            .collect()
    }

    /// Whether some proper descendant has triangle `t`.
    pub fn has_descendant(&self, t: &Triangle) -> bool {
        self.branches
            .iter()
            .flat_map(|b| &b.children)
            .any(|c| &c.triangle == t || c.has_descendant(t))
    }

    /// Status of every leaf together with whether it was cut by the depth limit.
    pub fn leaves(&self) -> Vec<(&Triangle, NodeStatus, bool)> {
        if self.branches.is_empty() {
            return vec![(&self.triangle, self.status, self.truncated)];
        }
        self.branches
            .iter()
            .flat_map(|b| &b.children)
            .flat_map(SubdivisionNode::leaves)
            .collect()
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ExploreBudget {
    pub max_depth: usize,
    pub max_nodes: usize,
}

impl Default for ExploreBudget {
    fn default() -> Self {
        ExploreBudget {
            max_depth: 8,
            max_nodes: 1_000_000,
        }
    }
}

struct Explorer {
    strategy: Strategy,
    budget: ExploreBudget,
    nodes: usize,
    finder_cache: HashMap<Triangle, Finding>,
}

impl Explorer {
    fn node(&mut self, tri: Triangle, depth: usize) -> Result<SubdivisionNode> {
        self.nodes += 1;
        if self.nodes > self.budget.max_nodes {
            return Err(Error::Budget(format!(
                "more than {} nodes",
                self.budget.max_nodes
            )));
        }
        let finding = match self.finder_cache.get(&tri) {
            Some(f) => f.clone(),
            None => {
                let f = nontrivial_subdivision_finder(&tri)?;
                self.finder_cache.insert(tri.clone(), f.clone());
                f
            }
        };
        let status = match &finding {
            Finding::Found { .. } => NodeStatus::HasNontrivial,
            Finding::None => NodeStatus::BisectorOnly,
            Finding::UnknownSporadicStatus => NodeStatus::Unknown,
        };
        let options: Vec<(CevaTuple, &'static str)> = match self.strategy {
            Strategy::AvoidBisector => match finding {
                Finding::Found { subdivisions, .. } => subdivisions
                    .into_iter()
                    .map(|s| {
                        let label = s.label();
                        (s.tuple, label)
                    })
                    .collect(),
                _ => Vec::new(),
            },
            Strategy::Exhaustive => {
                let rec = cached_record(&tri)?;
                rec.solutions
                    .iter()
                    .map(|&(t, c)| Ok((CevaTuple::from_ints(t)?, c.label())))
                    .collect::<Result<_>>()?
            }
        };
        if depth >= self.budget.max_depth {
            return Ok(SubdivisionNode {
                triangle: tri,
                status,
                truncated: !options.is_empty(),
                branches: Vec::new(),
            });
        }
        let mut branches = Vec::with_capacity(options.len());
        for (tuple, class) in options {
            let children = children_cevian(&tuple)
                .into_iter()
                .map(|c| self.node(c, depth + 1))
                .collect::<Result<_>>()?;
            branches.push(Branch {
                tuple,
                class,
                children,
            });
        }
        Ok(SubdivisionNode {
            triangle: tri,
            status,
            truncated: false,
            branches,
        })
    }
}

/// Expand the tree of recursive subdivisions of `tri` (three cevian children
/// per subdivision). `Exhaustive` needs an integer-degree triangle and
/// follows every integer subdivision; `AvoidBisector` follows only family and
/// sporadic subdivisions.
pub fn explore(
    tri: &Triangle,
    strategy: Strategy,
    budget: ExploreBudget,
) -> Result<SubdivisionNode> {
    if strategy == Strategy::Exhaustive && !tri.is_z_degree() {
        return Err(Error::NotIntegerDegree(tri.to_string()));
    }
    let mut ex = Explorer {
        strategy,
        budget,
        nodes: 0,
        finder_cache: HashMap::new(),
    };
    ex.node(tri.clone(), 0)
}
