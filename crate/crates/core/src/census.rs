//! Exhaustive enumeration of integer-degree subdivisions of integer-degree
//! triangles.
//!
//! Work is split by triangle (2700 units) and merged in lexicographic order,
//! so results do not depend on the thread count. Each unit scans
//! `u ∈ [1, a)`, `v ∈ [1, b)`, `w ∈ [1, c)` with `x, y, z` forced by the
//! vertex sums, rejects with a double-precision sine table and confirms the
//! survivors with the exact cyclotomic test.

use std::collections::{BTreeSet, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::angles::{canonical_labeled, canonical_subdivision, CevaTuple, Triangle};
use crate::catalog::{family_matches, trivial_class, FamilyId, TrivialKind};
use crate::cyclotomic::{
    ceva_holds_exact_with_cap, DEFAULT_LEVEL_CAP, DEFAULT_PREFILTER_TOL, GUARD_BAND_UPPER,
};
use crate::error::{Error, Result};

pub type IntTuple = [i64; 6];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SolutionClass {
    TrivialI,
    TrivialII,
    TrivialIII,
    Family(FamilyId),
    Sporadic,
}

impl SolutionClass {
    pub fn label(self) -> &'static str {
        match self {
            SolutionClass::TrivialI => TrivialKind::Bisector.label(),
            SolutionClass::TrivialII => TrivialKind::Isosceles.label(),
            SolutionClass::TrivialIII => TrivialKind::Acute3Cycle.label(),
            SolutionClass::Family(f) => f.label(),
            SolutionClass::Sporadic => "sporadic",
        }
    }

    pub fn is_trivial(self) -> bool {
        matches!(
            self,
            SolutionClass::TrivialI | SolutionClass::TrivialII | SolutionClass::TrivialIII
        )
    }

    pub fn is_family(self) -> bool {
        matches!(self, SolutionClass::Family(_))
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ScanConfig {
    pub threads: usize,
    pub level_cap: u64,
    pub prefilter_tol: f64,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            threads: 0,
            level_cap: DEFAULT_LEVEL_CAP,
            prefilter_tol: DEFAULT_PREFILTER_TOL,
        }
    }
}

/// All integer triples `1 ≤ a ≤ b ≤ c`, `a + b + c = 180`, lexicographic.
pub fn enumerate_triangles() -> Vec<Triangle> {
    enumerate_int_triangles()
        .into_iter()
        .map(|[a, b, c]| Triangle::from_ints(a, b, c).expect("valid by construction"))
        .collect()
}

pub fn enumerate_int_triangles() -> Vec<[i64; 3]> {
    let mut out = Vec::with_capacity(2700);
    for a in 1..=60 {
        for b in a..=(180 - a) / 2 {
            out.push([a, b, 180 - a - b]);
        }
    }
    out
}

struct SineTable([f64; 181]);

impl SineTable {
    fn new() -> Self {
        SineTable(std::array::from_fn(|d| (d as f64).to_radians().sin()))
    }
}

/// Result of scanning one triangle.
#[derive(Clone, Debug, Default)]
pub struct Scan {
    /// Exact solutions, lexicographic in `(u, v, w)`.
    pub solutions: Vec<IntTuple>,
    /// Candidates in the guard band that were exact-checked.
    pub guard_band_checked: usize,
    /// Guard-band candidates that turned out to be exact solutions.
    pub guard_band_solutions: Vec<IntTuple>,
    /// Prefilter survivors that failed the exact test.
    pub prefilter_false_positives: usize,
    /// Largest float difference among exact solutions.
    pub max_solution_difference: f64,
}

fn scan_with(table: &SineTable, tri: [i64; 3], cfg: &ScanConfig) -> Result<Scan> {
    let [a, b, c] = tri;
    let s = &table.0;
    let mut out = Scan::default();
    for u in 1..a {
        let (su, sx) = (s[u as usize], s[(a - u) as usize]);
        for v in 1..b {
            let (suv, sxy) = (su * s[v as usize], sx * s[(b - v) as usize]);
            for w in 1..c {
                let diff = (suv * s[w as usize] - sxy * s[(c - w) as usize]).abs();
                if diff > GUARD_BAND_UPPER {
                    continue;
                }
                let t = [u, v, w, a - u, b - v, c - w];
                let exact = ceva_holds_exact_with_cap(&CevaTuple::from_ints(t)?, cfg.level_cap)?;
                if diff > cfg.prefilter_tol {
                    out.guard_band_checked += 1;
                    if exact {
                        out.guard_band_solutions.push(t);
                    }
                } else if !exact {
                    out.prefilter_false_positives += 1;
                }
                if exact {
                    out.max_solution_difference = out.max_solution_difference.max(diff);
                    out.solutions.push(t);
                }
            }
        }
    }
    Ok(out)
}

fn int_triangle(tri: &Triangle) -> Result<[i64; 3]> {
    tri.to_ints()
        .ok_or_else(|| Error::NotIntegerDegree(tri.to_string()))
}

/// Full scan diagnostics for one integer-degree triangle.
pub fn scan_triangle(tri: &Triangle, cfg: &ScanConfig) -> Result<Scan> {
    scan_with(&SineTable::new(), int_triangle(tri)?, cfg)
}

/// Every labeled integer subdivision of `tri` (labels `A ≤ B ≤ C`).
pub fn subdivisions_of(tri: &Triangle) -> Result<Vec<CevaTuple>> {
    let scan = scan_triangle(tri, &ScanConfig::default())?;
    scan.solutions
        .iter()
        .map(|&t| CevaTuple::from_ints(t))
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassCounts {
    pub trivial: usize,
    pub family: usize,
    pub sporadic: usize,
    pub total: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct TriangleRecord {
    pub triangle: [i64; 3],
    pub solutions: Vec<(IntTuple, SolutionClass)>,
    pub labeled: ClassCounts,
    pub canonical: ClassCounts,
    #[serde(skip)]
    pub scan_stats: ScanStats,
}

#[derive(Clone, Debug, Default)]
pub struct ScanStats {
    pub guard_band_checked: usize,
    pub guard_band_solutions: Vec<IntTuple>,
    pub prefilter_false_positives: usize,
    pub max_solution_difference: f64,
}

impl TriangleRecord {
    pub fn has_subdivision(&self) -> bool {
        !self.solutions.is_empty()
    }

    pub fn tri(&self) -> Triangle {
        let [a, b, c] = self.triangle;
        Triangle::from_ints(a, b, c).expect("record triangle is valid")
    }

    /// One representative per orbit of the triangle's own symmetries,
    /// sorted, with its class.
    pub fn canonical_solutions(&self) -> Vec<(IntTuple, SolutionClass)> {
        let class_of: std::collections::HashMap<IntTuple, SolutionClass> =
            self.solutions.iter().copied().collect();
        let reps: BTreeSet<IntTuple> = self
            .solutions
            .iter()
            .map(|(t, _)| canonical_int(t))
            .collect();
        reps.into_iter().map(|t| (t, class_of[&t])).collect()
    }

    pub fn nontrivial(&self) -> impl Iterator<Item = &(IntTuple, SolutionClass)> {
        self.solutions.iter().filter(|(_, c)| !c.is_trivial())
    }
}

fn canonical_int(t: &IntTuple) -> IntTuple {
    canonical_labeled(&CevaTuple::from_ints(*t).expect("solution tuple"))
        .to_ints()
        .expect("integer tuple")
}

fn classify_all(tri: &Triangle, sols: &[IntTuple]) -> Vec<(IntTuple, SolutionClass)> {
    let fam: Vec<(IntTuple, FamilyId)> = family_matches(tri)
        .into_iter()
        .filter_map(|m| Some((m.tuple.to_ints()?, m.family)))
        .collect();
    sols.iter()
        .map(|&t| {
            let tuple = CevaTuple::from_ints(t).expect("solution tuple");
            let class = match trivial_class(&tuple) {
                Some(c) => match c.kind {
                    TrivialKind::Bisector => SolutionClass::TrivialI,
                    TrivialKind::Isosceles => SolutionClass::TrivialII,
                    TrivialKind::Acute3Cycle => SolutionClass::TrivialIII,
                },
                None => match fam.iter().find(|(ft, _)| *ft == t) {
                    Some(&(_, f)) => SolutionClass::Family(f),
                    None => SolutionClass::Sporadic,
                },
            };
            (t, class)
        })
        .collect()
}

fn counts<'a>(it: impl Iterator<Item = &'a SolutionClass>) -> ClassCounts {
    let mut c = ClassCounts {
        trivial: 0,
        family: 0,
        sporadic: 0,
        total: 0,
    };
    for class in it {
        c.total += 1;
        if class.is_trivial() {
            c.trivial += 1;
        } else if class.is_family() {
            c.family += 1;
        } else {
            c.sporadic += 1;
        }
    }
    c
}

fn build_record(table: &SineTable, tri: [i64; 3], cfg: &ScanConfig) -> Result<TriangleRecord> {
    let scan = scan_with(table, tri, cfg)?;
    let t = Triangle::from_ints(tri[0], tri[1], tri[2])?;
    let solutions = classify_all(&t, &scan.solutions);
    let mut rec = TriangleRecord {
        triangle: tri,
        labeled: counts(solutions.iter().map(|(_, c)| c)),
        canonical: ClassCounts {
            trivial: 0,
            family: 0,
            sporadic: 0,
            total: 0,
        },
        solutions,
        scan_stats: ScanStats {
            guard_band_checked: scan.guard_band_checked,
            guard_band_solutions: scan.guard_band_solutions,
            prefilter_false_positives: scan.prefilter_false_positives,
            max_solution_difference: scan.max_solution_difference,
        },
    };
    let canon = rec.canonical_solutions();
    rec.canonical = counts(canon.iter().map(|(_, c)| c));
    Ok(rec)
}

/// Census record for a single integer-degree triangle.
pub fn triangle_record(tri: &Triangle) -> Result<TriangleRecord> {
    build_record(
        &SineTable::new(),
        int_triangle(tri)?,
        &ScanConfig::default(),
    )
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Aggregates {
    pub total_triangles: usize,
    /// Non-isosceles, non-acute, at least one odd angle.
    pub universe_count: usize,
    /// Universe members with no integer subdivision.
    pub no_subdivision_count: usize,
    /// Universe members with at least one integer subdivision.
    pub rescued_count: usize,
    /// Every triangle with no integer subdivision, universe or not.
    pub no_subdivision_all: usize,
}

impl Aggregates {
    pub fn headline(&self) -> String {
        format!(
            "triangles={} universe={} none={} rescued={}",
            self.total_triangles,
            self.universe_count,
            self.no_subdivision_count,
            self.rescued_count
        )
    }
}

#[derive(Clone, Debug)]
pub struct CensusReport {
    pub records: Vec<TriangleRecord>,
    pub aggregates: Aggregates,
}

pub fn in_universe(tri: &Triangle) -> bool {
    !tri.is_isosceles() && !tri.is_acute() && !tri.all_even().unwrap_or(false)
}

/// Run the full census on `threads` workers (0 = rayon default).
pub fn census(threads: usize) -> Result<CensusReport> {
    census_with(&ScanConfig {
        threads,
        ..ScanConfig::default()
    })
}

pub fn census_with(cfg: &ScanConfig) -> Result<CensusReport> {
    let triangles = enumerate_int_triangles();
    let table = SineTable::new();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.threads)
        .build()
        .map_err(|e| Error::Budget(e.to_string()))?;
    let records: Vec<TriangleRecord> = pool.install(|| {
        triangles
            .par_iter()
            .map(|&t| build_record(&table, t, cfg))
            .collect::<Result<_>>()
    })?;
    let mut agg = Aggregates {
        total_triangles: records.len(),
        universe_count: 0,
        no_subdivision_count: 0,
        rescued_count: 0,
        no_subdivision_all: 0,
    };
    for r in &records {
        let has = r.has_subdivision();
        if !has {
            agg.no_subdivision_all += 1;
        }
        if in_universe(&r.tri()) {
            agg.universe_count += 1;
            if has {
                agg.rescued_count += 1;
            } else {
                agg.no_subdivision_count += 1;
            }
        }
    }
    Ok(CensusReport {
        records,
        aggregates: agg,
    })
}

impl CensusReport {
    pub fn record(&self, tri: [i64; 3]) -> Option<&TriangleRecord> {
        self.records
            .binary_search_by(|r| r.triangle.cmp(&tri))
            .ok()
            .map(|i| &self.records[i])
    }

    /// Triangles with no integer subdivision, lexicographic.
    pub fn no_subdivision(&self) -> Vec<[i64; 3]> {
        self.records
            .iter()
            .filter(|r| !r.has_subdivision())
            .map(|r| r.triangle)
            .collect()
    }

    /// Universe triangles rescued by some (necessarily non-trivial) subdivision.
    pub fn rescued(&self) -> Vec<[i64; 3]> {
        self.records
            .iter()
            .filter(|r| r.has_subdivision() && in_universe(&r.tri()))
            .map(|r| r.triangle)
            .collect()
    }

    pub fn guard_band_checked(&self) -> usize {
        self.records
            .iter()
            .map(|r| r.scan_stats.guard_band_checked)
            .sum()
    }

    pub fn guard_band_solutions(&self) -> Vec<IntTuple> {
        self.records
            .iter()
            .flat_map(|r| r.scan_stats.guard_band_solutions.iter().copied())
            .collect()
    }

    pub fn max_solution_difference(&self) -> f64 {
        self.records
            .iter()
            .map(|r| r.scan_stats.max_solution_difference)
            .fold(0.0, f64::max)
    }
}

/// Sporadic census tuples, canonicalized over all six vertex relabelings,
/// deduplicated and sorted.
pub fn derived_sporadics(report: &CensusReport) -> Vec<CevaTuple> {
    let set: BTreeSet<CevaTuple> = report
        .records
        .iter()
        .flat_map(|r| r.solutions.iter())
        .filter(|(_, c)| *c == SolutionClass::Sporadic)
        .map(|(t, _)| canonical_subdivision(&CevaTuple::from_ints(*t).expect("solution")))
        .collect();
    set.into_iter().collect()
}

/// Triangles whose integer subdivisions include a sporadic one.
pub fn sporadic_triangles(report: &CensusReport) -> Vec<[i64; 3]> {
    let set: BTreeSet<[i64; 3]> = report
        .records
        .iter()
        .filter(|r| r.labeled.sporadic > 0)
        .map(|r| r.triangle)
        .collect();
    set.into_iter().collect()
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Theorem1Discrepancy {
    pub triangle: [i64; 3],
    pub isosceles: bool,
    pub acute: bool,
    pub all_even: bool,
    pub trivial_solutions: usize,
    pub all_solutions: usize,
    pub evidence: String,
}

/// Compare the census against "a triangle has an integer subdivision iff it
/// is isosceles, acute, or all-even".
///
/// The forward direction is checked against trivial solutions. For the
/// reverse direction only trivial solutions count: triangles outside the
/// condition that are rescued by family or sporadic subdivisions are the
/// known exceptions and are reported through [`CensusReport::rescued`].
pub fn theorem1_check(report: &CensusReport) -> Vec<Theorem1Discrepancy> {
    let mut out = Vec::new();
    for r in &report.records {
        let tri = r.tri();
        let (iso, acute, even) = (
            tri.is_isosceles(),
            tri.is_acute(),
            tri.all_even().expect("integer triangle"),
        );
        let predicted = iso || acute || even;
        let trivial = r.labeled.trivial;
        let evidence = if predicted && trivial == 0 {
            format!(
                "predicted a trivial subdivision (isosceles={iso}, acute={acute}, even={even}) but none exists; total solutions {}",
                r.labeled.total
            )
        } else if !predicted && trivial > 0 {
            format!("{trivial} trivial solutions outside the predicted classes")
        } else if !predicted && r.labeled.total > 0 && r.labeled.family + r.labeled.sporadic == 0 {
            "rescued without a family or sporadic subdivision".to_string()
        } else {
            continue;
        };
        out.push(Theorem1Discrepancy {
            triangle: r.triangle,
            isosceles: iso,
            acute,
            all_even: even,
            trivial_solutions: trivial,
            all_solutions: r.labeled.total,
            evidence,
        });
    }
    out
}

/// Triangles that have a trivial subdivision per the census but not per
/// [`crate::catalog::trivial_solutions`] or vice versa, and family tuples
/// missing from the census.
pub fn completeness_gaps(report: &CensusReport) -> Vec<String> {
    use crate::catalog::{trivial_solutions, Mode};
    report
        .records
        .par_iter()
        .flat_map_iter(|r| {
            let tri = r.tri();
            let have: HashSet<IntTuple> = r.solutions.iter().map(|(t, _)| *t).collect();
            let mut gaps = Vec::new();
            let trivial = trivial_solutions(&tri, Mode::Integer);
            for (t, _) in &trivial.tuples {
                let t = t.to_ints().expect("integer mode");
                if !have.contains(&t) {
                    gaps.push(format!("{tri}: trivial {t:?} missing from census"));
                }
            }
            if trivial.tuples.len() != r.labeled.trivial {
                gaps.push(format!(
                    "{tri}: {} trivial tuples vs census {}",
                    trivial.tuples.len(),
                    r.labeled.trivial
                ));
            }
            for m in family_matches(&tri) {
                if let Some(t) = m.tuple.to_ints() {
                    if !have.contains(&t) {
                        gaps.push(format!("{tri}: family {t:?} missing from census"));
                    }
                }
            }
            gaps
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{trivial_solutions, Mode};

    fn tri(a: i64, b: i64, c: i64) -> Triangle {
        Triangle::from_ints(a, b, c).unwrap()
    }

    #[test]
    fn enumeration_bounds() {
        let all = enumerate_triangles();
        assert_eq!(all.len(), 2700);
        assert_eq!(all[0], tri(1, 1, 178));
        assert_eq!(all[2699], tri(60, 60, 60));
        let ints = enumerate_int_triangles();
        assert!(ints.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn subdivisions_contain_trivial() {
        for t in [tri(80, 60, 40), tri(20, 80, 80)] {
            let subs: HashSet<_> = subdivisions_of(&t).unwrap().into_iter().collect();
            for (tt, _) in trivial_solutions(&t, Mode::Integer).tuples {
                assert!(subs.contains(&tt), "{t}: {tt}");
            }
        }
        assert!(subdivisions_of(&tri(20, 80, 80)).unwrap().len() >= 79);
        assert!(subdivisions_of(&tri(1, 1, 178)).unwrap().is_empty());
    }

    #[test]
    fn non_integer_triangle_rejected() {
        let t = Triangle::new(
            crate::rational::q(1, 2),
            crate::rational::q(179, 2),
            90.into(),
        )
        .unwrap();
        assert!(matches!(
            subdivisions_of(&t),
            Err(Error::NotIntegerDegree(_))
        ));
    }

    #[test]
    fn record_for_the_family_triangle() {
        let r = triangle_record(&tri(20, 60, 100)).unwrap();
        assert!(r
            .solutions
            .iter()
            .any(|(_, c)| *c == SolutionClass::Family(FamilyId::F2a)));
        // scalene: no non-trivial stabilizer
        assert_eq!(r.labeled.total, r.canonical.total);
        for (t, _) in &r.solutions {
            assert!(
                crate::cyclotomic::ceva_holds_exact(&CevaTuple::from_ints(*t).unwrap()).unwrap()
            );
        }
    }

    #[test]
    fn isosceles_canonical_halves_mirror_pairs() {
        let r = triangle_record(&tri(2, 89, 89)).unwrap();
        assert_eq!(r.labeled.trivial, 88);
        // case (ii) puts P on the axis of symmetry, so the mirror fixes each tuple
        assert_eq!(r.canonical.trivial, 88);
        let r = triangle_record(&tri(60, 60, 60)).unwrap();
        assert!(r.canonical.total < r.labeled.total);
    }
}
