//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines are always printed; exits non-zero on any failure.

mod common;

use std::collections::BTreeMap;
use std::path::Path;
use std::process::Command;
use std::time::Instant;

use cevian::catalog::{family_angle_sup, family_tuple, trivial_solutions, FamilyId, Mode};
use cevian::census::{census, sporadic_triangles, theorem1_check, CensusReport};
use cevian::cyclotomic::ceva_holds_exact;
use cevian::embed::embed;
use cevian::io::{CENSUS_CSV, NO_SUBDIVISION_TXT, SOLUTIONS_JSONL};
use cevian::recursion::{
    nontrivial_subdivision_finder, small_angle_samples, theorem_check, Finding,
};
use cevian::{CevaTuple, Rational, Triangle};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

struct Ctx {
    report: CensusReport,
    dir8: tempfile::TempDir,
    headline8: String,
    secs8: f64,
}

fn enumerate_z(threads: usize, out: &Path) -> Result<(String, f64), String> {
    let start = Instant::now();
    let o = Command::new(env!("CARGO_BIN_EXE_cevian"))
        .args(["enumerate-z", "--threads", &threads.to_string(), "--out"])
        .arg(out)
        .output()
        .map_err(|e| e.to_string())?;
    let secs = start.elapsed().as_secs_f64();
    if !o.status.success() {
        return Err(String::from_utf8_lossy(&o.stderr).into_owned());
    }
    let stdout = String::from_utf8_lossy(&o.stdout).into_owned();
    let headline = stdout
        .lines()
        .find(|l| l.starts_with("triangles="))
        .ok_or("no headline printed")?
        .to_string();
    Ok((headline, secs))
}

fn c1_counts(ctx: &Ctx) -> Outcome {
    let want = [
        ("triangles", 2700),
        ("universe", 1496),
        ("none", 1377),
        ("rescued", 119),
    ];
    let got: BTreeMap<&str, i64> = ctx
        .headline8
        .split_whitespace()
        .filter_map(|kv| kv.split_once('='))
        .filter_map(|(k, v)| Some((k, v.parse().ok()?)))
        .collect();
    let diffs: Vec<String> = want
        .iter()
        .filter(|(k, v)| got.get(k) != Some(v))
        .map(|(k, v)| format!("{k}: expected {v}, got {:?}", got.get(k)))
        .collect();
    let edge: Vec<String> = theorem1_check(&ctx.report)
        .iter()
        .map(|d| {
            format!(
                "{:?} isosceles={} trivial={}",
                d.triangle, d.isosceles, d.trivial_solutions
            )
        })
        .collect();
    let summary = format!(
        "{} in {:.1}s; edge cases outside the universe with no subdivision: [{}]",
        ctx.headline8,
        ctx.secs8,
        edge.join("; ")
    );
    if diffs.is_empty() {
        Ok(summary)
    } else {
        Err(format!("diff: {}; {summary}", diffs.join(", ")))
    }
}

fn c2_no_subdivision_property(ctx: &Ctx) -> Outcome {
    let text = std::fs::read_to_string(ctx.dir8.path().join(NO_SUBDIVISION_TXT))
        .map_err(|e| e.to_string())?;
    let edge: Vec<[i64; 3]> = theorem1_check(&ctx.report)
        .iter()
        .map(|d| d.triangle)
        .collect();
    let mut bad = Vec::new();
    let mut isosceles = Vec::new();
    let mut n = 0;
    for line in text.lines() {
        let v: Vec<i64> = line.split(' ').map(|x| x.parse().unwrap_or(0)).collect();
        let t = Triangle::from_ints(v[0], v[1], v[2]).map_err(|e| e.to_string())?;
        n += 1;
        if t.is_acute() || t.all_even().unwrap_or(true) {
            bad.push(line.to_string());
        }
        if t.is_isosceles() {
            isosceles.push([v[0], v[1], v[2]]);
        }
    }
    let unexplained: Vec<_> = isosceles.iter().filter(|t| !edge.contains(t)).collect();
    if bad.is_empty() && unexplained.is_empty() {
        Ok(format!(
            "{n} listed, all non-acute with an odd angle; isosceles only {isosceles:?} (edge-case report)"
        ))
    } else {
        Err(format!(
            "acute/all-even: {bad:?}; isosceles not in edge report: {unexplained:?}"
        ))
    }
}

fn c3_oracle(ctx: &Ctx) -> Outcome {
    let mut oracle = common::SineOracle::new();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let report_sols: Vec<CevaTuple> = ctx
        .report
        .records
        .iter()
        .flat_map(|rec| {
            rec.solutions
                .iter()
                .map(|(t, _)| CevaTuple::from_ints(*t).expect("tuple"))
        })
        .collect();
    let mut int_cases = Vec::with_capacity(100_000);
    for i in 0..100_000 {
        int_cases.push(match i % 10 {
            0 => report_sols.choose(&mut rng).expect("solutions").clone(),
            1 => {
                let base = report_sols.choose(&mut rng).expect("solutions").clone();
                common::nudge(&mut rng, &base, 1)
            }
            _ => common::random_int_tuple(&mut rng),
        });
    }
    let mut rat_cases = Vec::with_capacity(1000);
    for i in 0..1000 {
        rat_cases.push(match i % 5 {
            0 | 1 => {
                let f = FamilyId::ALL[rng.gen_range(0..4)];
                let d = rng.gen_range(1..=12);
                let k = rng.gen_range(1..f.upper() * d);
                let t = family_tuple(f, &Rational::new(k, d)).expect("in range");
                if i % 5 == 0 {
                    t
                } else {
                    common::nudge(&mut rng, &t, d)
                }
            }
            _ => common::random_rational_tuple(&mut rng),
        });
    }
    let mut disagreements = Vec::new();
    let mut trues = [0usize; 2];
    for (kind, cases) in [(0, &int_cases), (1, &rat_cases)] {
        for t in cases {
            let exact = ceva_holds_exact(t).map_err(|e| format!("{t}: {e}"))?;
            if exact != oracle.holds(t) {
                disagreements.push(t.to_string());
            }
            trues[kind] += exact as usize;
        }
    }
    let summary = format!(
        "{} integer tuples ({} solutions), {} rational tuples ({} solutions), threshold {:e}",
        int_cases.len(),
        trues[0],
        rat_cases.len(),
        trues[1],
        common::ZERO_THRESHOLD
    );
    if disagreements.is_empty() {
        Ok(format!("100% agreement: {summary}"))
    } else {
        Err(format!(
            "{} disagreements, first {:?}; {summary}",
            disagreements.len(),
            &disagreements[..disagreements.len().min(5)]
        ))
    }
}

fn c4_families() -> Outcome {
    let mut n = 0;
    let mut failed = Vec::new();
    for f in FamilyId::ALL {
        for k in 1..(20 * f.upper()) {
            let t = Rational::new(k, 20);
            let tuple = family_tuple(f, &t).map_err(|e| e.to_string())?;
            n += 1;
            if !ceva_holds_exact(&tuple).map_err(|e| e.to_string())? {
                failed.push(format!("{f} t={t}"));
            }
        }
    }
    if failed.is_empty() {
        Ok(format!("{n}/{n} family tuples at t = k/20 verified"))
    } else {
        Err(format!("{} of {n} failed: {:?}", failed.len(), failed))
    }
}

fn c5_trivial_counts(ctx: &Ctx) -> Outcome {
    let count = |a, b, c| {
        trivial_solutions(
            &Triangle::from_ints(a, b, c).expect("triangle"),
            Mode::Integer,
        )
        .tuples
        .len()
    };
    let (n1, n2) = (count(80, 60, 40), count(20, 80, 80));
    let mut bad = Vec::new();
    let mut acute = 0;
    for rec in &ctx.report.records {
        let t = rec.tri();
        if t.is_isosceles() || !t.is_acute() {
            continue;
        }
        acute += 1;
        let want = if t.all_even().expect("integer") { 3 } else { 2 };
        if rec.labeled.trivial != want {
            bad.push((rec.triangle, rec.labeled.trivial, want));
        }
    }
    if n1 == 3 && n2 == 79 && bad.is_empty() {
        Ok(format!(
            "(80,60,40) -> {n1}, (20,80,80) -> {n2}, {acute} acute scalene triangles match 3/2"
        ))
    } else {
        Err(format!(
            "(80,60,40) -> {n1}, (20,80,80) -> {n2}, mismatches {bad:?}"
        ))
    }
}

fn c6_bounds(ctx: &Ctx) -> Outcome {
    let b = family_angle_sup();
    let tris = sporadic_triangles(&ctx.report);
    let lo = tris.iter().map(|t| t[0]).min().unwrap_or(0);
    let hi = tris.iter().map(|t| t[2]).max().unwrap_or(0);
    let ok = b.global_sup.value == 135 && !tris.is_empty() && hi <= 150 && lo >= 9;
    let msg = format!(
        "family sup {} (attained: {}); {} sporadic triangles, angles in [{lo}, {hi}]",
        b.global_sup.value,
        b.global_sup.attained,
        tris.len()
    );
    if ok {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn c7_recursion() -> Outcome {
    let start = Instant::now();
    let offsets = [
        Rational::new(1, 3),
        Rational::new(2, 5),
        Rational::new(1, 2),
    ];
    let mut lines = Vec::new();
    let mut failed = Vec::new();
    let mut marginal = 0;
    for f in FamilyId::ALL {
        let samples = small_angle_samples(f, &offsets);
        let r = theorem_check(f, &samples).map_err(|e| e.to_string())?;
        // Independent re-check of the marginal triangles against the finder.
        for m in &r.marginal_seen {
            if nontrivial_subdivision_finder(m).map_err(|e| e.to_string())? != Finding::None {
                failed.push(format!("{f}: marginal {m} has a subdivision"));
            }
        }
        marginal += r.marginal_seen.len();
        if !r.passed() {
            failed.push(format!("{f} did not pass"));
        }
        lines.push(format!(
            "{}:{}x≤{}",
            f.short_name(),
            samples.len(),
            r.deepest_level()
        ));
    }
    let secs = start.elapsed().as_secs_f64();
    if secs > 60.0 {
        failed.push(format!("runtime {secs:.1}s exceeds 60s"));
    }
    let msg = format!(
        "{} ; {marginal} marginal triangles all bisector-only; {secs:.2}s",
        lines.join(" ")
    );
    if failed.is_empty() {
        Ok(msg)
    } else {
        Err(format!("{failed:?}; {msg}"))
    }
}

fn c8_determinism(ctx: &Ctx) -> Outcome {
    let dir1 = tempfile::tempdir().map_err(|e| e.to_string())?;
    let (headline1, _) = enumerate_z(1, dir1.path())?;
    let mut diffs = Vec::new();
    let mut sizes = Vec::new();
    for name in [CENSUS_CSV, SOLUTIONS_JSONL, NO_SUBDIVISION_TXT] {
        let a = std::fs::read(dir1.path().join(name)).map_err(|e| e.to_string())?;
        let b = std::fs::read(ctx.dir8.path().join(name)).map_err(|e| e.to_string())?;
        sizes.push(format!("{name} {}B", a.len()));
        if a != b {
            diffs.push(name);
        }
    }
    if diffs.is_empty() && headline1 == ctx.headline8 {
        Ok(format!(
            "threads 1 vs 8 byte-identical: {}",
            sizes.join(", ")
        ))
    } else {
        Err(format!(
            "differing files: {diffs:?}; headlines {headline1:?} vs {:?}",
            ctx.headline8
        ))
    }
}

fn c9_embedding(ctx: &Ctx) -> Outcome {
    let mut by_class: BTreeMap<&str, Vec<CevaTuple>> = BTreeMap::new();
    for rec in &ctx.report.records {
        for (t, c) in &rec.solutions {
            by_class
                .entry(c.label())
                .or_default()
                .push(CevaTuple::from_ints(*t).expect("tuple"));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let per = 100usize.div_ceil(by_class.len());
    let mut picked: Vec<CevaTuple> = by_class
        .values()
        .flat_map(|v| {
            v.choose_multiple(&mut rng, per)
                .cloned()
                .collect::<Vec<_>>()
        })
        .collect();
    picked.truncate(100);
    let mut worst = 0.0f64;
    let mut bad = Vec::new();
    for t in &picked {
        if !ceva_holds_exact(t).map_err(|e| e.to_string())? {
            bad.push(format!("{t} not a solution"));
            continue;
        }
        match embed(t) {
            Ok(e) => worst = worst.max(e.residual(t)),
            Err(err) => bad.push(format!("{t}: {err}")),
        }
    }
    let msg = format!(
        "{} tuples over {} classes, worst relative angle error {worst:.1e}",
        picked.len(),
        by_class.len()
    );
    if bad.is_empty() && picked.len() == 100 && worst < 1e-9 {
        Ok(msg)
    } else {
        Err(format!("{bad:?}; {msg}"))
    }
}

fn main() {
    let dir8 = tempfile::tempdir().expect("tempdir");
    let (headline8, secs8) = match enumerate_z(8, dir8.path()) {
        Ok(h) => h,
        Err(e) => {
            println!("FAIL [1] enumerate-z did not run: {e}");
            std::process::exit(1);
        }
    };
    let ctx = Ctx {
        report: census(0).expect("census"),
        dir8,
        headline8,
        secs8,
    };
    let criteria: Vec<Criterion> = vec![
        ("1 census headline counts", Box::new(|| c1_counts(&ctx))),
        (
            "2 no-subdivision list property",
            Box::new(|| c2_no_subdivision_property(&ctx)),
        ),
        (
            "3 exact kernel vs 50-digit oracle",
            Box::new(|| c3_oracle(&ctx)),
        ),
        ("4 family validity at t = k/20", Box::new(c4_families)),
        (
            "5 trivial-solution counts",
            Box::new(|| c5_trivial_counts(&ctx)),
        ),
        ("6 angle bounds", Box::new(|| c6_bounds(&ctx))),
        ("7 recursion theorem at desk scale", Box::new(c7_recursion)),
        (
            "8 determinism across thread counts",
            Box::new(|| c8_determinism(&ctx)),
        ),
        ("9 embedding residual", Box::new(|| c9_embedding(&ctx))),
    ];
    let mut failures = 0;
    for (name, run) in &criteria {
        match run() {
            Ok(msg) => println!("PASS [{name}] {msg}"),
            Err(msg) => {
                failures += 1;
                println!("FAIL [{name}] {msg}");
            }
        }
    }
    println!(
        "acceptance: {}/{} passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
