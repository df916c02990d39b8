//! Text formats: angle lists on the command line and census output files.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::angles::{CevaTuple, Triangle};
use crate::census::CensusReport;
use crate::error::{Error, Result};
use crate::rational::Rational;

pub const CENSUS_CSV: &str = "census.csv";
pub const SOLUTIONS_JSONL: &str = "solutions.jsonl";
pub const NO_SUBDIVISION_TXT: &str = "no_subdivision.txt";

pub const CENSUS_CSV_HEADER: &str =
    "a,b,c,n_trivial,n_family,n_sporadic,n_total_labeled,n_total_canonical";

fn parse_list<const N: usize>(s: &str) -> Result<[Rational; N]> {
    let parts: Vec<Rational> = s
        .split(',')
        .map(|p| p.trim().parse())
        .collect::<Result<_>>()?;
    parts
        .try_into()
        .map_err(|v: Vec<Rational>| Error::Parse(format!("expected {N} angles, got {}", v.len())))
}

/// `"a,b,c"` with each angle an integer or `p/q`.
pub fn parse_triangle(s: &str) -> Result<Triangle> {
    let [a, b, c] = parse_list::<3>(s)?;
    Triangle::new(a, b, c)
}

/// `"u,v,w,x,y,z"` with each angle an integer or `p/q`.
pub fn parse_tuple(s: &str) -> Result<CevaTuple> {
    CevaTuple::new(parse_list::<6>(s)?)
}

/// Comma-separated angles, the inverse of [`parse_triangle`] and [`parse_tuple`].
pub fn format_angles(angles: &[Rational]) -> String {
    angles
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// One line of `solutions.jsonl`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionLine {
    pub triangle: [i64; 3],
    pub tuple: [i64; 6],
    pub class: String,
}

pub fn census_csv(report: &CensusReport) -> String {
    let mut s = String::from(CENSUS_CSV_HEADER);
    s.push('\n');
    for r in &report.records {
        let [a, b, c] = r.triangle;
        s.push_str(&format!(
            "{a},{b},{c},{},{},{},{},{}\n",
            r.labeled.trivial,
            r.labeled.family,
            r.labeled.sporadic,
            r.labeled.total,
            r.canonical.total
        ));
    }
    s
}

pub fn solutions_jsonl(report: &CensusReport) -> String {
    let mut s = String::new();
    for r in &report.records {
        for (tuple, class) in r.canonical_solutions() {
            let line = SolutionLine {
                triangle: r.triangle,
                tuple,
                class: class.label().to_string(),
            };
            s.push_str(&serde_json::to_string(&line).expect("plain struct serializes"));
            s.push('\n');
        }
    }
    s
}

pub fn no_subdivision_txt(report: &CensusReport) -> String {
    let mut tris: Vec<[i64; 3]> = report
        .records
        .iter()
        .filter(|r| !r.has_subdivision())
        .map(|r| r.triangle)
        .collect();
    tris.sort();
    tris.iter()
        .map(|[a, b, c]| format!("{a} {b} {c}\n"))
        .collect()
}

pub fn parse_solutions_jsonl(s: &str) -> Result<Vec<SolutionLine>> {
    s.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| serde_json::from_str(l).map_err(|e| Error::Parse(e.to_string())))
        .collect()
}

/// Write the three census files into `dir`, creating it if needed.
pub fn write_census_files(report: &CensusReport, dir: &Path) -> Result<[PathBuf; 3]> {
    fs::create_dir_all(dir)?;
    let out = [
        (CENSUS_CSV, census_csv(report)),
        (SOLUTIONS_JSONL, solutions_jsonl(report)),
        (NO_SUBDIVISION_TXT, no_subdivision_txt(report)),
    ]
    .map(|(name, body)| {
        let p = dir.join(name);
        fs::write(&p, body).map(|_| p)
    });
    let [a, b, c] = out;
    Ok([a?, b?, c?])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn parse_angles() {
        let t = parse_triangle("1, 181/2,177/2").unwrap();
        assert_eq!(t.angles(), &[q(1, 1), q(177, 2), q(181, 2)]);
        assert!(parse_triangle("60,60").is_err());
        assert!(parse_triangle("60,60,61").is_err());
        assert!(parse_triangle("60,60,x").is_err());
        let u = parse_tuple("30,10,40,70,10,20").unwrap();
        assert_eq!(u.to_ints(), Some([30, 10, 40, 70, 10, 20]));
        assert!(parse_tuple("30,10,40,70,10,0").is_err());
        assert!(parse_tuple("30,10,40,70,10,20,1").is_err());
        let t = parse_triangle("1/2,59/2,150").unwrap();
        assert_eq!(format_angles(t.angles()), "1/2,59/2,150");
    }

    #[test]
    fn solution_line_round_trip() {
        let l = SolutionLine {
            triangle: [20, 60, 100],
            tuple: [10, 40, 30, 10, 20, 70],
            class: "family-2a".into(),
        };
        let s = serde_json::to_string(&l).unwrap();
        assert_eq!(
            s,
            r#"{"triangle":[20,60,100],"tuple":[10,40,30,10,20,70],"class":"family-2a"}"#
        );
        assert_eq!(parse_solutions_jsonl(&s).unwrap(), vec![l]);
    }
}
