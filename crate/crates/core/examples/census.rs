//! Enumerate every integer-degree subdivision of every integer-degree
//! triangle and write the census files.
//!
//! cargo run --release --example census -- [out-dir]

use std::path::PathBuf;
use std::time::Instant;

use cevian::census::{census, theorem1_check};
use cevian::io::write_census_files;

fn main() -> cevian::Result<()> {
    let out = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| "census-out".into());
    let start = Instant::now();
    let report = census(0)?;
    println!(
        "{}  ({:.2?})",
        report.aggregates.headline(),
        start.elapsed()
    );
    println!(
        "guard band: {} candidates, {} solutions; largest float residual of a solution {:.1e}",
        report.guard_band_checked(),
        report.guard_band_solutions().len(),
        report.max_solution_difference()
    );
    for d in theorem1_check(&report) {
        println!(
            "no subdivision outside the universe: {:?} ({})",
            d.triangle, d.evidence
        );
    }
    for p in write_census_files(&report, &out)? {
        println!("wrote {}", p.display());
    }
    Ok(())
}
