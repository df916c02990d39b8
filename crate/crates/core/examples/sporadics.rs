//! Sporadic integer subdivisions found by the census, and the angle bounds
//! that limit where non-trivial subdivisions can occur.

use cevian::catalog::{family_angle_sup, sporadic_min_angle, SPORADIC_MAX_ANGLE};
use cevian::census::{census, derived_sporadics, sporadic_triangles};
use cevian::io::format_angles;

fn main() -> cevian::Result<()> {
    let bounds = family_angle_sup();
    for fb in &bounds.per_family {
        println!(
            "{}: angles in ({}, {}), sup attained: {}",
            fb.family.label(),
            fb.inf.value,
            fb.sup.value,
            fb.sup.attained
        );
    }
    println!("all families: sup {}", bounds.global_sup.value);

    let report = census(0)?;
    let tuples = derived_sporadics(&report);
    let tris = sporadic_triangles(&report);
    println!(
        "\n{} sporadic tuples up to relabeling on {} triangles",
        tuples.len(),
        tris.len()
    );
    let lo = tris.iter().map(|t| t[0]).min().unwrap_or(0);
    let hi = tris.iter().map(|t| t[2]).max().unwrap_or(0);
    println!(
        "smallest angle {lo} (bound {}), largest {hi} (bound {SPORADIC_MAX_ANGLE})",
        sporadic_min_angle()
    );
    for t in tuples.iter().take(10) {
        println!("  {}", format_angles(t.entries()));
    }
    Ok(())
}
