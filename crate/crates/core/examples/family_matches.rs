//! Which one-parameter families produce a given triangle.
//!
//! cargo run --example family_matches -- 1,181/2,177/2

use cevian::catalog::{family_matches, family_tuple, FamilyId};
use cevian::io::{format_angles, parse_triangle};
use cevian::Rational;

fn main() -> cevian::Result<()> {
    for f in FamilyId::ALL {
        let t = Rational::new(f.upper(), 3);
        println!(
            "{} at t={t}: {}",
            f.label(),
            format_angles(family_tuple(f, &t)?.entries())
        );
    }
    let arg = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "20,60,100".into());
    let tri = parse_triangle(&arg)?;
    let ms = family_matches(&tri);
    println!("\n{tri}: {} family subdivisions", ms.len());
    for m in ms {
        println!(
            "  {} t={:<6} {}",
            m.family.label(),
            m.t.to_string(),
            format_angles(m.tuple.entries())
        );
    }
    Ok(())
}
