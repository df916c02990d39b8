//! Trivial subdivisions (bisectors, isosceles transpositions, acute 3-cycles).
//!
//! cargo run --example trivial_solutions -- 20,80,80

use cevian::catalog::{trivial_solutions, Mode};
use cevian::io::{format_angles, parse_triangle};

fn main() -> cevian::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "80,60,40".into());
    let tri = parse_triangle(&arg)?;
    let int = trivial_solutions(&tri, Mode::Integer);
    println!(
        "triangle {tri}: {} integer trivial tuples",
        int.tuples.len()
    );
    for (t, c) in int.tuples.iter().take(12) {
        println!("  {:<12} {}", c.kind.label(), format_angles(t.entries()));
    }
    if int.tuples.len() > 12 {
        println!("  ...");
    }
    let rat = trivial_solutions(&tri, Mode::Rational);
    for c in &rat.continua {
        println!(
            "continuum at apex {}: parameter in (0, {})",
            c.labels[c.apex()],
            c.leg()
        );
    }
    Ok(())
}
