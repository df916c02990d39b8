//! Every non-trivial subdivision of a family triangle with a tiny angle
//! leads, within two levels, to a triangle admitting only the bisectors.

use cevian::catalog::FamilyId;
use cevian::recursion::{small_angle_samples, theorem_check};
use cevian::Rational;

fn main() -> cevian::Result<()> {
    let offsets = [
        Rational::new(1, 3),
        Rational::new(2, 5),
        Rational::new(1, 2),
    ];
    for f in FamilyId::ALL {
        let samples = small_angle_samples(f, &offsets);
        let r = theorem_check(f, &samples)?;
        let chains: usize = r
            .samples
            .iter()
            .flat_map(|s| &s.triangles)
            .map(|t| t.chains.len())
            .sum();
        println!(
            "{}: {} samples, {chains} subdivisions checked, deepest level {}, {} marginal triangles, passed={}",
            f.label(),
            samples.len(),
            r.deepest_level(),
            r.marginal_seen.len(),
            r.passed()
        );
    }
    Ok(())
}
