//! Cyclotomic polynomials and vanishing sums of roots of unity.

use cevian::cyclotomic::{
    context, cyclotomic_poly, is_zero_sum_of_roots, SignedExponentSum, DEFAULT_LEVEL_CAP,
};

fn main() -> cevian::Result<()> {
    for m in [1, 6, 12, 30, 105] {
        let p = cyclotomic_poly(m)?;
        let c: Vec<String> = p.coeffs().iter().map(|c| c.to_string()).collect();
        println!(
            "Phi_{m}: degree {:?}, coefficients [{}]",
            p.degree(),
            c.join(" ")
        );
    }

    // 1 + ζ^2 + ζ^4 = 0 for a primitive 6th root ζ; 1 + ζ^3 = 0.
    let ctx = context(6, DEFAULT_LEVEL_CAP)?;
    for terms in [
        vec![(1, 0), (1, 2), (1, 4)],
        vec![(1, 0), (1, 3)],
        vec![(1, 0), (1, 1)],
    ] {
        let s = SignedExponentSum::new(6, terms.clone());
        println!("m=6 {terms:?} vanishes: {}", is_zero_sum_of_roots(&s, &ctx));
    }
    Ok(())
}
