mod common;

use cevian::catalog::{family_tuple, FamilyId};
use cevian::cyclotomic::ceva_holds_exact;
use cevian::{CevaTuple, Rational};
use common::SineOracle;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn oracle_sanity() {
    let mut o = SineOracle::new();
    assert!(o.holds(&CevaTuple::from_ints([30, 10, 40, 70, 10, 20]).unwrap()));
    assert!(!o.holds(&CevaTuple::from_ints([45, 45, 45, 15, 15, 15]).unwrap()));
    // A family tuple shifted by 1e-12 degrees: the sides differ by ~1e-14,
    // below any f64 prefilter tolerance but far above the oracle threshold.
    let base = family_tuple(FamilyId::F2a, &Rational::new(10, 1)).unwrap();
    let eps = Rational::new(1, 1_000_000_000_000);
    let mut e = base.entries().clone();
    e[2] = &e[2] + &eps;
    e[3] = &e[3] - &eps;
    let near = CevaTuple::new(e).unwrap();
    assert!(cevian::cyclotomic::ceva_float_difference(&near) < 1e-9);
    assert!(!o.holds(&near));
}

#[test]
fn exact_kernel_matches_oracle_on_mixed_sample() {
    let mut o = SineOracle::new();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut checked = 0;
    for f in FamilyId::ALL {
        for k in 1..(f.upper() * 3) {
            let t = family_tuple(f, &Rational::new(k, 3)).unwrap();
            assert!(o.holds(&t), "{t}");
            assert!(ceva_holds_exact(&t).unwrap());
            let n = common::nudge(&mut rng, &t, 3);
            assert_eq!(ceva_holds_exact(&n).unwrap(), o.holds(&n), "{n}");
            checked += 2;
        }
    }
    for _ in 0..2000 {
        let t = common::random_int_tuple(&mut rng);
        assert_eq!(ceva_holds_exact(&t).unwrap(), o.holds(&t), "{t}");
        checked += 1;
    }
    assert!(checked > 2000);
}
