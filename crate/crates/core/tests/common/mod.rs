//! Shared test support: a high-precision evaluation of the sine identity,
//! independent of the cyclotomic kernel, and seeded tuple samplers.
#![allow(dead_code)]

use std::collections::HashMap;

use astro_float::{BigFloat, Consts, RoundingMode};
use cevian::{CevaTuple, Rational};
use num_traits::ToPrimitive;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Working precision in bits (about 57 decimal digits).
pub const PRECISION: usize = 192;
/// |sin u sin v sin w − sin x sin y sin z| below this counts as zero.
pub const ZERO_THRESHOLD: f64 = 1e-40;

const RM: RoundingMode = RoundingMode::ToEven;

pub struct SineOracle {
    consts: Consts,
    pi: BigFloat,
    cache: HashMap<(i64, i64), BigFloat>,
    threshold: BigFloat,
}

impl SineOracle {
    pub fn new() -> Self {
        let mut consts = Consts::new().expect("constants cache");
        let pi = consts.pi(PRECISION, RM);
        SineOracle {
            consts,
            pi,
            cache: HashMap::new(),
            threshold: BigFloat::from_f64(ZERO_THRESHOLD, PRECISION),
        }
    }

    fn sin_deg(&mut self, a: &Rational) -> BigFloat {
        let key = (
            a.numer().to_i64().expect("small numerator"),
            a.denom().to_i64().expect("small denominator"),
        );
        if let Some(s) = self.cache.get(&key) {
            return s.clone();
        }
        let x = BigFloat::from_i64(key.0, PRECISION)
            .mul(&self.pi, PRECISION, RM)
            .div(&BigFloat::from_i64(180 * key.1, PRECISION), PRECISION, RM);
        let s = x.sin(PRECISION, RM, &mut self.consts);
        self.cache.insert(key, s.clone());
        s
    }

    /// sin u sin v sin w − sin x sin y sin z at working precision.
    pub fn difference(&mut self, t: &CevaTuple) -> BigFloat {
        let s: Vec<BigFloat> = t.entries().iter().map(|a| self.sin_deg(a)).collect();
        let l = s[0].mul(&s[1], PRECISION, RM).mul(&s[2], PRECISION, RM);
        let r = s[3].mul(&s[4], PRECISION, RM).mul(&s[5], PRECISION, RM);
        l.sub(&r, PRECISION, RM)
    }

    pub fn holds(&mut self, t: &CevaTuple) -> bool {
        let d = self.difference(t);
        d.abs().cmp(&self.threshold).expect("finite difference") < 0
    }
}

/// Six positive parts of `total`, uniformly among compositions.
pub fn composition(rng: &mut ChaCha8Rng, total: i64) -> [i64; 6] {
    let mut cuts = std::collections::BTreeSet::new();
    while cuts.len() < 5 {
        cuts.insert(rng.gen_range(1..total));
    }
    let mut out = [0; 6];
    let mut prev = 0;
    for (i, c) in cuts.iter().chain(std::iter::once(&total)).enumerate() {
        out[i] = c - prev;
        prev = *c;
    }
    out
}

pub fn random_int_tuple(rng: &mut ChaCha8Rng) -> CevaTuple {
    CevaTuple::from_ints(composition(rng, 180)).expect("composition of 180")
}

/// Entries `p/d` with a common `d ≤ 12`, so every denominator is at most 12.
pub fn random_rational_tuple(rng: &mut ChaCha8Rng) -> CevaTuple {
    let d = rng.gen_range(1..=12);
    let parts = composition(rng, 180 * d);
    CevaTuple::new(parts.map(|p| Rational::new(p, d))).expect("composition of 180")
}

/// Move `k/d` degrees from one entry to another, keeping every entry positive.
pub fn nudge(rng: &mut ChaCha8Rng, t: &CevaTuple, d: i64) -> CevaTuple {
    loop {
        let (i, j) = (rng.gen_range(0..6), rng.gen_range(0..6));
        if i == j {
            continue;
        }
        let step = Rational::new(rng.gen_range(1..=2), d);
        let mut e = t.entries().clone();
        e[i] = &e[i] + &step;
        e[j] = &e[j] - &step;
        if let Ok(n) = CevaTuple::new(e) {
            return n;
        }
    }
}
