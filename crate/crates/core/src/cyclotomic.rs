//! Exact decision of the Ceva sine identity through roots of unity.
//!
//! With every angle written as `k/n` half-turns, `sin θ = (ζ^k − ζ^{−k}) / 2i`
//! for `ζ` a primitive `m = 2n`-th root of unity. Expanding both triple
//! products gives sixteen signed powers of `ζ`; the identity holds exactly
//! when that sum reduces to zero modulo `Φ_m`.
//!
//! Reduction works in the radical: with `r = rad(m)` and `N = m / r`,
//! `Φ_m(x) = Φ_r(x^N)`, so `x^(N·j + s)` reduces through `y^j mod Φ_r(y)`.
//! The table therefore has `r − φ(r)` rows instead of `m − φ(m)`.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::angles::CevaTuple;
use crate::error::{Error, Result};

pub const DEFAULT_LEVEL_CAP: u64 = 7200;
pub const DEFAULT_PREFILTER_TOL: f64 = 1e-9;
/// Float differences in `[DEFAULT_PREFILTER_TOL, GUARD_BAND_UPPER]` are
/// exact-checked anyway and expected to be nonzero.
pub const GUARD_BAND_UPPER: f64 = 1e-6;

/// Dense integer polynomial, `coeffs[i]` multiplies `x^i`; no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one() -> Self {
        IntPoly::from_i64(&[1])
    }

    /// `x^n − 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut c = vec![BigInt::zero(); n + 1];
        c[0] = BigInt::from(-1);
        c[n] = BigInt::one();
        IntPoly::new(c)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::default();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    /// Quotient and remainder by a monic divisor.
    pub fn div_rem_monic(&self, divisor: &IntPoly) -> (IntPoly, IntPoly) {
        let d = divisor.degree().expect("division by zero polynomial");
        assert!(divisor.coeffs[d].is_one(), "divisor must be monic");
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return (IntPoly::default(), self.clone());
        }
        let mut quot = vec![BigInt::zero(); rem.len() - d];
        for k in (d..rem.len()).rev() {
            let c = std::mem::take(&mut rem[k]);
            if c.is_zero() {
                continue;
            }
            for (i, dc) in divisor.coeffs[..d].iter().enumerate() {
                rem[k - d + i] -= &c * dc;
            }
            quot[k - d] = c;
        }
        rem.truncate(d);
        (IntPoly::new(quot), IntPoly::new(rem))
    }

    /// Multiply by `x^d − 1` in place.
    fn mul_binomial(&mut self, d: usize) {
        let n = self.coeffs.len();
        let mut out = vec![BigInt::zero(); n + d];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i + d] += c;
            out[i] -= c;
        }
        *self = IntPoly::new(out);
    }

    /// Divide by `x^d − 1`, which must divide exactly.
    fn div_binomial(&mut self, d: usize) {
        let n = self.coeffs.len();
        assert!(n > d, "binomial does not divide");
        // p[i] = q[i-d] - q[i]  =>  q[i] = q[i-d] - p[i]
        let mut q = vec![BigInt::zero(); n - d];
        for i in 0..n - d {
            let prev = if i >= d {
                q[i - d].clone()
            } else {
                BigInt::zero()
            };
            q[i] = prev - &self.coeffs[i];
        }
        for i in n - d..n {
            debug_assert!(
                i < d || q[i - d] == self.coeffs[i],
                "binomial does not divide"
            );
        }
        *self = IntPoly::new(q);
    }
}

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .iter()
        .fold(n, |acc, &(p, _)| acc / p * (p - 1))
}

pub fn radical(n: u64) -> u64 {
    factorize(n).iter().map(|&(p, _)| p).product()
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n.is_multiple_of(i) {
            small.push(i);
            if i != n / i {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

fn mobius(n: u64) -> i8 {
    let f = factorize(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// The `m`-th cyclotomic polynomial, `m ≤ cap`.
///
/// Built from `Φ_m = ∏_{d | m} (x^d − 1)^{μ(m/d)}`, multiplying before dividing.
pub fn cyclotomic_poly_with_cap(m: u64, cap: u64) -> Result<IntPoly> {
    if m == 0 || m > cap {
        return Err(Error::LevelOverCap { m, cap });
    }
    let divs = divisors(m);
    let mut p = IntPoly::one();
    for &d in &divs {
        if mobius(m / d) == 1 {
            p.mul_binomial(d as usize);
        }
    }
    for &d in &divs {
        if mobius(m / d) == -1 {
            p.div_binomial(d as usize);
        }
    }
    Ok(p)
}

pub fn cyclotomic_poly(m: u64) -> Result<IntPoly> {
    cyclotomic_poly_with_cap(m, DEFAULT_LEVEL_CAP)
}

/// A signed sum `Σ ± ζ^e` with exponents reduced into `[0, m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedExponentSum {
    m: u64,
    terms: Vec<(i8, u64)>,
}

impl SignedExponentSum {
    pub fn new(m: u64, terms: impl IntoIterator<Item = (i8, i64)>) -> Self {
        let terms = terms
            .into_iter()
            .map(|(s, e)| {
                assert!(s == 1 || s == -1, "sign must be ±1");
                (s, e.rem_euclid(m as i64) as u64)
            })
            .collect();
        SignedExponentSum { m, terms }
    }

    pub fn level(&self) -> u64 {
        self.m
    }

    pub fn terms(&self) -> &[(i8, u64)] {
        &self.terms
    }
}

/// Immutable per-level data for exact zero testing.
#[derive(Debug)]
pub struct CycContext {
    m: u64,
    phi_m: IntPoly,
    rad: u64,
    stride: u64,
    phi_rad_degree: usize,
    /// Row `j − φ(r)` holds `y^j mod Φ_r(y)` for `j ∈ [φ(r), r)`.
    rad_table: Vec<Vec<BigInt>>,
}

impl CycContext {
    pub fn new(m: u64, cap: u64) -> Result<Self> {
        let phi_m = cyclotomic_poly_with_cap(m, cap)?;
        let rad = radical(m);
        let stride = m / rad;
        let phi_rad = cyclotomic_poly_with_cap(rad, cap)?;
        let deg = phi_rad.degree().unwrap_or(0);
        let mut rad_table: Vec<Vec<BigInt>> = Vec::with_capacity((rad as usize) - deg);
        // y^deg ≡ -(Φ_r - y^deg)
        let mut row: Vec<BigInt> = phi_rad.coeffs()[..deg].iter().map(|c| -c).collect();
        for _ in deg..rad as usize {
            rad_table.push(row.clone());
            // multiply by y and fold the overflow back with Φ_r
            let top = row.pop().unwrap_or_default();
            row.insert(0, BigInt::zero());
            if !top.is_zero() {
                for (r, c) in row.iter_mut().zip(phi_rad.coeffs()) {
                    *r -= &top * c;
                }
            }
        }
        Ok(CycContext {
            m,
            phi_m,
            rad,
            stride,
            phi_rad_degree: deg,
            rad_table,
        })
    }

    pub fn level(&self) -> u64 {
        self.m
    }

    pub fn phi_m(&self) -> &IntPoly {
        &self.phi_m
    }

    /// `φ(m)`, the dimension of the reduced representation.
    pub fn dimension(&self) -> usize {
        self.stride as usize * self.phi_rad_degree
    }

    fn add_power(&self, acc: &mut [BigInt], sign: i8, k: u64) {
        let k = k % self.m;
        let s = (k % self.stride) as usize;
        let j = (k / self.stride) as usize;
        let n = self.stride as usize;
        if j < self.phi_rad_degree {
            let slot = &mut acc[s + n * j];
            if sign > 0 {
                *slot += 1;
            } else {
                *slot -= 1;
            }
            return;
        }
        for (jj, c) in self.rad_table[j - self.phi_rad_degree].iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let slot = &mut acc[s + n * jj];
            if sign > 0 {
                *slot += c;
            } else {
                *slot -= c;
            }
        }
    }

    /// Coefficients of `x^k mod Φ_m` in the monomial basis `1, x, …, x^{φ(m)−1}`.
    pub fn reduced_power(&self, k: u64) -> IntPoly {
        let mut acc = vec![BigInt::zero(); self.dimension()];
        self.add_power(&mut acc, 1, k);
        IntPoly::new(acc)
    }

    /// Radical `r` of `m`; tables are indexed modulo `Φ_r`.
    pub fn radical(&self) -> u64 {
        self.rad
    }
}

static CONTEXTS: OnceLock<RwLock<HashMap<u64, Arc<CycContext>>>> = OnceLock::new();

/// Shared, lazily built context for level `m`.
pub fn context(m: u64, cap: u64) -> Result<Arc<CycContext>> {
    if m == 0 || m > cap {
        return Err(Error::LevelOverCap { m, cap });
    }
    let map = CONTEXTS.get_or_init(Default::default);
    if let Some(ctx) = map.read().expect("context cache poisoned").get(&m) {
        return Ok(Arc::clone(ctx));
    }
    let built = Arc::new(CycContext::new(m, cap)?);
    let mut w = map.write().expect("context cache poisoned");
    Ok(Arc::clone(w.entry(m).or_insert(built)))
}

/// Whether `Σ sign·ζ_m^exponent` vanishes.
pub fn is_zero_sum_of_roots(s: &SignedExponentSum, ctx: &CycContext) -> bool {
    assert_eq!(s.m, ctx.m, "sum and context disagree on the level");
    let mut acc = vec![BigInt::zero(); ctx.dimension()];
    for &(sign, e) in &s.terms {
        ctx.add_power(&mut acc, sign, e);
    }
    acc.iter().all(Zero::is_zero)
}

/// Half-turn numerators `k_i` and common denominator `n` with `θ_i = 180·k_i/n`.
fn half_turn_exponents(t: &CevaTuple) -> (Vec<i64>, u64) {
    let fracs: Vec<_> = t
        .entries()
        .iter()
        .map(|a| a.inner() / BigInt::from(180))
        .collect();
    let n = fracs
        .iter()
        .fold(BigInt::one(), |acc, f| acc.lcm(f.denom()));
    let ks = fracs
        .iter()
        .map(|f| {
            (f.numer() * (&n / f.denom()))
                .to_i64()
                .expect("exponent fits in i64")
        })
        .collect();
    (ks, n.to_u64().unwrap_or(u64::MAX))
}

/// The sixteen-term signed sum equal (up to the common `(2i)^3`) to
/// `sin u sin v sin w − sin x sin y sin z`.
pub fn ceva_exponent_sum(t: &CevaTuple, cap: u64) -> Result<SignedExponentSum> {
    let (k, n) = half_turn_exponents(t);
    let m = n.saturating_mul(2);
    if m > cap {
        return Err(Error::LevelOverCap { m, cap });
    }
    let mut terms = Vec::with_capacity(16);
    for (side, sign0) in [(&k[0..3], 1i8), (&k[3..6], -1i8)] {
        for mask in 0..8u8 {
            let mut sign = sign0;
            let mut exp = 0i64;
            for (bit, &kk) in side.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    exp -= kk;
                    sign = -sign;
                } else {
                    exp += kk;
                }
            }
            terms.push((sign, exp));
        }
    }
    Ok(SignedExponentSum::new(m, terms))
}

/// Exact test of `sin u · sin v · sin w = sin x · sin y · sin z`.
pub fn ceva_holds_exact_with_cap(t: &CevaTuple, cap: u64) -> Result<bool> {
    let sum = ceva_exponent_sum(t, cap)?;
    let ctx = context(sum.level(), cap)?;
    Ok(is_zero_sum_of_roots(&sum, &ctx))
}

pub fn ceva_holds_exact(t: &CevaTuple) -> Result<bool> {
    ceva_holds_exact_with_cap(t, DEFAULT_LEVEL_CAP)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrefilterVerdict {
    RejectedNonzero,
    NeedsExactCheck,
}

/// `|sin u sin v sin w − sin x sin y sin z|` in double precision.
pub fn ceva_float_difference(t: &CevaTuple) -> f64 {
    let s: Vec<f64> = t
        .entries()
        .iter()
        .map(|a| a.to_f64().to_radians().sin())
        .collect();
    (s[0] * s[1] * s[2] - s[3] * s[4] * s[5]).abs()
}

/// Cheap rejection; never claims that the identity holds.
pub fn ceva_prefilter(t: &CevaTuple, tol: f64) -> PrefilterVerdict {
    if ceva_float_difference(t) > tol {
        PrefilterVerdict::RejectedNonzero
    } else {
        PrefilterVerdict::NeedsExactCheck
    }
}
