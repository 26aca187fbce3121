//! Exact evaluation of the five summatory quantities.
//!
//! Every quantity can be computed by at least two routes that must agree
//! exactly:
//!
//! * `SIEVE` — accumulate over segmented ω/τ tables.
//! * `DIVISOR_DECOMP` — prime/divisor-summatory decompositions:
//!   `Σ_{n<=x} ω(n) = Σ_{p<=x} ⌊x/p⌋`, and, summing the pointwise lcm/gcd
//!   identity over k <= x and exchanging the prime summation,
//!   `Σ_{mn<=x} ω(lcm) = 2 Σ_{p<=x} D(⌊x/p⌋) − Σ_{p²<=x} D(⌊x/p²⌋)` and
//!   `Σ_{mn<=x} ω(gcd) = Σ_{p²<=x} D(⌊x/p²⌋)`, with `D` the divisor
//!   summatory function evaluated by the hyperbola method.
//! * `ORACLE` — the naive double loops from [`crate::oracle`].
//!
//! All thresholds `x/p`, `x/p²` are exact integer floors. Accumulators are
//! 128-bit; per-segment partials are 64-bit and widened when combined, in
//! ascending block order, so results are bit-identical for any thread count.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::num::isqrt;
use crate::oracle;
use crate::sieve::{
    map_prime_blocks, sieve_segment, AdditiveSieveSegment, PrimeTable, SieveConfig,
};
use crate::{Error, Result};

/// Values of x beyond this would stress the 128-bit accumulators and are far
/// outside the supported sieving range anyway.
const X_GUARD: u64 = 1_000_000_000_000;

/// The summatory quantities this crate evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Quantity {
    /// Σ_{mn <= x} ω(lcm(m, n)).
    SOmegaLcm,
    /// Σ_{mn <= x} ω(gcd(m, n)).
    SOmegaGcd,
    /// Σ_{n <= x} ω(n).
    WOmega,
    /// Σ_{k <= x} τ(k) ω(k); identical to `SOmegaLcm` but exposed under its
    /// own name so the equality is testable as two independent computations.
    TauOmega,
    /// Σ_{k <= x} Σ_{d | k} ω(d).
    DivOmega,
}

impl Quantity {
    pub fn as_str(self) -> &'static str {
        match self {
            Quantity::SOmegaLcm => "s-omega-lcm",
            Quantity::SOmegaGcd => "s-omega-gcd",
            Quantity::WOmega => "w-omega",
            Quantity::TauOmega => "tau-omega",
            Quantity::DivOmega => "div-omega",
        }
    }
}

/// Which algorithm produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Method {
    Sieve,
    DivisorDecomp,
    Oracle,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Sieve => "sieve",
            Method::DivisorDecomp => "divisor-decomp",
            Method::Oracle => "oracle",
        }
    }
}

/// An exact summatory value at threshold x.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummationResult {
    pub x: u64,
    pub quantity: Quantity,
    pub method: Method,
    pub value: u128,
    pub elapsed_ms: f64,
}

/// Computes `quantity` at threshold `x` with the requested method.
pub fn compute(
    quantity: Quantity,
    x: u64,
    method: Method,
    cfg: &SieveConfig,
) -> Result<SummationResult> {
    if !(1..=X_GUARD).contains(&x) {
        return Err(Error::Overflow {
            what: quantity.as_str(),
            x,
        });
    }
    cfg.validate()?;
    let start = Instant::now();
    let value = match (quantity, method) {
        (Quantity::WOmega, Method::Sieve) => w_omega_sieve(x, cfg)?,
        (Quantity::WOmega, Method::DivisorDecomp) => w_omega_prime_floor(x, cfg)?,
        (Quantity::WOmega, Method::Oracle) => {
            guard_oracle("w_omega oracle", x)?;
            (1..=x).map(|n| u128::from(oracle::omega_naive(n))).sum()
        }
        (Quantity::TauOmega, Method::Sieve) => tau_omega_sieve(x, cfg)?,
        (Quantity::TauOmega, Method::Oracle) => {
            guard_oracle("tau_omega oracle", x)?;
            tau_omega_oracle(x)
        }
        (Quantity::SOmegaLcm, Method::Sieve) => tau_omega_sieve(x, cfg)?,
        (Quantity::SOmegaLcm, Method::DivisorDecomp) => s_omega_lcm_decomp(x, cfg)?,
        (Quantity::SOmegaLcm, Method::Oracle) => oracle::s_omega_bruteforce(x)?,
        (Quantity::SOmegaGcd, Method::DivisorDecomp) => s_omega_gcd_decomp(x)?,
        (Quantity::SOmegaGcd, Method::Oracle) => oracle::s_gcd_bruteforce(x)?,
        (Quantity::DivOmega, Method::Sieve) => div_omega_sieve(x, cfg)?,
        (Quantity::DivOmega, Method::DivisorDecomp) => div_omega_decomp(x, cfg)?,
        (Quantity::DivOmega, Method::Oracle) => oracle::divisor_omega_bruteforce(x)?,
        (quantity, method) => return Err(Error::UnsupportedMethod { quantity, method }),
    };
    Ok(SummationResult {
        x,
        quantity,
        method,
        value,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

fn guard_oracle(what: &'static str, x: u64) -> Result<()> {
    if x > oracle::BRUTE_FORCE_GUARD {
        return Err(Error::GuardExceeded {
            what,
            x,
            limit: oracle::BRUTE_FORCE_GUARD,
        });
    }
    Ok(())
}

fn tau_omega_oracle(x: u64) -> u128 {
    (1..=x)
        .map(|k| {
            let f = oracle::factorize(k);
            let tau: u64 = f
                .prime_powers
                .iter()
                .map(|&(_, e)| u64::from(e) + 1)
                .product();
            u128::from(tau) * u128::from(f.omega())
        })
        .sum()
}

/// `D(y) = Σ_{k<=y} τ(k) = Σ_{ab<=y} 1` by the hyperbola formula
/// `2 Σ_{a<=√y} ⌊y/a⌋ − ⌊√y⌋²`.
pub fn divisor_summatory(y: u64) -> u128 {
    let s = isqrt(y);
    let mut acc = 0u128;
    for a in 1..=s {
        acc += u128::from(y / a);
    }
    2 * acc - u128::from(s) * u128::from(s)
}

/// Runs `partial` over the segments covering [1, x] and adds the 64-bit
/// partials up in ascending block order.
fn sum_over_segments(
    x: u64,
    cfg: &SieveConfig,
    partial: impl Fn(&AdditiveSieveSegment) -> u64 + Sync,
) -> Result<u128> {
    let base = PrimeTable::generate(isqrt(x))?;
    let seg = cfg.segment_length as u64;
    let blocks = x.div_ceil(seg);
    let partials: Result<Vec<u64>> = cfg.run(|| {
        (0..blocks)
            .into_par_iter()
            .map(|b| {
                let lo = 1 + b * seg;
                let hi = (lo + seg).min(x + 1);
                sieve_segment(lo, hi, &base).map(|s| partial(&s))
            })
            .collect()
    });
    Ok(partials?.into_iter().map(u128::from).sum())
}

fn w_omega_sieve(x: u64, cfg: &SieveConfig) -> Result<u128> {
    sum_over_segments(x, cfg, |seg| seg.omega.iter().map(|&w| u64::from(w)).sum())
}

/// `Σ_{n<=x} ω(n) = Σ_{p<=x} ⌊x/p⌋`: each prime p is counted once for every
/// multiple of p up to x.
fn w_omega_prime_floor(x: u64, cfg: &SieveConfig) -> Result<u128> {
    let partials = map_prime_blocks(x, cfg, |primes| {
        primes.iter().map(|&p| u128::from(x / p)).sum::<u128>()
    })?;
    Ok(partials.into_iter().sum())
}

fn tau_omega_sieve(x: u64, cfg: &SieveConfig) -> Result<u128> {
    sum_over_segments(x, cfg, |seg| {
        seg.omega
            .iter()
            .zip(&seg.tau)
            .map(|(&w, &t)| u64::from(w) * u64::from(t))
            .sum()
    })
}

/// `2 Σ_{p<=x} D(⌊x/p⌋) − Σ_{p<=√x} D(⌊x/p²⌋)`.
fn s_omega_lcm_decomp(x: u64, cfg: &SieveConfig) -> Result<u128> {
    let lcm_part = div_omega_decomp(x, cfg)?;
    Ok(2 * lcm_part - s_omega_gcd_decomp(x)?)
}

/// `Σ_{mn<=x} ω(gcd) = Σ_{p<=√x} D(⌊x/p²⌋)`: each prime p dividing the gcd
/// contributes one lattice point count with m = pa, n = pb, ab <= x/p².
fn s_omega_gcd_decomp(x: u64) -> Result<u128> {
    let root = isqrt(x);
    let table = PrimeTable::generate(root)?;
    Ok(table
        .primes()
        .iter()
        .map(|&p| divisor_summatory(x / (p * p)))
        .sum())
}

/// `Σ_{k<=x} Σ_{d|k} ω(d) = Σ_{p<=x} D(⌊x/p⌋)`: a divisor d of k with p | d
/// corresponds to a lattice point under `ab <= x/p`.
fn div_omega_decomp(x: u64, cfg: &SieveConfig) -> Result<u128> {
    let partials = map_prime_blocks(x, cfg, |primes| {
        primes
            .iter()
            .map(|&p| divisor_summatory(x / p))
            .sum::<u128>()
    })?;
    Ok(partials.into_iter().sum())
}

/// Sieve route for `Σ_{k<=x} Σ_{d|k} ω(d)`: exchanging the order of
/// summation gives `Σ_{d<=x} ω(d) ⌊x/d⌋`, one segmented pass.
fn div_omega_sieve(x: u64, cfg: &SieveConfig) -> Result<u128> {
    sum_over_segments(x, cfg, |seg| {
        seg.omega
            .iter()
            .enumerate()
            .map(|(i, &w)| u64::from(w) * (x / (seg.lo() + i as u64)))
            .sum()
    })
}

/// Third route for the same quantity, following `Σ_{k<=x} W(⌊x/k⌋)` directly:
/// ⌊x/k⌋ takes O(√x) distinct values, and W is evaluated once per distinct
/// value via the prime-floor identity.
pub fn div_omega_distinct_floor(x: u64) -> Result<u128> {
    let table = PrimeTable::generate(x)?;
    let mut total = 0u128;
    let mut k = 1u64;
    while k <= x {
        let v = x / k;
        let k_last = x / v;
        let w: u128 = table.up_to(v).iter().map(|&p| u128::from(v / p)).sum();
        total += u128::from(k_last - k + 1) * w;
        k = k_last + 1;
    }
    Ok(total)
}
