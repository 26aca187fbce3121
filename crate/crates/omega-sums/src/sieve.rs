//! Prime generation and segmented tabulation of ω(n) and τ(n).
//!
//! The sieve works in half-open blocks `[lo, hi)`. For every sieving prime
//! `p <= sqrt(hi-1)` the full exponent of `p` is divided out of a scratch
//! array of residual cofactors, which yields exact τ; whatever cofactor is
//! left at the end is a single prime above the sieving bound and contributes
//! one more distinct prime divisor and a factor 2 to τ. Blocks are disjoint,
//! so segments parallelize trivially and results are pure values.

use rayon::prelude::*;

use crate::num::isqrt;
use crate::{Error, Result};

/// Soft memory budget for a fully materialized prime table (bytes).
const PRIME_TABLE_BUDGET: u64 = 8 << 30;

const MIN_SEGMENT_LENGTH: usize = 1 << 10;

/// Tuning knobs shared by every segmented computation.
#[derive(Debug, Clone)]
pub struct SieveConfig {
    /// Entries per segment. Must be at least 1024.
    pub segment_length: usize,
    /// Worker threads; `None` lets rayon pick.
    pub threads: Option<usize>,
}

impl Default for SieveConfig {
    fn default() -> Self {
        Self {
            segment_length: 1 << 20,
            threads: None,
        }
    }
}

impl SieveConfig {
    pub fn validate(&self) -> Result<()> {
        if self.segment_length < MIN_SEGMENT_LENGTH {
            return Err(Error::SegmentTooShort(self.segment_length));
        }
        Ok(())
    }

    /// Runs `f` inside a rayon pool of the configured width. With
    /// `threads: None` the global pool is used. Every parallel reduction in
    /// this crate combines per-block results in ascending block order, so the
    /// output is identical for any pool width.
    pub fn run<T: Send>(&self, f: impl FnOnce() -> T + Send) -> T {
        match self.threads {
            None => f(),
            Some(n) => rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .expect("failed to build thread pool")
                .install(f),
        }
    }
}

/// Ordered primes up to an inclusive limit. Immutable after construction and
/// freely shareable across threads.
#[derive(Debug, Clone)]
pub struct PrimeTable {
    limit: u64,
    primes: Vec<u64>,
}

impl PrimeTable {
    /// Sieve of Eratosthenes over odd numbers, materializing all primes up to
    /// `limit` inclusive.
    pub fn generate(limit: u64) -> Result<Self> {
        // Rough upper estimate of table + flag memory; refuse absurd limits.
        let estimate = limit / 8
            + if limit > 16 {
                (limit as f64 / (limit as f64).ln() * 1.3) as u64 * 8
            } else {
                64
            };
        if estimate > PRIME_TABLE_BUDGET {
            return Err(Error::Capacity {
                limit,
                estimate,
                budget: PRIME_TABLE_BUDGET,
            });
        }
        if limit < 2 {
            return Ok(Self {
                limit,
                primes: Vec::new(),
            });
        }
        // composite[i] refers to the odd number 2i + 3.
        let odd_count = ((limit - 1) / 2) as usize;
        let mut composite = vec![false; odd_count];
        let mut i = 0usize;
        loop {
            let p = 2 * i as u64 + 3;
            if p * p > limit {
                break;
            }
            if !composite[i] {
                let mut j = ((p * p - 3) / 2) as usize;
                while j < odd_count {
                    composite[j] = true;
                    j += p as usize;
                }
            }
            i += 1;
        }
        let mut primes = Vec::with_capacity(odd_count / 4 + 2);
        primes.push(2);
        primes.extend(
            composite
                .iter()
                .enumerate()
                .filter(|(_, &c)| !c)
                .map(|(i, _)| 2 * i as u64 + 3),
        );
        Ok(Self { limit, primes })
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    /// Primes up to `bound` inclusive, as a prefix slice.
    pub fn up_to(&self, bound: u64) -> &[u64] {
        let cut = self.primes.partition_point(|&p| p <= bound);
        &self.primes[..cut]
    }
}

/// Exact per-integer values of ω and τ over `[lo, hi)`.
#[derive(Debug, Clone)]
pub struct AdditiveSieveSegment {
    lo: u64,
    /// `omega[i]` is ω(lo + i). ω(n) <= 9 for n <= 1e9, so u8 has wide margin.
    pub omega: Vec<u8>,
    /// `tau[i]` is τ(lo + i). τ(n) < 1400 for n <= 1e9.
    pub tau: Vec<u32>,
}

impl AdditiveSieveSegment {
    pub fn lo(&self) -> u64 {
        self.lo
    }

    pub fn hi(&self) -> u64 {
        self.lo + self.omega.len() as u64
    }

    pub fn omega_of(&self, n: u64) -> u8 {
        self.omega[(n - self.lo) as usize]
    }

    pub fn tau_of(&self, n: u64) -> u32 {
        self.tau[(n - self.lo) as usize]
    }
}

/// Tabulates ω and τ for every n in `[lo, hi)` in one pass over the sieving
/// primes. `primes` must reach `sqrt(hi - 1)`.
pub fn sieve_segment(lo: u64, hi: u64, primes: &PrimeTable) -> Result<AdditiveSieveSegment> {
    if lo < 1 || hi <= lo {
        return Err(Error::InvalidRange { lo, hi });
    }
    let need = isqrt(hi - 1);
    if primes.limit() < need {
        return Err(Error::InsufficientPrimes {
            have: primes.limit(),
            need,
        });
    }
    let len = usize::try_from(hi - lo).map_err(|_| Error::InvalidRange { lo, hi })?;
    let mut omega = vec![0u8; len];
    let mut tau = vec![1u32; len];
    // Residual cofactor of each n after removing sieved prime powers.
    let mut remaining: Vec<u64> = (lo..hi).collect();

    for &p in primes.up_to(need) {
        let first = lo.div_ceil(p) * p;
        let mut n = first;
        while n < hi {
            let i = (n - lo) as usize;
            let mut exponent = 0u32;
            while remaining[i].is_multiple_of(p) {
                remaining[i] /= p;
                exponent += 1;
            }
            omega[i] += 1;
            tau[i] *= exponent + 1;
            n += p;
        }
    }
    for i in 0..len {
        if remaining[i] > 1 {
            // Cofactor is a prime above sqrt(hi - 1).
            omega[i] += 1;
            tau[i] *= 2;
        }
    }
    Ok(AdditiveSieveSegment { lo, omega, tau })
}

/// Primes in `[lo, hi)` via a boolean segment over the base table.
pub fn primes_in_range(lo: u64, hi: u64, base: &PrimeTable) -> Result<Vec<u64>> {
    if hi <= lo {
        return Err(Error::InvalidRange { lo, hi });
    }
    let need = isqrt(hi - 1);
    if base.limit() < need {
        return Err(Error::InsufficientPrimes {
            have: base.limit(),
            need,
        });
    }
    let lo = lo.max(2);
    if lo >= hi {
        return Ok(Vec::new());
    }
    let len = (hi - lo) as usize;
    let mut composite = vec![false; len];
    for &p in base.up_to(need) {
        let first = lo.div_ceil(p) * p;
        let mut n = first.max(p * p);
        while n < hi {
            composite[(n - lo) as usize] = true;
            n += p;
        }
    }
    Ok(composite
        .iter()
        .enumerate()
        .filter(|(_, &c)| !c)
        .map(|(i, _)| lo + i as u64)
        .collect())
}

/// Maps every prime p <= limit through `block`, block by block, without ever
/// materializing the full table. Blocks are processed in parallel; the
/// returned partials are in ascending block order, so any fold over them is
/// deterministic.
pub fn map_prime_blocks<T: Send>(
    limit: u64,
    cfg: &SieveConfig,
    block: impl Fn(&[u64]) -> T + Sync,
) -> Result<Vec<T>> {
    cfg.validate()?;
    if limit < 2 {
        return Ok(Vec::new());
    }
    let base = PrimeTable::generate(isqrt(limit))?;
    let seg = cfg.segment_length as u64;
    let blocks = limit.div_ceil(seg);
    cfg.run(|| {
        (0..blocks)
            .into_par_iter()
            .map(|b| {
                let lo = (b * seg).max(2);
                let hi = ((b + 1) * seg).min(limit + 1);
                primes_in_range(lo, hi, &base).map(|ps| block(&ps))
            })
            .collect()
    })
}
