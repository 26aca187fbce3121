//! Naive, obviously-correct reference implementations.
//!
//! Everything here works by direct trial division and explicit enumeration,
//! shares no code with the sieve engine, and is deliberately single-threaded.
//! Hard input guards fail loudly instead of letting a quadratic loop run for
//! hours.

use crate::{Error, Result};

/// Largest x accepted by the double-loop summations.
pub const BRUTE_FORCE_GUARD: u64 = 10_000_000;

/// A number together with its full factorization into prime powers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationView {
    pub n: u64,
    /// `(prime, exponent)` pairs with strictly increasing primes.
    pub prime_powers: Vec<(u64, u32)>,
}

impl FactorizationView {
    pub fn omega(&self) -> u32 {
        self.prime_powers.len() as u32
    }
}

/// Trial division up to the square root.
pub fn factorize(n: u64) -> FactorizationView {
    let original = n;
    let mut n = n;
    let mut prime_powers = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0u32;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            prime_powers.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        prime_powers.push((n, 1));
    }
    FactorizationView {
        n: original,
        prime_powers,
    }
}

/// ω(n): the number of distinct prime divisors, by trial division.
pub fn omega_naive(n: u64) -> u32 {
    factorize(n).omega()
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// ω(lcm(m, n)). The lcm is formed as `m / gcd * n` in that order so it
/// cannot overflow before the final multiply.
pub fn omega_lcm_pointwise(m: u64, n: u64) -> Result<u32> {
    let g = gcd(m, n);
    let lcm = (m / g).checked_mul(n).ok_or(Error::Overflow {
        what: "lcm(m, n)",
        x: m,
    })?;
    Ok(omega_naive(lcm))
}

/// Σ_{mn <= x} ω(lcm(m, n)) by the double loop.
pub fn s_omega_bruteforce(x: u64) -> Result<u128> {
    if x > BRUTE_FORCE_GUARD {
        return Err(Error::GuardExceeded {
            what: "s_omega_bruteforce",
            x,
            limit: BRUTE_FORCE_GUARD,
        });
    }
    let mut total = 0u128;
    for m in 1..=x {
        for n in 1..=x / m {
            total += u128::from(omega_lcm_pointwise(m, n)?);
        }
    }
    Ok(total)
}

/// Σ_{mn <= x} ω(gcd(m, n)) by the double loop.
pub fn s_gcd_bruteforce(x: u64) -> Result<u128> {
    if x > BRUTE_FORCE_GUARD {
        return Err(Error::GuardExceeded {
            what: "s_gcd_bruteforce",
            x,
            limit: BRUTE_FORCE_GUARD,
        });
    }
    let mut total = 0u128;
    for m in 1..=x {
        for n in 1..=x / m {
            total += u128::from(omega_naive(gcd(m, n)));
        }
    }
    Ok(total)
}

/// Σ_{k <= x} Σ_{d | k} ω(d) by divisor enumeration.
pub fn divisor_omega_bruteforce(x: u64) -> Result<u128> {
    if x > 1_000_000 {
        return Err(Error::GuardExceeded {
            what: "divisor_omega_bruteforce",
            x,
            limit: 1_000_000,
        });
    }
    let mut total = 0u128;
    for k in 1..=x {
        for d in divisors(k) {
            total += u128::from(omega_naive(d));
        }
    }
    Ok(total)
}

/// All divisors of k, unsorted beyond the natural pairing order.
pub fn divisors(k: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= k {
        if k.is_multiple_of(d) {
            small.push(d);
            if d != k / d {
                large.push(k / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Checks, for one k, that Σ_{mn = k} ω(lcm(m, n)) equals both
/// Σ ω(m) + Σ ω(n) − Σ ω(gcd(m, n)) and 2 Σ_{d|k} ω(d) − Σ_{mn=k} ω(gcd),
/// all by direct enumeration of the divisor pairs (m, k/m).
pub fn lemma1_pointwise_check(k: u64) -> Result<bool> {
    let mut lcm_sum = 0u64;
    let mut m_sum = 0u64;
    let mut n_sum = 0u64;
    let mut gcd_sum = 0u64;
    let mut divisor_omega_sum = 0u64;
    for m in divisors(k) {
        let n = k / m;
        lcm_sum += u64::from(omega_lcm_pointwise(m, n)?);
        m_sum += u64::from(omega_naive(m));
        n_sum += u64::from(omega_naive(n));
        gcd_sum += u64::from(omega_naive(gcd(m, n)));
        divisor_omega_sum += u64::from(omega_naive(m));
    }
    let via_inclusion = m_sum + n_sum - gcd_sum;
    let via_divisors = 2 * divisor_omega_sum - gcd_sum;
    Ok(lcm_sum == via_inclusion && lcm_sum == via_divisors)
}

/// True iff ω(lcm(m, k/m)) = ω(k) for every divisor m of k.
pub fn omega_lcm_complement_check(k: u64) -> Result<bool> {
    let target = omega_naive(k);
    for m in divisors(k) {
        if omega_lcm_pointwise(m, k / m)? != target {
            return Ok(false);
        }
    }
    Ok(true)
}
