//! Small numeric building blocks: exact integer square root and compensated
//! floating-point summation.

/// Floor of the square root, by integer Newton iteration with a final
/// correction step. No floating point is involved, so the result is exact for
/// every `u64` input.
pub fn isqrt(n: u64) -> u64 {
    if n < 2 {
        return n;
    }
    // Start from a power of two >= sqrt(n); the iteration then decreases
    // monotonically to floor(sqrt(n)).
    let mut x = 1u64 << (64 - n.leading_zeros()).div_ceil(2);
    loop {
        let y = (x + n / x) / 2;
        if y >= x {
            break;
        }
        x = y;
    }
    while (x as u128) * (x as u128) > n as u128 {
        x -= 1;
    }
    x
}

/// Kahan compensated accumulator. Keeps the running error of the last
/// addition and feeds it back, so long series of small terms lose almost no
/// precision.
#[derive(Debug, Clone, Copy, Default)]
pub struct KahanSum {
    sum: f64,
    compensation: f64,
}

impl KahanSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, value: f64) {
        let y = value - self.compensation;
        let t = self.sum + y;
        self.compensation = (t - self.sum) - y;
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum
    }
}

impl FromIterator<f64> for KahanSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = KahanSum::new();
        for v in iter {
            acc.add(v);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn isqrt_small_exhaustive() {
        for n in 0u64..100_000 {
            let r = isqrt(n);
            assert!(r * r <= n && (r + 1) * (r + 1) > n, "isqrt({n}) = {r}");
        }
    }

    #[test]
    fn isqrt_near_u64_max() {
        let r = isqrt(u64::MAX);
        assert_eq!(r, (1u64 << 32) - 1);
        assert_eq!(isqrt(r * r), r);
        assert_eq!(isqrt(r * r - 1), r - 1);
    }

    proptest! {
        #[test]
        fn isqrt_is_floor_sqrt(n in any::<u64>()) {
            let r = isqrt(n) as u128;
            let n = n as u128;
            prop_assert!(r * r <= n);
            prop_assert!((r + 1) * (r + 1) > n);
        }
    }

    #[test]
    fn kahan_beats_naive_on_ill_conditioned_series() {
        // Sum of 1/k^2 forward; compare to a high-accuracy backward sum.
        let n = 1_000_000u64;
        let backward: f64 = (1..=n).rev().map(|k| 1.0 / (k as f64 * k as f64)).sum();
        let mut kahan = KahanSum::new();
        for k in 1..=n {
            kahan.add(1.0 / (k as f64 * k as f64));
        }
        assert!((kahan.value() - backward).abs() < 1e-15);
    }
}
