//! Main-term predictors, residual tables, and the numerical replay of the
//! proof decomposition `2 Σ_{k<=x} Σ_{d|k} ω(d) = 2(S_1 + S_2)`.
//!
//! Three asymptotic formulas are checked against the exact engines:
//!
//! * `Σ_{mn<=x} ω(lcm) ≈ 2x log x log log x + B x log x`, error scale x;
//! * `Σ_{mn<=x} ω(gcd) ≈ C x log x + D x`, error scale √x;
//! * `Σ_{n<=x} ω(n) ≈ x log log x + A x + Σ_{j<=h} a_j x / log^j x`, error
//!   scale `x / log^(h+1) x`.
//!
//! A residual table normalizes `exact − main_term` by the error scale over a
//! geometric grid; the formulas hold iff the normalized column stays bounded.
//! The acceptance bounds below were frozen after a first derived run; no
//! O-constant in this module is fitted, only checked for boundedness.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::constants::{self, ConstantEstimate};
use crate::num::KahanSum;
use crate::sieve::{PrimeTable, SieveConfig};
use crate::summation::{self, Method, Quantity};
use crate::{Error, Result};

/// Bounds recorded at the first derived run of the residual and
/// decomposition suites, then frozen. Each is a small multiple of the
/// maximum observed, so a regression that breaks an exact engine or a
/// constant evaluation trips them immediately.
pub mod frozen {
    /// Max of |S_lcm(x) − 2x log x log log x − B x log x| / x on the
    /// 13-point geometric grid 1e4..1e7; observed 4.57, drifting up slowly
    /// (the proof route only gives O(x log log x) here).
    pub const THM1_NORMALIZED_BOUND: f64 = 6.0;
    /// Max of |S_gcd(x) − (C x log x + D x)| / √x on the same grid;
    /// observed 0.53, oscillating with no trend.
    pub const LEMMA2_NORMALIZED_BOUND: f64 = 1.0;
    /// Max of |W(x) − main| / (x / log² x) with h = 1 on the same grid;
    /// observed 0.571, consistent with the a_2 correction term.
    pub const LEMMA3_H1_NORMALIZED_BOUND: f64 = 0.8;
    /// Max of |W(x) − main| / (x / log³ x) with h = 2 on the same grid;
    /// observed 1.14, converging toward |a_3| ≈ 1.0 from above.
    pub const LEMMA3_H2_NORMALIZED_BOUND: f64 = 1.6;
    /// c such that |2x(S21 + S22 + S23) − 2 S2| <= c · x log log x for all
    /// tested x >= 16; observed max 1.78 at x = 16, decreasing in x.
    pub const S2_RECOMPOSITION_CONST: f64 = 3.0;
}

/// One grid point of a residual table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResidualRow {
    pub x: u64,
    pub exact: u128,
    pub main_term: f64,
    /// `exact − main_term` in double precision.
    pub residual: f64,
    /// `residual` divided by the claimed error scale.
    pub normalized: f64,
}

/// The numeric ingredients of every main term, all at one truncation level.
#[derive(Debug, Clone, PartialEq)]
pub struct AsymptoticConstants {
    pub gamma: f64,
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    /// `a_j[j - 1]` holds the j-th correction-term integral.
    pub a_j: Vec<f64>,
}

impl AsymptoticConstants {
    /// Evaluates every constant with the given truncations.
    pub fn compute(
        prime_limit: u64,
        h_max: u32,
        quadrature_limit: u64,
        cfg: &SieveConfig,
    ) -> Result<Self> {
        let a_j = (1..=h_max)
            .map(|j| constants::a_j_integral(j, quadrature_limit).map(|e| e.value))
            .collect::<Result<Vec<f64>>>()?;
        Ok(Self {
            gamma: constants::euler_gamma()?.value,
            a: constants::mertens_a(prime_limit, cfg)?.value,
            b: constants::constant_b(prime_limit, cfg)?.value,
            c: constants::prime_zeta_2(prime_limit, cfg)?.value,
            d: constants::constant_d(prime_limit, cfg)?.value,
            a_j,
        })
    }

    /// The shared default set (P = 1e7, T = 1e6, h up to 4), computed once
    /// per process.
    pub fn default_set() -> Result<Self> {
        static CACHE: std::sync::OnceLock<Result<AsymptoticConstants>> = std::sync::OnceLock::new();
        CACHE
            .get_or_init(|| {
                AsymptoticConstants::compute(10_000_000, 4, 1_000_000, &SieveConfig::default())
            })
            .clone()
    }

    /// Same values wrapped in their `ConstantEstimate` form, for reporting.
    pub fn estimates(
        prime_limit: u64,
        h_max: u32,
        quadrature_limit: u64,
        cfg: &SieveConfig,
    ) -> Result<Vec<ConstantEstimate>> {
        let mut out = vec![
            constants::euler_gamma()?,
            constants::mertens_a(prime_limit, cfg)?,
            constants::constant_b(prime_limit, cfg)?,
            constants::prime_zeta_2(prime_limit, cfg)?,
            constants::constant_d(prime_limit, cfg)?,
        ];
        for j in 1..=h_max {
            out.push(constants::a_j_integral(j, quadrature_limit)?);
        }
        Ok(out)
    }
}

/// `2x log x log log x + B x log x`. Defined from x = 3 (log log x is
/// negative below x = 16 but finite); smaller x is a domain error.
pub fn main_term_thm1(x: u64, b: f64) -> Result<f64> {
    if x <= 2 {
        return Err(Error::Domain {
            what: "main_term_thm1",
            x,
        });
    }
    let xf = x as f64;
    let lx = xf.ln();
    Ok(2.0 * xf * lx * lx.ln() + b * xf * lx)
}

/// `C x log x + D x` with `D = (2γ − 1) C − 2 Σ_p log p / p²` (so the linear
/// coefficient is negative). The sign on D is fixed by the exact data: the
/// measured x-coefficient of `S_gcd(x) − C x log x` matches D, not −D, and
/// only this combination leaves a residual of order √x.
pub fn main_term_lemma2(x: u64, c: f64, d: f64) -> Result<f64> {
    if x < 1 {
        return Err(Error::Domain {
            what: "main_term_lemma2",
            x,
        });
    }
    let xf = x as f64;
    Ok(c * xf * xf.ln() + d * xf)
}

/// `x log log x + A x + Σ_{j<=h} a_j x / log^j x`.
pub fn main_term_lemma3(x: u64, h: u32, a: f64, a_j: &[f64]) -> Result<f64> {
    if x <= 2 {
        return Err(Error::Domain {
            what: "main_term_lemma3",
            x,
        });
    }
    assert!(
        a_j.len() >= h as usize,
        "need {h} correction terms, have {}",
        a_j.len()
    );
    let xf = x as f64;
    let lx = xf.ln();
    let corrections: f64 = (1..=h)
        .map(|j| a_j[(j - 1) as usize] * xf / lx.powi(j as i32))
        .sum();
    Ok(xf * lx.ln() + a * xf + corrections)
}

/// Geometric grid of integer thresholds from `from` to `to` inclusive,
/// rounded and deduplicated.
pub fn geometric_grid(from: u64, to: u64, points: usize) -> Result<Vec<u64>> {
    if from < 3 || to <= from || points < 1 {
        return Err(Error::Domain {
            what: "geometric_grid",
            x: from,
        });
    }
    if points == 1 {
        return Ok(vec![from]);
    }
    let ratio = (to as f64 / from as f64).powf(1.0 / (points - 1) as f64);
    let mut grid: Vec<u64> = (0..points)
        .map(|i| (from as f64 * ratio.powi(i as i32)).round() as u64)
        .collect();
    *grid.last_mut().unwrap() = to;
    grid.dedup();
    Ok(grid)
}

fn error_scale(quantity: Quantity, x: u64, h: u32) -> f64 {
    let xf = x as f64;
    match quantity {
        Quantity::SOmegaLcm | Quantity::TauOmega => xf,
        Quantity::SOmegaGcd => xf.sqrt(),
        Quantity::WOmega => xf / xf.ln().powi((h + 1) as i32),
        Quantity::DivOmega => xf,
    }
}

/// Residual table for one quantity over an increasing grid. `h` selects the
/// number of correction terms for the ω partial sum (default 1) and is
/// ignored by the other quantities.
pub fn residual_table(
    quantity: Quantity,
    grid: &[u64],
    h: Option<u32>,
    consts: &AsymptoticConstants,
    cfg: &SieveConfig,
) -> Result<Vec<ResidualRow>> {
    let h = h.unwrap_or(1);
    let main = |x: u64| -> Result<f64> {
        match quantity {
            Quantity::SOmegaLcm | Quantity::TauOmega => main_term_thm1(x, consts.b),
            Quantity::SOmegaGcd => main_term_lemma2(x, consts.c, consts.d),
            Quantity::WOmega => main_term_lemma3(x, h, consts.a, &consts.a_j),
            Quantity::DivOmega => Err(Error::NoMainTerm { quantity }),
        }
    };
    let exact_method = match quantity {
        Quantity::TauOmega => Method::Sieve,
        _ => Method::DivisorDecomp,
    };
    // Rows are independent; par_iter keeps the input order on collect.
    cfg.run(|| {
        grid.par_iter()
            .map(|&x| {
                let exact = summation::compute(quantity, x, exact_method, cfg)?.value;
                let main_term = main(x)?;
                let residual = exact as f64 - main_term;
                Ok(ResidualRow {
                    x,
                    exact,
                    main_term,
                    residual,
                    normalized: residual / error_scale(quantity, x, h),
                })
            })
            .collect()
    })
}

/// The numeric replay of the proof decomposition at one threshold.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct S2Decomposition {
    pub x: u64,
    pub h: u32,
    /// `Σ_{x/2 < k <= x} W(⌊x/k⌋)`, computed exactly; always zero because
    /// every inner threshold collapses to 1.
    pub s1: u128,
    /// `Σ_{k <= x/2} W(⌊x/k⌋)`, exact.
    pub s2_exact: u128,
    /// `Σ_{k <= x/2} (1/k) log log(x/k)`.
    pub s21: f64,
    /// `A Σ_{k <= x/2} 1/k`.
    pub s22: f64,
    /// `Σ_{k <= x/2} Σ_{j <= h} a_j / (k log^j(x/k))`.
    pub s23: f64,
    /// `Σ_{k <= x/2} 1 / (k log^(h+1)(x/k))`, the error-term envelope.
    pub s24_bound: f64,
    /// `2x (s21 + s22 + s23)`, the asymptotic reconstruction of `2 S_2`.
    pub recomposed: f64,
}

/// Splits `2 Σ_{k<=x} Σ_{d|k} ω(d)` into the proof's pieces and verifies
/// the built-in consistency checks: `S_1 = 0` exactly, the integral sandwich
/// around `S_{2,1}`, and the recomposition bound against the exact `S_2`.
/// A failed check is an error: a nonzero `S_1` signals an exact-engine bug,
/// a bound violation a constants/series bug.
pub fn decompose_s2(
    x: u64,
    h: u32,
    consts: &AsymptoticConstants,
    _cfg: &SieveConfig,
) -> Result<S2Decomposition> {
    if x < 4 {
        return Err(Error::Domain {
            what: "decompose_s2",
            x,
        });
    }
    assert!(h >= 1 && consts.a_j.len() >= h as usize);
    let half = x / 2;
    let table = PrimeTable::generate(x)?;
    let w_exact = |v: u64| -> u128 { table.up_to(v).iter().map(|&p| u128::from(v / p)).sum() };

    let mut s1 = 0u128;
    for k in half + 1..=x {
        s1 += w_exact(x / k);
    }
    if s1 != 0 {
        return Err(Error::DecompositionCheck {
            what: "S_1 must vanish",
            x,
        });
    }

    // S_2 exactly, one W evaluation per distinct floor value.
    let mut s2_exact = 0u128;
    let mut k = 1u64;
    while k <= half {
        let v = x / k;
        let k_last = (x / v).min(half);
        s2_exact += u128::from(k_last - k + 1) * w_exact(v);
        k = k_last + 1;
    }

    let xf = x as f64;
    let mut s21 = KahanSum::new();
    let mut s22 = KahanSum::new();
    let mut s23 = KahanSum::new();
    let mut s24 = KahanSum::new();
    for k in 1..=half {
        let kf = k as f64;
        let l = (xf / kf).ln();
        s21.add(l.ln() / kf);
        s22.add(consts.a / kf);
        for j in 1..=h {
            s23.add(consts.a_j[(j - 1) as usize] / (kf * l.powi(j as i32)));
        }
        s24.add(1.0 / (kf * l.powi((h + 1) as i32)));
    }
    let (s21, s22, s23, s24_bound) = (s21.value(), s22.value(), s23.value(), s24.value());
    let recomposed = 2.0 * xf * (s21 + s22 + s23);

    // Analytic checks only apply once log log x is positive.
    if x >= 16 {
        let (lower, upper) = s21_integral_sandwich(x);
        if s21 < lower || s21 > upper {
            return Err(Error::DecompositionCheck {
                what: "S_{2,1} outside the integral sandwich",
                x,
            });
        }
        let slack = frozen::S2_RECOMPOSITION_CONST * xf * xf.ln().ln();
        if (recomposed - 2.0 * s2_exact as f64).abs() > slack {
            return Err(Error::DecompositionCheck {
                what: "recomposed S_2 too far from the exact value",
                x,
            });
        }
    }

    Ok(S2Decomposition {
        x,
        h,
        s1,
        s2_exact,
        s21,
        s22,
        s23,
        s24_bound,
        recomposed,
    })
}

/// The two integral comparisons that sandwich `S_{2,1}`:
/// both sides equal `log x log log x − log x + log 2 − log 2 log log 2`,
/// with an extra `log log x` allowed on top.
pub fn s21_integral_sandwich(x: u64) -> (f64, f64) {
    let lx = (x as f64).ln();
    let l2 = 2.0f64.ln();
    let base = lx * lx.ln() - lx + l2 - l2 * l2.ln();
    (base, base + lx.ln())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> SieveConfig {
        SieveConfig {
            segment_length: 1 << 14,
            threads: Some(2),
        }
    }

    fn test_consts() -> AsymptoticConstants {
        AsymptoticConstants::compute(1_000_000, 3, 100_000, &cfg()).unwrap()
    }

    #[test]
    fn thm1_domain_and_value() {
        assert!(matches!(main_term_thm1(2, -1.9), Err(Error::Domain { .. })));
        let b = -1.9292529943457799;
        let x = 16u64;
        let expected = 2.0 * 16.0 * 16f64.ln() * 16f64.ln().ln() + b * 16.0 * 16f64.ln();
        assert!((main_term_thm1(x, b).unwrap() - expected).abs() < 1e-12);
        // log log 16 = log 2.7726 ≈ 1.0198 in natural logs.
        assert!((16f64.ln().ln() - 1.0198).abs() < 1e-3);
    }

    #[test]
    fn lemma2_at_one_is_d() {
        let (c, d) = (0.45224742004106550, -0.91634104826058154);
        assert!((main_term_lemma2(1, c, d).unwrap() - d).abs() < 1e-15);
        for x in [3u64, 10, 1000] {
            assert!(main_term_lemma2(2 * x, c, d).unwrap() > main_term_lemma2(x, c, d).unwrap());
        }
    }

    #[test]
    fn lemma3_domain_edge_and_term_structure() {
        let k = test_consts();
        assert!(main_term_lemma3(3, 1, k.a, &k.a_j).is_ok());
        assert!(matches!(
            main_term_lemma3(2, 1, k.a, &k.a_j),
            Err(Error::Domain { .. })
        ));
        let x = 1_000_000u64;
        let h1 = main_term_lemma3(x, 1, k.a, &k.a_j).unwrap();
        let h2 = main_term_lemma3(x, 2, k.a, &k.a_j).unwrap();
        let expected_shift = k.a_j[1] * x as f64 / (x as f64).ln().powi(2);
        assert!((h2 - h1 - expected_shift).abs() < 1e-9 * x as f64);
    }

    #[test]
    fn grid_shapes() {
        let grid = geometric_grid(10_000, 1_000_000, 5).unwrap();
        assert_eq!(grid.len(), 5);
        assert_eq!(*grid.first().unwrap(), 10_000);
        assert_eq!(*grid.last().unwrap(), 1_000_000);
        assert!(grid.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(geometric_grid(10_000, 20_000, 1).unwrap(), vec![10_000]);
        let thirteen = geometric_grid(10_000, 10_000_000, 13).unwrap();
        assert_eq!(thirteen.len(), 13);
    }

    #[test]
    fn single_point_table() {
        let k = test_consts();
        let rows = residual_table(Quantity::SOmegaLcm, &[10_000], None, &k, &cfg()).unwrap();
        assert_eq!(rows.len(), 1);
        let row = &rows[0];
        assert_eq!(row.x, 10_000);
        assert!(
            (row.residual - (row.exact as f64 - row.main_term)).abs() <= row.residual.abs() * 1e-15
        );
        assert!(row.normalized.is_finite());
    }

    #[test]
    fn w_omega_h2_normalization_uses_log_cubed() {
        let k = test_consts();
        let rows = residual_table(Quantity::WOmega, &[100_000], Some(2), &k, &cfg()).unwrap();
        let row = &rows[0];
        let scale = 100_000f64 / 100_000f64.ln().powi(3);
        assert!((row.normalized - row.residual / scale).abs() < 1e-12 * row.normalized.abs());
    }

    #[test]
    fn s1_vanishes_exhaustively_small() {
        let k = test_consts();
        for x in 4..=2000u64 {
            let d = decompose_s2(x, 1, &k, &cfg()).unwrap();
            assert_eq!(d.s1, 0, "x = {x}");
        }
    }

    #[test]
    fn s2_exact_hand_value_at_four() {
        let k = test_consts();
        let d = decompose_s2(4, 1, &k, &cfg()).unwrap();
        // k = 1 contributes W(4) = 3, k = 2 contributes W(2) = 1.
        assert_eq!(d.s2_exact, 4);
    }

    #[test]
    fn s21_sandwich_holds() {
        let k = test_consts();
        for x in [16u64, 100, 1_000, 100_000] {
            let d = decompose_s2(x, 1, &k, &cfg()).unwrap();
            let (lower, upper) = s21_integral_sandwich(x);
            assert!(lower <= d.s21 && d.s21 <= upper, "x = {x}: {}", d.s21);
        }
    }

    #[test]
    fn s2_exact_equals_divisor_omega_sum() {
        // S_1 = 0, so S_2 alone must equal Σ_{k<=x} Σ_{d|k} ω(d).
        let k = test_consts();
        for x in [10u64, 100, 5000] {
            let d = decompose_s2(x, 1, &k, &cfg()).unwrap();
            let direct = summation::compute(Quantity::DivOmega, x, Method::Sieve, &cfg())
                .unwrap()
                .value;
            assert_eq!(d.s2_exact, direct, "x = {x}");
        }
    }
}
