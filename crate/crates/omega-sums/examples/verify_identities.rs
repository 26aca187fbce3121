//! Verifies the structural identities that tie the quantities together:
//! pointwise, ω([m,n]) + ω((m,n)) = ω(m) + ω(n) and ω([m, k/m]) = ω(k);
//! globally, the lcm sum equals twice the divisor-ω sum minus the gcd sum.
//! Every route is computed independently before comparison.
//!
//! Usage: cargo run --release --example verify_identities [max_k]

use omega_sums::oracle;
use omega_sums::sieve::SieveConfig;
use omega_sums::summation::{self, Method, Quantity};

fn main() {
    let max_k: u64 = std::env::args()
        .nth(1)
        .map(|s| {
            omega_sums::output::parse_exact_integer(&s).expect("max_k must be an exact integer")
        })
        .unwrap_or(20_000);
    let cfg = SieveConfig::default();

    for k in 1..=max_k {
        assert!(
            oracle::lemma1_pointwise_check(k).unwrap(),
            "additivity fails at k = {k}"
        );
        assert!(
            oracle::omega_lcm_complement_check(k).unwrap(),
            "complement fails at k = {k}"
        );
    }
    println!("pointwise identities hold for every divisor pair of every k <= {max_k}");

    for x in [1_000u64, 10_000, 100_000, 1_000_000] {
        let lcm = summation::compute(Quantity::SOmegaLcm, x, Method::Sieve, &cfg)
            .unwrap()
            .value;
        let div = summation::compute(Quantity::DivOmega, x, Method::Sieve, &cfg)
            .unwrap()
            .value;
        let gcd = summation::compute(Quantity::SOmegaGcd, x, Method::DivisorDecomp, &cfg)
            .unwrap()
            .value;
        assert_eq!(lcm, 2 * div - gcd);
        println!("x = {x:>8}: S = {lcm} = 2 * {div} - {gcd}");
    }
    println!("global identity S = 2T - G holds on all checked thresholds");
}
