//! Evaluates the asymptotic constants at a doubling sequence of truncation
//! points and shows the certified tail bound shrinking alongside the value
//! movement — the bound must always cover the observed change.
//!
//! Usage: cargo run --release --example evaluate_constants

use omega_sums::constants;
use omega_sums::sieve::SieveConfig;

fn main() {
    let cfg = SieveConfig::default();

    println!(
        "gamma (self-tested literal): {:.17}",
        constants::EULER_GAMMA
    );
    println!();
    println!(
        "{:<6} {:>10} {:>22} {:>12} {:>12}",
        "name", "P", "value", "tail", "moved"
    );
    type Eval = fn(u64, &SieveConfig) -> omega_sums::Result<constants::ConstantEstimate>;
    let table: [(&str, Eval); 4] = [
        ("C", constants::prime_zeta_2),
        ("A", constants::mertens_a),
        ("B", constants::constant_b),
        ("D", constants::constant_d),
    ];
    for (label, eval) in table {
        let mut prev: Option<f64> = None;
        for p in [100_000u64, 400_000, 1_600_000, 6_400_000, 25_600_000] {
            let e = eval(p, &cfg).unwrap();
            let moved = prev.map_or(f64::NAN, |v| (e.value - v).abs());
            println!(
                "{:<6} {:>10} {:>22.17} {:>12.3e} {:>12.3e}",
                label, p, e.value, e.tail_bound, moved
            );
            if let Some(v) = prev {
                assert!(
                    (e.value - v).abs() <= 2.0 * e.tail_bound + 1e-15,
                    "{label} tail too tight"
                );
            }
            prev = Some(e.value);
        }
        println!();
    }

    println!("correction-term integrals (T = 1e6):");
    for j in 1..=4 {
        let e = constants::a_j_integral(j, 1_000_000).unwrap();
        println!("  a_{j} = {:>22.17}  (tail {:.3e})", e.value, e.tail_bound);
    }
    let a1 = constants::a_j_integral(1, 1_000_000).unwrap();
    println!(
        "  cross-check: a_1 - (gamma - 1) = {:+.3e}",
        a1.value - (constants::EULER_GAMMA - 1.0)
    );
}
