//! Prints residual tables for the three asymptotic formulas over a geometric
//! grid, normalized by each formula's error scale. Bounded, trend-free
//! normalized columns are the empirical confirmation of the asymptotics;
//! the frozen bounds in `asymptotics::frozen` were recorded from this output.
//!
//! Usage: cargo run --release --example residual_tables

use omega_sums::asymptotics::{self, AsymptoticConstants};
use omega_sums::sieve::SieveConfig;
use omega_sums::summation::Quantity;

fn main() {
    let cfg = SieveConfig::default();
    let consts = AsymptoticConstants::default_set().unwrap();
    let grid = asymptotics::geometric_grid(10_000, 10_000_000, 13).unwrap();

    let cases: [(&str, Quantity, Option<u32>); 4] = [
        ("lcm sum, residual / x", Quantity::SOmegaLcm, None),
        ("gcd sum, residual / sqrt(x)", Quantity::SOmegaGcd, None),
        (
            "omega partial sum h=1, residual / (x/log^2 x)",
            Quantity::WOmega,
            Some(1),
        ),
        (
            "omega partial sum h=2, residual / (x/log^3 x)",
            Quantity::WOmega,
            Some(2),
        ),
    ];
    for (title, quantity, h) in cases {
        println!("{title}");
        println!(
            "{:>10} {:>18} {:>20} {:>14} {:>12}",
            "x", "exact", "main_term", "residual", "normalized"
        );
        let rows = asymptotics::residual_table(quantity, &grid, h, &consts, &cfg).unwrap();
        for r in &rows {
            println!(
                "{:>10} {:>18} {:>20.3} {:>14.3} {:>12.4}",
                r.x, r.exact, r.main_term, r.residual, r.normalized
            );
        }
        let max = rows
            .iter()
            .map(|r| r.normalized.abs())
            .fold(0.0f64, f64::max);
        println!("max |normalized| = {max:.4}\n");
    }
}
