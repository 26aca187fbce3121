//! Exact hyperbolic summation of the omega function over lcm and gcd pairs.
//!
//! The central quantity is `S = Σ_{mn ≤ x} ω([m,n])`, the number of distinct
//! prime divisors of the least common multiple, summed over all lattice points
//! under the hyperbola `mn ≤ x`. This crate computes it (and its relatives:
//! the gcd analogue, the partial sums of ω, the divisor summatory function,
//! and `Σ τ(k)ω(k)`) exactly, by independent algorithms that must agree
//! bit-for-bit:
//!
//! * a segmented sieve that tabulates ω and τ over blocks ([`sieve`]),
//! * prime/divisor-summatory decompositions built on the hyperbola method
//!   ([`summation`]),
//! * naive trial-division oracles for small inputs ([`oracle`]).
//!
//! On top of the exact engines, [`constants`] evaluates the constants that
//! appear in the asymptotic expansions of these sums (Euler–Mascheroni γ, the
//! Mertens-type constant `A`, prime zeta at 2, and the correction-term
//! integrals `a_j`), each with a certified truncation bound, and
//! [`asymptotics`] compares exact values against the predicted main terms over
//! geometric grids of thresholds.
//!
//! See the `examples/` directory for runnable entry points covering each
//! capability; the `omega-sums` binary exposes the same surface as a CLI.

// Reference constants are written to their full decimal expansion even where
// the trailing digits exceed f64 resolution; they double as documentation.
#![allow(clippy::excessive_precision)]

pub mod asymptotics;
pub mod constants;
pub mod error;
pub mod num;
pub mod oracle;
pub mod output;
pub mod sieve;
pub mod summation;

pub use error::Error;
pub use sieve::{AdditiveSieveSegment, PrimeTable, SieveConfig};
pub use summation::{Method, Quantity, SummationResult};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
