use crate::summation::{Method, Quantity};

/// Errors shared by every module in the crate.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("prime table up to {limit} would need about {estimate} bytes, over the {budget}-byte budget")]
    Capacity {
        limit: u64,
        estimate: u64,
        budget: u64,
    },

    #[error("prime table reaches {have} but the segment needs primes up to {need}")]
    InsufficientPrimes { have: u64, need: u64 },

    #[error("invalid sieve range [{lo}, {hi})")]
    InvalidRange { lo: u64, hi: u64 },

    #[error("segment length {0} is below the minimum of 1024")]
    SegmentTooShort(usize),

    #[error("{what}: input {x} exceeds the hard guard {limit}")]
    GuardExceeded {
        what: &'static str,
        x: u64,
        limit: u64,
    },

    #[error("accumulator overflow while computing {what} at x = {x}")]
    Overflow { what: &'static str, x: u64 },

    #[error("{what} is undefined at x = {x}")]
    Domain { what: &'static str, x: u64 },

    #[error("method {method:?} is not available for quantity {quantity:?}")]
    UnsupportedMethod { quantity: Quantity, method: Method },

    #[error("no asymptotic main term is defined for quantity {quantity:?}")]
    NoMainTerm { quantity: Quantity },

    #[error("constant identity violated: |direct - composed| = {residual:e} exceeds {allowed:e}")]
    IdentityMismatch { residual: f64, allowed: f64 },

    #[error("gamma self-test failed: recomputation differs from the literal by {residual:e}")]
    GammaSelfTest { residual: f64 },

    #[error("proof decomposition check failed at x = {x}: {what}")]
    DecompositionCheck { what: &'static str, x: u64 },
}
