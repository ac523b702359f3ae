//! Three-way outcomes of polynomial sign tests.

use num_bigint::{BigInt, Sign};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SignOutcome {
    Negative,
    Zero,
    Positive,
}

impl SignOutcome {
    /// Sign of (-1)^count: the parity law for tie-free parity products.
    pub fn from_parity(count: usize) -> SignOutcome {
        if count.is_multiple_of(2) {
            SignOutcome::Positive
        } else {
            SignOutcome::Negative
        }
    }
}

/// Exact sign of a literal oracle value.
pub fn sign_of(v: &BigInt) -> SignOutcome {
    match v.sign() {
        Sign::Minus => SignOutcome::Negative,
        Sign::NoSign => SignOutcome::Zero,
        Sign::Plus => SignOutcome::Positive,
    }
}
