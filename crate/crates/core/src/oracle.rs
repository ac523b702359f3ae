//! Literal brute-force evaluation of the gadget polynomials.
//!
//! `literal_r` and `literal_pi` expand their defining sums over explicit
//! subsets with exact big-integer arithmetic. Enumeration is exponential in
//! |B|, so both cap the set size at [`ORACLE_SET_CAP`]; they are verification
//! tools that certify the comparison-based runtime in [`crate::parity`],
//! never the runtime path itself.

use itertools::Itertools;
use num_bigint::BigInt;
use thiserror::Error;

use crate::index_set::IndexSet;
use crate::instance::{Index, Instance};

/// Largest |B| the enumerating oracle accepts (at most 2^16 subsets per sum).
pub const ORACLE_SET_CAP: usize = 16;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("pivot {pivot} is a member of B")]
    PivotInSet { pivot: Index },
    #[error("|B| = {len} exceeds the oracle cap {ORACLE_SET_CAP}")]
    SetTooLarge { len: usize },
    #[error("t = {t} outside 0..={bound}")]
    TieBoundOutOfRange { t: usize, bound: usize },
    #[error("claimed tie count {claimed}, actual {actual}")]
    TieCountMismatch { claimed: usize, actual: usize },
}

fn check_pivot(i: Index, set: &IndexSet) -> Result<(), OracleError> {
    if set.contains(i) {
        Err(OracleError::PivotInSet { pivot: i })
    } else {
        Ok(())
    }
}

fn check_cap(set: &IndexSet) -> Result<(), OracleError> {
    if set.len() > ORACLE_SET_CAP {
        Err(OracleError::SetTooLarge { len: set.len() })
    } else {
        Ok(())
    }
}

fn diff(inst: &Instance, i: Index, a: Index) -> BigInt {
    BigInt::from(i128::from(inst.value(i)) - i128::from(inst.value(a)))
}

/// P(i,B) = prod over a in B of (x_i - x_a); the empty product is 1.
pub fn literal_p(inst: &Instance, i: Index, set: &IndexSet) -> Result<BigInt, OracleError> {
    check_pivot(i, set)?;
    Ok(set.iter().map(|a| diff(inst, i, a)).product())
}

/// R_{i,B}(t): defined as 0 for t = 0; otherwise the sum of P(i,D)^2 over all
/// D subset of B with |D| = |B| - t + 1. Zero exactly when mu_B >= t.
pub fn literal_r(
    inst: &Instance,
    i: Index,
    set: &IndexSet,
    t: usize,
) -> Result<BigInt, OracleError> {
    check_pivot(i, set)?;
    check_cap(set)?;
    let b = set.len();
    if t > b {
        return Err(OracleError::TieBoundOutOfRange { t, bound: b });
    }
    if t == 0 {
        return Ok(BigInt::from(0));
    }
    let d_size = b - t + 1;
    Ok(set
        .iter()
        .combinations(d_size)
        .map(|d| {
            let p: BigInt = d.into_iter().map(|a| diff(inst, i, a)).product();
            &p * &p
        })
        .sum())
}

/// Pi_{i,B}: the sum of plain parity products over all D subset of B with
/// |D| = |B| - mu; with the true mu_B it collapses to the product over the
/// tie-free part of B.
pub fn literal_pi(
    inst: &Instance,
    i: Index,
    set: &IndexSet,
    mu: usize,
) -> Result<BigInt, OracleError> {
    check_pivot(i, set)?;
    check_cap(set)?;
    let actual = inst.tie_count(i, set);
    if mu != actual {
        return Err(OracleError::TieCountMismatch { claimed: mu, actual });
    }
    let d_size = set.len() - mu;
    Ok(set
        .iter()
        .combinations(d_size)
        .map(|d| d.into_iter().map(|a| diff(inst, i, a)).product::<BigInt>())
        .sum())
}
