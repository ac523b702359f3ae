//! Exact integer logarithms. The cost bounds and parameter formulas are all
//! stated in terms of `log2`; computing them through floats would misround at
//! power-of-two boundaries, so everything here is bit arithmetic.

/// `ceil(log2(x))` for `x >= 1`.
pub fn ceil_log2(x: u64) -> u64 {
    assert!(x >= 1, "log2 needs a positive argument");
    u64::from(64 - (x - 1).leading_zeros())
}

/// `floor(log2(x))` for `x >= 1`.
pub fn floor_log2(x: u64) -> u64 {
    assert!(x >= 1, "log2 needs a positive argument");
    u64::from(63 - x.leading_zeros())
}
