//! Numerical tolerances shared by every verifier in the crate.
//!
//! Digit arithmetic and character indices are exact; tolerances only enter
//! once coefficients become complex doubles.

/// Residual bound for identities evaluated directly on step-function cells.
pub const EXACT: f64 = 1e-12;

/// Residual bound for checks whose inputs already carry a prior residual
/// (a filter recovered by division, a function recovered by a transform).
pub const CHAINED: f64 = 1e-9;

/// Threshold below which a nonnegative quantity (a squared modulus, a
/// periodization value, a squared fiber norm) is treated as zero when
/// deciding supports.
pub const SUPPORT: f64 = 1e-12;

/// `true` when a squared magnitude should be treated as zero.
#[inline]
pub fn negligible(sq: f64) -> bool {
    sq <= SUPPORT
}
