use thiserror::Error;

use crate::group::MAX_CELLS;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{0} is not a supported modulus (expected a prime in 2..=36)")]
    InvalidPrime(u32),

    #[error("digit {digit} is out of range for p = {p}")]
    InvalidDigit { digit: u32, p: u32 },

    #[error("operand mismatch: {0}")]
    Mismatch(String),

    #[error("invalid window [{lo}, {hi}]")]
    InvalidWindow { lo: i32, hi: i32 },

    #[error("window needs {cells} cells, more than the supported {MAX_CELLS}")]
    WindowTooLarge { cells: u128 },

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("function is not in V_{level}: refinement residual {residual:e}")]
    NotInSpace { level: i32, residual: f64 },

    #[error("the generator is the zero function")]
    ZeroGenerator,

    #[error("translates of the generator are not a Parseval frame")]
    NotParseval,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("strata leave {} cell(s) of U* uncovered at depth {depth}", cells.len())]
    LimitUnmet { depth: u32, cells: Vec<String> },

    #[error("blocked set has positive measure {measure}")]
    Blocked { measure: f64, cells: Vec<String> },

    #[error("the dyadic wavelet construction needs p = 2, got p = {0}")]
    RequiresDyadic(u32),
}

pub type Result<T> = std::result::Result<T, Error>;
