use std::fmt;

use vilenkin::Error;

pub const FAILED: u8 = 1;
pub const USAGE: u8 = 2;
pub const ORACLE_MISMATCH: u8 = 3;
pub const EMPTY_SUPPORT: u8 = 4;
pub const BLOCKED: u8 = 5;
pub const NOT_DYADIC: u8 = 6;
pub const STRATA_NOT_COVERING: u8 = 7;
pub const NOT_PARSEVAL: u8 = 8;

/// An error with the process exit code it maps to.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn new(code: u8, message: impl Into<String>) -> Self {
        Failure { code, message: message.into() }
    }

    pub fn usage(message: impl Into<String>) -> Self {
        Failure::new(USAGE, message)
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Parse { .. }
            | Error::InvalidPrime(_)
            | Error::InvalidDigit { .. }
            | Error::InvalidWindow { .. }
            | Error::WindowTooLarge { .. }
            | Error::Mismatch(_) => USAGE,
            Error::ZeroGenerator | Error::NotParseval => NOT_PARSEVAL,
            Error::LimitUnmet { .. } => STRATA_NOT_COVERING,
            Error::Blocked { .. } => BLOCKED,
            Error::RequiresDyadic(_) => NOT_DYADIC,
            Error::NotInSpace { .. } | Error::Precondition(_) => FAILED,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::usage(e.to_string())
    }
}
