use symres::Error;
use thiserror::Error as ThisError;

pub const EXIT_OK: u8 = 0;
/// Routes disagree (`compare`, or an `--oracle` cross-check).
pub const EXIT_MISMATCH: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
/// The resultant vanishes (`closed` only).
pub const EXIT_VANISHES: u8 = 3;
pub const EXIT_GUARD: u8 = 4;

#[derive(Clone, Debug, PartialEq, Eq, ThisError)]
#[error("{message}")]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }

    pub fn guard(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_GUARD,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::MatrixTooLarge { .. }
            | Error::UnsupportedDimension { .. }
            | Error::DegenerateDenominator { .. } => EXIT_GUARD,
            Error::OracleMismatch { .. } => EXIT_MISMATCH,
            _ => EXIT_INPUT,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}
