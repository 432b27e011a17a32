//! JSON formats and command implementations behind the `symres` binary.
//!
//! Exit codes: 0 success, 1 routes disagree, 2 input error, 3 the resultant
//! vanishes (`closed` only), 4 resource guard.

pub mod commands;
pub mod error;
pub mod json;

use std::io::Read;
use std::path::Path;

pub use commands::{Options, Output};
pub use error::CliError;

/// Reads a file, or standard input for `None` and `-`.
pub fn read_input(path: Option<&Path>) -> Result<String, CliError> {
    match path {
        Some(p) if p != Path::new("-") => {
            std::fs::read_to_string(p).map_err(|e| CliError::input(format!("{}: {e}", p.display())))
        }
        _ => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| CliError::input(format!("stdin: {e}")))?;
            Ok(s)
        }
    }
}
