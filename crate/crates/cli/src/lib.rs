//! Command-line front end for `psdsplit`.
//!
//! [`run_args`] is the whole program minus process I/O, so tests can drive it
//! without spawning the binary.

pub mod commands;
pub mod error;
pub mod matrix_file;
pub mod render;

use clap::error::ErrorKind;
use clap::Parser;
use serde_json::json;

pub use commands::{run, Cli, Command, Format, Outcome, RunConfig};
pub use error::CliError;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

/// Everything a single invocation produces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Invocation {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run_args<I, T>(args: I) -> Invocation
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Invocation {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Invocation {
                    code: EXIT_ERROR,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    let format = cli.config.format;
    match run(&cli) {
        Ok(outcome) => Invocation {
            code: if outcome.violation {
                EXIT_VIOLATION
            } else {
                EXIT_OK
            },
            stdout: render::render(&outcome.report, format),
            stderr: String::new(),
        },
        Err(e) => {
            let report = json!({"error": {"kind": e.kind, "message": e.message}});
            Invocation {
                code: EXIT_ERROR,
                stdout: render::render(&report, format),
                stderr: format!("psdsplit: {e}\n"),
            }
        }
    }
}
