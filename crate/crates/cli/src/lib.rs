//! `pathdom` command-line front end.
//!
//! Exit codes: 0 success, 1 invalid input, 2 verification failure,
//! 3 resource-guard refusal.

mod args;
mod commands;

use std::fs::File;
use std::io::{self, BufWriter, Write};

use clap::Parser;
use pathdom_core::Error;

pub use args::Cli;
pub use commands::ExpectReport;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_VERIFY_FAILED: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

/// Failure of a subcommand, carrying its exit code.
#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Io(io::Error),
    Invalid(String),
    Verification(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(Error::ResourceLimit { .. }) => EXIT_RESOURCE,
            CliError::Core(Error::Consistency(_)) | CliError::Verification(_) => EXIT_VERIFY_FAILED,
            CliError::Core(_) | CliError::Io(_) | CliError::Invalid(_) => EXIT_INVALID,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
            CliError::Invalid(m) => write!(f, "invalid input: {m}"),
            CliError::Verification(m) => write!(f, "verification failed: {m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(e.into())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(io::Error::other(e))
    }
}

/// Parses `args` (including the program name) and runs the subcommand.
/// Results go to `--output` or `stdout`; diagnostics go to `stderr`.
pub fn dispatch<I, S>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };

    let result = match &cli.output {
        Some(path) => File::create(path).map_err(CliError::from).and_then(|f| {
            let mut w = BufWriter::new(f);
            let r = commands::run(&cli, &mut w, stderr);
            w.flush()?;
            r
        }),
        None => commands::run(&cli, stdout, stderr),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes_by_error_kind() {
        let limit = Error::ResourceLimit {
            what: "n! orders".into(),
            limit: 11,
            override_flag: "--allow-large",
        };
        assert_eq!(CliError::Core(limit).exit_code(), EXIT_RESOURCE);
        assert_eq!(
            CliError::Core(Error::Consistency("x".into())).exit_code(),
            EXIT_VERIFY_FAILED
        );
        assert_eq!(CliError::Verification("x".into()).exit_code(), EXIT_VERIFY_FAILED);
        assert_eq!(CliError::Core(Error::Singular).exit_code(), EXIT_INVALID);
        assert_eq!(CliError::Invalid("x".into()).exit_code(), EXIT_INVALID);
    }

    #[test]
    fn output_flag_writes_file() {
        let path = std::env::temp_dir().join(format!("pathdom-out-{}.txt", std::process::id()));
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let argv = ["pathdom", "expect", "--n", "4", "-o", path.to_str().unwrap()];
        assert_eq!(dispatch(argv, &mut out, &mut err), EXIT_OK);
        assert!(out.is_empty());
        assert_eq!(std::fs::read_to_string(&path).unwrap().trim(), "2");
        std::fs::remove_file(path).unwrap();
    }
}
