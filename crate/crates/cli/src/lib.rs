//! Command-line front end: the presentation file format, reports and the
//! `novikov` commands.

pub mod commands;
pub mod format;
pub mod report;
pub mod scalar;

use std::fs;

pub use commands::{Cli, Command, Failure, Run};
pub use format::{emit, parse, ParseError};

pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs a parsed command line and writes the JSON sidecar when asked.
pub fn execute(cli: &Cli) -> Output {
    let (mut out, json) = match commands::run(&cli.command) {
        Ok(r) => (Output { code: r.code, stdout: r.text, stderr: String::new() }, r.json),
        Err(f) => (
            Output { code: f.code(), stdout: String::new(), stderr: format!("error: {}\n", f.message()) },
            serde_json::json!({ "error": f.message(), "exit_code": f.code() }),
        ),
    };
    if let Some(path) = &cli.json_out {
        let text = serde_json::to_string_pretty(&json).expect("JSON values serialize") + "\n";
        if let Err(e) = fs::write(path, text) {
            out.stderr.push_str(&format!("error: {}: {e}\n", path.display()));
            out.code = 2;
        }
    }
    out
}
