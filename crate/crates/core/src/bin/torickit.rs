use std::io::Write;
use std::process::ExitCode;

use torickit::cli::{run, MAX_R_VAR};

fn main() -> ExitCode {
    let max_r = std::env::var(MAX_R_VAR).ok();
    let (code, out, err) = run(std::env::args_os(), max_r.as_deref());
    let _ = std::io::stdout().write_all(out.as_bytes());
    let _ = std::io::stderr().write_all(err.as_bytes());
    ExitCode::from(code as u8)
}
