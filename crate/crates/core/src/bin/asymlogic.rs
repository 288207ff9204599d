use std::io::Write;
use std::panic;
use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = panic::catch_unwind(|| asymlogic::cli::run(std::env::args_os()));
    let outcome = match outcome {
        Ok(o) => o,
        Err(_) => return ExitCode::from(3),
    };
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code as u8)
}
