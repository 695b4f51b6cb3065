use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = std::panic::catch_unwind(|| seifert_cs_cli::run(std::env::args_os()));
    let outcome = match outcome {
        Ok(o) => o,
        // the panic message has already gone to stderr
        Err(_) => return ExitCode::from(1),
    };
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code as u8)
}
