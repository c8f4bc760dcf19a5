use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = crucial_words::cli::dispatch(std::env::args_os());
    let stream = if outcome.status == 2 { &mut std::io::stderr() as &mut dyn Write } else { &mut std::io::stdout() };
    let _ = stream.write_all(outcome.report.as_bytes());
    ExitCode::from(outcome.status as u8)
}
