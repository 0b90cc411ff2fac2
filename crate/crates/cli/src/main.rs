use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use nzflow::commands::{run, Cli};
use nzflow::report::Status;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = run(&cli.command);
    let text = if cli.json {
        report.to_json()
    } else {
        report.to_text()
    };
    if let (false, Status::Error(message)) = (cli.json, &report.status) {
        eprintln!("error: {message}");
    }
    let mut stdout = std::io::stdout().lock();
    if stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
        return ExitCode::from(2);
    }
    ExitCode::from(report.exit_code)
}
