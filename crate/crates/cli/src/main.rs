use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use depthkit_cli::{run, Cli, Format, EXIT_INPUT};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_INPUT as u8)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let out = run(&cli);
    if out.error && cli.format == Format::Text {
        let _ = std::io::stderr().write_all(out.report.as_bytes());
    } else {
        let _ = std::io::stdout().write_all(out.report.as_bytes());
    }
    ExitCode::from(out.code as u8)
}
