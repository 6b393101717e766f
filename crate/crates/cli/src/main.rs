use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use homocyl_cli::{describe_error, run, Cli, EXIT_INPUT};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            let mut out = std::io::stdout().lock();
            // A closed pipe (e.g. `| head`) only truncates the human output.
            for line in &report.text {
                if writeln!(out, "{line}").is_err() {
                    break;
                }
            }
            drop(out);
            if let Some(path) = &cli.json {
                let doc = serde_json::to_string_pretty(&report).expect("reports serialize");
                if let Err(e) = std::fs::write(path, doc + "\n") {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(EXIT_INPUT as u8);
                }
            }
            ExitCode::from(report.exit_code as u8)
        }
        Err(e) => {
            eprintln!("{}", describe_error(&e));
            ExitCode::from(EXIT_INPUT as u8)
        }
    }
}
