use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use clifftwist::{configure_jobs, run, Cli, EXIT_USAGE};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE as u8 } else { 0 });
        }
    };
    if let Err(msg) = configure_jobs() {
        eprintln!("error: {msg}");
        return ExitCode::from(EXIT_USAGE as u8);
    }
    let out = run(&cli);
    for line in &out.stderr {
        eprintln!("{line}");
    }
    let mut stdout = std::io::stdout().lock();
    if stdout.write_all(out.stdout.as_bytes()).and_then(|_| stdout.flush()).is_err() {
        return ExitCode::from(1);
    }
    ExitCode::from(out.code as u8)
}
