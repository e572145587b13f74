use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use energy_cli::{run, Cli, Exit};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { Exit::Parse.code() } else { 0 });
        }
    };
    let stdin = io::stdin();
    let mut out = io::BufWriter::new(io::stdout().lock());
    let status = run(&cli, &mut stdin.lock(), &mut out);
    let _ = out.flush();
    match status {
        Ok(exit) => ExitCode::from(exit.code()),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit.code())
        }
    }
}
