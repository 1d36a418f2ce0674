use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use eulersum::cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let mut err = io::stderr();
    let status = run(cli, &mut out, &mut err).and_then(|s| out.flush().map(|()| s));
    match status {
        Ok(s) => ExitCode::from(s.code()),
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("eulersum: {e}");
            ExitCode::FAILURE
        }
    }
}
