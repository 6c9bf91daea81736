use std::io;
use std::process::ExitCode;

use clap::Parser;
use ringlab_verifier::commands::{execute, Cli};
use ringlab_verifier::VerifierError;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli, &mut io::stdout().lock(), &mut io::stderr().lock()) {
        Ok(code) => ExitCode::from(code as u8),
        Err(VerifierError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
