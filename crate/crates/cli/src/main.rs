use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clique_lab_cli::{execute, parse_args};

fn main() -> ExitCode {
    let cli = match parse_args(std::env::args_os()) {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    let mut sink: Box<dyn Write> = match &cli.output {
        Some(path) => match File::create(path) {
            Ok(f) => Box::new(BufWriter::new(f)),
            Err(e) => {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(2);
            }
        },
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    match execute(&cli, &mut sink) {
        Ok(outcome) => ExitCode::from(outcome.exit_code as u8),
        Err(e) => {
            let _ = sink.flush();
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
