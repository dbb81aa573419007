use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use qpoly_hull::cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = run(&cli);
    let written = match (&cli.global.out, out.code) {
        (Some(path), 0 | 1) => std::fs::write(path, &out.text),
        _ if out.code == 0 => std::io::stdout().write_all(out.text.as_bytes()),
        _ => std::io::stderr().write_all(out.text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(out.code as u8)
}
