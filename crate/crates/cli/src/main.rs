use std::io::Read;
use std::process::ExitCode;

use clap::Parser;

use wsckit_cli::{exit_code, run, Cli, EXIT_ERROR};

fn read_input(cli: &Cli) -> Result<String, String> {
    match cli.command.input() {
        None => Ok(String::new()),
        Some(Some(path)) if path.as_os_str() != "-" => {
            std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
        }
        Some(_) => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| format!("cannot read stdin: {e}"))?;
            Ok(s)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let text = match read_input(&cli) {
        Ok(t) => t,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(EXIT_ERROR as u8);
        }
    };
    match run(&cli, &text) {
        Ok(out) => {
            println!("{}", serde_json::to_string_pretty(&out.json).expect("JSON values serialize"));
            eprint!("{}", out.human);
            ExitCode::from(out.exit as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}
