use std::process::ExitCode;

use clap::Parser;
use matchfield::cli::{run, workers_from_env, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = workers_from_env().and_then(|workers| {
        if let Some(n) = workers {
            rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global()
                .map_err(|e| matchfield::Error::Resource(e.to_string()))?;
        }
        run(&cli)
    });
    match result {
        Ok(text) => {
            let written = match &cli.output {
                Some(path) => std::fs::write(path, text),
                None => {
                    use std::io::Write;
                    std::io::stdout().write_all(text.as_bytes())
                }
            };
            match written {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("matchfield: {e}");
                    ExitCode::FAILURE
                }
            }
        }
        Err(e) => {
            eprintln!("matchfield: {e}");
            ExitCode::FAILURE
        }
    }
}
