use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use plocal::{run, Args, CliError, RunConfig, DEFAULT_CORPUS};

fn main() -> ExitCode {
    let args = Args::parse();
    let started = Instant::now();
    let result = RunConfig::from_args(&args).and_then(|config| {
        let text = match &args.corpus {
            Some(path) => std::fs::read_to_string(path).map_err(|source| CliError::Io {
                path: path.clone(),
                source,
            })?,
            None => DEFAULT_CORPUS.to_string(),
        };
        run(&config, &text)
    });
    match result {
        Ok(out) => {
            print!("{}", out.summary);
            if let Some(c) = &out.cache {
                println!("cache: {} hits, {} misses", c.hits(), c.misses());
            }
            println!(
                "{} reports written to {} in {:.1}s",
                out.reports.len(),
                args.report.display(),
                started.elapsed().as_secs_f64()
            );
            if out.summary.failed() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
