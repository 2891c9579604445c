use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use hocalc::{run, run_batch, Cli, Output, Query, EXIT_USAGE};

fn emit(out: &Output) {
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match (cli.batch, cli.verb) {
        (Some(path), None) => match std::fs::read_to_string(&path) {
            Ok(text) => {
                let outs = run_batch(&text, cli.format);
                outs.iter().for_each(emit);
                outs.iter().map(|o| o.code).max().unwrap_or(0)
            }
            Err(e) => {
                emit(&Output::usage(format!("cannot read {}: {e}", path.display())));
                EXIT_USAGE
            }
        },
        (Some(_), Some(_)) => {
            emit(&Output::usage("give either --batch or a verb, not both"));
            EXIT_USAGE
        }
        (None, Some(verb)) => {
            let out = run(&Query { verb, format: cli.format });
            emit(&out);
            out.code
        }
        (None, None) => {
            emit(&Output::usage("missing verb; try --help"));
            EXIT_USAGE
        }
    };
    let _ = std::io::stdout().flush();
    ExitCode::from(code as u8)
}
