//! Command implementations and output formatting for the `circumsphere` binary.

pub mod args;
pub mod commands;
pub mod output;

use std::io::Write;

pub use args::{Cli, Command};
pub use commands::CliError;
pub use output::{format_real, Cell, Format, OutputRecord};

/// Runs one subcommand and returns the rendered output plus any warning.
pub fn execute(command: &Command) -> Result<(String, Option<String>), CliError> {
    let (record, warning) = match command {
        Command::Volume(a) => (commands::volume(a)?, None),
        Command::Ratio(a) => (commands::ratio(a)?, None),
        Command::Figure(a) => (commands::figure(a)?, None),
        Command::Converge(a) => (commands::converge(a)?, None),
        Command::Peak(a) => commands::peak(a)?,
        Command::Mc(a) => (commands::mc(a)?, None),
    };
    Ok((record.render(command.output().format), warning))
}

/// Executes `command` and writes its output to `--out` or standard output.
pub fn run(command: &Command) -> Result<(), CliError> {
    let (text, warning) = execute(command)?;
    if let Some(w) = warning {
        eprintln!("{w}");
    }
    match &command.output().out {
        Some(path) => std::fs::write(path, text)?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
        }
    }
    Ok(())
}
