//! Library side of the `gamow` command-line tool: flag parsing, subcommand
//! runners and the CSV/JSON/SVG writers.

// `!(x > 0.0)` also rejects NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod config;
pub mod number;
pub mod run;
pub mod table;

use std::io::Write;

pub use config::{Cli, Command, Format, ModeArg, RunConfig};
pub use number::format_real;
pub use table::{Cell, Meta, Plot, Table};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Core(#[from] gamow_core::Error),
    #[error("usage: {0}")]
    Usage(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// 2 for domain and usage errors, 1 for internal failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if e.is_domain() => 2,
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

pub fn render(table: &Table, format: Format) -> String {
    match format {
        Format::Csv => table.to_csv(),
        Format::Json => table.to_json(),
        Format::Svg => table.to_svg(),
    }
}

/// Run one configuration and write its output.
pub fn execute(cfg: &RunConfig) -> Result<(), CliError> {
    let table = run::run(cfg)?;
    let text = render(&table, cfg.format);
    match &cfg.out {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}
