//! Command-line front end: argument grammar, domain selection, reports and suites.

pub mod args;
pub mod cache;
pub mod commands;
pub mod config;
pub mod report;
pub mod suite;

use clap::Parser;

use args::{Cli, Cmd, RootsCmd};
use config::RunConfig;
use report::Report;

/// Exit codes: 0 all checks pass, 1 a verification failed, 2 invalid configuration.
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.render().to_string());
        }
    };
    let cfg = match RunConfig::from_opts(&cli.opts) {
        Ok(c) => c,
        Err(e) => return (2, format!("error: {e}\n")),
    };
    match dispatch(&cli.cmd, &cfg) {
        Ok(r) => (if r.pass() { 0 } else { 1 }, r.render(cfg.format)),
        Err(e) => (2, format!("error: {e}\n")),
    }
}

pub fn dispatch(cmd: &Cmd, cfg: &RunConfig) -> macdaha::Result<Report> {
    match cmd {
        Cmd::Roots { what: RootsCmd::Show } => commands::roots_show(cfg),
        Cmd::Mac { what } => commands::mac(cfg, *what),
        Cmd::Daha { what } => commands::daha(cfg, *what),
        Cmd::Modular { what } => commands::modular(cfg, *what),
        Cmd::Suite { name } => suite::run_suite(name, cfg),
    }
}
