//! Library surface of the command-line front end: config parsing,
//! experiment dispatch, report assembly, and the selftest suite.

pub mod config;
pub mod error;
pub mod experiments;
pub mod report;
pub mod selftest;

use std::path::Path;

use config::{ConfigFile, Kind};
use error::CliError;
use experiments::RunCtx;
use report::Report;

/// Parse a config file and run the experiment it selects.
pub fn run_config(path: &Path, ctx: &RunCtx) -> Result<Report, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::config(format!("reading {}: {e}", path.display())))?;
    let cfg = ConfigFile::parse(&text)?;
    run_parsed(&cfg, ctx)
}

pub fn run_parsed(cfg: &ConfigFile, ctx: &RunCtx) -> Result<Report, CliError> {
    match cfg.kind {
        Kind::Pst => experiments::run_pst(cfg.pst.as_ref().expect("validated"), ctx),
        Kind::Epr => experiments::run_epr(cfg.epr.as_ref().expect("validated"), ctx),
        Kind::Chsh => experiments::run_chsh(cfg.chsh.as_ref().expect("validated"), ctx),
        Kind::Norms => experiments::run_norms(cfg.norms.as_ref().expect("validated"), ctx),
        Kind::Delta => experiments::run_delta(cfg.delta.as_ref().expect("validated"), ctx),
        Kind::Wigner => experiments::run_wigner(cfg.wigner.as_ref().expect("validated"), ctx),
        Kind::Demo => experiments::run_demo(cfg.demo.as_ref().expect("validated"), ctx),
    }
}

/// The experiment kinds with one-line descriptions, for `list-experiments`.
pub fn experiment_list() -> Vec<(&'static str, &'static str)> {
    vec![
        ("pst", "boost decoherence of a spin-momentum product state and its principal-null cure"),
        ("epr", "two-photon detection probability and analyzer correlation average"),
        ("chsh", "CHSH functional over one angle quadruple"),
        ("norms", "pair-state norms over tensor powers, optionally oracle-checked"),
        ("delta", "delta-sequence curves, transforms, and limit diagnostics (CSV + JSON)"),
        ("wigner", "little-group matrix defects and the massless phase at one momentum"),
        ("demo", "two-qubit cyclic-vector orbit and CHSH demonstration"),
    ]
}
