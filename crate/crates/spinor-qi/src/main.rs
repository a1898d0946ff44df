use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use spinor_qi::error::CliError;
use spinor_qi::experiments::RunCtx;
use spinor_qi::{experiment_list, run_config, selftest};

#[derive(Parser)]
#[command(
    name = "spinor-qi",
    about = "Spinor calculus, little-group representations, and two-photon detection statistics"
)]
struct Cli {
    /// Output directory for reports and tables.
    #[arg(long, global = true, default_value = ".")]
    out: PathBuf,
    /// Global tolerance override for run validations and selftest.
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Seed for randomized sweeps (core quadratures are deterministic).
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads for the parallel sections (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the experiment described by a TOML config file.
    Run { config: PathBuf },
    /// Run the full invariant suite at default tolerances.
    Selftest,
    /// List the available experiment kinds.
    ListExperiments,
}

fn dispatch(cli: &Cli) -> Result<(), CliError> {
    if let Some(t) = cli.threads {
        // ignore the error if a pool already exists (e.g. repeated calls)
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    match &cli.cmd {
        Cmd::Run { config } => {
            let ctx = RunCtx { out_dir: cli.out.clone(), seed: cli.seed, tol: cli.tol };
            let report = run_config(config, &ctx)?;
            let path = report.write(&ctx.out_dir)?;
            println!("{}", report.to_json());
            println!("report written to {}", path.display());
            Ok(())
        }
        Cmd::Selftest => selftest::selftest(cli.seed, cli.tol),
        Cmd::ListExperiments => {
            for (name, blurb) in experiment_list() {
                println!("{name:8} {blurb}");
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
