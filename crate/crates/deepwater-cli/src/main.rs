use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};

use deepwater::experiments::{
    convergence_study, homogenization_sweep, kdv_comparison, linear_oracle_check, Scenario,
};
use deepwater::model::PhysicalParams;
use deepwater::spectral::Grid;
use deepwater::stepping::run;

use deepwater_cli::config::RunConfig;
use deepwater_cli::output::{
    write_diagnostics_jsonl, write_error_table_csv, write_quotient_table_csv, write_snapshot_csv,
};
use deepwater_cli::CliError;

#[derive(Parser)]
#[command(
    name = "deepwater",
    version,
    about = "Split-step simulator for deep-water waves over variable bathymetry"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Simulate a configured run, writing snapshots and diagnostics.
    Run {
        /// JSON run configuration.
        config: PathBuf,
    },
    /// Self-convergence study of the configured scenario over a dt list.
    Converge {
        /// JSON run configuration (its time.dt_mode is ignored).
        config: PathBuf,
        /// Comma-separated, strictly decreasing time steps.
        #[arg(long, value_delimiter = ',', required = true)]
        dts: Vec<f64>,
        /// Output directory (defaults to the config's out_dir).
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// KdV-regime comparison against the exact soliton (eps = mu sweep).
    Kdv {
        /// Comma-separated epsilon values.
        #[arg(long, value_delimiter = ',', required = true)]
        eps: Vec<f64>,
        #[arg(long, default_value_t = 512)]
        n_points: usize,
        #[arg(long, default_value_t = 30.0)]
        half_length: f64,
        #[arg(long, default_value_t = 10.0)]
        t_final: f64,
        #[arg(long, default_value = "out")]
        out_dir: PathBuf,
    },
    /// Rapidly-varying-bottom sweep against a flat-bottom control.
    Homogenize {
        /// Comma-separated bottom frequencies.
        #[arg(long, value_delimiter = ',', required = true)]
        alphas: Vec<f64>,
        #[arg(long, default_value_t = 0.05)]
        epsilon: f64,
        #[arg(long, default_value_t = 1.0)]
        mu: f64,
        #[arg(long, default_value_t = 0.5)]
        beta: f64,
        #[arg(long, default_value_t = 512)]
        n_points: usize,
        #[arg(long, default_value_t = 30.0)]
        half_length: f64,
        #[arg(long, default_value_t = 10.0)]
        t_final: f64,
        #[arg(long, default_value = "out")]
        out_dir: PathBuf,
    },
    /// Convergence of the full solver against the exact linear propagator.
    LinearCheck {
        /// Comma-separated, strictly decreasing time steps.
        #[arg(long, value_delimiter = ',', required = true)]
        dts: Vec<f64>,
        #[arg(long, default_value_t = 1.0)]
        mu: f64,
        #[arg(long, default_value_t = 256)]
        n_points: usize,
        #[arg(long, default_value_t = 30.0)]
        half_length: f64,
        #[arg(long, default_value_t = 1.0)]
        t_final: f64,
        #[arg(long, default_value = "out")]
        out_dir: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("deepwater: {e}");
            ExitCode::FAILURE
        }
    }
}

fn dispatch(command: Command) -> Result<(), CliError> {
    match command {
        Command::Run { config } => cmd_run(&config),
        Command::Converge {
            config,
            dts,
            out_dir,
        } => cmd_converge(&config, &dts, out_dir),
        Command::Kdv {
            eps,
            n_points,
            half_length,
            t_final,
            out_dir,
        } => cmd_kdv(&eps, n_points, half_length, t_final, &out_dir),
        Command::Homogenize {
            alphas,
            epsilon,
            mu,
            beta,
            n_points,
            half_length,
            t_final,
            out_dir,
        } => {
            let grid = Grid::new(half_length, n_points)?;
            let params = PhysicalParams::new(epsilon, mu, beta)?;
            cmd_homogenize(&alphas, &params, &grid, t_final, &out_dir)
        }
        Command::LinearCheck {
            dts,
            mu,
            n_points,
            half_length,
            t_final,
            out_dir,
        } => cmd_linear_check(&dts, mu, n_points, half_length, t_final, &out_dir),
    }
}

fn cmd_run(config_path: &Path) -> Result<(), CliError> {
    let config = RunConfig::from_path(config_path)?;
    let built = config.build()?;
    let out_dir = PathBuf::from(&config.output.out_dir);
    std::fs::create_dir_all(&out_dir)?;

    let result = run(
        &built.initial,
        &built.params,
        &built.bathymetry,
        &built.step,
        config.time.t_final,
        &config.output.snapshot_times,
    );
    let output = match result {
        Ok(o) => o,
        Err(failure) => {
            // keep what was measured before the abort
            write_diagnostics_jsonl(&failure.diagnostics, &out_dir.join("diagnostics.jsonl"))?;
            return Err(failure.error.into());
        }
    };

    for (i, snap) in output.snapshots.iter().enumerate() {
        let name = format!("snapshot_{i:03}_t{:.6}.csv", snap.time());
        write_snapshot_csv(snap, &out_dir.join(name))?;
    }
    write_diagnostics_jsonl(&output.diagnostics, &out_dir.join("diagnostics.jsonl"))?;

    let final_energy = output
        .diagnostics
        .records
        .last()
        .map(|r| r.energy0)
        .unwrap_or(f64::NAN);
    println!(
        "run complete: {} steps to t={}, final E0={:.6}, {} snapshots -> {}",
        output.diagnostics.len(),
        output.final_state.time(),
        final_energy,
        output.snapshots.len(),
        out_dir.display()
    );
    Ok(())
}

fn cmd_converge(config_path: &Path, dts: &[f64], out_dir: Option<PathBuf>) -> Result<(), CliError> {
    let config = RunConfig::from_path(config_path)?;
    let built = config.build()?;
    let scenario = Scenario {
        initial: built.initial,
        params: built.params,
        bathymetry: built.bathymetry,
        t_final: config.time.t_final,
    };
    let table = convergence_study(&scenario, dts)?;
    let dir = out_dir.unwrap_or_else(|| PathBuf::from(&config.output.out_dir));
    std::fs::create_dir_all(&dir)?;
    let path = dir.join("error_table.csv");
    write_error_table_csv(&table, &path)?;
    println!(
        "convergence slope={:.4} (residual {:.3e}) over {} dts -> {}",
        table.slope(),
        table.residual(),
        table.rows().len(),
        path.display()
    );
    Ok(())
}

fn cmd_kdv(
    eps: &[f64],
    n_points: usize,
    half_length: f64,
    t_final: f64,
    out_dir: &Path,
) -> Result<(), CliError> {
    let grid = Grid::new(half_length, n_points)?;
    let table = kdv_comparison(eps, &grid, t_final)?;
    std::fs::create_dir_all(out_dir)?;
    let path = out_dir.join("kdv_quotients.csv");
    write_quotient_table_csv(&table, "epsilon", &path)?;
    let summary: Vec<String> = table
        .rows()
        .iter()
        .map(|r| format!("eps={} -> {:.5}", r.parameter, r.quotient))
        .collect();
    println!("kdv quotients: {} -> {}", summary.join(", "), path.display());
    Ok(())
}

fn cmd_homogenize(
    alphas: &[f64],
    params: &PhysicalParams,
    grid: &Arc<Grid>,
    t_final: f64,
    out_dir: &Path,
) -> Result<(), CliError> {
    let table = homogenization_sweep(alphas, params, grid, t_final)?;
    std::fs::create_dir_all(out_dir)?;
    let path = out_dir.join("homogenize_quotients.csv");
    write_quotient_table_csv(&table, "alpha", &path)?;
    let summary: Vec<String> = table
        .rows()
        .iter()
        .map(|r| format!("alpha={} -> {:.6}", r.parameter, r.quotient))
        .collect();
    println!(
        "homogenization quotients: {} -> {}",
        summary.join(", "),
        path.display()
    );
    Ok(())
}

fn cmd_linear_check(
    dts: &[f64],
    mu: f64,
    n_points: usize,
    half_length: f64,
    t_final: f64,
    out_dir: &Path,
) -> Result<(), CliError> {
    let grid = Grid::new(half_length, n_points)?;
    let table = linear_oracle_check(&grid, mu, dts, t_final)?;
    std::fs::create_dir_all(out_dir)?;
    let path = out_dir.join("linear_check.csv");
    write_error_table_csv(&table, &path)?;
    println!(
        "linear oracle slope={:.4} (residual {:.3e}) over {} dts -> {}",
        table.slope(),
        table.residual(),
        table.rows().len(),
        path.display()
    );
    Ok(())
}
