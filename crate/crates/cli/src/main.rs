use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rayon::prelude::*;
use source_wave_cli::presets;
use source_wave_cli::run::{run_scenario, RunError};
use source_wave_cli::scenario::{GridConfig, Overrides, Scenario, SchemaError};

const EXIT_CHECK: u8 = 1;
const EXIT_SCHEMA: u8 = 2;
const EXIT_NUMERICAL: u8 = 3;
const EXIT_IO: u8 = 4;

#[derive(Parser)]
#[command(name = "source-wave", version, about = "Source-boundary wave dynamics: figure data and comparison reports")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a scenario file, a preset name, or `all` presets.
    Run {
        target: String,
        #[arg(long, default_value = "out")]
        output_dir: PathBuf,
        /// exit with status 1 when a check fails
        #[arg(long)]
        check: bool,
        #[arg(long)]
        record_length: Option<f64>,
        #[arg(long)]
        dt: Option<f64>,
        /// "xmin,xmax,n"
        #[arg(long, value_parser = parse_grid, allow_hyphen_values = true)]
        grid: Option<GridConfig>,
        #[arg(long)]
        tolerance_scale: Option<f64>,
    },
    /// Print the figure presets and their parameters.
    ListPresets,
}

fn parse_grid(s: &str) -> Result<GridConfig, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(format!("expected \"xmin,xmax,n\", got {s:?}"));
    }
    let f = |p: &str| p.parse::<f64>().map_err(|e| format!("{p:?}: {e}"));
    Ok(GridConfig {
        x_min: f(parts[0])?,
        x_max: f(parts[1])?,
        n: parts[2].parse().map_err(|e| format!("{:?}: {e}", parts[2]))?,
    })
}

fn load(target: &str) -> Result<Scenario, SchemaError> {
    match presets::preset(target) {
        Some(s) => Ok(s),
        None => Scenario::from_file(Path::new(target)),
    }
}

fn error_code(e: &RunError) -> u8 {
    match e {
        RunError::Numerical { .. } => EXIT_NUMERICAL,
        RunError::Io { .. } => EXIT_IO,
    }
}

fn thread_pool() {
    if let Some(n) = std::env::var("SOURCE_WAVE_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        // a second initialisation fails harmlessly
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::ListPresets => {
            print!("{}", presets::list_presets());
            ExitCode::SUCCESS
        }
        Command::Run {
            target,
            output_dir,
            check,
            record_length,
            dt,
            grid,
            tolerance_scale,
        } => {
            thread_pool();
            let overrides = Overrides {
                record_length,
                dt,
                grid,
                tolerance_scale,
            };
            let all = target == "all";
            let names: Vec<String> = if all {
                presets::names().map(String::from).collect()
            } else {
                vec![target]
            };
            let mut scenarios = Vec::new();
            for n in &names {
                match load(n).and_then(|mut s| s.apply(&overrides).map(|_| s)) {
                    Ok(s) => scenarios.push(s),
                    Err(e) => {
                        eprintln!("error: {e}");
                        return ExitCode::from(EXIT_SCHEMA);
                    }
                }
            }
            let results: Vec<_> = scenarios
                .par_iter()
                .map(|s| {
                    let dir = if all { output_dir.join(&s.name) } else { output_dir.clone() };
                    (s.name.clone(), run_scenario(s, &dir))
                })
                .collect();
            let mut code = 0u8;
            for (name, r) in results {
                match r {
                    Ok((report, files)) => {
                        print!("{}", report.summary());
                        for f in files {
                            println!("  wrote {}", f.display());
                        }
                        if check && !report.passed() {
                            code = code.max(EXIT_CHECK);
                        }
                    }
                    Err(e) => {
                        eprintln!("error in scenario {name}: {e}");
                        code = code.max(error_code(&e));
                    }
                }
            }
            ExitCode::from(code)
        }
    }
}
