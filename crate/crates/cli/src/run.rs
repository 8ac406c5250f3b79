//! Executes a scenario: checks, figure files, report.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use source_wave::source::{csv_float as f, Signal};

use crate::experiments::{
    arrival_check, free_equivalence, interference_rows, split_conjugacy_rows, split_density, step_relation,
    DensityProfile, FreeOutcome, StepOutcome,
};
use crate::report::ComparisonReport;
use crate::scenario::{Check, Output, Scenario};

#[derive(Debug, thiserror::Error)]
pub enum RunError {
    #[error("numerical error during {stage}: {source}")]
    Numerical {
        stage: &'static str,
        source: source_wave::Error,
    },
    #[error("i/o error on {path}: {source}")]
    Io { path: PathBuf, source: io::Error },
}

fn create(path: &Path) -> Result<BufWriter<File>, RunError> {
    File::create(path).map(BufWriter::new).map_err(|source| RunError::Io {
        path: path.into(),
        source,
    })
}

fn at(stage: &'static str) -> impl FnOnce(source_wave::Error) -> RunError {
    move |source| RunError::Numerical { stage, source }
}

fn io_at(path: &Path) -> impl FnOnce(io::Error) -> RunError + '_ {
    move |source| RunError::Io {
        path: path.into(),
        source,
    }
}

/// Runs `scenario`, writing its files into `out_dir`. The report is returned;
/// pass/fail is left to the caller.
pub fn run_scenario(scenario: &Scenario, out_dir: &Path) -> Result<(ComparisonReport, Vec<PathBuf>), RunError> {
    let start = Instant::now();
    std::fs::create_dir_all(out_dir).map_err(io_at(out_dir))?;
    let name = &scenario.name;
    let tol = &scenario.tolerances;
    let consts = scenario.constants().map_err(at("setup"))?;
    let wants = |c: Check| scenario.checks.contains(&c);
    let writes = |o: Output| scenario.outputs.contains(&o);
    let mut rows = Vec::new();
    let mut files = Vec::new();

    let mut free: Option<FreeOutcome> = None;
    if wants(Check::FreeEquivalence) || writes(Output::Reconstruction) {
        let out = scenario.free_run().and_then(|r| free_equivalence(&r, tol)).map_err(at("free_equivalence"))?;
        if wants(Check::FreeEquivalence) {
            rows.extend(out.rows.iter().cloned());
        }
        free = Some(out);
    }

    if wants(Check::MomentumSplit) || wants(Check::Interference) || writes(Output::Density) {
        let state = scenario.state_spec().map_err(at("setup"))?;
        let grid = scenario.grid().map_err(at("setup"))?;
        if wants(Check::MomentumSplit) {
            let (_, plus, minus) =
                split_density(&state, grid, 0.0, scenario.density.window, &consts).map_err(at("momentum_split"))?;
            rows.extend(split_conjugacy_rows(&plus, &minus, tol));
        }
        if wants(Check::Interference) || writes(Output::Density) {
            let (d, _, _) = split_density(&state, grid, scenario.density.t, scenario.density.window, &consts)
                .map_err(at("density"))?;
            if wants(Check::Interference) {
                rows.extend(interference_rows(&d));
            }
            if writes(Output::Density) {
                let path = out_dir.join(format!("{name}_density.csv"));
                write_density(&d, &path)?;
                files.push(path);
            }
        }
    }

    if wants(Check::Propagator) {
        rows.extend(
            scenario
                .propagator_run()
                .and_then(|r| crate::experiments::propagator_check(&r, tol))
                .map_err(at("propagator"))?,
        );
    }

    let mut step: Option<StepOutcome> = None;
    for (check, label) in [
        (Check::StepRelation, "step_relation"),
        (Check::GaussianDeviation, "gaussian_deviation"),
    ] {
        if wants(check) {
            let out = scenario.step_run(label).and_then(|r| step_relation(&r, tol)).map_err(at(label))?;
            rows.extend(out.rows.iter().cloned());
            step = Some(out);
        }
    }
    let spectrum_out = [Output::SpectrumReal, Output::SpectrumImag].into_iter().find(|o| writes(*o));
    if step.is_none() && (spectrum_out.is_some() || writes(Output::Signal))
        && !matches!(scenario.potential, crate::scenario::PotentialConfig::Free)
    {
        step = Some(
            scenario
                .step_run("step_relation")
                .and_then(|r| step_relation(&r, tol))
                .map_err(at("step_relation"))?,
        );
    }
    if let (Some(o), Some(s)) = (spectrum_out, &step) {
        let path = out_dir.join(format!("{name}_spectrum.csv"));
        write_spectrum(&s.curve, o == Output::SpectrumImag, &path)?;
        files.push(path);
    }

    if wants(Check::Arrival) {
        let signal = free.as_ref().map(|f| &f.signal);
        rows.extend(
            scenario
                .arrival_run()
                .and_then(|r| arrival_check(&r, signal, tol))
                .map_err(at("arrival"))?,
        );
    }

    if writes(Output::Reconstruction) {
        if let Some(f) = &free {
            let path = out_dir.join(format!("{name}_reconstruction.csv"));
            write_reconstruction(f, &path)?;
            files.push(path);
        }
    }

    if writes(Output::Signal) {
        let owned;
        let signal: &Signal = match (&free, &step) {
            (Some(f), _) => &f.signal,
            (None, Some(s)) => &s.signal,
            (None, None) => {
                owned = scenario
                    .well()
                    .and_then(|w| {
                        crate::experiments::free_well_signal(&w, scenario.time.record_length, scenario.time.dt, &consts)
                    })
                    .map_err(at("signal"))?;
                &owned
            }
        };
        let path = out_dir.join(format!("{name}_signal.csv"));
        let mut w = create(&path)?;
        source_wave::source::write_signal_csv(signal, &mut w)
            .and_then(|_| w.flush())
            .map_err(io_at(&path))?;
        files.push(path);
    }

    let report = ComparisonReport {
        scenario: name.clone(),
        rows,
        runtime_s: start.elapsed().as_secs_f64(),
    };
    let json_path = out_dir.join(format!("{name}_report.json"));
    let mut w = create(&json_path)?;
    serde_json::to_writer_pretty(&mut w, &report)
        .map_err(io::Error::from)
        .and_then(|_| w.flush())
        .map_err(io_at(&json_path))?;
    let summary_path = out_dir.join(format!("{name}_summary.txt"));
    std::fs::write(&summary_path, report.summary()).map_err(io_at(&summary_path))?;
    files.push(json_path);
    files.push(summary_path);
    Ok((report, files))
}

fn write_density(d: &DensityProfile, path: &Path) -> Result<(), RunError> {
    let mut w = create(path)?;
    (|| {
        writeln!(w, "x,psi_f_sq,psi_plus_sq,psi_minus_sq")?;
        for j in 0..d.x.len() {
            writeln!(w, "{},{},{},{}", f(d.x[j]), f(d.total[j]), f(d.plus[j]), f(d.minus[j]))?;
        }
        w.flush()
    })()
    .map_err(io_at(path))
}

fn write_spectrum(
    curve: &[(f64, source_wave::Complex, source_wave::Complex)],
    imag: bool,
    path: &Path,
) -> Result<(), RunError> {
    let mut w = create(path)?;
    (|| {
        if imag {
            writeln!(w, "E,im_chi_s,im_rhs")?;
        } else {
            writeln!(w, "E,re_chi_s,re_rhs")?;
        }
        for (e, chi, rhs) in curve {
            let (a, b) = if imag { (chi.im, rhs.im) } else { (chi.re, rhs.re) };
            writeln!(w, "{},{},{}", f(*e), f(a), f(b))?;
        }
        w.flush()
    })()
    .map_err(io_at(path))
}

fn write_reconstruction(outcome: &FreeOutcome, path: &Path) -> Result<(), RunError> {
    let mut w = create(path)?;
    (|| {
        writeln!(w, "x,t,re_exact,im_exact,re_energy,im_energy,re_time,im_time")?;
        for p in &outcome.points {
            writeln!(
                w,
                "{},{},{},{},{},{},{},{}",
                f(p.x),
                f(p.t),
                f(p.exact[0]),
                f(p.exact[1]),
                f(p.energy_route[0]),
                f(p.energy_route[1]),
                f(p.time_route[0]),
                f(p.time_route[1])
            )?;
        }
        w.flush()
    })()
    .map_err(io_at(path))
}
