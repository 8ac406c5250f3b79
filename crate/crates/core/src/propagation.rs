//! Time evolution: closed-form free evolution of the well state, spectral free
//! evolution of any grid state, and Strang split-operator evolution.

use crate::error::{Error, Overflow, Result};
use crate::numerics::fft::FftPair;
use crate::numerics::{faddeeva_w, Complex, PhysicalConstants};
use crate::source::Signal;
use crate::states::{Grid1D, WaveField, WellStateSpec};

/// Default edge-density threshold, relative to the peak density.
pub const DEFAULT_EDGE_TOLERANCE: f64 = 1e-8;
/// Width of the monitored band at each grid edge, as a fraction of the grid.
pub const EDGE_BAND: f64 = 0.05;

/// `t_k = t0 + k dt`, `k = 0..=n_steps`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimeGrid {
    pub t0: f64,
    pub dt: f64,
    pub n_steps: usize,
}

impl TimeGrid {
    pub fn new(t0: f64, dt: f64, n_steps: usize) -> Result<Self> {
        if !(t0.is_finite() && dt.is_finite() && dt > 0.0) {
            return Err(Error::Configuration(format!(
                "time grid requires finite t0 and dt > 0 (got t0 = {t0}, dt = {dt})"
            )));
        }
        if n_steps < 1 {
            return Err(Error::Configuration("time grid needs at least one step".into()));
        }
        Ok(Self { t0, dt, n_steps })
    }

    /// Grid starting at 0 and covering `[0, t_end]` with steps of `dt`.
    pub fn covering(t_end: f64, dt: f64) -> Result<Self> {
        let n = (t_end / dt).round();
        if !(n >= 1.0) || ((n * dt) - t_end).abs() > 1e-9 * t_end.abs().max(1.0) {
            return Err(Error::Configuration(format!(
                "record length {t_end} is not a whole number of steps dt = {dt}"
            )));
        }
        Self::new(0.0, dt, n as usize)
    }

    pub fn t(&self, k: usize) -> f64 {
        self.t0 + k as f64 * self.dt
    }

    pub fn t_end(&self) -> f64 {
        self.t(self.n_steps)
    }
}

/// Potential energy `V(x)`.
#[derive(Debug, Clone, PartialEq)]
pub enum PotentialProfile {
    Free,
    /// `V0` for `x >= 0`
    Step { v0: f64 },
    /// `V0` on `[c, d]`
    SquareBarrier { v0: f64, c: f64, d: f64 },
    /// one value per grid point
    Sampled { values: Vec<f64> },
}

impl PotentialProfile {
    pub fn sample(&self, grid: &Grid1D) -> Result<Vec<f64>> {
        let xs = grid.points();
        let v = match self {
            PotentialProfile::Free => vec![0.0; grid.n()],
            PotentialProfile::Step { v0 } => {
                xs.iter().map(|&x| if x >= 0.0 { *v0 } else { 0.0 }).collect()
            }
            PotentialProfile::SquareBarrier { v0, c, d } => {
                if c > d || *d > 0.0 {
                    return Err(Error::Configuration(format!(
                        "barrier support [{c}, {d}] must satisfy c <= d <= 0"
                    )));
                }
                xs.iter()
                    .map(|&x| if x >= *c && x <= *d { *v0 } else { 0.0 })
                    .collect()
            }
            PotentialProfile::Sampled { values } => {
                if values.len() != grid.n() {
                    return Err(Error::Configuration(format!(
                        "sampled potential has {} values for {} grid points",
                        values.len(),
                        grid.n()
                    )));
                }
                values.clone()
            }
        };
        if v.iter().any(|x| !x.is_finite()) {
            return Err(Error::Configuration("potential has non-finite values".into()));
        }
        Ok(v)
    }
}

/// Output of a grid evolution.
#[derive(Debug, Clone, PartialEq)]
pub struct EvolutionRecord {
    pub snapshots: Vec<WaveField>,
    pub probe: Option<Signal>,
    /// `(t, norm^2)` at every monitor point
    pub norm_history: Vec<(f64, f64)>,
}

impl EvolutionRecord {
    /// Largest `|norm^2 - norm^2(t0)|` over the history.
    pub fn norm_drift(&self) -> f64 {
        let Some(&(_, n0)) = self.norm_history.first() else {
            return 0.0;
        };
        self.norm_history
            .iter()
            .map(|&(_, n)| (n - n0).abs())
            .fold(0.0, f64::max)
    }
}

/// Free propagator `<x| U(t, t') |x'>`.
pub fn free_propagator_kernel(
    x: f64,
    x_prime: f64,
    t: f64,
    t_prime: f64,
    consts: &PhysicalConstants,
) -> Result<Complex> {
    let tau = t - t_prime;
    if tau == 0.0 {
        return Err(Error::SingularKernel {
            op: "free_propagator_kernel",
        });
    }
    if !(tau.is_finite() && x.is_finite() && x_prime.is_finite()) {
        return Err(Error::domain("free_propagator_kernel", "non-finite argument"));
    }
    let m = consts.mass;
    let pref = (Complex::new(m, 0.0) / (Complex::i() * consts.h() * tau)).sqrt();
    let phase = m * (x - x_prime).powi(2) / (2.0 * consts.hbar * tau);
    Ok(pref * Complex::from_polar(1.0, phase))
}

/// `exp(i phi) w(z)` with `z = (m (x-e)/t - sigma p_w) / f`, where the lower
/// half-plane case is rewritten so that `exp(i phi - z^2)` collapses to a
/// plane wave instead of a ratio of huge numbers.
fn edge_term(
    x: f64,
    e: f64,
    sigma: f64,
    t: f64,
    pw: f64,
    consts: &PhysicalConstants,
) -> Result<Complex> {
    let m = consts.mass;
    let hbar = consts.hbar;
    let f = Complex::new(1.0, -1.0) * (m * hbar / t).sqrt();
    let z = (m * (x - e) / t - sigma * pw) / f;
    let phi = m * (x - e).powi(2) / (2.0 * t * hbar);
    if z.im >= 0.0 {
        Ok(Complex::from_polar(1.0, phi) * faddeeva_w(z)?)
    } else {
        let plane = sigma * pw * (x - e) / hbar - pw * pw * t / (2.0 * m * hbar);
        Ok(2.0 * Complex::from_polar(1.0, plane) - Complex::from_polar(1.0, phi) * faddeeva_w(-z)?)
    }
}

fn moshinsky_unboosted(
    spec: &WellStateSpec,
    x: f64,
    t: f64,
    consts: &PhysicalConstants,
) -> Result<Complex> {
    let pw = spec.p_w(consts);
    let d = spec.width();
    let tb = edge_term(x, spec.b, 1.0, t, pw, consts)? - edge_term(x, spec.b, -1.0, t, pw, consts)?;
    let ta = edge_term(x, spec.a, -1.0, t, pw, consts)? - edge_term(x, spec.a, 1.0, t, pw, consts)?;
    let pref = (2.0 / d).sqrt() / Complex::new(0.0, 4.0);
    Ok(pref * (Complex::from_polar(1.0, spec.k_w() * d) * tb + ta))
}

/// Exact free evolution `psi(x, t)` of the well state.
///
/// A boost `<p>` enters through the Galilean transformation
/// `exp(i(<p> x - <p>^2 t / 2m)/hbar) psi_0(x - <p> t/m, t)`.
pub fn evolve_free_moshinsky(
    spec: &WellStateSpec,
    x: f64,
    t: f64,
    consts: &PhysicalConstants,
) -> Result<Complex> {
    if !(t.is_finite() && t > 0.0) {
        return Err(Error::domain("evolve_free_moshinsky", format!("t = {t} must be > 0")));
    }
    if !x.is_finite() {
        return Err(Error::domain("evolve_free_moshinsky", format!("x = {x}")));
    }
    let v = spec.boost;
    if v == 0.0 {
        return moshinsky_unboosted(spec, x, t, consts);
    }
    let m = consts.mass;
    let core = moshinsky_unboosted(&spec.unboosted(), x - v * t / m, t, consts)?;
    Ok(Complex::from_polar(1.0, (v * x - v * v * t / (2.0 * m)) / consts.hbar) * core)
}

/// [`evolve_free_moshinsky`] at every grid point.
pub fn moshinsky_field(
    spec: &WellStateSpec,
    grid: Grid1D,
    t: f64,
    consts: &PhysicalConstants,
) -> Result<WaveField> {
    let values = (0..grid.n())
        .map(|j| evolve_free_moshinsky(spec, grid.x(j), t, consts))
        .collect::<Result<Vec<_>>>()?;
    WaveField::new(grid, values, t)
}

/// `sum_{|k| <= images} psi(x + k L, t)`: the free solution made periodic with
/// period `L`, which is what a periodic grid of length `L` approximates.
pub fn moshinsky_periodized(
    spec: &WellStateSpec,
    x: f64,
    t: f64,
    period: f64,
    images: usize,
    consts: &PhysicalConstants,
) -> Result<Complex> {
    let mut s = evolve_free_moshinsky(spec, x, t, consts)?;
    for k in 1..=images {
        let off = k as f64 * period;
        s += evolve_free_moshinsky(spec, x + off, t, consts)?;
        s += evolve_free_moshinsky(spec, x - off, t, consts)?;
    }
    Ok(s)
}

/// Probe record `psi(x_probe, t_k)` from the closed-form solution.
pub fn moshinsky_probe_record(
    spec: &WellStateSpec,
    tgrid: TimeGrid,
    x_probe: f64,
    consts: &PhysicalConstants,
) -> Result<EvolutionRecord> {
    if tgrid.t0 != 0.0 {
        return Err(Error::Configuration("closed-form records start at t = 0".into()));
    }
    let mut values = Vec::with_capacity(tgrid.n_steps + 1);
    values.push(spec.value(x_probe, consts));
    for k in 1..=tgrid.n_steps {
        values.push(evolve_free_moshinsky(spec, x_probe, tgrid.t(k), consts)?);
    }
    Ok(EvolutionRecord {
        snapshots: Vec::new(),
        probe: Some(Signal::new(x_probe, tgrid, values)?),
        norm_history: Vec::new(),
    })
}

fn overflow_error(time: f64, field: &WaveField, partial: Option<EvolutionRecord>) -> Error {
    let peak = field.values.iter().map(|v| v.norm_sqr()).fold(0.0, f64::max);
    Error::DomainOverflow(Box::new(Overflow {
        time,
        edge_density: field.edge_fraction(EDGE_BAND) * peak,
        peak_density: peak,
        partial,
    }))
}

/// Free evolution on the grid through momentum space, reusable for many times.
pub struct SpectralPropagator {
    grid: Grid1D,
    consts: PhysicalConstants,
    t0: f64,
    spectrum: Vec<Complex>,
    fft: FftPair,
}

impl SpectralPropagator {
    pub fn new(field: &WaveField, consts: &PhysicalConstants) -> Self {
        let mut fft = FftPair::new(field.grid.n());
        let mut spectrum = field.values.clone();
        fft.forward(&mut spectrum);
        Self {
            grid: field.grid,
            consts: *consts,
            t0: field.time,
            spectrum,
            fft,
        }
    }

    /// Field at absolute time `t`; no edge monitoring.
    pub fn at(&mut self, t: f64) -> WaveField {
        let n = self.grid.n();
        let tau = t - self.t0;
        let c = &self.consts;
        let mut data: Vec<Complex> = self
            .spectrum
            .iter()
            .enumerate()
            .map(|(k, v)| {
                let p = self.grid.p_of_bin(k, c);
                v * Complex::from_polar(1.0 / n as f64, -p * p * tau / (2.0 * c.mass * c.hbar))
            })
            .collect();
        self.fft.inverse(&mut data);
        WaveField {
            grid: self.grid,
            values: data,
            time: t,
        }
    }
}

/// Free evolution by `t` through momentum space with the default edge monitor.
pub fn evolve_free_spectral(field: &WaveField, t: f64, consts: &PhysicalConstants) -> Result<WaveField> {
    evolve_free_spectral_with_tolerance(field, t, consts, DEFAULT_EDGE_TOLERANCE)
}

/// As [`evolve_free_spectral`] with an explicit edge threshold
/// (`f64::INFINITY` disables the monitor).
pub fn evolve_free_spectral_with_tolerance(
    field: &WaveField,
    t: f64,
    consts: &PhysicalConstants,
    edge_tolerance: f64,
) -> Result<WaveField> {
    if !t.is_finite() {
        return Err(Error::domain("evolve_free_spectral", format!("t = {t}")));
    }
    if t == 0.0 {
        return Ok(field.clone());
    }
    let out = SpectralPropagator::new(field, consts).at(field.time + t);
    if out.edge_fraction(EDGE_BAND) > edge_tolerance {
        return Err(overflow_error(out.time, &out, None));
    }
    Ok(out)
}

/// Options for [`evolve_split_operator_with`].
#[derive(Debug, Clone)]
pub struct SplitOptions {
    pub consts: PhysicalConstants,
    /// must be a grid point
    pub probe_x: f64,
    pub edge_tolerance: f64,
    /// steps between edge checks and norm samples
    pub monitor_every: usize,
    /// steps between stored snapshots; `None` stores only the final field
    pub snapshot_every: Option<usize>,
}

impl Default for SplitOptions {
    fn default() -> Self {
        Self {
            consts: PhysicalConstants::default(),
            probe_x: 0.0,
            edge_tolerance: DEFAULT_EDGE_TOLERANCE,
            monitor_every: 100,
            snapshot_every: None,
        }
    }
}

/// Strang splitting with default options.
pub fn evolve_split_operator(
    field: &WaveField,
    potential: &PotentialProfile,
    tgrid: TimeGrid,
) -> Result<EvolutionRecord> {
    evolve_split_operator_with(field, potential, tgrid, &SplitOptions::default())
}

/// Strang splitting `e^{-iV dt/2} e^{-iT dt} e^{-iV dt/2}` per step, with the
/// adjacent half potential steps fused. The probe is recorded every step.
pub fn evolve_split_operator_with(
    field: &WaveField,
    potential: &PotentialProfile,
    tgrid: TimeGrid,
    opts: &SplitOptions,
) -> Result<EvolutionRecord> {
    let grid = field.grid;
    let n = grid.n();
    let c = &opts.consts;
    let probe_j = grid.index_of(opts.probe_x).ok_or_else(|| {
        Error::Configuration(format!("probe x = {} is not a grid point", opts.probe_x))
    })?;
    let v = potential.sample(&grid)?;
    let dt = tgrid.dt;
    let half: Vec<Complex> = v
        .iter()
        .map(|&vx| Complex::from_polar(1.0, -vx * dt / (2.0 * c.hbar)))
        .collect();
    let full: Vec<Complex> = half.iter().map(|h| h * h).collect();
    let kin: Vec<Complex> = (0..n)
        .map(|k| {
            let p = grid.p_of_bin(k, c);
            Complex::from_polar(1.0 / n as f64, -p * p * dt / (2.0 * c.mass * c.hbar))
        })
        .collect();
    let mut fft = FftPair::new(n);
    let every = opts.monitor_every.max(1);

    let mut probe = Vec::with_capacity(tgrid.n_steps + 1);
    probe.push(field.values[probe_j]);
    let mut record = EvolutionRecord {
        snapshots: Vec::new(),
        probe: None,
        norm_history: vec![(tgrid.t0, field.norm_sq())],
    };
    let physical = |y: &[Complex], t: f64| WaveField {
        grid,
        values: y.iter().zip(&half).map(|(a, b)| a * b).collect(),
        time: t,
    };

    // y holds the wave before the closing half potential step.
    let mut y: Vec<Complex> = field.values.iter().zip(&half).map(|(a, b)| a * b).collect();
    for step in 1..=tgrid.n_steps {
        if step > 1 {
            for (a, b) in y.iter_mut().zip(&full) {
                *a *= b;
            }
        }
        fft.forward(&mut y);
        for (a, b) in y.iter_mut().zip(&kin) {
            *a *= b;
        }
        fft.inverse(&mut y);
        probe.push(y[probe_j] * half[probe_j]);

        let t = tgrid.t(step);
        if let Some(s) = opts.snapshot_every {
            if s > 0 && step % s == 0 && step != tgrid.n_steps {
                record.snapshots.push(physical(&y, t));
            }
        }
        if step % every == 0 || step == tgrid.n_steps {
            let psi = physical(&y, t);
            record.norm_history.push((t, psi.norm_sq()));
            let probe_tg = TimeGrid::new(tgrid.t0, dt, step)?;
            if psi.edge_fraction(EDGE_BAND) > opts.edge_tolerance {
                record.probe = Some(Signal::new_unchecked(opts.probe_x, probe_tg, probe.clone()));
                record.snapshots.push(psi.clone());
                return Err(overflow_error(t, &psi, Some(record)));
            }
            if step == tgrid.n_steps {
                record.snapshots.push(psi);
            }
        }
    }
    record.probe = Some(Signal::new_unchecked(opts.probe_x, tgrid, probe));
    Ok(record)
}
