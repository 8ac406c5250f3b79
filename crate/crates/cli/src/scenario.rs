//! Scenario files: TOML, `schema_version = 1`. See the README for the schema.

use std::path::Path;

use serde::{Deserialize, Serialize};
use source_wave::propagation::PotentialProfile;
use source_wave::states::{GaussianStateSpec, Grid1D, StateSpec, WellStateSpec};
use source_wave::PhysicalConstants;

use crate::experiments::{ArrivalRun, FreeRun, HalvingRun, PropagatorRun, StepRun, Tolerances};

pub const SCHEMA_VERSION: u32 = 1;

/// Invalid or inconsistent scenario file (exit status 2).
#[derive(Debug, thiserror::Error)]
#[error("scenario {origin}: {detail}")]
pub struct SchemaError {
    pub origin: String,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum StateConfig {
    Well {
        a: f64,
        b: f64,
        #[serde(default)]
        p_avg: f64,
    },
    Gaussian {
        x0: f64,
        p_avg: f64,
        delta_x: f64,
    },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum PotentialConfig {
    Free,
    Step { v0: f64 },
    Barrier { v0: f64, c: f64, d: f64 },
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridConfig {
    pub x_min: f64,
    pub x_max: f64,
    pub n: usize,
}

impl GridConfig {
    fn build(&self) -> source_wave::Result<Grid1D> {
        Grid1D::new(self.x_min, self.x_max, self.n)
    }
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Physics {
    pub mass: f64,
    pub hbar: f64,
}

impl Default for Physics {
    fn default() -> Self {
        Self { mass: 1.0, hbar: 1.0 }
    }
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TimeConfig {
    pub dt: f64,
    pub record_length: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ReconstructionConfig {
    pub xs: Vec<f64>,
    pub ts: Vec<f64>,
    pub negative_xs: Vec<f64>,
    pub negative_ts: Vec<f64>,
    pub padded_len: usize,
    /// damping `eps = damping_factor * hbar / (padded_len * dt)`
    pub damping_factor: f64,
}

impl Default for ReconstructionConfig {
    fn default() -> Self {
        let r = FreeRun::fig1();
        Self {
            xs: r.xs,
            ts: r.ts,
            negative_xs: r.negative_xs,
            negative_ts: r.negative_ts,
            padded_len: r.padded_len,
            damping_factor: r.damping_factor,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SpectrumConfig {
    pub padded_len: Option<usize>,
    pub band: (f64, f64),
    pub deviation_band: Option<(f64, f64)>,
    pub output_band: (f64, f64),
}

impl Default for SpectrumConfig {
    fn default() -> Self {
        let r = StepRun::fig4();
        Self {
            padded_len: r.padded_len,
            band: r.band,
            deviation_band: r.deviation_band,
            output_band: r.output_band,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct HalvingConfig {
    pub grid: GridConfig,
    pub t_end: f64,
    pub dts: Vec<f64>,
    pub reference_dt: f64,
    pub barrier_height: f64,
}

impl Default for HalvingConfig {
    fn default() -> Self {
        let h = PropagatorRun::fig2().halving;
        Self {
            grid: GridConfig {
                x_min: h.grid.x_min(),
                x_max: h.grid.x_max(),
                n: h.grid.n(),
            },
            t_end: h.t_end,
            dts: h.dts,
            reference_dt: h.reference_dt,
            barrier_height: h.barrier_height,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PropagatorConfig {
    pub t_end: f64,
    pub stride: usize,
    pub images: usize,
    pub halving: HalvingConfig,
}

impl Default for PropagatorConfig {
    fn default() -> Self {
        let r = PropagatorRun::fig2();
        Self {
            t_end: r.t_end,
            stride: r.stride,
            images: r.images,
            halving: HalvingConfig::default(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ArrivalConfig {
    pub x_detector: f64,
    pub grid: GridConfig,
    pub time_step: f64,
    pub t_max: f64,
    pub stop_change: f64,
    pub padded_len: usize,
}

impl Default for ArrivalConfig {
    fn default() -> Self {
        let r = ArrivalRun::fig1();
        Self {
            x_detector: r.x_detector,
            grid: GridConfig {
                x_min: r.grid.x_min(),
                x_max: r.grid.x_max(),
                n: r.grid.n(),
            },
            time_step: r.time_step,
            t_max: r.t_max,
            stop_change: r.stop_change,
            padded_len: r.padded_len,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct DensityConfig {
    pub t: f64,
    pub window: (f64, f64),
}

impl Default for DensityConfig {
    fn default() -> Self {
        Self {
            t: 0.0,
            window: (-10.0, 10.0),
        }
    }
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Options {
    /// edge-to-peak density bound of grid evolutions; `inf` disables it
    pub edge_tolerance: f64,
}

impl Default for Options {
    fn default() -> Self {
        Self {
            edge_tolerance: source_wave::propagation::DEFAULT_EDGE_TOLERANCE,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    /// energy-route equivalence, route consistency and vanishing
    FreeEquivalence,
    MomentumSplit,
    Interference,
    Propagator,
    StepRelation,
    GaussianDeviation,
    Arrival,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Output {
    /// `<name>_density.csv`: x, |psi_f|^2, |psi_f+|^2, |psi_f-|^2 at `density.t`
    Density,
    /// `<name>_spectrum.csv`: E', Re chi_s, Re rhs
    SpectrumReal,
    /// `<name>_spectrum.csv`: E', Im chi_s, Im rhs
    SpectrumImag,
    /// `<name>_signal.csv`: t, Re, Im of the probe signal
    Signal,
    /// `<name>_reconstruction.csv`: the free-equivalence point set
    Reconstruction,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub schema_version: u32,
    pub name: String,
    #[serde(default)]
    pub description: String,
    pub state: StateConfig,
    pub potential: PotentialConfig,
    #[serde(default)]
    pub physics: Physics,
    pub grid: GridConfig,
    pub time: TimeConfig,
    /// probe positions; the formulation fixes the source at `x = 0`
    #[serde(default = "default_probes")]
    pub probes: Vec<f64>,
    #[serde(default)]
    pub checks: Vec<Check>,
    #[serde(default)]
    pub outputs: Vec<Output>,
    #[serde(default)]
    pub reconstruction: ReconstructionConfig,
    #[serde(default)]
    pub spectrum: SpectrumConfig,
    #[serde(default)]
    pub propagator: PropagatorConfig,
    #[serde(default)]
    pub arrival: ArrivalConfig,
    #[serde(default)]
    pub density: DensityConfig,
    #[serde(default)]
    pub options: Options,
    #[serde(default)]
    pub tolerances: Tolerances,
}

fn default_probes() -> Vec<f64> {
    vec![0.0]
}

/// Command-line overrides applied on top of a scenario.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub record_length: Option<f64>,
    pub dt: Option<f64>,
    pub grid: Option<GridConfig>,
    pub tolerance_scale: Option<f64>,
}

impl Scenario {
    pub fn from_toml(text: &str, origin: &str) -> Result<Self, SchemaError> {
        let s: Scenario = toml::from_str(text).map_err(|e| SchemaError {
            origin: origin.into(),
            detail: e.to_string(),
        })?;
        s.validate(origin)?;
        Ok(s)
    }

    pub fn from_file(path: &Path) -> Result<Self, SchemaError> {
        let origin = path.display().to_string();
        let text = std::fs::read_to_string(path).map_err(|e| SchemaError {
            origin: origin.clone(),
            detail: e.to_string(),
        })?;
        Self::from_toml(&text, &origin)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("scenario serializes")
    }

    pub fn apply(&mut self, o: &Overrides) -> Result<(), SchemaError> {
        if let Some(t) = o.record_length {
            self.time.record_length = t;
        }
        if let Some(dt) = o.dt {
            self.time.dt = dt;
        }
        if let Some(g) = o.grid {
            self.grid = g;
        }
        if let Some(f) = o.tolerance_scale {
            if !(f.is_finite() && f > 0.0) {
                return Err(self.err(format!("tolerance scale {f} must be positive")));
            }
            self.tolerances = self.tolerances.scaled(f);
        }
        self.validate(&self.name.clone())
    }

    fn err(&self, detail: String) -> SchemaError {
        SchemaError {
            origin: self.name.clone(),
            detail,
        }
    }

    fn validate(&self, origin: &str) -> Result<(), SchemaError> {
        let fail = |detail: String| {
            Err(SchemaError {
                origin: origin.into(),
                detail,
            })
        };
        if self.schema_version != SCHEMA_VERSION {
            return fail(format!(
                "unsupported schema_version {} (expected {SCHEMA_VERSION})",
                self.schema_version
            ));
        }
        if self.name.is_empty() || !self.name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-') {
            return fail(format!("name {:?} must be non-empty [A-Za-z0-9_-]", self.name));
        }
        if self.probes.iter().any(|&x| x != 0.0) {
            return fail("the probe is fixed at x = 0".into());
        }
        if !(self.time.dt.is_finite() && self.time.dt > 0.0) {
            return fail(format!("time.dt = {} must be positive", self.time.dt));
        }
        if !(self.time.record_length.is_finite() && self.time.record_length >= self.time.dt) {
            return fail(format!("time.record_length = {} must be at least dt", self.time.record_length));
        }
        if let Err(e) = self.grid.build() {
            return fail(format!("grid: {e}"));
        }
        if let Err(e) = self.state_spec() {
            return fail(format!("state: {e}"));
        }
        if let Err(e) = self.constants() {
            return fail(format!("physics: {e}"));
        }
        let well = matches!(self.state, StateConfig::Well { .. });
        let step = matches!(self.potential, PotentialConfig::Step { .. });
        for c in &self.checks {
            let ok = match c {
                Check::FreeEquivalence | Check::Propagator | Check::Arrival => {
                    well && matches!(self.potential, PotentialConfig::Free)
                }
                Check::MomentumSplit | Check::Interference => true,
                Check::StepRelation | Check::GaussianDeviation => step,
            };
            if !ok {
                return fail(format!("check {c:?} does not apply to this state and potential"));
            }
        }
        for o in &self.outputs {
            let ok = match o {
                Output::SpectrumReal | Output::SpectrumImag => step,
                Output::Reconstruction => well && matches!(self.potential, PotentialConfig::Free),
                Output::Density | Output::Signal => true,
            };
            if !ok {
                return fail(format!("output {o:?} does not apply to this state and potential"));
            }
        }
        Ok(())
    }

    pub fn constants(&self) -> source_wave::Result<PhysicalConstants> {
        PhysicalConstants::new(self.physics.mass, self.physics.hbar)
    }

    pub fn state_spec(&self) -> source_wave::Result<StateSpec> {
        Ok(match self.state {
            StateConfig::Well { a, b, p_avg } => StateSpec::Well(WellStateSpec::new(a, b, p_avg)?),
            StateConfig::Gaussian { x0, p_avg, delta_x } => {
                StateSpec::Gaussian(GaussianStateSpec::new(x0, p_avg, delta_x)?)
            }
        })
    }

    pub fn well(&self) -> source_wave::Result<WellStateSpec> {
        match self.state_spec()? {
            StateSpec::Well(w) => Ok(w),
            StateSpec::Gaussian(_) => Err(source_wave::Error::Configuration("check needs a well state".into())),
        }
    }

    pub fn grid(&self) -> source_wave::Result<Grid1D> {
        self.grid.build()
    }

    pub fn potential_profile(&self) -> PotentialProfile {
        match self.potential {
            PotentialConfig::Free => PotentialProfile::Free,
            PotentialConfig::Step { v0 } => PotentialProfile::Step { v0 },
            PotentialConfig::Barrier { v0, c, d } => PotentialProfile::SquareBarrier { v0, c, d },
        }
    }

    pub fn free_run(&self) -> source_wave::Result<FreeRun> {
        let r = &self.reconstruction;
        Ok(FreeRun {
            well: self.well()?,
            consts: self.constants()?,
            dt: self.time.dt,
            record_length: self.time.record_length,
            padded_len: r.padded_len,
            damping_factor: r.damping_factor,
            xs: r.xs.clone(),
            ts: r.ts.clone(),
            negative_xs: r.negative_xs.clone(),
            negative_ts: r.negative_ts.clone(),
        })
    }

    pub fn propagator_run(&self) -> source_wave::Result<PropagatorRun> {
        let p = &self.propagator;
        Ok(PropagatorRun {
            well: self.well()?,
            consts: self.constants()?,
            grid: self.grid()?,
            dt: self.time.dt,
            t_end: p.t_end,
            stride: p.stride,
            images: p.images,
            halving: HalvingRun {
                grid: p.halving.grid.build()?,
                t_end: p.halving.t_end,
                dts: p.halving.dts.clone(),
                reference_dt: p.halving.reference_dt,
                barrier_height: p.halving.barrier_height,
            },
        })
    }

    pub fn step_run(&self, label: &str) -> source_wave::Result<StepRun> {
        let v0 = match self.potential {
            PotentialConfig::Step { v0 } => v0,
            _ => return Err(source_wave::Error::Configuration("check needs a step potential".into())),
        };
        let s = &self.spectrum;
        Ok(StepRun {
            label: label.into(),
            state: self.state_spec()?,
            v0,
            consts: self.constants()?,
            grid: self.grid()?,
            dt: self.time.dt,
            record_length: self.time.record_length,
            edge_tolerance: self.options.edge_tolerance,
            padded_len: s.padded_len,
            band: s.band,
            deviation_band: s.deviation_band,
            output_band: s.output_band,
        })
    }

    pub fn arrival_run(&self) -> source_wave::Result<ArrivalRun> {
        let a = &self.arrival;
        Ok(ArrivalRun {
            well: self.well()?,
            consts: self.constants()?,
            x_detector: a.x_detector,
            grid: a.grid.build()?,
            time_step: a.time_step,
            t_max: a.t_max,
            stop_change: a.stop_change,
            dt: self.time.dt,
            record_length: self.time.record_length,
            padded_len: a.padded_len,
        })
    }
}
