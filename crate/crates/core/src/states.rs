//! Initial states on a uniform grid and their momentum amplitudes.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::numerics::fft::{signed_index, FftPair};
use crate::numerics::{Complex, PhysicalConstants};

/// Uniform periodic grid `x_j = x_min + j dx`, `j = 0..n`, `dx = (x_max - x_min)/n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid1D {
    x_min: f64,
    x_max: f64,
    n: usize,
}

impl Grid1D {
    pub fn new(x_min: f64, x_max: f64, n: usize) -> Result<Self> {
        if !(x_min.is_finite() && x_max.is_finite() && x_min < x_max) {
            return Err(Error::Geometry(format!(
                "grid bounds must satisfy x_min < x_max (got {x_min}, {x_max})"
            )));
        }
        if n < 2 || !n.is_power_of_two() {
            return Err(Error::Geometry(format!(
                "grid size must be a power of two >= 2 (got {n})"
            )));
        }
        Ok(Self { x_min, x_max, n })
    }

    pub fn x_min(&self) -> f64 {
        self.x_min
    }

    pub fn x_max(&self) -> f64 {
        self.x_max
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dx(&self) -> f64 {
        (self.x_max - self.x_min) / self.n as f64
    }

    pub fn length(&self) -> f64 {
        self.x_max - self.x_min
    }

    pub fn x(&self, j: usize) -> f64 {
        self.x_min + j as f64 * self.dx()
    }

    pub fn points(&self) -> Vec<f64> {
        (0..self.n).map(|j| self.x(j)).collect()
    }

    /// Index of the grid point at `x`, if `x` is one (to 1e-9 dx).
    pub fn index_of(&self, x: f64) -> Option<usize> {
        let s = (x - self.x_min) / self.dx();
        let j = s.round();
        if (s - j).abs() <= 1e-9 && j >= 0.0 && (j as usize) < self.n {
            Some(j as usize)
        } else {
            None
        }
    }

    pub fn dp(&self, consts: &PhysicalConstants) -> f64 {
        consts.h() / self.length()
    }

    /// Momentum of FFT bin `k` (FFT ordering).
    pub fn p_of_bin(&self, k: usize, consts: &PhysicalConstants) -> f64 {
        signed_index(k, self.n) as f64 * self.dp(consts)
    }

    /// Momenta in ascending order, covering `[-pi hbar/dx, pi hbar/dx)`.
    pub fn momenta(&self, consts: &PhysicalConstants) -> Vec<f64> {
        let dp = self.dp(consts);
        (0..self.n)
            .map(|k| (k as f64 - (self.n / 2) as f64) * dp)
            .collect()
    }
}

/// Complex wave function sampled on a grid at one instant.
#[derive(Debug, Clone, PartialEq)]
pub struct WaveField {
    pub grid: Grid1D,
    pub values: Vec<Complex>,
    pub time: f64,
}

impl WaveField {
    pub fn new(grid: Grid1D, values: Vec<Complex>, time: f64) -> Result<Self> {
        if values.len() != grid.n() {
            return Err(Error::Geometry(format!(
                "{} values for a grid of {} points",
                values.len(),
                grid.n()
            )));
        }
        Ok(Self { grid, values, time })
    }

    /// `sum |psi|^2 dx`
    pub fn norm_sq(&self) -> f64 {
        self.values.iter().map(|v| v.norm_sqr()).sum::<f64>() * self.grid.dx()
    }

    pub fn density(&self) -> Vec<f64> {
        self.values.iter().map(|v| v.norm_sqr()).collect()
    }

    pub fn mean_x(&self) -> f64 {
        let dx = self.grid.dx();
        let s: f64 = self
            .values
            .iter()
            .enumerate()
            .map(|(j, v)| v.norm_sqr() * self.grid.x(j))
            .sum();
        s * dx / self.norm_sq()
    }

    /// Value at a grid point.
    pub fn at(&self, x: f64) -> Option<Complex> {
        self.grid.index_of(x).map(|j| self.values[j])
    }

    /// Largest `|psi|^2` within a relative `band` of either grid edge,
    /// relative to the peak density.
    pub fn edge_fraction(&self, band: f64) -> f64 {
        let n = self.values.len();
        let w = ((n as f64 * band).ceil() as usize).clamp(1, n / 2);
        let peak = self.values.iter().map(|v| v.norm_sqr()).fold(0.0, f64::max);
        if peak == 0.0 {
            return 0.0;
        }
        let edge = self.values[..w]
            .iter()
            .chain(&self.values[n - w..])
            .map(|v| v.norm_sqr())
            .fold(0.0, f64::max);
        edge / peak
    }
}

/// Ground state of an infinite well on `[a, b]`, optionally boosted.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WellStateSpec {
    pub a: f64,
    pub b: f64,
    pub boost: f64,
}

impl WellStateSpec {
    pub fn new(a: f64, b: f64, boost: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && boost.is_finite()) {
            return Err(Error::Configuration("well parameters must be finite".into()));
        }
        if !(a < b && b <= 0.0) {
            return Err(Error::Configuration(format!(
                "well requires a < b <= 0 (got a = {a}, b = {b})"
            )));
        }
        Ok(Self { a, b, boost })
    }

    pub fn width(&self) -> f64 {
        self.b - self.a
    }

    pub fn k_w(&self) -> f64 {
        PI / self.width()
    }

    pub fn p_w(&self, consts: &PhysicalConstants) -> f64 {
        consts.hbar * self.k_w()
    }

    pub fn unboosted(&self) -> Self {
        Self { boost: 0.0, ..*self }
    }

    /// `psi(x, 0)`
    pub fn value(&self, x: f64, consts: &PhysicalConstants) -> Complex {
        if x < self.a || x > self.b {
            return Complex::new(0.0, 0.0);
        }
        let amp = (2.0 / self.width()).sqrt() * ((x - self.a) * self.k_w()).sin();
        amp * Complex::from_polar(1.0, self.boost * x / consts.hbar)
    }
}

/// Minimum-uncertainty Gaussian.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianStateSpec {
    pub x0: f64,
    pub p_avg: f64,
    pub delta_x: f64,
}

impl GaussianStateSpec {
    pub fn new(x0: f64, p_avg: f64, delta_x: f64) -> Result<Self> {
        if !(x0.is_finite() && p_avg.is_finite() && delta_x.is_finite() && delta_x > 0.0) {
            return Err(Error::Configuration(format!(
                "Gaussian requires finite x0, p_avg and delta_x > 0 (got {x0}, {p_avg}, {delta_x})"
            )));
        }
        Ok(Self { x0, p_avg, delta_x })
    }

    pub fn delta_p(&self, consts: &PhysicalConstants) -> f64 {
        consts.hbar / (2.0 * self.delta_x)
    }

    pub fn value(&self, x: f64, consts: &PhysicalConstants) -> Complex {
        let d2 = self.delta_x * self.delta_x;
        let env = (2.0 * PI * d2).powf(-0.25) * (-(x - self.x0).powi(2) / (4.0 * d2)).exp();
        env * Complex::from_polar(1.0, self.p_avg * x / consts.hbar)
    }

    /// `int_0^inf |psi|^2 dx`
    pub fn weight_right_of_origin(&self) -> f64 {
        let z = self.x0 / (2f64.sqrt() * self.delta_x);
        0.5 * erfc_real(-z)
    }
}

fn erfc_real(x: f64) -> f64 {
    crate::numerics::erfc(Complex::new(x, 0.0))
        .map(|v| v.re)
        .unwrap_or(if x > 0.0 { 0.0 } else { 2.0 })
}

/// Either initial state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum StateSpec {
    Well(WellStateSpec),
    Gaussian(GaussianStateSpec),
}

impl StateSpec {
    pub fn value(&self, x: f64, consts: &PhysicalConstants) -> Complex {
        match self {
            StateSpec::Well(s) => s.value(x, consts),
            StateSpec::Gaussian(s) => s.value(x, consts),
        }
    }

    pub fn on_grid(&self, grid: Grid1D, consts: &PhysicalConstants) -> Result<WaveField> {
        match self {
            StateSpec::Well(s) => well_ground_state(s, grid, consts),
            StateSpec::Gaussian(s) => gaussian_state(s, grid, consts),
        }
    }

    /// Mean momentum and momentum spread scale.
    pub fn momentum_scale(&self, consts: &PhysicalConstants) -> (f64, f64) {
        match self {
            StateSpec::Well(s) => (s.boost, s.p_w(consts)),
            StateSpec::Gaussian(s) => (s.p_avg, s.delta_p(consts)),
        }
    }
}

/// `psi~(p)`, in closed form (any complex `p`) or sampled on a real grid.
#[derive(Debug, Clone, PartialEq)]
pub enum MomentumAmplitude {
    Analytic {
        state: StateSpec,
        consts: PhysicalConstants,
    },
    Sampled {
        /// ascending, uniform
        p: Vec<f64>,
        values: Vec<Complex>,
        consts: PhysicalConstants,
    },
}

impl MomentumAmplitude {
    pub fn analytic(state: StateSpec, consts: PhysicalConstants) -> Self {
        MomentumAmplitude::Analytic { state, consts }
    }

    pub fn consts(&self) -> &PhysicalConstants {
        match self {
            MomentumAmplitude::Analytic { consts, .. } | MomentumAmplitude::Sampled { consts, .. } => {
                consts
            }
        }
    }

    /// Evaluate at `p`. A sampled amplitude only answers at its grid points.
    pub fn eval(&self, p: Complex) -> Result<Complex> {
        match self {
            MomentumAmplitude::Analytic { state, consts } => match state {
                StateSpec::Well(s) => momentum_amplitude_well(s, p, consts),
                StateSpec::Gaussian(s) => momentum_amplitude_gaussian(s, p, consts),
            },
            MomentumAmplitude::Sampled { p: grid, values, .. } => {
                if p.im != 0.0 || grid.len() < 2 {
                    return Err(Error::domain(
                        "MomentumAmplitude::eval",
                        format!("sampled amplitude cannot be evaluated at {p}"),
                    ));
                }
                let dp = grid[1] - grid[0];
                let s = (p.re - grid[0]) / dp;
                let k = s.round();
                if (s - k).abs() > 1e-9 || k < 0.0 || k as usize >= grid.len() {
                    return Err(Error::domain(
                        "MomentumAmplitude::eval",
                        format!("p = {} is not a sample point", p.re),
                    ));
                }
                Ok(values[k as usize])
            }
        }
    }
}

/// Well ground state on `grid`.
pub fn well_ground_state(
    spec: &WellStateSpec,
    grid: Grid1D,
    consts: &PhysicalConstants,
) -> Result<WaveField> {
    if spec.a < grid.x_min() || spec.b >= grid.x_max() {
        return Err(Error::Geometry(format!(
            "well [{}, {}] is not inside the grid [{}, {})",
            spec.a,
            spec.b,
            grid.x_min(),
            grid.x_max()
        )));
    }
    let inside = (spec.width() / grid.dx()).floor();
    if inside < 32.0 {
        return Err(Error::Geometry(format!(
            "well is resolved by only {inside} grid intervals (need 32)"
        )));
    }
    let values = (0..grid.n()).map(|j| spec.value(grid.x(j), consts)).collect();
    WaveField::new(grid, values, 0.0)
}

/// Gaussian state on `grid`; rejects grids that truncate the tails.
pub fn gaussian_state(
    spec: &GaussianStateSpec,
    grid: Grid1D,
    consts: &PhysicalConstants,
) -> Result<WaveField> {
    let d = (spec.x0 - grid.x_min()).min(grid.x_max() - spec.x0);
    let rel_edge = (-(d * d) / (4.0 * spec.delta_x * spec.delta_x)).exp();
    if d <= 0.0 || rel_edge >= 1e-12 {
        return Err(Error::Geometry(format!(
            "Gaussian at {} with width {} is truncated by the grid (edge/peak = {:.2e})",
            spec.x0, spec.delta_x, rel_edge
        )));
    }
    if grid.dx() > spec.delta_x / 4.0 {
        return Err(Error::Geometry(format!(
            "grid spacing {} does not resolve delta_x = {}",
            grid.dx(),
            spec.delta_x
        )));
    }
    let values = (0..grid.n()).map(|j| spec.value(grid.x(j), consts)).collect();
    WaveField::new(grid, values, 0.0)
}

/// Closed-form momentum amplitude of the (boosted) well state.
///
/// The `0/0` at `p - boost = -alpha p_w` is removed by a series in the
/// scaled detuning, used whenever it is below 1e-3.
pub fn momentum_amplitude_well(
    spec: &WellStateSpec,
    p: Complex,
    consts: &PhysicalConstants,
) -> Result<Complex> {
    if !(p.re.is_finite() && p.im.is_finite()) {
        return Err(Error::domain("momentum_amplitude_well", format!("non-finite p = {p}")));
    }
    let hbar = consts.hbar;
    let (a, b, d) = (spec.a, spec.b, spec.width());
    let pw = spec.p_w(consts);
    let q = p - spec.boost;
    let i = Complex::i();
    let pref = -(2.0 * consts.h()).sqrt() / (4.0 * PI * d.sqrt());
    let mut sum = Complex::new(0.0, 0.0);
    for alpha in [1.0, -1.0] {
        let s = q + alpha * pw;
        let e = if s.norm() * d / hbar < 1e-3 {
            let v = s * d / (2.0 * hbar);
            let v2 = v * v;
            -i * (d / hbar) * (-i * s * (a + b) / (2.0 * hbar)).exp() * (1.0 - v2 / 6.0 + v2 * v2 / 120.0)
        } else {
            ((-i * s * b / hbar).exp() - (-i * s * a / hbar).exp()) / s
        };
        sum += alpha * Complex::from_polar(1.0, alpha * pw * a / hbar) * e;
    }
    let v = pref * sum;
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(Error::domain("momentum_amplitude_well", format!("overflow at p = {p}")))
    }
}

/// Closed-form momentum amplitude of the Gaussian state (entire in `p`).
pub fn momentum_amplitude_gaussian(
    spec: &GaussianStateSpec,
    p: Complex,
    consts: &PhysicalConstants,
) -> Result<Complex> {
    if !(p.re.is_finite() && p.im.is_finite()) {
        return Err(Error::domain(
            "momentum_amplitude_gaussian",
            format!("non-finite p = {p}"),
        ));
    }
    let hbar = consts.hbar;
    let dx = spec.delta_x;
    let k = (p - spec.p_avg) / hbar;
    let pref = consts.h().powf(-0.5) * (2.0 * PI * dx * dx).powf(-0.25) * 2.0 * PI.sqrt() * dx;
    let v = pref * (-k * k * dx * dx - Complex::i() * k * spec.x0).exp();
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(Error::domain("momentum_amplitude_gaussian", format!("overflow at p = {p}")))
    }
}

/// `psi~(p) = h^{-1/2} int dx exp(-i p x / hbar) psi(x)` on the grid momenta,
/// returned in ascending `p` order.
pub fn momentum_transform(field: &WaveField, consts: &PhysicalConstants) -> MomentumAmplitude {
    let grid = field.grid;
    let n = grid.n();
    let mut data = field.values.clone();
    FftPair::new(n).forward(&mut data);
    let scale = grid.dx() / consts.h().sqrt();
    let mut p = Vec::with_capacity(n);
    let mut values = Vec::with_capacity(n);
    for idx in 0..n {
        let k = (idx + n / 2) % n;
        let pk = grid.p_of_bin(k, consts);
        p.push(pk);
        values.push(data[k] * scale * Complex::from_polar(1.0, -pk * grid.x_min() / consts.hbar));
    }
    MomentumAmplitude::Sampled {
        p,
        values,
        consts: *consts,
    }
}
