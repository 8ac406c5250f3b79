//! Source signals at a fixed point, their energy transforms, and the two
//! reconstructions of the wave on `x >= 0`: the energy integral with the
//! `p_+` branch and the time convolution with the kernel `K_+`.

use std::f64::consts::{FRAC_PI_4, PI};
use std::io::{self, Write};

use crate::error::{Error, Result};
use crate::numerics::fft::{signed_index, FftPair};
use crate::numerics::{composite_gauss, faddeeva_w, p_plus, p_plus_real, Complex, PhysicalConstants};
use crate::propagation::{EvolutionRecord, TimeGrid};
use crate::states::{MomentumAmplitude, StateSpec, WaveField};

/// Wave at `probe_x` sampled at `t_k = k dt`, `k = 0..=n_steps`; zero for `t < 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct Signal {
    pub probe_x: f64,
    pub tgrid: TimeGrid,
    pub values: Vec<Complex>,
    pub gated: bool,
}

impl Signal {
    pub fn new(probe_x: f64, tgrid: TimeGrid, values: Vec<Complex>) -> Result<Self> {
        if tgrid.t0 != 0.0 {
            return Err(Error::Configuration(format!(
                "signals start at t = 0 (got t0 = {})",
                tgrid.t0
            )));
        }
        if values.len() != tgrid.n_steps + 1 {
            return Err(Error::Configuration(format!(
                "{} samples for {} steps",
                values.len(),
                tgrid.n_steps
            )));
        }
        if values.iter().any(|v| !(v.re.is_finite() && v.im.is_finite())) {
            return Err(Error::domain("Signal::new", "non-finite sample"));
        }
        Ok(Self::new_unchecked(probe_x, tgrid, values))
    }

    pub(crate) fn new_unchecked(probe_x: f64, tgrid: TimeGrid, values: Vec<Complex>) -> Self {
        Self {
            probe_x,
            tgrid,
            values,
            gated: true,
        }
    }

    /// `exp(-i omega t - eta t)` for `t >= 0`.
    pub fn damped_monochromatic(omega: f64, eta: f64, tgrid: TimeGrid) -> Result<Self> {
        let values = (0..=tgrid.n_steps)
            .map(|k| {
                let t = tgrid.t(k);
                Complex::from_polar((-eta * t).exp(), -omega * t)
            })
            .collect();
        Self::new(0.0, tgrid, values)
    }

    pub fn dt(&self) -> f64 {
        self.tgrid.dt
    }

    /// Recorded duration `T`.
    pub fn duration(&self) -> f64 {
        self.tgrid.t_end()
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// Linear interpolation between samples; zero for `t < 0`.
    pub fn value_at(&self, t: f64) -> Result<Complex> {
        if t < 0.0 {
            return Ok(Complex::new(0.0, 0.0));
        }
        let s = t / self.dt();
        let n = self.tgrid.n_steps;
        if s > n as f64 * (1.0 + 1e-12) {
            return Err(Error::InsufficientRecord {
                requested: t,
                available: self.duration(),
            });
        }
        let j = (s + 1e-9).floor().min(n as f64) as usize;
        if j == n || (s - j as f64).abs() <= 1e-9 {
            return Ok(self.values[j]);
        }
        let f = s - j as f64;
        Ok(self.values[j] * (1.0 - f) + self.values[j + 1] * f)
    }

    /// Replace every sample by `f(t, value)`.
    pub fn map(&self, f: impl Fn(f64, Complex) -> Complex) -> Signal {
        let values = self
            .values
            .iter()
            .enumerate()
            .map(|(k, v)| f(self.tgrid.t(k), *v))
            .collect();
        Signal {
            values,
            ..self.clone()
        }
    }

    /// `int_0^T |psi(0, t)|^2 dt` by the trapezoid rule.
    pub fn energy_norm(&self) -> f64 {
        let n = self.values.len();
        let s: f64 = self.values.iter().map(|v| v.norm_sqr()).sum();
        (s - 0.5 * (self.values[0].norm_sqr() + self.values[n - 1].norm_sqr())) * self.dt()
    }
}

/// Probe signal of a record, gated at `t = 0`.
pub fn extract_signal(record: &EvolutionRecord) -> Result<Signal> {
    let probe = record
        .probe
        .as_ref()
        .ok_or_else(|| Error::Configuration("record has no probe signal".into()))?;
    let mut s = Signal::new(probe.probe_x, probe.tgrid, probe.values.clone())?;
    s.gated = true;
    Ok(s)
}

/// `chi(E)` on a uniform energy grid, ascending.
#[derive(Debug, Clone, PartialEq)]
pub struct EnergySpectrum {
    pub energies: Vec<f64>,
    pub values: Vec<Complex>,
    /// transform window `N dt` (zero padding included); `dE = h / window`
    pub record_length: f64,
    /// duration of the underlying signal
    pub signal_duration: f64,
    /// the signal was multiplied by `exp(-damping t / hbar)`
    pub damping: f64,
    pub consts: PhysicalConstants,
}

impl EnergySpectrum {
    pub fn de(&self) -> f64 {
        self.energies[1] - self.energies[0]
    }

    /// Value at a grid energy (to 1e-9 dE).
    pub fn value_at(&self, e: f64) -> Result<Complex> {
        let s = (e - self.energies[0]) / self.de();
        let k = s.round();
        if (s - k).abs() > 1e-9 || k < 0.0 || k as usize >= self.energies.len() {
            return Err(Error::domain(
                "EnergySpectrum::value_at",
                format!("E = {e} is not a grid energy"),
            ));
        }
        Ok(self.values[k as usize])
    }

    /// `(E, chi)` pairs with `lo <= E <= hi`.
    pub fn band(&self, lo: f64, hi: f64) -> impl Iterator<Item = (f64, Complex)> + '_ {
        self.energies
            .iter()
            .zip(&self.values)
            .filter(move |(e, _)| **e >= lo && **e <= hi)
            .map(|(e, v)| (*e, *v))
    }
}

/// Options for [`energy_spectrum_with`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumOptions {
    /// FFT length (power of two, at least the number of samples);
    /// default: the next power of two
    pub padded_len: Option<usize>,
    /// `epsilon` in `exp(-epsilon t / hbar)`
    pub damping: f64,
}

impl Default for SpectrumOptions {
    fn default() -> Self {
        Self {
            padded_len: None,
            damping: 0.0,
        }
    }
}

/// Undamped spectrum on the minimal power-of-two window.
pub fn energy_spectrum(signal: &Signal, consts: &PhysicalConstants) -> Result<EnergySpectrum> {
    energy_spectrum_with(signal, &SpectrumOptions::default(), consts)
}

/// `chi(E_k) = h^{-1/2} int_0^T dt psi(0,t) exp(-eps t/hbar) exp(i E_k t/hbar)`
/// with trapezoid weights, on `E_k = k h / (N dt)`, `k = -N/2..N/2`.
pub fn energy_spectrum_with(
    signal: &Signal,
    opts: &SpectrumOptions,
    consts: &PhysicalConstants,
) -> Result<EnergySpectrum> {
    let len = signal.values.len();
    let n = opts.padded_len.unwrap_or_else(|| len.next_power_of_two());
    if !n.is_power_of_two() || n < len {
        return Err(Error::Configuration(format!(
            "padded length {n} must be a power of two >= {len}"
        )));
    }
    if !(opts.damping.is_finite() && opts.damping >= 0.0) {
        return Err(Error::Configuration(format!("damping {} must be >= 0", opts.damping)));
    }
    let dt = signal.dt();
    let mut data = vec![Complex::new(0.0, 0.0); n];
    for (j, v) in signal.values.iter().enumerate() {
        let w = if j == 0 || j == len - 1 { 0.5 } else { 1.0 };
        let t = j as f64 * dt;
        data[j] = v * (w * dt * (-opts.damping * t / consts.hbar).exp());
    }
    FftPair::new(n).inverse(&mut data);
    let window = n as f64 * dt;
    let de = consts.h() / window;
    let scale = consts.h().powf(-0.5);
    let mut energies = Vec::with_capacity(n);
    let mut values = Vec::with_capacity(n);
    for idx in 0..n {
        let k = (idx + n / 2) % n;
        energies.push(signed_index(k, n) as f64 * de);
        values.push(data[k] * scale);
    }
    Ok(EnergySpectrum {
        energies,
        values,
        record_length: window,
        signal_duration: signal.duration(),
        damping: opts.damping,
        consts: *consts,
    })
}

/// Direct (non-FFT) transform of the signal at one complex energy, with the
/// same trapezoid weights as [`energy_spectrum_with`].
pub fn chi_direct(signal: &Signal, e: Complex, consts: &PhysicalConstants) -> Complex {
    let dt = signal.dt();
    let len = signal.values.len();
    let mut s = Complex::new(0.0, 0.0);
    for (j, v) in signal.values.iter().enumerate() {
        let w = if j == 0 || j == len - 1 { 0.5 } else { 1.0 };
        let t = j as f64 * dt;
        s += v * w * (Complex::i() * e * t / consts.hbar).exp();
    }
    s * dt * consts.h().powf(-0.5)
}

/// `chi_f(E) = (m/2E)^{1/2} psi~((2mE)^{1/2})`, both roots on the `p_+` branch.
pub fn chi_from_initial_state(
    amp: &MomentumAmplitude,
    e: f64,
    consts: &PhysicalConstants,
) -> Result<Complex> {
    chi_from_initial_state_complex(amp, Complex::new(e, 0.0), consts)
}

/// [`chi_from_initial_state`] at complex energy (off the cut).
pub fn chi_from_initial_state_complex(
    amp: &MomentumAmplitude,
    e: Complex,
    consts: &PhysicalConstants,
) -> Result<Complex> {
    if e == Complex::new(0.0, 0.0) {
        return Err(Error::branch("chi_from_initial_state", "E = 0 is a branch point"));
    }
    if !matches!(amp, MomentumAmplitude::Analytic { .. }) {
        return Err(Error::NotSupported(
            "chi_from_initial_state needs an analytic amplitude".into(),
        ));
    }
    let p = p_plus(e, consts.mass)?;
    Ok(consts.mass / p * amp.eval(p)?)
}

/// `h^{-1/2} int dE exp(i x p_+(E)/hbar) exp(-i E t/hbar) chi(E)` over the
/// sampled energies. A damped spectrum holds `chi(E + i eps)`, so the sum runs
/// on the line `Im E = eps` and the factor `exp(eps t/hbar)` is restored.
pub fn reconstruct_energy_domain(
    spectrum: &EnergySpectrum,
    x: f64,
    t: f64,
    consts: &PhysicalConstants,
) -> Result<Complex> {
    if !(x.is_finite() && x >= 0.0) {
        return Err(Error::domain(
            "reconstruct_energy_domain",
            format!("x = {x}: the source solution holds for x >= 0"),
        ));
    }
    if !t.is_finite() {
        return Err(Error::domain("reconstruct_energy_domain", format!("t = {t}")));
    }
    let eps = spectrum.damping;
    let hbar = consts.hbar;
    let mut s = Complex::new(0.0, 0.0);
    for (&e, &chi) in spectrum.energies.iter().zip(&spectrum.values) {
        let spatial = if x == 0.0 {
            Complex::new(1.0, 0.0)
        } else {
            let p = if eps == 0.0 {
                p_plus_real(e, consts.mass)
            } else {
                p_plus(Complex::new(e, eps), consts.mass)?
            };
            (Complex::i() * x * p / hbar).exp()
        };
        s += spatial * Complex::from_polar(1.0, -e * t / hbar) * chi;
    }
    Ok(s * spectrum.de() * consts.h().powf(-0.5) * (eps * t / hbar).exp())
}

/// Contribution of `E < 0` to [`reconstruct_energy_domain`]: the evanescent part.
pub fn reconstruct_energy_domain_negative(
    spectrum: &EnergySpectrum,
    x: f64,
    t: f64,
    consts: &PhysicalConstants,
) -> Result<Complex> {
    let mut part = spectrum.clone();
    for (e, v) in part.energies.iter().zip(part.values.iter_mut()) {
        if *e >= 0.0 {
            *v = Complex::new(0.0, 0.0);
        }
    }
    reconstruct_energy_domain(&part, x, t, consts)
}

/// Panel width and cutoff for half-line momentum quadratures.
fn momentum_panels(state: &StateSpec, x: f64, t: f64, cutoff: f64, consts: &PhysicalConstants) -> (f64, usize) {
    let (_, width) = state.momentum_scale(consts);
    let extent = match state {
        StateSpec::Well(s) => s.a.abs().max(s.b.abs()),
        StateSpec::Gaussian(g) => g.x0.abs() + 10.0 * g.delta_x,
    };
    let omega = (x.abs() + extent) / consts.hbar + cutoff * t.abs() / (consts.mass * consts.hbar);
    let h = (width / 4.0).min(2.0 * PI / omega.max(1e-300));
    let panels = (cutoff / h).ceil().max(1.0) as usize;
    (cutoff, panels)
}

/// `psi_{f,+}` or `psi_{f,-}`:
/// `h^{-1/2} int dp exp(i p x/hbar) exp(-i p^2 t/2m hbar) psi~(p) Theta(+-p)`.
///
/// A sampled amplitude is summed on its grid with half weight at `p = 0`; an
/// analytic one is integrated with composite Gauss panels up to a cutoff of
/// `2000` (`t = 0`) or `200` (`t != 0`) momentum widths beyond the mean.
pub fn momentum_split(
    amp: &MomentumAmplitude,
    positive: bool,
    x: f64,
    t: f64,
    consts: &PhysicalConstants,
) -> Result<Complex> {
    let sign = if positive { 1.0 } else { -1.0 };
    let hbar = consts.hbar;
    let kernel = |p: f64| Complex::from_polar(1.0, (p * x - p * p * t / (2.0 * consts.mass)) / hbar);
    match amp {
        MomentumAmplitude::Sampled { p, values, .. } => {
            let dp = p[1] - p[0];
            let mut s = Complex::new(0.0, 0.0);
            for (&pk, v) in p.iter().zip(values) {
                let w = if pk == 0.0 {
                    0.5
                } else if pk * sign > 0.0 {
                    1.0
                } else {
                    0.0
                };
                if w > 0.0 {
                    s += w * kernel(pk) * v;
                }
            }
            Ok(s * dp * consts.h().powf(-0.5))
        }
        MomentumAmplitude::Analytic { state, .. } => {
            let (c, width) = state.momentum_scale(consts);
            let factor = if t == 0.0 { 2000.0 } else { 200.0 };
            let cutoff = c.abs() + factor * width;
            let (cutoff, panels) = momentum_panels(state, x, t, cutoff, consts);
            let (ps, ws) = composite_gauss(0.0, cutoff, panels, 16);
            let mut s = Complex::new(0.0, 0.0);
            for (q, w) in ps.iter().zip(&ws) {
                let p = sign * q;
                s += w * kernel(p) * amp.eval(Complex::new(p, 0.0))?;
            }
            Ok(s * consts.h().powf(-0.5))
        }
    }
}

/// Grid version of [`momentum_split`]: masks the discrete spectrum of `field`
/// (half weight at `p = 0` and at the Nyquist bin), evolves it
/// freely by `t` and transforms back.
pub fn momentum_split_field(
    field: &WaveField,
    positive: bool,
    t: f64,
    consts: &PhysicalConstants,
) -> WaveField {
    let grid = field.grid;
    let n = grid.n();
    let mut fft = FftPair::new(n);
    let mut data = field.values.clone();
    fft.forward(&mut data);
    for (k, v) in data.iter_mut().enumerate() {
        let idx = signed_index(k, n);
        let w = match (idx == 0 || k == n / 2, (idx > 0) == positive) {
            (true, _) => 0.5,
            (false, true) => 1.0,
            (false, false) => 0.0,
        };
        let p = grid.p_of_bin(k, consts);
        *v *= Complex::from_polar(w / n as f64, -p * p * t / (2.0 * consts.mass * consts.hbar));
    }
    fft.inverse(&mut data);
    WaveField {
        grid,
        values: data,
        time: field.time + t,
    }
}

/// Energy integral with the closed-form `chi_f`, after `E = p^2/2m` on the
/// positive axis and `E = -g^2/2m` on the negative one:
/// `psi_{f,+}(x,t) - i h^{-1/2} int_0^inf dg exp(-g x/hbar + i g^2 t/2m hbar) psi~(i g)`.
///
/// Needs `x > 0` and an amplitude that decays up the imaginary axis; the
/// Gaussian does not, and is rejected.
pub fn reconstruct_from_chi(
    amp: &MomentumAmplitude,
    x: f64,
    t: f64,
    consts: &PhysicalConstants,
) -> Result<Complex> {
    let MomentumAmplitude::Analytic { state, .. } = amp else {
        return Err(Error::NotSupported("reconstruct_from_chi needs an analytic amplitude".into()));
    };
    let StateSpec::Well(well) = state else {
        return Err(Error::NotSupported(
            "the Gaussian amplitude grows along the positive imaginary axis".into(),
        ));
    };
    if !(x.is_finite() && x > 0.0) {
        return Err(Error::domain("reconstruct_from_chi", format!("x = {x} must be > 0")));
    }
    let positive = momentum_split(amp, true, x, t, consts)?;
    let hbar = consts.hbar;
    // |psi~(i g)| ~ exp(g b/hbar) / g, so the integrand falls off as exp(-g (x - b)/hbar)
    let decay = (x - well.b) / hbar;
    let cutoff = 40.0 / decay;
    let omega = cutoff * t.abs() / (consts.mass * hbar) + decay;
    let h = (well.p_w(consts) / 4.0).min(2.0 * PI / omega).min(cutoff / 8.0);
    let panels = (cutoff / h).ceil() as usize;
    let (gs, ws) = composite_gauss(0.0, cutoff, panels, 16);
    let mut s = Complex::new(0.0, 0.0);
    for (g, w) in gs.iter().zip(&ws) {
        let ph = Complex::new(-g * x / hbar, g * g * t / (2.0 * consts.mass * hbar)).exp();
        s += w * ph * amp.eval(Complex::new(0.0, *g))?;
    }
    Ok(positive - Complex::i() * s * consts.h().powf(-0.5))
}

/// `K_+(t, x; t') = [m / (i h (t-t')^3)]^{1/2} x exp(i m x^2 / 2 hbar (t-t'))`,
/// zero for `t < t'`.
pub fn kernel_k_plus(t: f64, x: f64, t_prime: f64, consts: &PhysicalConstants) -> Result<Complex> {
    if !(x.is_finite() && x >= 0.0 && t.is_finite() && t_prime.is_finite()) {
        return Err(Error::domain("kernel_k_plus", format!("x = {x}, t = {t}, t' = {t_prime}")));
    }
    let tau = t - t_prime;
    if tau < 0.0 {
        return Ok(Complex::new(0.0, 0.0));
    }
    if tau == 0.0 {
        return Err(Error::SingularKernel { op: "kernel_k_plus" });
    }
    let m = consts.mass;
    let pref = Complex::from_polar((m / (consts.h() * tau.powi(3))).sqrt(), -FRAC_PI_4);
    Ok(pref * x * Complex::from_polar(1.0, m * x * x / (2.0 * consts.hbar * tau)))
}

/// Moments `F0(s) = int_0^s K(u) du` and `F1(s) = int_0^s K(u) u du` of the
/// kernel as a function of the delay `u = t - t'`.
struct KernelMoments {
    cx: Complex,
    /// phase of the kernel is `beta / u`
    beta: f64,
}

impl KernelMoments {
    fn new(x: f64, consts: &PhysicalConstants) -> Self {
        let c = Complex::from_polar((consts.mass / consts.h()).sqrt(), -FRAC_PI_4);
        Self {
            cx: c * x,
            beta: consts.mass * x * x / (2.0 * consts.hbar),
        }
    }

    fn at(&self, s: f64) -> Result<(Complex, Complex)> {
        if s == 0.0 {
            return Ok((Complex::new(0.0, 0.0), Complex::new(0.0, 0.0)));
        }
        let r = (self.beta / s).sqrt();
        let osc = Complex::from_polar(1.0, self.beta / s);
        // erfc(e^{-i pi/4} r) = e^{i r^2} w(e^{i pi/4} r)
        let f0 = osc * faddeeva_w(Complex::from_polar(r, FRAC_PI_4))?;
        let f1 = 2.0
            * self.cx
            * (s.sqrt() * osc + Complex::i() * Complex::from_polar((PI * self.beta).sqrt(), FRAC_PI_4) * f0);
        Ok((f0, f1))
    }
}

/// `psi(x, t) = int_0^t dt' K_+(t, x; t') psi(0, t')`.
///
/// The signal is taken piecewise linear between samples and each piece is
/// integrated against the kernel in closed form, which absorbs the
/// oscillating singularity at `t' -> t` without any cutoff.
pub fn reconstruct_time_domain(
    signal: &Signal,
    x: f64,
    t: f64,
    consts: &PhysicalConstants,
) -> Result<Complex> {
    if !(x.is_finite() && x >= 0.0) {
        return Err(Error::domain("reconstruct_time_domain", format!("x = {x} must be >= 0")));
    }
    if !t.is_finite() {
        return Err(Error::domain("reconstruct_time_domain", format!("t = {t}")));
    }
    if t <= 0.0 {
        return Ok(Complex::new(0.0, 0.0));
    }
    let head = signal.value_at(t)?;
    if x == 0.0 {
        return Ok(head);
    }
    let dt = signal.dt();
    let n = signal.tgrid.n_steps;
    let js = ((t / dt) + 1e-9).floor().min(n as f64) as usize;
    let mom = KernelMoments::new(x, consts);

    let mut total = Complex::new(0.0, 0.0);
    let (mut s_a, mut psi_a) = (0.0, head);
    let (mut f0_a, mut f1_a) = (Complex::new(0.0, 0.0), Complex::new(0.0, 0.0));
    for j in (0..=js).rev() {
        let s_b = t - j as f64 * dt;
        if s_b <= s_a + 1e-12 * dt {
            continue;
        }
        let psi_b = signal.values[j];
        let (f0_b, f1_b) = mom.at(s_b)?;
        let d0 = f0_b - f0_a;
        let d1 = f1_b - f1_a;
        total += psi_a * d0 + (psi_b - psi_a) / (s_b - s_a) * (d1 - s_a * d0);
        (s_a, psi_a, f0_a, f1_a) = (s_b, psi_b, f0_b, f1_b);
    }
    Ok(total)
}

/// Shortest round-trip decimal, in exponent form outside `[1e-5, 1e16)`.
pub fn csv_float(x: f64) -> String {
    let a = x.abs();
    if a == 0.0 || (1e-5..1e16).contains(&a) || !a.is_finite() {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

fn write_series<W: Write>(out: &mut W, header: &str, xs: &[f64], vs: &[Complex]) -> io::Result<()> {
    writeln!(out, "{header}")?;
    for (x, v) in xs.iter().zip(vs) {
        writeln!(out, "{},{},{}", csv_float(*x), csv_float(v.re), csv_float(v.im))?;
    }
    Ok(())
}

/// CSV `t,re,im`, shortest round-trip decimals.
pub fn write_signal_csv<W: Write>(signal: &Signal, out: &mut W) -> io::Result<()> {
    let ts: Vec<f64> = (0..signal.values.len()).map(|k| signal.tgrid.t(k)).collect();
    write_series(out, "t,re,im", &ts, &signal.values)
}

/// CSV `E,re,im`, shortest round-trip decimals.
pub fn write_spectrum_csv<W: Write>(spectrum: &EnergySpectrum, out: &mut W) -> io::Result<()> {
    write_series(out, "E,re,im", &spectrum.energies, &spectrum.values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::propagation::evolve_free_moshinsky;
    use crate::states::WellStateSpec;

    fn consts() -> PhysicalConstants {
        PhysicalConstants::default()
    }

    #[test]
    fn monochromatic_spectrum_matches_closed_form() {
        let c = consts();
        let (w0, eta) = (1.5, 0.4);
        let tg = TimeGrid::covering(100.0, 1e-3).unwrap();
        let sig = Signal::damped_monochromatic(w0, eta, tg).unwrap();
        let spec = energy_spectrum(&sig, &c).unwrap();
        for e_target in [-2.0, 0.0, 1.0, 1.5, 3.0] {
            let k = spec.energies.iter().position(|&e| e >= e_target).unwrap();
            let e = spec.energies[k];
            let exact = c.h().powf(-0.5) * Complex::i() * c.hbar / Complex::new(e - c.hbar * w0, c.hbar * eta);
            assert!((spec.values[k] - exact).norm() / exact.norm() < 1e-5, "E={e}");
        }
    }

    #[test]
    fn parseval() {
        let c = consts();
        let tg = TimeGrid::covering(30.0, 1e-2).unwrap();
        let sig = Signal::damped_monochromatic(2.0, 0.3, tg)
            .unwrap()
            .map(|t, v| v * (1.0 - (-t).exp()));
        let spec = energy_spectrum_with(&sig, &SpectrumOptions { padded_len: Some(8192), damping: 0.0 }, &c).unwrap();
        let lhs: f64 = spec.values.iter().map(|v| v.norm_sqr()).sum::<f64>() * spec.de();
        let rhs = sig.energy_norm();
        assert!((lhs - rhs).abs() / rhs < 1e-8, "{lhs} {rhs}");
    }

    #[test]
    fn x_zero_inverts_the_transform() {
        let c = consts();
        let tg = TimeGrid::covering(50.0, 1e-2).unwrap();
        let sig = Signal::damped_monochromatic(0.7, 0.2, tg).unwrap().map(|t, v| v * t);
        let spec = energy_spectrum_with(&sig, &SpectrumOptions { padded_len: Some(16384), damping: 0.0 }, &c).unwrap();
        for t in [0.5, 3.0, 7.31] {
            let r = reconstruct_energy_domain(&spec, 0.0, t, &c).unwrap();
            let s = sig.value_at(t).unwrap();
            assert!((r - s).norm() / s.norm() < 1e-3, "t={t}");
        }
    }

    #[test]
    fn chi_from_state_branch() {
        let c = consts();
        let well = WellStateSpec::new(-2.01, -0.01, 0.0).unwrap();
        let amp = MomentumAmplitude::analytic(StateSpec::Well(well), c);
        let v = chi_from_initial_state(&amp, -1.0, &c).unwrap();
        let direct = Complex::new(0.0, -(0.5f64).sqrt())
            * crate::states::momentum_amplitude_well(&well, Complex::new(0.0, 2f64.sqrt()), &c).unwrap();
        assert!((v - direct).norm() < 1e-15);
        assert!(matches!(chi_from_initial_state(&amp, 0.0, &c), Err(Error::Branch { .. })));
    }

    #[test]
    fn kernel_basics() {
        let c = consts();
        assert_eq!(kernel_k_plus(1.0, 1.0, 2.0, &c).unwrap(), Complex::new(0.0, 0.0));
        assert!(matches!(kernel_k_plus(1.0, 1.0, 1.0, &c), Err(Error::SingularKernel { .. })));
        // hbar/(m i) d/dx of the free propagator from x' = 0, by central difference
        let (x, t, tp) = (1.0, 2.0, 0.0);
        let h = 1e-5;
        let kp = crate::propagation::free_propagator_kernel(x + h, 0.0, t, tp, &c).unwrap();
        let km = crate::propagation::free_propagator_kernel(x - h, 0.0, t, tp, &c).unwrap();
        let deriv = (kp - km) / (2.0 * h) * c.hbar / (Complex::i() * c.mass);
        let k = kernel_k_plus(t, x, tp, &c).unwrap();
        assert!((deriv - k).norm() / k.norm() < 1e-8);
    }

    #[test]
    fn kernel_moments_are_antiderivatives() {
        let c = consts();
        let x = 0.8;
        let mom = KernelMoments::new(x, &c);
        let (a, b) = (0.3, 0.9);
        let (xs, ws) = composite_gauss(a, b, 400, 16);
        let mut i0 = Complex::new(0.0, 0.0);
        let mut i1 = Complex::new(0.0, 0.0);
        for (s, w) in xs.iter().zip(&ws) {
            let k = kernel_k_plus(*s, x, 0.0, &c).unwrap();
            i0 += w * k;
            i1 += w * k * *s;
        }
        let (f0a, f1a) = mom.at(a).unwrap();
        let (f0b, f1b) = mom.at(b).unwrap();
        assert!((f0b - f0a - i0).norm() < 1e-12);
        assert!((f1b - f1a - i1).norm() < 1e-12);
    }

    #[test]
    fn shutter_response_saturates() {
        let c = consts();
        let mom = KernelMoments::new(1.0, &c);
        let (f0, _) = mom.at(1e8).unwrap();
        assert!((f0 - 1.0).norm() < 1e-3);
    }

    #[test]
    fn time_domain_small_cases() {
        let c = consts();
        let tg = TimeGrid::covering(5.0, 1e-3).unwrap();
        let zero = Signal::new(0.0, tg, vec![Complex::new(0.0, 0.0); tg.n_steps + 1]).unwrap();
        assert_eq!(reconstruct_time_domain(&zero, 1.0, 3.0, &c).unwrap(), Complex::new(0.0, 0.0));
        assert!(matches!(
            reconstruct_time_domain(&zero, 1.0, 6.0, &c),
            Err(Error::InsufficientRecord { .. })
        ));
        assert_eq!(reconstruct_time_domain(&zero, 1.0, -1.0, &c).unwrap(), Complex::new(0.0, 0.0));
    }

    #[test]
    fn time_domain_reproduces_free_well() {
        let c = consts();
        let well = WellStateSpec::new(-2.01, -0.01, 0.0).unwrap();
        let tg = TimeGrid::covering(10.0, 1e-3).unwrap();
        let rec = crate::propagation::moshinsky_probe_record(&well, tg, 0.0, &c).unwrap();
        let sig = extract_signal(&rec).unwrap();
        let exact = evolve_free_moshinsky(&well, 2.0, 10.0, &c).unwrap();
        let r = reconstruct_time_domain(&sig, 2.0, 10.0, &c).unwrap();
        assert!((r - exact).norm() / exact.norm() < 2e-2);
    }

    #[test]
    fn csv_round_trips() {
        let tg = TimeGrid::covering(0.02, 1e-2).unwrap();
        let sig = Signal::damped_monochromatic(1.0, 0.0, tg).unwrap();
        let mut buf = Vec::new();
        write_signal_csv(&sig, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("t,re,im"));
        let row: Vec<&str> = lines.nth(1).unwrap().split(',').collect();
        assert_eq!(row.len(), 3);
        let back: f64 = row[1].parse().unwrap();
        assert_eq!(back, (0.01f64).cos());
    }

    #[test]
    fn csv_float_is_shortest_round_trip() {
        for x in [0.0, 0.5, -1.25e-33, 1e20, 3.0e-5, 123.456, f64::MIN_POSITIVE] {
            let s = csv_float(x);
            assert_eq!(s.parse::<f64>().unwrap(), x, "{s}");
            assert!(s.len() <= 24, "{s}");
        }
        assert_eq!(csv_float(1.2e-33), "1.2e-33");
        assert_eq!(csv_float(0.25), "0.25");
    }
}
