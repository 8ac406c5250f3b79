//! Step and square-barrier scattering amplitudes, energy releveling, the step
//! relation between the source spectrum and the initial state, and arrival
//! probabilities.

use crate::error::{Error, Result};
use crate::numerics::{composite_gauss, energy_fourth_root, p_plus, q_of_p, Complex, PhysicalConstants};
use crate::source::{EnergySpectrum, Signal};
use crate::states::{MomentumAmplitude, WaveField};

/// Step `V(x) = V0 Theta(x)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StepSpec {
    pub v0: f64,
}

impl StepSpec {
    /// `V0 = 0` is accepted as the free limit; a downward step is not supported.
    pub fn new(v0: f64) -> Result<Self> {
        if !v0.is_finite() {
            return Err(Error::Configuration(format!("step height {v0} is not finite")));
        }
        if v0 < 0.0 {
            return Err(Error::NotSupported(format!(
                "downward step V0 = {v0}: only non-negative steps are handled"
            )));
        }
        Ok(Self { v0 })
    }

    /// `(2 m V0)^{1/2}`
    pub fn p0(&self, consts: &PhysicalConstants) -> f64 {
        (2.0 * consts.mass * self.v0).sqrt()
    }
}

/// Rectangular barrier (or well, for `V0 < 0`) of height `V0` on `[c, d]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BarrierSpec {
    pub v0: f64,
    pub c: f64,
    pub d: f64,
}

impl BarrierSpec {
    pub fn new(v0: f64, c: f64, d: f64) -> Result<Self> {
        if !(v0.is_finite() && c.is_finite() && d.is_finite()) {
            return Err(Error::Configuration("barrier parameters must be finite".into()));
        }
        if !(c <= d && d <= 0.0) {
            return Err(Error::Configuration(format!(
                "barrier support [{c}, {d}] must satisfy c <= d <= 0"
            )));
        }
        Ok(Self { v0, c, d })
    }

    pub fn width(&self) -> f64 {
        self.d - self.c
    }
}

fn pole_guard(op: &'static str, p: Complex, den: Complex) -> Result<()> {
    if den.norm() <= 1e-300 || !den.re.is_finite() || !den.im.is_finite() {
        return Err(Error::Pole {
            op,
            at: format!("p = {p}"),
        });
    }
    Ok(())
}

/// Left-incidence transmission amplitude `2p / (p + q)`.
pub fn transmission_step(p: Complex, spec: &StepSpec, consts: &PhysicalConstants) -> Result<Complex> {
    let q = q_of_p(p, spec.p0(consts))?;
    pole_guard("transmission_step", p, p + q)?;
    Ok(2.0 * p / (p + q))
}

/// Left-incidence reflection amplitude `(p - q) / (p + q)`.
pub fn reflection_step(p: Complex, spec: &StepSpec, consts: &PhysicalConstants) -> Result<Complex> {
    let q = q_of_p(p, spec.p0(consts))?;
    pole_guard("reflection_step", p, p + q)?;
    Ok((p - q) / (p + q))
}

fn sinc(z: Complex) -> Complex {
    if z.norm() < 1e-4 {
        let z2 = z * z;
        1.0 - z2 / 6.0 + z2 * z2 / 120.0
    } else {
        z.sin() / z
    }
}

/// Transmission and reflection amplitudes of the barrier, for a wave
/// `e^{ipx} + R e^{-ipx}` on the left and `T e^{ipx}` on the right.
///
/// With `k^2 = p^2 - 2 m V0` and `L = d - c`,
/// `T = e^{-ipL} / [cos(kL) - i (p^2+k^2)/(2p) L sinc(kL)]` (units of hbar
/// absorbed). Both amplitudes are even in `k`, so no branch of `k` is chosen.
pub fn barrier_amplitudes(
    p: Complex,
    spec: &BarrierSpec,
    consts: &PhysicalConstants,
) -> Result<(Complex, Complex)> {
    if !(p.re.is_finite() && p.im.is_finite()) {
        return Err(Error::domain("transmission_square_barrier", format!("p = {p}")));
    }
    let hbar = consts.hbar;
    let l = spec.width();
    if spec.v0 == 0.0 || l == 0.0 {
        return Ok((Complex::new(1.0, 0.0), Complex::new(0.0, 0.0)));
    }
    if p.norm() == 0.0 {
        return Err(Error::Pole {
            op: "transmission_square_barrier",
            at: "p = 0".into(),
        });
    }
    let i = Complex::i();
    let k2 = p * p - 2.0 * consts.mass * spec.v0;
    let k = k2.sqrt();
    let kl = k * l / hbar;
    let sc = sinc(kl) * (l / hbar);
    let den = kl.cos() - i * (p * p + k2) / (2.0 * p) * sc;
    pole_guard("transmission_square_barrier", p, den)?;
    let t = (-i * p * l / hbar).exp() / den;
    let r0 = t * (i * p * l / hbar).exp() * i * (k2 - p * p) / (2.0 * p) * sc;
    let r = r0 * (2.0 * i * p * spec.c / hbar).exp();
    Ok((t, r))
}

/// Transmission amplitude of the barrier; see [`barrier_amplitudes`].
pub fn transmission_square_barrier(
    p: Complex,
    spec: &BarrierSpec,
    consts: &PhysicalConstants,
) -> Result<Complex> {
    barrier_amplitudes(p, spec, consts).map(|(t, _)| t)
}

/// `psi' = exp(i V0 t / hbar) psi`: energies measured from the upper level.
pub fn relevel_to_upper(psi: Complex, t: f64, spec: &StepSpec, consts: &PhysicalConstants) -> Complex {
    psi * Complex::from_polar(1.0, spec.v0 * t / consts.hbar)
}

/// [`relevel_to_upper`] applied to every sample.
pub fn relevel_signal(signal: &Signal, spec: &StepSpec, consts: &PhysicalConstants) -> Signal {
    signal.map(|t, v| relevel_to_upper(v, t, spec, consts))
}

fn analytic_only(amp: &MomentumAmplitude, op: &str) -> Result<()> {
    match amp {
        MomentumAmplitude::Analytic { .. } => Ok(()),
        MomentumAmplitude::Sampled { .. } => Err(Error::NotSupported(format!(
            "{op} needs the closed-form amplitude"
        ))),
    }
}

/// `(m/p) T(p) psi~(p)` with `p = [2m(E' + V0)]^{1/2}` on the `p_+` branch.
pub fn step_relation_rhs(
    amp: &MomentumAmplitude,
    e_prime: f64,
    spec: &StepSpec,
    consts: &PhysicalConstants,
) -> Result<Complex> {
    step_relation_rhs_complex(amp, Complex::new(e_prime, 0.0), spec, consts)
}

/// [`step_relation_rhs`] at complex `E'`.
pub fn step_relation_rhs_complex(
    amp: &MomentumAmplitude,
    e_prime: Complex,
    spec: &StepSpec,
    consts: &PhysicalConstants,
) -> Result<Complex> {
    analytic_only(amp, "step_relation_rhs")?;
    let e = e_prime + spec.v0;
    if e == Complex::new(0.0, 0.0) {
        return Err(Error::branch("step_relation_rhs", "E' = -V0 is a branch point"));
    }
    let p = p_plus(e, consts.mass)?;
    Ok(consts.mass / p * transmission_step(p, spec, consts)? * amp.eval(p)?)
}

/// Barrier analogue: `(m/p) T(p) psi~(p)` with `p = (2mE)^{1/2}`.
/// Attractive wells are rejected, since their bound-state poles are not handled.
pub fn barrier_relation_rhs(
    amp: &MomentumAmplitude,
    e: f64,
    spec: &BarrierSpec,
    consts: &PhysicalConstants,
) -> Result<Complex> {
    analytic_only(amp, "barrier_relation_rhs")?;
    if spec.v0 < 0.0 {
        return Err(Error::NotSupported(
            "attractive barriers carry bound-state poles".into(),
        ));
    }
    if e == 0.0 {
        return Err(Error::branch("barrier_relation_rhs", "E = 0 is a branch point"));
    }
    let p = p_plus(Complex::new(e, 0.0), consts.mass)?;
    Ok(consts.mass / p * transmission_square_barrier(p, spec, consts)? * amp.eval(p)?)
}

/// `int_0^inf dp |psi~(p)|^2`, the asymptotic norm beyond any detector
/// position `x_detector > 0` under free motion.
pub fn arrival_probability(amp: &MomentumAmplitude, x_detector: f64) -> Result<f64> {
    if !(x_detector.is_finite() && x_detector > 0.0) {
        return Err(Error::domain(
            "arrival_probability",
            format!("detector position {x_detector} must be > 0"),
        ));
    }
    match amp {
        MomentumAmplitude::Sampled { p, values, .. } => {
            let dp = p[1] - p[0];
            let s: f64 = p
                .iter()
                .zip(values)
                .map(|(pk, v)| {
                    let w = if *pk > 0.0 {
                        1.0
                    } else if *pk == 0.0 {
                        0.5
                    } else {
                        0.0
                    };
                    w * v.norm_sqr()
                })
                .sum();
            Ok(s * dp)
        }
        MomentumAmplitude::Analytic { state, consts } => {
            let (c, w) = state.momentum_scale(consts);
            let cut = c.abs() + 400.0 * w;
            let f = |p: f64| amp.eval(Complex::new(p, 0.0)).map(|v| v.norm_sqr());
            let panels = (cut / (w / 8.0)).ceil() as usize;
            let (ps, ws) = composite_gauss(0.0, cut, panels, 16);
            let mut s = 0.0;
            for (p, wt) in ps.iter().zip(&ws) {
                s += wt * f(*p)?;
            }
            // tail beyond the cutoff through p = cut / u
            let (us, uw) = composite_gauss(0.0, 1.0, 400, 16);
            for (u, wt) in us.iter().zip(&uw) {
                s += wt * f(cut / u)? * cut / (u * u);
            }
            Ok(s)
        }
    }
}

/// `int_X^inf |psi(x)|^2 dx` on the grid (half weight on a point exactly at `X`).
pub fn right_norm(field: &WaveField, x_detector: f64) -> f64 {
    let grid = field.grid;
    let dx = grid.dx();
    let mut s = 0.0;
    for (j, v) in field.values.iter().enumerate() {
        let x = grid.x(j);
        if (x - x_detector).abs() <= 1e-9 * dx {
            s += 0.5 * v.norm_sqr();
        } else if x > x_detector {
            s += v.norm_sqr();
        }
    }
    s * dx
}

/// `<E|psi_s> = chi_s(E) (2E/m)^{1/4}` at a grid energy of the spectrum.
pub fn energy_overlap(spectrum: &EnergySpectrum, e: f64, consts: &PhysicalConstants) -> Result<Complex> {
    if e == 0.0 {
        return Err(Error::branch("energy_overlap", "E = 0 is a branch point"));
    }
    undamped(spectrum, "energy_overlap")?;
    Ok(spectrum.value_at(e)? * energy_fourth_root(Complex::new(e, 0.0), consts.mass)?)
}

fn undamped(spectrum: &EnergySpectrum, op: &str) -> Result<()> {
    if spectrum.damping != 0.0 {
        return Err(Error::Configuration(format!(
            "{op} needs an undamped spectrum (damping = {})",
            spectrum.damping
        )));
    }
    Ok(())
}

/// `int |<E|psi_s>|^2 dE` over `E > 0` and over `E < 0`, by the rectangle rule
/// on the spectrum grid.
pub fn energy_overlap_weights(spectrum: &EnergySpectrum, consts: &PhysicalConstants) -> Result<(f64, f64)> {
    undamped(spectrum, "energy_overlap_weights")?;
    let (mut pos, mut neg) = (0.0, 0.0);
    for (&e, v) in spectrum.energies.iter().zip(&spectrum.values) {
        let w = v.norm_sqr() * (2.0 * e.abs() / consts.mass).sqrt();
        if e > 0.0 {
            pos += w;
        } else {
            neg += w;
        }
    }
    let de = spectrum.de();
    Ok((pos * de, neg * de))
}

/// `int |chi|^2 dE` over `E < 0` and over `E > 0`.
pub fn spectral_weights(spectrum: &EnergySpectrum) -> Result<(f64, f64)> {
    undamped(spectrum, "spectral_weights")?;
    let (mut neg, mut pos) = (0.0, 0.0);
    for (&e, v) in spectrum.energies.iter().zip(&spectrum.values) {
        if e < 0.0 {
            neg += v.norm_sqr();
        } else if e > 0.0 {
            pos += v.norm_sqr();
        } else {
            neg += 0.5 * v.norm_sqr();
            pos += 0.5 * v.norm_sqr();
        }
    }
    let de = spectrum.de();
    Ok((neg * de, pos * de))
}

/// Fraction of `int |chi|^2 dE` carried by `E < 0`.
pub fn negative_energy_fraction(spectrum: &EnergySpectrum) -> Result<f64> {
    let (neg, pos) = spectral_weights(spectrum)?;
    Ok(neg / (neg + pos))
}
