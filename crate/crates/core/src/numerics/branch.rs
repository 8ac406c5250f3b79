//! Square and fourth roots on the branches used throughout the crate.
//!
//! `p_plus` and `energy_fourth_root` put the cut on the negative imaginary
//! energy axis, so negative real energies map to the positive imaginary
//! momentum axis. `q_of_p` is the upper-level momentum of a step of height
//! `p0^2 / 2m`, with the cut joining `-p0` and `p0` just below the real axis.

use num_complex::Complex64;

use crate::error::{Error, Result};

fn check_finite(op: &'static str, z: Complex64) -> Result<()> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(op, format!("non-finite argument {z}")))
    }
}

/// `sqrt(z)` with the cut along the negative imaginary axis.
/// Real arguments take exact paths; `z = -i y`, `y > 0`, is rejected.
fn sqrt_cut_down(op: &'static str, z: Complex64) -> Result<Complex64> {
    check_finite(op, z)?;
    if z.im == 0.0 {
        return Ok(if z.re >= 0.0 {
            Complex64::new(z.re.sqrt(), 0.0)
        } else {
            Complex64::new(0.0, (-z.re).sqrt())
        });
    }
    if z.re == 0.0 && z.im < 0.0 {
        return Err(Error::branch(op, format!("argument {z} lies on the cut")));
    }
    let s = z.sqrt();
    Ok(if z.re < 0.0 && z.im < 0.0 { -s } else { s })
}

/// Momentum `(2 m E)^{1/2}` on the branch continuous across the positive real
/// energy axis; `+i (2 m |E|)^{1/2}` for negative real `E`.
pub fn p_plus(e: Complex64, m: f64) -> Result<Complex64> {
    sqrt_cut_down("p_plus", 2.0 * m * e)
}

/// Real-energy shortcut for [`p_plus`].
pub fn p_plus_real(e: f64, m: f64) -> Complex64 {
    if e >= 0.0 {
        Complex64::new((2.0 * m * e).sqrt(), 0.0)
    } else {
        Complex64::new(0.0, (-2.0 * m * e).sqrt())
    }
}

/// `(2E/m)^{1/4}` with the same cut as [`p_plus`]; phase `pi/4` for `E < 0`.
pub fn energy_fourth_root(e: Complex64, m: f64) -> Result<Complex64> {
    let s = sqrt_cut_down("energy_fourth_root", 2.0 * e / m)?;
    if s.im == 0.0 {
        return Ok(Complex64::new(s.re.sqrt(), 0.0));
    }
    Ok(s.sqrt())
}

/// Upper-level momentum `q` with `q^2 = p^2 - p0^2`.
///
/// Real `p` uses the piecewise table: `-(p^2-p0^2)^{1/2}` below `-p0`,
/// `i (p0^2-p^2)^{1/2}` between the branch points and `+(p^2-p0^2)^{1/2}`
/// above `p0`. Off the axis `q = p (1 - p0^2/p^2)^{1/2}`, which is analytic
/// outside the segment `[-p0, p0]` and meets the table from above.
pub fn q_of_p(p: Complex64, p0: f64) -> Result<Complex64> {
    check_finite("q_of_p", p)?;
    if !(p0.is_finite() && p0 >= 0.0) {
        return Err(Error::domain("q_of_p", format!("p0 = {p0} must be finite and >= 0")));
    }
    if p.im == 0.0 {
        let x = p.re;
        return Ok(if x.abs() < p0 {
            Complex64::new(0.0, ((p0 - x) * (p0 + x)).sqrt())
        } else {
            let r = ((x - p0) * (x + p0)).sqrt();
            Complex64::new(r.copysign(x), 0.0)
        });
    }
    let ratio = Complex64::new(p0 * p0, 0.0) / (p * p);
    Ok(p * (1.0 - ratio).sqrt())
}
