//! Hardy Z, the normalized argument S, and numeric Z derivatives.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::config::{PrecisionConfig, ZetaBackend};
use crate::error::{Error, Result};
use crate::special::theta::theta_exact;
use crate::special::zeta::{hardy_z_riemann_siegel, zeta_alternating, zeta_critical};

/// Z(t) = e^{i theta(t)} zeta(1/2 + it), real for real t.
///
/// The alternating-series route rotates the complex zeta value and checks
/// that the imaginary part actually cancels to within `tol_residual` before
/// discarding it; the Riemann-Siegel route produces the real value directly.
pub fn hardy_z(t: f64, cfg: &PrecisionConfig) -> Result<f64> {
    match cfg.zeta_backend {
        ZetaBackend::AlternatingSeries => {
            let z = zeta_alternating(t, cfg)?;
            let theta = theta_exact(t)?;
            let w = Complex64::from_polar(1.0, theta) * z;
            if w.im.abs() >= cfg.tol_residual {
                return Err(Error::ConjugateResidual { t, imag: w.im });
            }
            Ok(w.re)
        }
        ZetaBackend::RiemannSiegelSum => hardy_z_riemann_siegel(t),
    }
}

/// S(t) = arg zeta(1/2 + it) / pi, principal branch.
///
/// An exactly-real negative zeta value is taken from above (S = 1, not -1),
/// matching the branch convention of ln_gamma. Indeterminate within
/// `tol_residual` of a zero of zeta.
pub fn s_arg(t: f64, cfg: &PrecisionConfig) -> Result<f64> {
    let z = zeta_critical(t, cfg)?;
    let modulus = z.norm();
    if modulus < cfg.tol_residual {
        return Err(Error::IndeterminateAtZero { t, modulus });
    }
    let im = if z.im == 0.0 { 0.0 } else { z.im };
    Ok(im.atan2(z.re) / PI)
}

/// Central-difference derivative of Z of order 1 or 2, with the absolute
/// step `cfg.derivative_step * max(1, |t|)`.
pub fn z_derivative(t: f64, order: u32, cfg: &PrecisionConfig) -> Result<f64> {
    let h = cfg.derivative_step_at(t);
    match order {
        1 => {
            let hi = hardy_z(t + h, cfg)?;
            let lo = hardy_z(t - h, cfg)?;
            Ok((hi - lo) / (2.0 * h))
        }
        2 => {
            let hi = hardy_z(t + h, cfg)?;
            let mid = hardy_z(t, cfg)?;
            let lo = hardy_z(t - h, cfg)?;
            Ok((hi - 2.0 * mid + lo) / (h * h))
        }
        other => Err(Error::Config {
            msg: format!("z_derivative order must be 1 or 2, got {other}"),
        }),
    }
}
