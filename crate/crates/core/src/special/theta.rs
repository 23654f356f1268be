//! Riemann-Siegel theta, exact and asymptotic.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::special::gamma::ln_gamma;

const LN_PI: f64 = 1.144_729_885_849_400_2;

/// theta(t) = -(i/2) (lnGamma(1/4 + it/2) - lnGamma(1/4 - it/2)) - t ln(pi)/2.
///
/// The two log-gamma terms are conjugates for real t, so the difference is
/// 2i Im lnGamma(1/4 + it/2) and the result is real by construction.
pub fn theta_exact(t: f64) -> Result<f64> {
    if !t.is_finite() {
        return Err(Error::Domain { what: "theta_exact", t });
    }
    let w = ln_gamma(Complex64::new(0.25, t / 2.0))?;
    Ok(w.im - t * LN_PI / 2.0)
}

/// Stirling form: (t/2) ln(t/(2 pi e)) - pi/8, with an O(1/t) remainder
/// (the next correction is 1/(48 t)).
pub fn theta_asymptotic(t: f64) -> Result<f64> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::Domain {
            what: "theta_asymptotic",
            t,
        });
    }
    Ok(t / 2.0 * (t / (2.0 * PI * std::f64::consts::E)).ln() - PI / 8.0)
}
