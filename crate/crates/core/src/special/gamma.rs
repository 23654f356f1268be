//! Principal-branch complex log-gamma.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// ln(2*pi)/2
const HALF_LN_TWO_PI: f64 = 0.918_938_533_204_672_7;

/// B_{2k} / (2k * (2k-1)) for k = 1..=10, the Stirling-series tail.
const STIRLING: [f64; 10] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
    43_867.0 / 244_188.0,
    -174_611.0 / 125_400.0,
];

/// Real part below which the argument is shifted up by the recurrence before
/// applying the Stirling series. At Re >= 10 the ten-term tail is accurate to
/// well under 1e-16 relative.
const SHIFT_THRESHOLD: f64 = 10.0;

/// Log of the gamma function, principal branch, continuous off the negative
/// real axis. On the cut the value is the limit from the upper half-plane.
///
/// For Im z >= 0 this is Stirling's series after shifting Re z up with
/// lnGamma(z) = lnGamma(z+1) - Log(z); both identities hold for the principal
/// branch on the closed upper half-plane (with Log(x<0) = ln|x| + i*pi, the
/// from-above limit). Im z < 0 goes through conjugation symmetry.
pub fn ln_gamma(z: Complex64) -> Result<Complex64> {
    if z.im == 0.0 && z.re <= 0.0 && z.re.fract() == 0.0 {
        return Err(Error::GammaPole { re: z.re });
    }
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::Domain {
            what: "ln_gamma",
            t: if z.re.is_finite() { z.im } else { z.re },
        });
    }
    if z.im < 0.0 {
        return ln_gamma(z.conj()).map(|w| w.conj());
    }
    // Force +0.0 so that Log on the negative reals lands on the upper side.
    let z = Complex64::new(z.re, if z.im == 0.0 { 0.0 } else { z.im });

    let shift = if z.re < SHIFT_THRESHOLD {
        (SHIFT_THRESHOLD - z.re).ceil() as u32
    } else {
        0
    };
    let zs = z + shift as f64;

    let inv = zs.finv();
    let inv2 = inv * inv;
    let mut tail = Complex64::new(0.0, 0.0);
    let mut power = inv;
    for c in STIRLING {
        tail += power * c;
        power *= inv2;
    }
    let mut w = (zs - 0.5) * zs.ln() - zs + HALF_LN_TWO_PI + tail;
    for j in 0..shift {
        let base = Complex64::new(z.re + j as f64, z.im);
        w -= base.ln();
    }
    Ok(w)
}
