//! The Omega normalizer: a slowly growing lower bound on the running maximum
//! of |Z|, used to scale the iteration step.

use std::f64::consts::E;

use crate::error::{Error, Result};

/// Omega(t) = exp((3/4) sqrt(log t / log log t)) for t > e, 1 at t = e, and
/// clamped to 1 for 0 < t < e where the formula is undefined
/// (log log t <= 0). Logarithms are natural.
///
/// The formula diverges as t -> e+ and has its minimum 3.4437 at t = e^e;
/// it is monotone increasing only from e^e on. All iteration activity
/// happens above the first zero at 14.13, where Omega is in [3.44, 4.2]
/// across the first thousand zeros.
pub fn omega_bound(t: f64) -> Result<f64> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::Domain { what: "omega_bound", t });
    }
    if t <= E {
        return Ok(1.0);
    }
    Ok((0.75 * (t.ln() / t.ln().ln()).sqrt()).exp())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_at_e_and_below() {
        assert_eq!(omega_bound(E).unwrap(), 1.0);
        assert_eq!(omega_bound(2.0).unwrap(), 1.0);
        assert_eq!(omega_bound(0.5).unwrap(), 1.0);
    }

    #[test]
    fn minimum_at_e_to_the_e() {
        // log t = e, log log t = 1 there, so Omega = exp(0.75 sqrt(e))
        let v = omega_bound(E.exp()).unwrap();
        assert!((v - 3.443_680_984_862_881_8).abs() < 1e-13, "v = {v}");
    }

    #[test]
    fn reference_heights() {
        assert!((omega_bound(14.134_725_141_734_694).unwrap() - 3.444_410_979_446_421_7).abs() < 1e-9);
        assert!((omega_bound(100.0).unwrap() - 3.678_054_625_083_877_2).abs() < 1e-12);
        assert!((omega_bound(1419.4).unwrap() - 4.200_400_508_108_845_3).abs() < 1e-12);
    }

    #[test]
    fn at_least_one_everywhere() {
        for i in 1..2000 {
            let t = i as f64 * 0.75;
            assert!(omega_bound(t).unwrap() >= 1.0, "t = {t}");
        }
    }

    #[test]
    fn monotone_from_e_to_the_e() {
        // nondecreasing only holds from the minimum at e^e onward; below it
        // the formula decreases from its t -> e+ blowup
        let mut prev = omega_bound(E.exp()).unwrap();
        let mut t = E.exp();
        while t < 5000.0 {
            t += 0.5;
            let v = omega_bound(t).unwrap();
            assert!(v >= prev, "t = {t}");
            prev = v;
        }
        // and indeed it is not monotone on (e, e^e)
        assert!(omega_bound(3.0).unwrap() > omega_bound(10.0).unwrap());
    }

    #[test]
    fn domain_error_at_nonpositive() {
        assert!(omega_bound(0.0).is_err());
        assert!(omega_bound(-1.0).is_err());
    }
}
