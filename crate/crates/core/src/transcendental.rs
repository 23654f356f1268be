//! The exact and asymptotic transcendental equations satisfied at the zeros,
//! and the zero-counting function built from them.

use std::f64::consts::PI;

use crate::config::PrecisionConfig;
use crate::error::{Error, Result};
use crate::special::{s_arg, theta_asymptotic, theta_exact};

/// Two-sided evaluation of F(t) = theta(t) + pi S(t) around a zero.
///
/// S jumps by +1 across a simple zero, so F steps from (n-2) pi to (n-1) pi
/// and the target (n - 3/2) pi sits mid-jump. With the principal-branch S
/// this identity holds while |S| < 1, i.e. up to t ~ 279 (zero #126); above
/// that occasional wraps shift one side by 2 pi.
#[derive(Debug, Clone, Copy)]
pub struct ExactEqBracket {
    pub n: u32,
    pub lower: f64,
    pub upper: f64,
    pub target: f64,
    pub epsilon: f64,
}

impl ExactEqBracket {
    pub fn contains_target(&self) -> bool {
        self.lower <= self.target && self.target <= self.upper
    }
}

/// Evaluate F(y +/- eps) without judging the outcome.
pub fn exact_eq_bracket_values(
    n: u32,
    y: f64,
    epsilon: f64,
    cfg: &PrecisionConfig,
) -> Result<ExactEqBracket> {
    if !(epsilon > 0.0) {
        return Err(Error::Config {
            msg: format!("bracket epsilon must be positive, got {epsilon}"),
        });
    }
    let f = |t: f64| -> Result<f64> { Ok(theta_exact(t)? + PI * s_arg(t, cfg)?) };
    Ok(ExactEqBracket {
        n,
        lower: f(y - epsilon)?,
        upper: f(y + epsilon)?,
        target: (n as f64 - 1.5) * PI,
        epsilon,
    })
}

/// Check that (n - 3/2) pi lies inside [F(y-eps), F(y+eps)]; a violation
/// signals a misindexed zero.
pub fn exact_residual_bracket(
    n: u32,
    y: f64,
    epsilon: f64,
    cfg: &PrecisionConfig,
) -> Result<ExactEqBracket> {
    let bracket = exact_eq_bracket_values(n, y, epsilon, cfg)?;
    if !bracket.contains_target() {
        return Err(Error::BracketViolation {
            n,
            lower: bracket.lower,
            upper: bracket.upper,
            target: bracket.target,
        });
    }
    Ok(bracket)
}

/// Smooth part of the counting function, (t/2pi) ln(t/(2 pi e)).
fn smooth_count(t: f64) -> f64 {
    t / (2.0 * PI) * (t / (2.0 * PI * std::f64::consts::E)).ln()
}

/// Solve (t/2pi) ln(t/(2 pi e)) = n - 11/8 by bisection. The left side is
/// strictly increasing on (2 pi, inf) from -1, so every n >= 1 has a unique
/// root. The oscillating S term of the full equation is dropped; the smooth
/// seed lands within O(1) of y_n.
pub fn asymptotic_solve(n: u32, _cfg: &PrecisionConfig) -> Result<f64> {
    if n == 0 {
        return Err(Error::Config {
            msg: "zero index must be positive".into(),
        });
    }
    let target = n as f64 - 11.0 / 8.0;
    let mut lo = 2.0 * PI * (1.0 + 1e-12);
    let mut hi = 20.0;
    while smooth_count(hi) < target {
        hi *= 2.0;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if smooth_count(mid) < target {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo < 1e-12 * hi.max(1.0) {
            break;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// N0(t) = (t/2pi) ln(t/(2 pi e)) + 7/8 + S(t); rounds to the number of
/// zeros below t (exactly, at heights where |S| < 1).
pub fn count_zeros_n0(t: f64, cfg: &PrecisionConfig) -> Result<f64> {
    if !(t > 2.0 * PI) {
        return Err(Error::Domain {
            what: "count_zeros_n0",
            t,
        });
    }
    Ok(smooth_count(t) + 7.0 / 8.0 + s_arg(t, cfg)?)
}

/// The shifted index n(t) = theta_tilde(t)/pi + 1/8 - 5/8 + S(t) + 2.
///
/// Identically N0(t) + 1/2 up to the theta remainder, so between zeros the
/// value is (index of the next zero above t) - 1/2 + O(1/t).
pub fn n_shift_check(t: f64, cfg: &PrecisionConfig) -> Result<f64> {
    let tt = theta_asymptotic(t)?;
    Ok(tt / PI + 0.125 - 0.625 + s_arg(t, cfg)? + 2.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Y1: f64 = 14.134_725_141_734_694;
    const Y2: f64 = 21.022_039_638_771_555;

    fn cfg() -> PrecisionConfig {
        PrecisionConfig::default()
    }

    #[test]
    fn bracket_holds_at_first_zeros() {
        let c = cfg();
        let eps = 1e-4 * (Y2 - Y1);
        let b = exact_residual_bracket(1, Y1, eps, &c).unwrap();
        // F steps from -pi to 0 across y_1; the target is -pi/2
        assert!((b.lower - (-PI)).abs() < 1e-6);
        assert!(b.upper.abs() < 1e-6);
        assert!((b.target - (-PI / 2.0)).abs() < 1e-12);
        let b = exact_residual_bracket(2, Y2, eps, &c).unwrap();
        assert!((b.target - PI / 2.0).abs() < 1e-12);
        assert!(b.contains_target());
    }

    #[test]
    fn wrong_pairing_violates_bracket() {
        let c = cfg();
        let eps = 1e-4 * (Y2 - Y1);
        assert!(matches!(
            exact_residual_bracket(1, Y2, eps, &c),
            Err(Error::BracketViolation { .. })
        ));
    }

    #[test]
    fn asymptotic_seeds() {
        let c = cfg();
        // bisection oracle values (mpmath, 30 digits)
        assert!((asymptotic_solve(1, &c).unwrap() - 14.521_346_953_065_628).abs() < 1e-9);
        let s2 = asymptotic_solve(2, &c).unwrap();
        assert!((s2 - 20.655_740_355_699_557).abs() < 1e-9);
        assert!((s2 - Y2).abs() < 1.0);
        // the n = 100 seed sits 0.537 from y_100 (the S(y_100) limit value
        // is -0.3165, over half the local spacing)
        let s100 = asymptotic_solve(100, &c).unwrap();
        assert!((s100 - 235.987_267_426_193_31).abs() < 1e-8);
        assert!((s100 - 236.524_229_665_816_2).abs() < 0.6);
    }

    #[test]
    fn counting_reference_heights() {
        let c = cfg();
        for (t, want) in [(20.0, 1.0_f64), (50.0, 10.0), (100.0, 29.0)] {
            let n0 = count_zeros_n0(t, &c).unwrap();
            assert_eq!(n0.round(), want, "N0({t}) = {n0}");
            assert!((n0 - want).abs() < 0.01, "N0({t}) = {n0}");
        }
    }

    #[test]
    fn counting_domain() {
        assert!(count_zeros_n0(6.0, &cfg()).is_err());
        // indeterminate right at a zero ordinate
        assert!(count_zeros_n0(Y1, &cfg()).is_err());
    }

    #[test]
    fn shifted_index_near_zeros() {
        let c = cfg();
        // frozen: 1.4995310341890027 and 2.4996846558294513 (mpmath)
        let v = n_shift_check(Y1 + 0.01, &c).unwrap();
        assert!((v - 1.499_531_034_189_002_7).abs() < 1e-9, "v = {v}");
        assert!((v - 2.0).abs() < 0.75); // next zero above is #2
        let v = n_shift_check(Y2 + 0.01, &c).unwrap();
        assert!((v - 2.499_684_655_829_451_3).abs() < 1e-9, "v = {v}");
        assert!((v - 3.0).abs() < 0.75);
    }

    #[test]
    fn shifted_index_consistent_with_n0() {
        let c = cfg();
        for t in [20.0, 30.0, 50.0, 77.0, 100.0] {
            let n0 = count_zeros_n0(t, &c).unwrap();
            let ns = n_shift_check(t, &c).unwrap();
            assert_eq!(n0.round(), (ns - 0.5).round(), "t = {t}");
        }
    }
}
