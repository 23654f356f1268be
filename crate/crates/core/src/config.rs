//! Evaluation precision and iteration-control settings.

use crate::error::{Error, Result};

/// Which series evaluates zeta(1/2 + it).
///
/// The alternating (Dirichlet eta) series with Borwein acceleration is the
/// default: its truncation error is bounded a priori for every finite t, at
/// O(t) terms per evaluation. The Riemann-Siegel sum costs O(sqrt(t)) but is
/// an asymptotic expansion whose accuracy floor is ~(t/2pi)^(-11/4) with the
/// five correction terms implemented here; it is kept as an independent
/// cross-check route and for callers that want cheap evaluations high up.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ZetaBackend {
    #[default]
    AlternatingSeries,
    RiemannSiegelSum,
}

impl ZetaBackend {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "alternating" | "as" | "alternating-series" => Ok(Self::AlternatingSeries),
            "riemann-siegel" | "rs" | "riemann-siegel-sum" => Ok(Self::RiemannSiegelSum),
            other => Err(Error::Config {
                msg: format!("unknown zeta backend '{other}'"),
            }),
        }
    }
}

/// Working precision, tolerances and iteration limits.
///
/// All arithmetic is IEEE f64, which caps the effective working precision at
/// ~15.9 significant digits; `working_digits` above 15 only tightens series
/// truncation targets that are already at the f64 floor.
#[derive(Debug, Clone, PartialEq)]
pub struct PrecisionConfig {
    /// Requested significant digits for series truncation (clamped to 1..=15).
    pub working_digits: u32,
    /// Stop threshold on the unrelaxed step |tanh(Z/(Omega*Pi))| of the iteration.
    pub tol_fixed_point: f64,
    /// Residual threshold for |Z(y)| at an accepted zero and for argument checks.
    pub tol_residual: f64,
    /// Iteration backstop.
    pub max_iterations: u32,
    /// zeta(1/2+it) evaluation route.
    pub zeta_backend: ZetaBackend,
    /// Relative central-difference step for numeric derivatives.
    pub derivative_step: f64,
}

impl Default for PrecisionConfig {
    fn default() -> Self {
        Self {
            working_digits: 15,
            tol_fixed_point: 1e-12,
            tol_residual: 1e-9,
            max_iterations: 10_000,
            zeta_backend: ZetaBackend::default(),
            derivative_step: 1e-6,
        }
    }
}

impl PrecisionConfig {
    pub fn validate(&self) -> Result<()> {
        if self.working_digits == 0 {
            return Err(Error::Config {
                msg: "working_digits must be positive".into(),
            });
        }
        if !(self.tol_fixed_point > 0.0) {
            return Err(Error::Config {
                msg: format!("tol_fixed_point must be positive, got {}", self.tol_fixed_point),
            });
        }
        if !(self.tol_residual > 0.0) {
            return Err(Error::Config {
                msg: format!("tol_residual must be positive, got {}", self.tol_residual),
            });
        }
        if self.max_iterations < 1 {
            return Err(Error::Config {
                msg: "max_iterations must be >= 1".into(),
            });
        }
        if !(self.derivative_step > 0.0) {
            return Err(Error::Config {
                msg: format!("derivative_step must be positive, got {}", self.derivative_step),
            });
        }
        Ok(())
    }

    /// Series truncation target derived from `working_digits`, floored at
    /// what f64 can deliver.
    pub fn series_epsilon(&self) -> f64 {
        let d = self.working_digits.clamp(1, 15);
        10f64.powi(-(d as i32))
    }

    /// Absolute central-difference step at height t.
    pub fn derivative_step_at(&self, t: f64) -> f64 {
        self.derivative_step * t.abs().max(1.0)
    }
}
