//! The iterated map Y_n(t) = t + h (-1)^n tanh(Z(t) / (Omega(t) Pi_k tanh(t - y_k)))
//! run to its fixed points, plus fixed-point classification, Newton-map
//! multipliers, multiplicity, the Lipschitz-constant probe and the
//! bidirectional variants.

use std::f64::consts::E;

use crate::config::PrecisionConfig;
use crate::error::{Error, Result};
use crate::special::{hardy_z, omega_bound, z_derivative};
use crate::transcendental::exact_eq_bracket_values;

/// Beyond this distance a tanh factor is +/-1 to full f64 precision.
const TANH_SATURATION: f64 = 19.0;

/// Stability classes by multiplier magnitude.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StabilityClass {
    Attractive,
    Repelling,
    Indifferent,
    Superattractive,
}

impl std::fmt::Display for StabilityClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Self::Attractive => "attractive",
            Self::Repelling => "repelling",
            Self::Indifferent => "indifferent",
            Self::Superattractive => "superattractive",
        };
        f.write_str(s)
    }
}

/// A multiplier together with its classification.
#[derive(Debug, Clone, Copy)]
pub struct FixedPointClass {
    pub lambda: f64,
    pub class: StabilityClass,
}

/// Width of the |lambda| band around 0 and 1 used for the super-attractive
/// and indifferent classes. Numeric multipliers carry O(1e-6) differencing
/// noise, so the residual tolerance (1e-9) would be far too sharp here.
pub const CLASS_TOLERANCE: f64 = 1e-3;

impl FixedPointClass {
    pub fn from_lambda(lambda: f64) -> Self {
        let mag = lambda.abs();
        let class = if mag < CLASS_TOLERANCE {
            StabilityClass::Superattractive
        } else if (mag - 1.0).abs() < CLASS_TOLERANCE {
            StabilityClass::Indifferent
        } else if mag < 1.0 {
            StabilityClass::Attractive
        } else {
            StabilityClass::Repelling
        };
        Self { lambda, class }
    }
}

/// One converged zero with its run statistics and diagnostics.
#[derive(Debug, Clone)]
pub struct ZeroRecord {
    pub n: u32,
    pub y: f64,
    pub iterations: u32,
    pub final_h: f64,
    pub z_residual: f64,
    /// (F(y - eps), F(y + eps)) with F = theta + pi S; the target
    /// (n - 3/2) pi sits inside for a correctly indexed zero as long as the
    /// principal-branch S has not wrapped (|S| < 1, true below t ~ 279).
    pub exact_eq_bracket: (f64, f64),
    pub multiplier: f64,
    pub classification: StabilityClass,
}

impl ZeroRecord {
    /// Exact-equation target (n - 3/2) pi.
    pub fn bracket_target(&self) -> f64 {
        (self.n as f64 - 1.5) * std::f64::consts::PI
    }

    /// Whether the bracket straddles the target.
    pub fn bracket_ok(&self) -> bool {
        let t = self.bracket_target();
        self.exact_eq_bracket.0 <= t && t <= self.exact_eq_bracket.1
    }
}

/// Live state of one trajectory.
///
/// `delta_prev` is the most recent first difference Delta Y, `delta_prev2`
/// the one before; both are NaN until the corresponding step exists
/// (h stays 1 while m <= 2).
#[derive(Debug, Clone)]
pub struct IterationState<'a> {
    pub n: u32,
    pub m: u32,
    pub t_current: f64,
    pub h: f64,
    pub delta_prev: f64,
    pub delta_prev2: f64,
    pub known_zeros: &'a [f64],
}

impl<'a> IterationState<'a> {
    pub fn new(n: u32, t0: f64, known_zeros: &'a [f64]) -> Self {
        Self {
            n,
            m: 0,
            t_current: t0,
            h: 1.0,
            delta_prev: f64::NAN,
            delta_prev2: f64::NAN,
            known_zeros,
        }
    }
}

/// Product over k = 1..n-1 of tanh(t - y_k), with saturated factors folded
/// in as exact +/-1.
fn tanh_product(t: f64, known_zeros: &[f64]) -> f64 {
    let mut p = 1.0;
    for &y in known_zeros {
        let d = t - y;
        if d > TANH_SATURATION {
            continue; // factor is 1.0
        } else if d < -TANH_SATURATION {
            p = -p;
        } else {
            p *= d.tanh();
        }
    }
    p
}

/// The unrelaxed step magnitude tanh(Z / (Omega Pi)) at t, before the h and
/// cos(pi n) factors. An exact hit on a prior zero makes the ratio 0/0; the
/// denominator-first limit of the theory gives tanh(+/-inf) = +/-1, so NaN
/// resolves to 1.
fn raw_step(t: f64, known_zeros: &[f64], cfg: &PrecisionConfig) -> Result<f64> {
    let z = hardy_z(t, cfg)?;
    let denom = omega_bound(t)?.abs() * tanh_product(t, known_zeros);
    let arg = z / denom;
    if arg.is_nan() {
        Ok(1.0)
    } else {
        Ok(arg.tanh())
    }
}

/// cos(pi n), exactly (-1)^n for integer n.
fn cos_pi_n(n: u32) -> f64 {
    if n % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Relaxation update: halve h when the sign of the first difference flips
/// between the last two iterates; keep it otherwise. NaN differences (the
/// first two steps) never trigger a halving.
pub fn h_update(delta_prev2: f64, delta_prev: f64, h: f64) -> f64 {
    if delta_prev2.is_nan() || delta_prev.is_nan() {
        return h;
    }
    if delta_prev2 == 0.0 || delta_prev == 0.0 {
        return h;
    }
    if delta_prev2.signum() != delta_prev.signum() {
        h / 2.0
    } else {
        h
    }
}

/// Advance one trajectory step.
pub fn iterate_step<'a>(
    state: IterationState<'a>,
    cfg: &PrecisionConfig,
) -> Result<IterationState<'a>> {
    if !(state.t_current > E) {
        return Err(Error::LeftIterationDomain { t: state.t_current });
    }
    let zeros = &state.known_zeros[..state.known_zeros.len().min((state.n - 1) as usize)];
    let raw = raw_step(state.t_current, zeros, cfg)?;
    let h = h_update(state.delta_prev2, state.delta_prev, state.h);
    let step = h * cos_pi_n(state.n) * raw;
    Ok(IterationState {
        n: state.n,
        m: state.m + 1,
        t_current: state.t_current + step,
        h,
        delta_prev: step,
        delta_prev2: state.delta_prev,
        known_zeros: state.known_zeros,
    })
}

/// The prescribed starting point: 14 and 21 for the first two zeros, the
/// midpoint of the two preceding zeros after that.
pub fn starting_point(n: u32, known_zeros: &[f64]) -> Result<f64> {
    match n {
        0 => Err(Error::Config {
            msg: "zero index must be positive".into(),
        }),
        1 => Ok(14.0),
        2 => Ok(21.0),
        _ => {
            let need = (n - 1) as usize;
            if known_zeros.len() < need {
                return Err(Error::MissingPrerequisite {
                    n,
                    required: need,
                    available: known_zeros.len(),
                });
            }
            Ok(0.5 * (known_zeros[need - 1] + known_zeros[need - 2]))
        }
    }
}

/// Local mean zero spacing 2 pi / ln(t / 2 pi), used to scale scan steps.
fn mean_gap(t: f64) -> f64 {
    let r = t / (2.0 * std::f64::consts::PI);
    if r <= 1.2 {
        7.0
    } else {
        2.0 * std::f64::consts::PI / r.ln()
    }
}

struct RunOutcome {
    t: f64,
    iterations: u32,
    h: f64,
    residual: f64,
}

/// Drive one trajectory to |tanh step| < tol_fixed_point with the residual
/// gate |Z| < tol_residual. `direction` flips the step sign for the
/// bidirectional variants; `adaptive` disables the h halving when false.
fn run_trajectory(
    n: u32,
    t0: f64,
    known_zeros: &[f64],
    cfg: &PrecisionConfig,
    direction: f64,
    adaptive: bool,
) -> Result<RunOutcome> {
    let zeros = &known_zeros[..known_zeros.len().min((n - 1) as usize)];
    let mut t = t0;
    let mut h = 1.0f64;
    let mut delta_prev = f64::NAN;
    let mut delta_prev2 = f64::NAN;
    for m in 1..=cfg.max_iterations {
        if !(t > E) {
            return Err(Error::LeftIterationDomain { t });
        }
        let z = hardy_z(t, cfg)?;
        let denom = omega_bound(t)?.abs() * tanh_product(t, zeros);
        let arg = z / denom;
        let raw = if arg.is_nan() { 1.0 } else { arg.tanh() };
        if raw.abs() < cfg.tol_fixed_point && z.abs() < cfg.tol_residual {
            return Ok(RunOutcome {
                t,
                iterations: m - 1,
                h,
                residual: z.abs(),
            });
        }
        if adaptive {
            h = h_update(delta_prev2, delta_prev, h);
        }
        let step = h * cos_pi_n(n) * direction * raw;
        t += step;
        delta_prev2 = delta_prev;
        delta_prev = step;
    }
    Err(Error::NonConvergence {
        n,
        iterations: cfg.max_iterations,
        last_t: t,
    })
}

/// Options controlling `find_zero_with`; `find_zero` uses the defaults.
#[derive(Debug, Clone, Copy)]
pub struct FindOptions {
    /// Disable the sign-flip halving of h (the relaxation stays at 1).
    pub adaptive_h: bool,
    /// Skip the misconvergence scan (used by benchmarks and the h study).
    pub guard: bool,
}

impl Default for FindOptions {
    fn default() -> Self {
        Self {
            adaptive_h: true,
            guard: true,
        }
    }
}

/// Compute the n-th zero from the prescribed starting point.
pub fn find_zero(n: u32, known_zeros: &[f64], cfg: &PrecisionConfig) -> Result<ZeroRecord> {
    find_zero_with(n, known_zeros, cfg, FindOptions::default())
}

pub fn find_zero_with(
    n: u32,
    known_zeros: &[f64],
    cfg: &PrecisionConfig,
    opts: FindOptions,
) -> Result<ZeroRecord> {
    cfg.validate()?;
    let need = (n - 1) as usize;
    if known_zeros.len() < need {
        return Err(Error::MissingPrerequisite {
            n,
            required: need,
            available: known_zeros.len(),
        });
    }
    let prev = if n >= 2 { known_zeros[need - 1] } else { E };
    let s = starting_point(n, known_zeros)?;
    let out = run_trajectory(n, s, known_zeros, cfg, 1.0, opts.adaptive_h)?;
    let y = out.t;

    if !(y > prev) {
        return Err(Error::Misconvergence {
            n,
            y,
            reason: format!("converged at or below the previous zero {prev}"),
        });
    }
    if opts.guard {
        misconvergence_scan(n, y, prev, cfg)?;
    }

    let fp = classify_fixed_point(n, y, known_zeros, cfg)?;
    let eps = 1e-4 * (y - prev);
    let bracket = exact_eq_bracket_values(n, y, eps, cfg)?;
    Ok(ZeroRecord {
        n,
        y,
        iterations: out.iterations,
        final_h: out.h,
        z_residual: out.residual,
        exact_eq_bracket: (bracket.lower, bracket.upper),
        multiplier: fp.lambda,
        classification: fp.class,
    })
}

/// Reject a converged point that skipped over earlier sign changes of Z:
/// scan (prev, y) for a crossing; any hit means the trajectory jumped across
/// the repelling fixed point and landed on a later zero.
fn misconvergence_scan(n: u32, y: f64, prev: f64, cfg: &PrecisionConfig) -> Result<()> {
    // for n = 1 start just above 2 pi: both backends are valid there and
    // Z has no zeros below the first at 14.13
    let lo = if n == 1 { 6.5 } else { prev + 1e-4 * (y - prev) };
    let hi = y - 1e-4 * (y - prev).max(1e-3);
    if hi <= lo {
        return Ok(());
    }
    let step = (mean_gap(y) / 24.0).min((hi - lo) / 8.0);
    let mut t = lo;
    let mut sign_prev = hardy_z(t, cfg)?.signum();
    while t < hi {
        t = (t + step).min(hi);
        let sign = hardy_z(t, cfg)?.signum();
        if sign != sign_prev {
            return Err(Error::Misconvergence {
                n,
                y,
                reason: format!("Z changes sign at t ~ {t:.6}; an earlier zero was skipped"),
            });
        }
        sign_prev = sign;
    }
    Ok(())
}

/// Numeric multiplier of the one-step map u -> Y_{n,1}(u) at t, with the
/// relaxation frozen at h = 1, classified against 0 and 1.
pub fn classify_fixed_point(
    n: u32,
    t: f64,
    known_zeros: &[f64],
    cfg: &PrecisionConfig,
) -> Result<FixedPointClass> {
    if !(t > E) {
        return Err(Error::Domain {
            what: "classify_fixed_point",
            t,
        });
    }
    let zeros = &known_zeros[..known_zeros.len().min((n - 1) as usize)];
    let d = cfg.derivative_step_at(t);
    let y_hi = t + d + cos_pi_n(n) * raw_step(t + d, zeros, cfg)?;
    let y_lo = t - d + cos_pi_n(n) * raw_step(t - d, zeros, cfg)?;
    let lambda = (y_hi - y_lo) / (2.0 * d);
    Ok(FixedPointClass::from_lambda(lambda))
}

/// First derivative of the Newton map of Z: lambda_N(t) = Z Z'' / Z'^2.
pub fn newton_multiplier(t: f64, cfg: &PrecisionConfig) -> Result<f64> {
    let zd = z_derivative(t, 1, cfg)?;
    if zd.abs() < cfg.tol_residual {
        return Err(Error::DerivativeVanishes { t, deriv: zd });
    }
    let z = hardy_z(t, cfg)?;
    let zdd = z_derivative(t, 2, cfg)?;
    Ok(z * zdd / (zd * zd))
}

/// Root multiplicity 1 / (1 - lambda_N); 1 at every simple zero.
pub fn multiplicity(t: f64, cfg: &PrecisionConfig) -> Result<f64> {
    let lambda = newton_multiplier(t, cfg)?;
    if (1.0 - lambda).abs() < cfg.tol_residual {
        return Err(Error::MultiplicityIndeterminate { t, lambda });
    }
    Ok(1.0 / (1.0 - lambda))
}

/// The two endpoints of the Lipschitz probe and the quotient itself.
#[derive(Debug, Clone, Copy)]
pub struct LipschitzEstimate {
    /// max { t <= y_n : Y_{n+1,1}(t) >= t }
    pub a: f64,
    /// min { t >= y_n : Y_{n+1,1}(t) <= t }
    pub b: f64,
    pub c: f64,
}

/// Evaluate the conjectured Lipschitz quotient
/// c_n(eps) = (Z(a + eps) - Z(b - eps)) / (2 eps + a - b) with a and b found
/// by grid scan (1e-3 of the local gap) plus bisection refinement to 1e-9.
pub fn lipschitz_estimate(
    n: u32,
    epsilon: f64,
    known_zeros: &[f64],
    cfg: &PrecisionConfig,
) -> Result<LipschitzEstimate> {
    if !(epsilon > 0.0) {
        return Err(Error::Config {
            msg: format!("epsilon must be positive, got {epsilon}"),
        });
    }
    // the (n+1)-map needs y_1..y_n; the scan range needs y_{n+2}
    let need = (n + 2) as usize;
    if known_zeros.len() < need {
        return Err(Error::MissingPrerequisite {
            n,
            required: need,
            available: known_zeros.len(),
        });
    }
    let map_n = n + 1;
    let zeros = &known_zeros[..n as usize];
    let y_n = known_zeros[(n - 1) as usize];
    let y_prev = if n >= 2 { known_zeros[(n - 2) as usize] } else { E + 0.05 };
    let y_np2 = known_zeros[(n + 1) as usize];

    let g = |t: f64| -> Result<f64> { Ok(cos_pi_n(map_n) * raw_step(t, zeros, cfg)?) };

    // a: Y(t) - t >= 0 holds on all of (0, y_n); the qualifying set is
    // capped by the domain end, so scan for a late disqualifying point and
    // otherwise return y_n itself.
    let gap_a = y_n - y_prev;
    let step_a = 1e-3 * gap_a;
    let mut a = None;
    let mut last_qual: Option<f64> = None;
    let mut t = y_prev.max(E + 0.05);
    while t < y_n {
        let q = g(t)? >= 0.0;
        if q {
            last_qual = Some(t);
        } else if let Some(lq) = last_qual {
            // transition passed; refine and keep scanning for later ones
            a = Some(refine_transition(&g, lq, t, true)?);
            last_qual = None;
        }
        t += step_a;
    }
    let a = match (last_qual, a) {
        (Some(_), _) => y_n, // qualifying right up to the domain end
        (None, Some(a)) => a,
        (None, None) => return Err(Error::BracketNotFound { n }),
    };

    // b: first point at or above y_n with Y(t) <= t; the step function is
    // positive on (y_n, y_{n+1}) and negative beyond, so the transition sits
    // at y_{n+1}.
    let gap_b = known_zeros[n as usize] - y_n;
    let step_b = 1e-3 * gap_b;
    let mut b = None;
    let mut t = y_n + step_b;
    let mut prev_t = y_n + step_b * 0.5;
    while t <= y_np2 {
        if g(t)? <= 0.0 {
            b = Some(refine_transition(&g, prev_t, t, true)?);
            break;
        }
        prev_t = t;
        t += step_b;
    }
    let b = b.ok_or(Error::BracketNotFound { n })?;

    let c = (hardy_z(a + epsilon, cfg)? - hardy_z(b - epsilon, cfg)?) / (2.0 * epsilon + a - b);
    Ok(LipschitzEstimate { a, b, c })
}

/// Bisect a sign transition of g (>= 0 on the `qual_low` side) down to 1e-9.
fn refine_transition(
    g: &dyn Fn(f64) -> Result<f64>,
    mut lo: f64,
    mut hi: f64,
    qual_low: bool,
) -> Result<f64> {
    while hi - lo > 1e-9 {
        let mid = 0.5 * (lo + hi);
        let q = g(mid)? >= 0.0;
        if q == qual_low {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Limits of the +tanh and -tanh step variants from the same start.
#[derive(Debug)]
pub struct BidirectionalLimits {
    pub plus: Result<f64>,
    pub minus: Result<f64>,
}

impl BidirectionalLimits {
    /// min over the branches that converged; the paper's z_n.
    pub fn z_n(&self) -> Option<f64> {
        match (&self.plus, &self.minus) {
            (Ok(a), Ok(b)) => Some(a.min(*b)),
            (Ok(a), Err(_)) => Some(*a),
            (Err(_), Ok(b)) => Some(*b),
            (Err(_), Err(_)) => None,
        }
    }
}

/// Run both orientations of the map from t. A branch that walks out of the
/// t > e domain or exhausts max_iterations reports its own error; the other
/// branch is unaffected.
pub fn bidirectional_limits(
    n: u32,
    t: f64,
    known_zeros: &[f64],
    cfg: &PrecisionConfig,
) -> Result<BidirectionalLimits> {
    if !(t > E) {
        return Err(Error::Domain {
            what: "bidirectional_limits",
            t,
        });
    }
    let plus = run_trajectory(n, t, known_zeros, cfg, 1.0, true).map(|o| o.t);
    let minus = run_trajectory(n, t, known_zeros, cfg, -1.0, true).map(|o| o.t);
    Ok(BidirectionalLimits { plus, minus })
}
