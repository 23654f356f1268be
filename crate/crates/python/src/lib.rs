//! Python bindings: special functions, the zero iteration, and the
//! transcendental-equation checks.

use pyo3::exceptions::{PyIOError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyComplex;

use zetafix::config::{PrecisionConfig, ZetaBackend};
use zetafix::dynamics;
use zetafix::error::Error;
use zetafix::reference;
use zetafix::special;
use zetafix::transcendental;

fn to_py_err(e: Error) -> PyErr {
    match e {
        Error::Io(_) | Error::Parse { .. } | Error::StoreParse { .. } => {
            PyIOError::new_err(e.to_string())
        }
        other => PyValueError::new_err(other.to_string()),
    }
}

fn make_cfg(backend: Option<&str>, digits: Option<u32>) -> PyResult<PrecisionConfig> {
    let mut cfg = PrecisionConfig::default();
    if let Some(b) = backend {
        cfg.zeta_backend = ZetaBackend::parse(b).map_err(to_py_err)?;
    }
    if let Some(d) = digits {
        cfg.working_digits = d;
    }
    cfg.validate().map_err(to_py_err)?;
    Ok(cfg)
}

/// One computed zero.
#[pyclass(frozen, get_all)]
struct Zero {
    n: u32,
    y: f64,
    iterations: u32,
    final_h: f64,
    z_residual: f64,
    multiplier: f64,
    classification: String,
    bracket: (f64, f64),
    bracket_ok: bool,
}

impl From<&dynamics::ZeroRecord> for Zero {
    fn from(r: &dynamics::ZeroRecord) -> Self {
        Zero {
            n: r.n,
            y: r.y,
            iterations: r.iterations,
            final_h: r.final_h,
            z_residual: r.z_residual,
            multiplier: r.multiplier,
            classification: r.classification.to_string(),
            bracket: r.exact_eq_bracket,
            bracket_ok: r.bracket_ok(),
        }
    }
}

#[pymethods]
impl Zero {
    fn __repr__(&self) -> String {
        format!(
            "Zero(n={}, y={}, iterations={}, class='{}')",
            self.n, self.y, self.iterations, self.classification
        )
    }
}

/// Hardy Z(t) = e^{i theta(t)} zeta(1/2 + it).
#[pyfunction]
#[pyo3(signature = (t, backend=None, digits=None))]
fn hardy_z(t: f64, backend: Option<&str>, digits: Option<u32>) -> PyResult<f64> {
    special::hardy_z(t, &make_cfg(backend, digits)?).map_err(to_py_err)
}

/// zeta(1/2 + it) as a complex number.
#[pyfunction]
#[pyo3(signature = (t, backend=None, digits=None))]
fn zeta<'py>(
    py: Python<'py>,
    t: f64,
    backend: Option<&str>,
    digits: Option<u32>,
) -> PyResult<Bound<'py, PyComplex>> {
    let z = special::zeta_critical(t, &make_cfg(backend, digits)?).map_err(to_py_err)?;
    Ok(PyComplex::from_doubles(py, z.re, z.im))
}

/// Riemann-Siegel theta.
#[pyfunction]
fn theta(t: f64) -> PyResult<f64> {
    special::theta_exact(t).map_err(to_py_err)
}

/// Stirling form of theta: (t/2) ln(t/(2 pi e)) - pi/8.
#[pyfunction]
fn theta_asymptotic(t: f64) -> PyResult<f64> {
    special::theta_asymptotic(t).map_err(to_py_err)
}

/// Normalized argument S(t) = arg zeta(1/2+it) / pi.
#[pyfunction]
#[pyo3(signature = (t, backend=None))]
fn s_arg(t: f64, backend: Option<&str>) -> PyResult<f64> {
    special::s_arg(t, &make_cfg(backend, None)?).map_err(to_py_err)
}

/// The step normalizer Omega(t).
#[pyfunction]
fn omega(t: f64) -> PyResult<f64> {
    special::omega_bound(t).map_err(to_py_err)
}

/// Counting function N0(t); its rounding counts the zeros below t.
#[pyfunction]
fn count_zeros(t: f64) -> PyResult<f64> {
    transcendental::count_zeros_n0(t, &PrecisionConfig::default()).map_err(to_py_err)
}

/// The shifted-index value n(t).
#[pyfunction]
fn n_shift(t: f64) -> PyResult<f64> {
    transcendental::n_shift_check(t, &PrecisionConfig::default()).map_err(to_py_err)
}

/// Smooth-equation seed for the n-th zero.
#[pyfunction]
fn asymptotic_zero(n: u32) -> PyResult<f64> {
    transcendental::asymptotic_solve(n, &PrecisionConfig::default()).map_err(to_py_err)
}

/// Exact-equation bracket around a zero: (lower, target, upper, ok).
#[pyfunction]
#[pyo3(signature = (n, y, epsilon=1e-4))]
fn exact_bracket(n: u32, y: f64, epsilon: f64) -> PyResult<(f64, f64, f64, bool)> {
    let b = transcendental::exact_eq_bracket_values(n, y, epsilon, &PrecisionConfig::default())
        .map_err(to_py_err)?;
    Ok((b.lower, b.target, b.upper, b.contains_target()))
}

/// Compute zeros 1..=n_end sequentially; `known` resumes a previous run.
#[pyfunction]
#[pyo3(signature = (n_end, known=Vec::new(), backend=None, digits=None))]
fn find_zeros(
    n_end: u32,
    known: Vec<f64>,
    backend: Option<&str>,
    digits: Option<u32>,
) -> PyResult<Vec<Zero>> {
    let cfg = make_cfg(backend, digits)?;
    let mut ys = known;
    let mut out = Vec::new();
    for n in (ys.len() as u32 + 1)..=n_end {
        let rec = dynamics::find_zero(n, &ys, &cfg).map_err(to_py_err)?;
        ys.push(rec.y);
        out.push(Zero::from(&rec));
    }
    Ok(out)
}

/// Multiplier of the one-step map for zero index n at t: (lambda, class).
#[pyfunction]
fn classify(n: u32, t: f64, known: Vec<f64>) -> PyResult<(f64, String)> {
    let fp = dynamics::classify_fixed_point(n, t, &known, &PrecisionConfig::default())
        .map_err(to_py_err)?;
    Ok((fp.lambda, fp.class.to_string()))
}

/// Newton-map multiplier Z Z'' / Z'^2 at t.
#[pyfunction]
fn newton_multiplier(t: f64) -> PyResult<f64> {
    dynamics::newton_multiplier(t, &PrecisionConfig::default()).map_err(to_py_err)
}

/// Root multiplicity 1/(1 - lambda_N) at t.
#[pyfunction]
fn multiplicity(t: f64) -> PyResult<f64> {
    dynamics::multiplicity(t, &PrecisionConfig::default()).map_err(to_py_err)
}

/// Lipschitz probe c_n(epsilon): returns (a, b, c).
#[pyfunction]
fn lipschitz(n: u32, epsilon: f64, known: Vec<f64>) -> PyResult<(f64, f64, f64)> {
    let est = dynamics::lipschitz_estimate(n, epsilon, &known, &PrecisionConfig::default())
        .map_err(to_py_err)?;
    Ok((est.a, est.b, est.c))
}

/// Run both step orientations from t; failed branches come back as None.
#[pyfunction]
fn bidirectional(n: u32, t: f64, known: Vec<f64>) -> PyResult<(Option<f64>, Option<f64>)> {
    let lims = dynamics::bidirectional_limits(n, t, &known, &PrecisionConfig::default())
        .map_err(to_py_err)?;
    Ok((lims.plus.ok(), lims.minus.ok()))
}

/// Parse a plain-text zero table (one ascending ordinate per line,
/// '#' comments, optional index column).
#[pyfunction]
fn parse_reference(text: &str) -> PyResult<Vec<f64>> {
    reference::parse_reference_table(text)
        .map(|t| t.zeros)
        .map_err(to_py_err)
}

#[pymodule]
fn _zetafix(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Zero>()?;
    m.add_function(wrap_pyfunction!(hardy_z, m)?)?;
    m.add_function(wrap_pyfunction!(zeta, m)?)?;
    m.add_function(wrap_pyfunction!(theta, m)?)?;
    m.add_function(wrap_pyfunction!(theta_asymptotic, m)?)?;
    m.add_function(wrap_pyfunction!(s_arg, m)?)?;
    m.add_function(wrap_pyfunction!(omega, m)?)?;
    m.add_function(wrap_pyfunction!(count_zeros, m)?)?;
    m.add_function(wrap_pyfunction!(n_shift, m)?)?;
    m.add_function(wrap_pyfunction!(asymptotic_zero, m)?)?;
    m.add_function(wrap_pyfunction!(exact_bracket, m)?)?;
    m.add_function(wrap_pyfunction!(find_zeros, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(newton_multiplier, m)?)?;
    m.add_function(wrap_pyfunction!(multiplicity, m)?)?;
    m.add_function(wrap_pyfunction!(lipschitz, m)?)?;
    m.add_function(wrap_pyfunction!(bidirectional, m)?)?;
    m.add_function(wrap_pyfunction!(parse_reference, m)?)?;
    Ok(())
}
