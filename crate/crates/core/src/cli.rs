//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage, 2 convergence failure, 3 verification
//! failure, 4 I/O.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::config::{PrecisionConfig, ZetaBackend};
use crate::dynamics::{
    classify_fixed_point, find_zero_with, lipschitz_estimate, FindOptions, ZeroRecord,
};
use crate::error::{Error, Result};
use crate::reference::{
    append_store, compare, load_reference_table, load_store, report_to_csv, StoreRecord,
};
use crate::special::{hardy_z, omega_bound, s_arg, theta_asymptotic, theta_exact, zeta_critical};
use crate::transcendental::{count_zeros_n0, exact_eq_bracket_values, n_shift_check};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_CONVERGENCE: i32 = 2;
pub const EXIT_VERIFICATION: i32 = 3;
pub const EXIT_IO: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "zetafix",
    about = "Riemann zeta zeros via relaxed fixed-point iteration of the Hardy Z function",
    version
)]
struct App {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct PrecisionArgs {
    /// Working digits for series truncation (f64 caps effective digits at ~15)
    #[arg(long, env = "ZETAFIX_DIGITS", default_value_t = 15)]
    digits: u32,
    /// Stop threshold on the unrelaxed iteration step
    #[arg(long, default_value_t = 1e-12)]
    tol_fixed_point: f64,
    /// Residual threshold on |Z(y)| and argument checks
    #[arg(long, default_value_t = 1e-9)]
    tol_residual: f64,
    /// Iteration backstop
    #[arg(long, default_value_t = 10_000)]
    max_iterations: u32,
    /// zeta backend: "alternating" (default) or "riemann-siegel"
    #[arg(long, default_value = "alternating")]
    backend: String,
    /// Relative step for numeric derivatives
    #[arg(long, default_value_t = 1e-6)]
    derivative_step: f64,
}

impl PrecisionArgs {
    fn build(&self) -> Result<PrecisionConfig> {
        let cfg = PrecisionConfig {
            working_digits: self.digits,
            tol_fixed_point: self.tol_fixed_point,
            tol_residual: self.tol_residual,
            max_iterations: self.max_iterations,
            zeta_backend: ZetaBackend::parse(&self.backend)?,
            derivative_step: self.derivative_step,
        };
        cfg.validate()?;
        Ok(cfg)
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute zeros sequentially and append them to the store
    Zeros {
        #[arg(long, default_value_t = 1)]
        n_start: u32,
        #[arg(long)]
        n_end: u32,
        /// JSON-lines store file (appended; reruns resume from it)
        #[arg(long, default_value = "zeros.jsonl")]
        store: PathBuf,
        /// Freeze the relaxation at h = 1 (disables the sign-flip halving)
        #[arg(long)]
        fixed_h: bool,
        #[command(flatten)]
        precision: PrecisionArgs,
    },
    /// Compare the store against a reference table and emit a CSV report
    Verify {
        #[arg(long, default_value = "zeros.jsonl")]
        store: PathBuf,
        #[arg(long)]
        reference: PathBuf,
        /// Report CSV path ("-" for stdout)
        #[arg(long, default_value = "-")]
        output: String,
        #[command(flatten)]
        precision: PrecisionArgs,
    },
    /// Multipliers and stability classes of map n at zero y_j over a grid
    Classify {
        #[arg(long, default_value = "zeros.jsonl")]
        store: PathBuf,
        /// Map index range as A:B (inclusive)
        #[arg(long, default_value = "1:4")]
        n_range: String,
        /// Zero index range as A:B (inclusive)
        #[arg(long, default_value = "1:6")]
        j_range: String,
        #[arg(long, default_value = "csv")]
        format: String,
        #[command(flatten)]
        precision: PrecisionArgs,
    },
    /// Exact-equation brackets and |Z| residuals for stored zeros
    Residuals {
        #[arg(long, default_value = "zeros.jsonl")]
        store: PathBuf,
        #[arg(long, default_value = "csv")]
        format: String,
        #[command(flatten)]
        precision: PrecisionArgs,
    },
    /// Lipschitz-constant probe c_n(eps) for stored zeros
    Lipschitz {
        #[arg(long, default_value = "zeros.jsonl")]
        store: PathBuf,
        #[arg(long, default_value_t = 1)]
        n_start: u32,
        #[arg(long)]
        n_end: u32,
        #[arg(long, default_value_t = 1e-3)]
        epsilon: f64,
        #[command(flatten)]
        precision: PrecisionArgs,
    },
    /// Evaluate Z, theta, S, Omega, N0 at a point or over a grid
    Eval {
        /// Single evaluation height
        #[arg(long, conflicts_with = "grid")]
        t: Option<f64>,
        /// Grid as start:stop:step (emits one CSV row per point)
        #[arg(long)]
        grid: Option<String>,
        #[arg(long, default_value = "csv")]
        format: String,
        #[command(flatten)]
        precision: PrecisionArgs,
    },
}

/// Entry point used by main(); returns the process exit code.
pub fn run() -> i32 {
    let app = match App::try_parse() {
        Ok(app) => app,
        Err(e) => {
            // clap handles --help/--version as "errors" with success status
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(app.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::NonConvergence { .. }
        | Error::Misconvergence { .. }
        | Error::LeftIterationDomain { .. } => EXIT_CONVERGENCE,
        Error::BracketViolation { .. } => EXIT_VERIFICATION,
        Error::Io(_)
        | Error::Parse { .. }
        | Error::Ordering { .. }
        | Error::StoreParse { .. }
        | Error::InvalidStore { .. } => EXIT_IO,
        _ => EXIT_USAGE,
    }
}

fn parse_range(s: &str) -> Result<(u32, u32)> {
    let (a, b) = s.split_once(':').ok_or_else(|| Error::Config {
        msg: format!("range must be A:B, got '{s}'"),
    })?;
    let lo: u32 = a.trim().parse().map_err(|_| Error::Config {
        msg: format!("bad range start '{a}'"),
    })?;
    let hi: u32 = b.trim().parse().map_err(|_| Error::Config {
        msg: format!("bad range end '{b}'"),
    })?;
    if lo == 0 || hi < lo {
        return Err(Error::Config {
            msg: format!("range must satisfy 1 <= A <= B, got {lo}:{hi}"),
        });
    }
    Ok((lo, hi))
}

fn dispatch(cmd: Command) -> Result<i32> {
    match cmd {
        Command::Zeros {
            n_start,
            n_end,
            store,
            fixed_h,
            precision,
        } => cmd_zeros(n_start, n_end, &store, fixed_h, &precision.build()?),
        Command::Verify {
            store,
            reference,
            output,
            precision,
        } => cmd_verify(&store, &reference, &output, &precision.build()?),
        Command::Classify {
            store,
            n_range,
            j_range,
            format,
            precision,
        } => cmd_classify(&store, &n_range, &j_range, &format, &precision.build()?),
        Command::Residuals {
            store,
            format,
            precision,
        } => cmd_residuals(&store, &format, &precision.build()?),
        Command::Lipschitz {
            store,
            n_start,
            n_end,
            epsilon,
            precision,
        } => cmd_lipschitz(&store, n_start, n_end, epsilon, &precision.build()?),
        Command::Eval {
            t,
            grid,
            format,
            precision,
        } => cmd_eval(t, grid.as_deref(), &format, &precision.build()?),
    }
}

fn cmd_zeros(
    n_start: u32,
    n_end: u32,
    store_path: &std::path::Path,
    fixed_h: bool,
    cfg: &PrecisionConfig,
) -> Result<i32> {
    if n_start == 0 || n_end < n_start {
        return Err(Error::Config {
            msg: format!("need 1 <= n_start <= n_end, got {n_start}..{n_end}"),
        });
    }
    let existing = load_store(store_path)?;
    if (existing.len() as u32) < n_start - 1 {
        return Err(Error::MissingPrerequisite {
            n: n_start,
            required: (n_start - 1) as usize,
            available: existing.len(),
        });
    }
    let mut known: Vec<f64> = existing.iter().map(|r| r.y).collect();
    let opts = FindOptions {
        adaptive_h: !fixed_h,
        guard: true,
    };
    let mut new_records: Vec<StoreRecord> = Vec::new();
    let first_new = existing.len() as u32 + 1;
    for n in first_new..=n_end {
        let rec = match find_zero_with(n, &known, cfg, opts) {
            Ok(rec) => rec,
            Err(e) => {
                // keep what we already have before reporting the failure
                append_store(store_path, &new_records)?;
                return Err(e);
            }
        };
        eprintln!(
            "n={} y={:.12} iterations={} h={} |Z|={:.2e}",
            rec.n, rec.y, rec.iterations, rec.final_h, rec.z_residual
        );
        known.push(rec.y);
        new_records.push(StoreRecord::from(&rec));
    }
    append_store(store_path, &new_records)?;
    if n_end < first_new {
        eprintln!("store already holds {} zeros; nothing to do", existing.len());
    }
    Ok(EXIT_OK)
}

/// Rebuild full records (multiplier, bracket) from stored (n, y) pairs.
fn rehydrate(records: &[StoreRecord], cfg: &PrecisionConfig) -> Result<Vec<ZeroRecord>> {
    let known: Vec<f64> = records.iter().map(|r| r.y).collect();
    let mut out = Vec::with_capacity(records.len());
    for rec in records {
        let idx = (rec.n - 1) as usize;
        let prev = if rec.n >= 2 { known[idx - 1] } else { std::f64::consts::E };
        let fp = classify_fixed_point(rec.n, rec.y, &known[..idx], cfg)?;
        let eps = 1e-4 * (rec.y - prev);
        let bracket = exact_eq_bracket_values(rec.n, rec.y, eps, cfg)?;
        out.push(ZeroRecord {
            n: rec.n,
            y: rec.y,
            iterations: rec.iterations,
            final_h: rec.final_h,
            z_residual: rec.residual,
            exact_eq_bracket: (bracket.lower, bracket.upper),
            multiplier: fp.lambda,
            classification: fp.class,
        });
    }
    Ok(out)
}

fn write_output(target: &str, content: &str) -> Result<()> {
    if target == "-" {
        print!("{content}");
        std::io::stdout().flush()?;
    } else {
        std::fs::write(target, content)?;
    }
    Ok(())
}

fn cmd_verify(
    store_path: &std::path::Path,
    reference_path: &std::path::Path,
    output: &str,
    cfg: &PrecisionConfig,
) -> Result<i32> {
    let records = load_store(store_path)?;
    if records.is_empty() {
        return Err(Error::InvalidStore {
            index: 0,
            msg: format!("store '{}' holds no zeros", store_path.display()),
        });
    }
    let reference = load_reference_table(reference_path)?;
    let full = rehydrate(&records, cfg)?;
    let report = compare(&full, &reference, cfg);
    write_output(output, &report_to_csv(&report))?;
    eprintln!(
        "compared {} zeros: max_error={:.3e} mean_iterations={:.1} failures={}",
        report.per_zero.len(),
        report.max_error,
        report.mean_iterations,
        report.failures
    );
    Ok(if report.failures == 0 {
        EXIT_OK
    } else {
        EXIT_VERIFICATION
    })
}

fn cmd_classify(
    store_path: &std::path::Path,
    n_range: &str,
    j_range: &str,
    format: &str,
    cfg: &PrecisionConfig,
) -> Result<i32> {
    let (n_lo, n_hi) = parse_range(n_range)?;
    let (j_lo, j_hi) = parse_range(j_range)?;
    let records = load_store(store_path)?;
    if (records.len() as u32) < j_hi {
        return Err(Error::MissingPrerequisite {
            n: j_hi,
            required: j_hi as usize,
            available: records.len(),
        });
    }
    let known: Vec<f64> = records.iter().map(|r| r.y).collect();
    let mut rows = Vec::new();
    let mut parity_violations = 0u32;
    for n in n_lo..=n_hi {
        for j in j_lo..=j_hi {
            let y = known[(j - 1) as usize];
            let fp = classify_fixed_point(n, y, &known, cfg)?;
            // Alternation rule: for j >= n, attractive iff j == n (mod 2)
            let verdict = if j >= n {
                let want_attract = (j - n) % 2 == 0;
                let is_attract = fp.lambda.abs() < 1.0;
                if want_attract == is_attract {
                    "ok"
                } else {
                    parity_violations += 1;
                    "parity-violation"
                }
            } else {
                "prior-zero"
            };
            rows.push((n, j, y, fp.lambda, fp.class, verdict));
        }
    }
    let mut out = String::new();
    if format == "json" {
        for (n, j, y, lambda, class, verdict) in &rows {
            out.push_str(&format!(
                "{{\"n\":{n},\"j\":{j},\"y\":{y},\"lambda\":{lambda},\"class\":\"{class}\",\"check\":\"{verdict}\"}}\n"
            ));
        }
    } else {
        out.push_str("n,j,y,lambda,class,check\n");
        for (n, j, y, lambda, class, verdict) in &rows {
            out.push_str(&format!("{n},{j},{y},{lambda},{class},{verdict}\n"));
        }
    }
    print!("{out}");
    eprintln!(
        "classified {} (n, j) pairs, {} parity violations",
        rows.len(),
        parity_violations
    );
    Ok(if parity_violations == 0 {
        EXIT_OK
    } else {
        EXIT_VERIFICATION
    })
}

fn cmd_residuals(
    store_path: &std::path::Path,
    format: &str,
    cfg: &PrecisionConfig,
) -> Result<i32> {
    let records = load_store(store_path)?;
    if records.is_empty() {
        return Err(Error::InvalidStore {
            index: 0,
            msg: format!("store '{}' holds no zeros", store_path.display()),
        });
    }
    let mut violations = 0u32;
    let mut out = String::new();
    if format != "json" {
        out.push_str("n,y,z_residual,bracket_lower,bracket_target,bracket_upper,bracket_ok\n");
    }
    let known: Vec<f64> = records.iter().map(|r| r.y).collect();
    for rec in &records {
        let idx = (rec.n - 1) as usize;
        let prev = if rec.n >= 2 { known[idx - 1] } else { std::f64::consts::E };
        let z = hardy_z(rec.y, cfg)?;
        let eps = 1e-4 * (rec.y - prev);
        let bracket = exact_eq_bracket_values(rec.n, rec.y, eps, cfg)?;
        let ok = bracket.contains_target();
        if !ok {
            violations += 1;
        }
        if format == "json" {
            out.push_str(&format!(
                "{{\"n\":{},\"y\":{},\"z_residual\":{:e},\"bracket\":[{},{}],\"target\":{},\"ok\":{}}}\n",
                rec.n, rec.y, z.abs(), bracket.lower, bracket.upper, bracket.target, ok
            ));
        } else {
            out.push_str(&format!(
                "{},{},{:e},{},{},{},{}\n",
                rec.n, rec.y, z.abs(), bracket.lower, bracket.target, bracket.upper, ok
            ));
        }
    }
    print!("{out}");
    eprintln!("{} zeros checked, {} bracket violations", records.len(), violations);
    Ok(if violations == 0 { EXIT_OK } else { EXIT_VERIFICATION })
}

fn cmd_lipschitz(
    store_path: &std::path::Path,
    n_start: u32,
    n_end: u32,
    epsilon: f64,
    cfg: &PrecisionConfig,
) -> Result<i32> {
    if n_start == 0 || n_end < n_start {
        return Err(Error::Config {
            msg: format!("need 1 <= n_start <= n_end, got {n_start}..{n_end}"),
        });
    }
    let records = load_store(store_path)?;
    let known: Vec<f64> = records.iter().map(|r| r.y).collect();
    println!("n,a,b,c,inside_unit_interval");
    let mut outside = 0u32;
    for n in n_start..=n_end {
        let est = lipschitz_estimate(n, epsilon, &known, cfg)?;
        let inside = est.c > 0.0 && est.c < 1.0;
        if !inside {
            outside += 1;
        }
        println!("{n},{},{},{},{}", est.a, est.b, est.c, inside);
    }
    // the positivity of c_n(eps) is a conjecture; counterexamples are
    // reported, not fatal
    eprintln!(
        "c_n({epsilon}) outside (0,1) for {outside} of {} indices",
        n_end - n_start + 1
    );
    Ok(EXIT_OK)
}

fn eval_row(t: f64, cfg: &PrecisionConfig) -> Result<String> {
    let z = hardy_z(t, cfg)?;
    let theta = theta_exact(t)?;
    let theta_asym = theta_asymptotic(t).ok();
    let s = s_arg(t, cfg).ok();
    let omega = omega_bound(t).ok();
    let n0 = count_zeros_n0(t, cfg).ok();
    let nshift = n_shift_check(t, cfg).ok();
    let zeta = zeta_critical(t, cfg)?;
    let fmt = |v: Option<f64>| v.map(|x| x.to_string()).unwrap_or_default();
    Ok(format!(
        "{t},{z},{theta},{},{},{},{},{},{},{}",
        fmt(theta_asym),
        fmt(s),
        fmt(omega),
        fmt(n0),
        fmt(nshift),
        zeta.re,
        zeta.im
    ))
}

const EVAL_HEADER: &str = "t,z,theta,theta_asymptotic,s,omega,n0,n_shift,zeta_re,zeta_im";

fn cmd_eval(
    t: Option<f64>,
    grid: Option<&str>,
    format: &str,
    cfg: &PrecisionConfig,
) -> Result<i32> {
    let points: Vec<f64> = if let Some(spec) = grid {
        let parts: Vec<&str> = spec.split(':').collect();
        if parts.len() != 3 {
            return Err(Error::Config {
                msg: format!("grid must be start:stop:step, got '{spec}'"),
            });
        }
        let start: f64 = parts[0].parse().map_err(|_| Error::Config {
            msg: format!("bad grid start '{}'", parts[0]),
        })?;
        let stop: f64 = parts[1].parse().map_err(|_| Error::Config {
            msg: format!("bad grid stop '{}'", parts[1]),
        })?;
        let step: f64 = parts[2].parse().map_err(|_| Error::Config {
            msg: format!("bad grid step '{}'", parts[2]),
        })?;
        if !(step > 0.0) || stop < start {
            return Err(Error::Config {
                msg: "grid needs start <= stop and step > 0".into(),
            });
        }
        let count = ((stop - start) / step).floor() as usize + 1;
        (0..count).map(|i| start + i as f64 * step).collect()
    } else if let Some(t) = t {
        vec![t]
    } else {
        return Err(Error::Config {
            msg: "eval needs --t or --grid".into(),
        });
    };

    if format == "json" {
        for &p in &points {
            let z = hardy_z(p, cfg)?;
            let theta = theta_exact(p)?;
            let zeta = zeta_critical(p, cfg)?;
            let field = |name: &str, v: Result<f64>| match v {
                Ok(x) => format!("\"{name}\":{x}"),
                Err(_) => format!("\"{name}\":null"),
            };
            println!(
                "{{\"t\":{p},\"z\":{z},\"theta\":{theta},{},{},{},{},{},\"zeta_re\":{},\"zeta_im\":{}}}",
                field("theta_asymptotic", theta_asymptotic(p)),
                field("s", s_arg(p, cfg)),
                field("omega", omega_bound(p)),
                field("n0", count_zeros_n0(p, cfg)),
                field("n_shift", n_shift_check(p, cfg)),
                zeta.re,
                zeta.im
            );
        }
    } else {
        println!("{EVAL_HEADER}");
        for &p in &points {
            println!("{}", eval_row(p, cfg)?);
        }
    }
    Ok(EXIT_OK)
}
