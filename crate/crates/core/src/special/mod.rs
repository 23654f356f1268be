//! Special-function evaluation: log-gamma, Riemann-Siegel theta, zeta on the
//! critical line, Hardy Z, the normalized argument S, and the Omega
//! normalizer. Everything here is a pure function of (t, cfg).

pub mod gamma;
pub mod hardy;
pub mod omega;
pub mod theta;
pub mod zeta;

pub use gamma::ln_gamma;
pub use hardy::{hardy_z, s_arg, z_derivative};
pub use omega::omega_bound;
pub use theta::{theta_asymptotic, theta_exact};
pub use zeta::{hardy_z_riemann_siegel, zeta_alternating, zeta_critical, zeta_riemann_siegel};
