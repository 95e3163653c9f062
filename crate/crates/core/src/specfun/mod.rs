//! Complex special functions: Hurwitz zeta at even orders, Stirling's
//! remainder and log-gamma, the Riemann zeta function, and ξ.

mod euler_maclaurin;
mod gamma;
mod xi;
mod zeta;

pub use gamma::{hurwitz_zeta_even, log_gamma, reciprocal_gamma, stirling_w};
pub use xi::{
    asymptotic_deviation, ln_zeta_bound_check, log_xi_any, log_xi_asymptotic, log_xi_z,
    stirling_w_bound_check, xi_line_scaled, xi_s, xi_s_unreflected, xi_z, XiAsymptoticTerms,
};
pub use zeta::{zeta, zeta_euler_maclaurin, MAX_ZETA_IMAG};
