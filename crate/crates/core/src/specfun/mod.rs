//! Scalar special functions: Gamma, Bessel J of real order, Jacobi and
//! Gegenbauer polynomials, and the classical inequality catalog used by the
//! verification suites.
//!
//! Everything is computed in binary64. The Bessel implementation switches
//! between the ascending series (cancellation-safe region) and a downward
//! Miller recurrence with series-sum normalization; the ladder variant returns
//! a whole sequence of orders at once and preserves relative accuracy deep in
//! the exponential-decay regime, which the spectral eigenvalue computations
//! depend on.

mod bessel;
mod gamma;
mod inequalities;
mod jacobi;

pub use bessel::{
    bessel_j, bessel_j_ladder, bessel_j_value, spherical_bessel, BesselEvaluation, BESSEL_MAX_ARGUMENT,
    BESSEL_MAX_ORDER,
};
pub use gamma::{gamma_fn, log_gamma_fn, upper_gamma_q, GAMMA_OVERFLOW_THRESHOLD};
pub use inequalities::{check_bessel_inequalities, envelope_constant, lower_bessel_bound, ALPHA_ZERO};
pub use jacobi::{
    gegenbauer_at_one, gegenbauer_c, jacobi_h, jacobi_log_h, jacobi_p, jacobi_p_derivative,
    jacobi_p_normalized, jacobi_p_second_derivative, JacobiParams,
};
