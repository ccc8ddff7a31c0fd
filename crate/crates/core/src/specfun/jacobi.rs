use super::gamma::log_gamma_fn;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Exponent pair of the Jacobi weight (1-x)^alpha (1+x)^beta on [-1, 1].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct JacobiParams {
    pub alpha: f64,
    pub beta: f64,
}

impl JacobiParams {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if !(alpha > -1.0) {
            return Err(Error::Domain {
                func: "JacobiParams",
                arg: "alpha",
                value: alpha,
                constraint: "alpha > -1",
            });
        }
        if !(beta > -1.0) {
            return Err(Error::Domain {
                func: "JacobiParams",
                arg: "beta",
                value: beta,
                constraint: "beta > -1",
            });
        }
        Ok(JacobiParams { alpha, beta })
    }

    /// The radial basis of the ball problem always uses alpha = 0.
    pub fn radial(beta: f64) -> Result<Self> {
        Self::new(0.0, beta)
    }
}

/// Jacobi polynomial P_n^{(alpha,beta)}(x) by the forward three-term recurrence.
pub fn jacobi_p(n: usize, p: JacobiParams, x: f64) -> f64 {
    let (a, b) = (p.alpha, p.beta);
    if n == 0 {
        return 1.0;
    }
    let mut p0 = 1.0;
    let mut p1 = (a + b + 2.0) / 2.0 * x + (a - b) / 2.0;
    for k in 2..=n {
        let kf = k as f64;
        let a1 = 2.0 * kf * (kf + a + b) * (2.0 * kf + a + b - 2.0);
        let a2 = (2.0 * kf + a + b - 1.0) * (a * a - b * b);
        let a3 = (2.0 * kf + a + b - 2.0) * (2.0 * kf + a + b - 1.0) * (2.0 * kf + a + b);
        let a4 = 2.0 * (kf + a - 1.0) * (kf + b - 1.0) * (2.0 * kf + a + b);
        let p2 = ((a2 + a3 * x) * p1 - a4 * p0) / a1;
        p0 = p1;
        p1 = p2;
    }
    p1
}

/// log of the weighted norm h_n = ∫ (1-x)^a (1+x)^b P_n^2 dx.
pub fn jacobi_log_h(n: usize, p: JacobiParams) -> f64 {
    let (a, b) = (p.alpha, p.beta);
    let nf = n as f64;
    (a + b + 1.0) * std::f64::consts::LN_2
        + log_gamma_fn(nf + a + 1.0).expect("positive")
        + log_gamma_fn(nf + b + 1.0).expect("positive")
        - log_gamma_fn(nf + 1.0).expect("positive")
        - (2.0 * nf + a + b + 1.0).ln()
        - log_gamma_fn(nf + a + b + 1.0).expect("positive")
}

pub fn jacobi_h(n: usize, p: JacobiParams) -> f64 {
    jacobi_log_h(n, p).exp()
}

/// Orthonormal Jacobi polynomial P_n / sqrt(h_n).
pub fn jacobi_p_normalized(n: usize, p: JacobiParams, x: f64) -> f64 {
    jacobi_p(n, p, x) * (-0.5 * jacobi_log_h(n, p)).exp()
}

/// First derivative: d/dx P_n^{(a,b)} = (n+a+b+1)/2 * P_{n-1}^{(a+1,b+1)}.
pub fn jacobi_p_derivative(n: usize, p: JacobiParams, x: f64) -> f64 {
    if n == 0 {
        return 0.0;
    }
    let q = JacobiParams {
        alpha: p.alpha + 1.0,
        beta: p.beta + 1.0,
    };
    (n as f64 + p.alpha + p.beta + 1.0) / 2.0 * jacobi_p(n - 1, q, x)
}

/// Second derivative via the shifted-parameter identity applied twice.
pub fn jacobi_p_second_derivative(n: usize, p: JacobiParams, x: f64) -> f64 {
    if n < 2 {
        return 0.0;
    }
    let q = JacobiParams {
        alpha: p.alpha + 2.0,
        beta: p.beta + 2.0,
    };
    let nf = n as f64;
    (nf + p.alpha + p.beta + 1.0) * (nf + p.alpha + p.beta + 2.0) / 4.0 * jacobi_p(n - 2, q, x)
}

/// Ultra-spherical (Gegenbauer) polynomial C_n^{(lambda)}(x).
///
/// For lambda = 0 (the d = 2 case) the renormalized Chebyshev limit
/// (2/n) T_n is used so that ratios C_n(t)/C_n(1) stay well defined.
pub fn gegenbauer_c(n: usize, lambda: f64, x: f64) -> Result<f64> {
    if lambda < 0.0 {
        return Err(Error::Domain {
            func: "gegenbauer_c",
            arg: "lambda",
            value: lambda,
            constraint: "lambda >= 0",
        });
    }
    if lambda == 0.0 {
        if n == 0 {
            return Ok(1.0);
        }
        let theta = x.clamp(-1.0, 1.0).acos();
        return Ok(2.0 / n as f64 * (n as f64 * theta).cos());
    }
    let p = JacobiParams {
        alpha: lambda - 0.5,
        beta: lambda - 0.5,
    };
    let nf = n as f64;
    let log_ratio = log_gamma_fn(lambda + 0.5)? - log_gamma_fn(2.0 * lambda)?
        + log_gamma_fn(nf + 2.0 * lambda)?
        - log_gamma_fn(nf + lambda + 0.5)?;
    Ok(log_ratio.exp() * jacobi_p(n, p, x))
}

/// C_n^{(lambda)}(1) = Gamma(n+2 lambda)/(Gamma(2 lambda) Gamma(n+1)); Chebyshev
/// limit 2/n for lambda = 0, n >= 1.
pub fn gegenbauer_at_one(n: usize, lambda: f64) -> Result<f64> {
    if n == 0 {
        return Ok(1.0);
    }
    if lambda == 0.0 {
        return Ok(2.0 / n as f64);
    }
    let nf = n as f64;
    Ok((log_gamma_fn(nf + 2.0 * lambda)? - log_gamma_fn(2.0 * lambda)? - log_gamma_fn(nf + 1.0)?).exp())
}
