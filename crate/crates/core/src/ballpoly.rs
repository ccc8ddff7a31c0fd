//! Ball polynomials: the product of a solid factor r^m, a normalized Jacobi
//! polynomial in 2r^2 - 1, and a spherical harmonic. The radial functions here
//! follow the bare normalized-Jacobi convention: the weighted norm
//! ∫ (1+t)^beta ptilde^2 dt is 1, so the L^2(B^d) norm of one ball polynomial
//! is 2^{-(beta+2)/2}. The `_normalized` variants carry that factor and are
//! orthonormal over the ball.

use crate::error::{Error, Result};
use crate::harmonics::{harmonic_dim, sph_basis_eval};
use crate::specfun::{
    bessel_j_value, gamma_fn, jacobi_log_h, jacobi_p, jacobi_p_normalized, JacobiParams,
};
use num_complex::Complex64;

/// Jacobi weight exponent of the radial problem: beta = m + d/2 - 1.
pub fn radial_jacobi_beta(d: usize, m: usize) -> f64 {
    m as f64 + d as f64 / 2.0 - 1.0
}

/// Index (d, m, k, ell) of one ball polynomial; total degree m + 2k.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BallPolyIndex {
    pub d: usize,
    pub m: usize,
    pub k: usize,
    pub ell: usize,
}

impl BallPolyIndex {
    pub fn new(d: usize, m: usize, k: usize, ell: usize) -> Result<Self> {
        let n = harmonic_dim(d, m)?;
        if ell == 0 || ell as u64 > n {
            return Err(Error::InvalidParameter(format!(
                "BallPolyIndex: ell = {ell} outside 1..={n}"
            )));
        }
        Ok(BallPolyIndex { d, m, k, ell })
    }

    pub fn total_degree(&self) -> usize {
        self.m + 2 * self.k
    }
}

/// Radial factor r^m P~_k^{(0,beta)}(2r^2-1), bare convention.
pub fn ball_poly_radial(k: usize, m: usize, d: usize, r: f64) -> f64 {
    let beta = radial_jacobi_beta(d, m);
    let p = JacobiParams { alpha: 0.0, beta };
    r.powi(m as i32) * jacobi_p_normalized(k, p, 2.0 * r * r - 1.0)
}

/// Radial factor scaled by 2^{(beta+2)/2}; together with an orthonormal
/// spherical harmonic this gives unit L^2(B^d) norm.
pub fn ball_poly_radial_normalized(k: usize, m: usize, d: usize, r: f64) -> f64 {
    let beta = radial_jacobi_beta(d, m);
    2.0f64.powf((beta + 2.0) / 2.0) * ball_poly_radial(k, m, d, r)
}

/// Pointwise ball polynomial (bare convention), d in {2, 3}.
pub fn ball_poly_eval(idx: &BallPolyIndex, x: &[f64]) -> Result<f64> {
    if x.len() != idx.d {
        return Err(Error::InvalidParameter(format!(
            "ball_poly_eval: point has {} coordinates for d = {}",
            x.len(),
            idx.d
        )));
    }
    let r = x.iter().map(|t| t * t).sum::<f64>().sqrt();
    if r == 0.0 {
        if idx.m > 0 {
            return Ok(0.0);
        }
        let dir = {
            let mut e = vec![0.0; idx.d];
            e[0] = 1.0;
            e
        };
        return Ok(ball_poly_radial(idx.k, 0, idx.d, 0.0) * sph_basis_eval(idx.d, 0, idx.ell, &dir)?);
    }
    let xhat: Vec<f64> = x.iter().map(|t| t / r).collect();
    Ok(ball_poly_radial(idx.k, idx.m, idx.d, r) * sph_basis_eval(idx.d, idx.m, idx.ell, &xhat)?)
}

/// Eigenvalue (m+2k)(m+2k+d) of the c = 0 differential operator.
pub fn ball_poly_operator_eigenvalue(k: usize, m: usize, d: usize) -> u64 {
    let n = (m + 2 * k) as u64;
    n * (n + d as u64)
}

/// Radial factor of the finite Fourier transform of a (bare-convention) ball
/// polynomial:
/// (2 pi)^{d/2} (-i)^m (-1)^k J_{2k+m+d/2}(c tau) / ((c tau)^{d/2} sqrt(h_k)).
pub fn ball_poly_finite_fourier_radial(k: usize, m: usize, d: usize, c: f64, tau: f64) -> Result<Complex64> {
    if !(c > 0.0) || tau < 0.0 {
        return Err(Error::Domain {
            func: "ball_poly_finite_fourier_radial",
            arg: "c,tau",
            value: if c > 0.0 { tau } else { c },
            constraint: "c > 0, tau >= 0",
        });
    }
    let beta = radial_jacobi_beta(d, m);
    let nu = 2.0 * k as f64 + m as f64 + d as f64 / 2.0;
    let inv_sqrt_h = (-0.5 * jacobi_log_h(k, JacobiParams { alpha: 0.0, beta })).exp();
    let two_pi_pow = (2.0 * std::f64::consts::PI).powf(d as f64 / 2.0);
    let radial = if tau == 0.0 {
        if 2 * k + m > 0 {
            0.0
        } else {
            1.0 / (2.0f64.powf(d as f64 / 2.0) * gamma_fn(d as f64 / 2.0 + 1.0)?)
        }
    } else {
        bessel_j_value(nu, c * tau)? / (c * tau).powf(d as f64 / 2.0)
    };
    let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
    let phase = Complex64::new(0.0, -1.0).powu(m as u32);
    Ok(phase * (two_pi_pow * sign * inv_sqrt_h * radial))
}

/// Residual of the finite Hankel-Jacobi identity
/// ∫_0^1 y^{alpha+1} J_alpha(cxy) P_n^{(0,alpha)}(2y^2-1) dy = (-1)^n J_{2n+alpha+1}(cx)/(cx),
/// computed with a Gauss-Legendre rule sized for the oscillation.
pub fn hankel_jacobi_identity_residual(n: usize, alpha: f64, c: f64, x: f64) -> Result<f64> {
    if !(alpha > -0.5) {
        return Err(Error::Domain {
            func: "hankel_jacobi_identity_residual",
            arg: "alpha",
            value: alpha,
            constraint: "alpha > -1/2",
        });
    }
    let cx = c * x;
    let nq = 80 + 2 * n + cx.ceil() as usize;
    let rule = crate::quadrature::gauss_legendre_01(nq)?;
    let p = JacobiParams { alpha: 0.0, beta: alpha };
    let lhs = rule.integrate(|y| {
        y.powf(alpha + 1.0) * bessel_j_value(alpha, cx * y).unwrap() * jacobi_p(n, p, 2.0 * y * y - 1.0)
    })?;
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    let rhs = sign * bessel_j_value(2.0 * n as f64 + alpha + 1.0, cx)? / cx;
    Ok((lhs - rhs).abs())
}
