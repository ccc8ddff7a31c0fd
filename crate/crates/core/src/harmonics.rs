//! Spherical-harmonic infrastructure: dimension counts, zonal kernels from the
//! addition formula, explicit real orthonormal bases for d in {2, 3}, and the
//! sphere factor of the finite Fourier transform.
//!
//! General d >= 4 is supported only through `harmonic_dim` and `zonal_kernel`;
//! every spectral quantity downstream depends on the angular variables through
//! (d, m) alone.

use crate::error::{Error, Result};
use crate::quadrature::sphere_surface_area;
use crate::specfun::{bessel_j_value, gamma_fn, gegenbauer_at_one, gegenbauer_c, log_gamma_fn};
use num_complex::Complex64;

/// Dimension N(d, m) of the space of degree-m spherical harmonics on S^{d-1}.
pub fn harmonic_dim(d: usize, m: usize) -> Result<u64> {
    if d < 2 {
        return Err(Error::UnsupportedDimension {
            d,
            what: "harmonic_dim (S^0 handled by the spectrum builder)",
        });
    }
    if m == 0 {
        return Ok(1);
    }
    // (2m + d - 2)/m * binom(m + d - 3, m - 1), exact in u128
    let num = (2 * m + d - 2) as u128;
    let binom = binomial((m + d - 3) as u128, (m - 1) as u128);
    let v = num * binom / m as u128;
    Ok(v as u64)
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// A degree-m harmonic subspace on S^{d-1} with its count and sphere area.
#[derive(Debug, Clone, Copy)]
pub struct HarmonicSpace {
    pub d: usize,
    pub m: usize,
    pub count: u64,
    pub sphere_area: f64,
}

impl HarmonicSpace {
    pub fn new(d: usize, m: usize) -> Result<Self> {
        Ok(HarmonicSpace {
            d,
            m,
            count: harmonic_dim(d, m)?,
            sphere_area: sphere_surface_area(d),
        })
    }

    /// Uniform bound sqrt(N(d,m)/Omega_{d-1}) on any unit-norm degree-m harmonic.
    pub fn max_abs_bound(&self) -> f64 {
        (self.count as f64 / self.sphere_area).sqrt()
    }
}

/// Addition-formula kernel (N(d,n)/Omega_{d-1}) C_n^{((d-2)/2)}(t) / C_n^{((d-2)/2)}(1).
pub fn zonal_kernel(d: usize, n: usize, t: f64) -> Result<f64> {
    let lambda = (d as f64 - 2.0) / 2.0;
    let ratio = if n == 0 {
        1.0
    } else {
        gegenbauer_c(n, lambda, t)? / gegenbauer_at_one(n, lambda)?
    };
    Ok(harmonic_dim(d, n)? as f64 / sphere_surface_area(d) * ratio)
}

/// Associated Legendre P_l^q(x) (unnormalized, Condon-Shortley free).
fn assoc_legendre(l: usize, q: usize, x: f64) -> f64 {
    debug_assert!(q <= l);
    // P_q^q = (2q-1)!! (1-x^2)^{q/2}
    let mut pqq = 1.0;
    let s = (1.0 - x * x).max(0.0).sqrt();
    for i in 1..=q {
        pqq *= (2 * i - 1) as f64 * s;
    }
    if l == q {
        return pqq;
    }
    let mut p_prev = pqq;
    let mut p_cur = x * (2 * q + 1) as f64 * pqq; // P_{q+1}^q
    if l == q + 1 {
        return p_cur;
    }
    for ll in q + 2..=l {
        let llf = ll as f64;
        let qf = q as f64;
        let p_next = ((2.0 * llf - 1.0) * x * p_cur - (llf + qf - 1.0) * p_prev) / (llf - qf);
        p_prev = p_cur;
        p_cur = p_next;
    }
    p_cur
}

/// Real orthonormal spherical harmonic Y_l^{(m)} on S^{d-1}, d in {2, 3};
/// `ell` is 1-based and runs to N(d, m).
///
/// d = 2: {1/sqrt(2pi)} for m = 0, {cos(m th)/sqrt(pi), sin(m th)/sqrt(pi)}.
/// d = 3: real associated-Legendre harmonics ordered (q=0), (q=1,cos), (q=1,sin), ...
pub fn sph_basis_eval(d: usize, m: usize, ell: usize, xhat: &[f64]) -> Result<f64> {
    let n = harmonic_dim(d, m)?;
    if ell == 0 || ell as u64 > n {
        return Err(Error::InvalidParameter(format!(
            "sph_basis_eval: ell = {ell} outside 1..={n}"
        )));
    }
    match d {
        2 => {
            let theta = xhat[1].atan2(xhat[0]);
            if m == 0 {
                Ok(1.0 / (2.0 * std::f64::consts::PI).sqrt())
            } else if ell == 1 {
                Ok((m as f64 * theta).cos() / std::f64::consts::PI.sqrt())
            } else {
                Ok((m as f64 * theta).sin() / std::f64::consts::PI.sqrt())
            }
        }
        3 => {
            let ct = xhat[2].clamp(-1.0, 1.0);
            let phi = xhat[1].atan2(xhat[0]);
            // ell = 1 -> q=0; ell = 2q, 2q+1 -> cos/sin pair of order q
            let (q, trig): (usize, Option<bool>) = if ell == 1 {
                (0, None)
            } else {
                let q = ell / 2;
                (q, Some(ell % 2 == 0)) // even ell -> cosine
            };
            let lf = m as f64;
            if q == 0 {
                let norm = ((2.0 * lf + 1.0) / (4.0 * std::f64::consts::PI)).sqrt();
                Ok(norm * assoc_legendre(m, 0, ct))
            } else {
                let log_norm = 0.5
                    * (((2.0 * lf + 1.0) / (2.0 * std::f64::consts::PI)).ln()
                        + log_gamma_fn(lf - q as f64 + 1.0)?
                        - log_gamma_fn(lf + q as f64 + 1.0)?);
                let ang = if trig == Some(true) {
                    (q as f64 * phi).cos()
                } else {
                    (q as f64 * phi).sin()
                };
                Ok(log_norm.exp() * assoc_legendre(m, q, ct) * ang)
            }
        }
        _ => Err(Error::UnsupportedDimension {
            d,
            what: "pointwise spherical harmonics",
        }),
    }
}

/// Sphere factor of the finite Fourier transform:
/// (2 pi)^{d/2} (-i)^m J_{m + (d-2)/2}(w) / w^{(d-2)/2}, with the w -> 0 limit.
pub fn sphere_fourier_factor(m: usize, d: usize, w: f64) -> Result<Complex64> {
    if w < 0.0 {
        return Err(Error::Domain {
            func: "sphere_fourier_factor",
            arg: "w",
            value: w,
            constraint: "w >= 0",
        });
    }
    let nu = m as f64 + (d as f64 - 2.0) / 2.0;
    let modulus = if w == 0.0 {
        if m > 0 {
            0.0
        } else {
            // limit J_nu(w)/w^nu -> 1/(2^nu Gamma(nu+1)) and the extra w^m = 1
            (2.0 * std::f64::consts::PI).powf(d as f64 / 2.0)
                / (2.0f64.powf(nu) * gamma_fn(nu + 1.0)?)
        }
    } else {
        (2.0 * std::f64::consts::PI).powf(d as f64 / 2.0) * bessel_j_value(nu, w)?
            / w.powf((d as f64 - 2.0) / 2.0)
    };
    let phase = Complex64::new(0.0, -1.0).powu(m as u32);
    Ok(phase * modulus)
}
