use super::gamma::log_gamma_fn;
use crate::error::{Error, Result};

/// One Bessel-J evaluation together with an a-posteriori error estimate.
///
/// `est_abs_error` is finite inside the validated region (order <= 300,
/// argument <= 1000) and `f64::INFINITY` outside it.
#[derive(Debug, Clone, Copy)]
pub struct BesselEvaluation {
    pub order: f64,
    pub argument: f64,
    pub value: f64,
    pub est_abs_error: f64,
}

/// Validated region of `bessel_j`.
pub const BESSEL_MAX_ORDER: f64 = 300.0;
pub const BESSEL_MAX_ARGUMENT: f64 = 1000.0;

/// Ascending power series; returns (value, sum of |terms| including prefactor)
/// for the rounding-error estimate.
fn series(nu: f64, x: f64) -> (f64, f64) {
    // J_nu(x) = (x/2)^nu / Gamma(nu+1) * sum_k (-x^2/4)^k / (k! (nu+1)_k)
    let log_pref = nu * (x / 2.0).ln() - log_gamma_fn(nu + 1.0).expect("nu + 1 > 0");
    if log_pref < -745.0 {
        return (0.0, 0.0); // underflows to zero
    }
    let pref = log_pref.exp();
    let q = x * x / 4.0;
    let mut term = 1.0f64;
    let mut sum = 1.0f64;
    let mut sum_abs = 1.0f64;
    for k in 1..400 {
        let kf = k as f64;
        term *= -q / (kf * (nu + kf));
        sum += term;
        sum_abs += term.abs();
        if term.abs() < 1e-18 * sum_abs {
            break;
        }
    }
    (pref * sum, pref * sum_abs)
}

/// Downward (Miller) recurrence with series-sum normalization.
///
/// Returns `J_{mu + t}(x)` for `t = 0..count`, with `mu` in `[0, 1)` and
/// `x > 0`. All orders come out with near machine relative accuracy, including
/// the strongly subdominant high orders, which is what the spectral eigenvalue
/// route relies on.
pub fn bessel_j_ladder(mu: f64, count: usize, x: f64) -> Vec<f64> {
    assert!((0.0..1.0).contains(&mu) && x > 0.0 && count > 0);
    let top = (x + 14.0 * x.cbrt() + 22.0).max(mu + count as f64 + 18.0);
    let len = (top - mu).ceil() as usize + 2; // orders mu .. mu+len-1
    let mut f = vec![0.0f64; len];
    f[len - 1] = 0.0;
    f[len - 2] = 1e-280;
    for r in (1..len - 1).rev() {
        let ord = mu + r as f64;
        f[r - 1] = (2.0 * ord / x) * f[r] - f[r + 1];
        if f[r - 1].abs() > 1e280 {
            for v in f[r - 1..].iter_mut() {
                *v *= 1e-280;
            }
        }
    }
    // normalization: sum_k w_k J_{mu+2k}(x) = (x/2)^mu,
    // w_0 = Gamma(mu+1), w_k = (mu+2k) Gamma(mu+k)/k!
    let mut s;
    if mu == 0.0 {
        s = f[0];
        let mut k = 2;
        while k < len {
            s += 2.0 * f[k];
            k += 2;
        }
    } else {
        let gamma_mu1 = super::gamma::gamma_fn(mu + 1.0).expect("mu + 1 > 0");
        s = gamma_mu1 * f[0];
        let mut g = gamma_mu1; // Gamma(mu+k)/k! at k = 1
        let mut k = 1usize;
        while 2 * k < len {
            let kf = k as f64;
            s += (mu + 2.0 * kf) * g * f[2 * k];
            g *= (mu + kf) / (kf + 1.0);
            k += 1;
        }
    }
    let scale = (x / 2.0).powf(mu) / s;
    f.truncate(count);
    for v in f.iter_mut() {
        *v *= scale;
        if !v.is_finite() || v.abs() < 1e-305 {
            *v = if v.is_finite() { *v } else { 0.0 };
        }
    }
    f
}

/// Bessel function of the first kind, J_nu(x), for nu >= -1/2 and x >= 0.
///
/// Ascending series where it is cancellation-safe, Miller downward recurrence
/// elsewhere. The half-integer edge nu = -1/2 (radial order of the
/// one-dimensional problem) uses the closed form.
pub fn bessel_j(nu: f64, x: f64) -> Result<BesselEvaluation> {
    if !(nu >= -0.5) || !nu.is_finite() {
        return Err(Error::Domain {
            func: "bessel_j",
            arg: "nu",
            value: nu,
            constraint: "nu >= -1/2",
        });
    }
    if !(x >= 0.0) || !x.is_finite() {
        return Err(Error::Domain {
            func: "bessel_j",
            arg: "x",
            value: x,
            constraint: "x >= 0",
        });
    }
    let validated = nu <= BESSEL_MAX_ORDER && x <= BESSEL_MAX_ARGUMENT;
    let flag = |value: f64, est: f64| {
        Ok(BesselEvaluation {
            order: nu,
            argument: x,
            value,
            est_abs_error: if validated { est } else { f64::INFINITY },
        })
    };
    if x == 0.0 {
        if nu == 0.0 {
            return flag(1.0, 2e-16);
        }
        if nu > 0.0 {
            return flag(0.0, 0.0);
        }
        return Err(Error::Domain {
            func: "bessel_j",
            arg: "x",
            value: x,
            constraint: "x > 0 for negative order",
        });
    }
    if nu == -0.5 {
        let v = (2.0 / (std::f64::consts::PI * x)).sqrt() * x.cos();
        return flag(v, 4e-16 * v.abs().max(1.0 / x.sqrt()));
    }
    if x <= 8.0 || x * x <= 2.0 * (nu + 1.5) {
        let (v, sum_abs) = series(nu, x);
        return flag(v, 3e-16 * sum_abs + 2e-308);
    }
    let mu = nu - nu.floor();
    let idx = nu.floor() as usize;
    let ladder = bessel_j_ladder(mu, idx + 1, x);
    let v = ladder[idx];
    flag(v, 2e-14 * v.abs().max(x.powf(-1.0 / 3.0).min(1.0)))
}

/// Convenience wrapper returning only the value.
pub fn bessel_j_value(nu: f64, x: f64) -> Result<f64> {
    Ok(bessel_j(nu, x)?.value)
}

/// Spherical Bessel family sqrt(2(2n+alpha+1)) J_{2n+alpha+1}(c x)/sqrt(c x),
/// orthonormal on L^2(0, inf) for fixed alpha and bandwidth c.
pub fn spherical_bessel(n: usize, alpha: f64, c: f64, x: f64) -> Result<f64> {
    if !(c > 0.0) {
        return Err(Error::Domain {
            func: "spherical_bessel",
            arg: "c",
            value: c,
            constraint: "c > 0",
        });
    }
    if !(x > 0.0) {
        return Err(Error::Domain {
            func: "spherical_bessel",
            arg: "x",
            value: x,
            constraint: "x > 0",
        });
    }
    let ord = 2.0 * n as f64 + alpha + 1.0;
    Ok((2.0 * ord).sqrt() * bessel_j_value(ord, c * x)? / (c * x).sqrt())
}
