use super::bessel::bessel_j_value;
use super::gamma::{gamma_fn, log_gamma_fn};
use crate::report::BoundReport;

/// Olenko-type envelope constant: sup_x sqrt(x) |J_alpha(x)| <= c_alpha.
pub fn envelope_constant(alpha: f64) -> f64 {
    if alpha.abs() <= 0.5 {
        (2.0 / std::f64::consts::PI).sqrt()
    } else {
        0.675 * (alpha.powf(1.0 / 3.0) + 1.9 / alpha.powf(1.0 / 3.0) + 1.1 / alpha).sqrt()
    }
}

/// First zero constant in the lower Bessel estimate.
pub const ALPHA_ZERO: f64 = 0.0943498;

/// Lower bound J_nu(nu x) >= Gamma(1/3)/(2^{2/3} 3^{1/6} pi (nu+a0)^{1/3}) x^nu exp(nu^2(1-x^2)/(4nu+4)).
pub fn lower_bessel_bound(nu: f64, ratio: f64) -> f64 {
    let gamma_third = gamma_fn(1.0 / 3.0).expect("positive");
    let front = gamma_third
        / (2.0f64.powf(2.0 / 3.0) * 3.0f64.powf(1.0 / 6.0) * std::f64::consts::PI * (nu + ALPHA_ZERO).powf(1.0 / 3.0));
    front * ratio.powf(nu) * (nu * nu * (1.0 - ratio * ratio) / (4.0 * nu + 4.0)).exp()
}

/// Evaluate the classical Bessel/Gamma inequality catalog on the given grids.
///
/// All of these are proved statements; a failing report signals an
/// implementation bug rather than a sharp case.
pub fn check_bessel_inequalities(nu_grid: &[f64], x_grid: &[f64]) -> Vec<BoundReport> {
    let mut out = Vec::new();

    // sup_x sqrt(x)|J_alpha(x)| <= c_alpha
    for &nu in nu_grid {
        let mut sup = 0.0f64;
        let mut arg = 0.0;
        for &x in x_grid {
            if x <= 0.0 {
                continue;
            }
            let v = x.sqrt() * bessel_j_value(nu, x).unwrap().abs();
            if v > sup {
                sup = v;
                arg = x;
            }
        }
        out.push(BoundReport::check(
            "bessel-envelope",
            format!("nu={nu} argmax={arg}"),
            sup,
            envelope_constant(nu),
            true,
        ));
    }

    // |J_nu(x)/x^nu| <= 1/(2^nu Gamma(nu+1))
    for &nu in nu_grid {
        for &x in x_grid {
            if x <= 0.0 {
                continue;
            }
            let lhs = bessel_j_value(nu, x).unwrap().abs();
            let log_rhs = nu * (x / 2.0).ln() - log_gamma_fn(nu + 1.0).unwrap();
            out.push(BoundReport::check(
                "bessel-power-bound",
                format!("nu={nu} x={x}"),
                lhs,
                log_rhs.exp(),
                true,
            ));
        }
    }

    // exp(nu^2(1-r^2)/(4nu+4)) <= J_nu(nu r)/(r^nu J_nu(nu)) <= exp(nu^2(1-r^2)/(2nu+4)),  0 < r <= 1
    for &nu in nu_grid {
        if nu <= 0.0 {
            continue;
        }
        let jnu = bessel_j_value(nu, nu).unwrap();
        for &r in x_grid {
            if !(r > 0.0 && r <= 1.0) {
                continue;
            }
            let mid = bessel_j_value(nu, nu * r).unwrap() / (r.powf(nu) * jnu);
            let lo = (nu * nu * (1.0 - r * r) / (4.0 * nu + 4.0)).exp();
            let hi = (nu * nu * (1.0 - r * r) / (2.0 * nu + 4.0)).exp();
            out.push(BoundReport::check(
                "bessel-ratio-lower",
                format!("nu={nu} r={r}"),
                lo,
                mid,
                true,
            ));
            out.push(BoundReport::check(
                "bessel-ratio-upper",
                format!("nu={nu} r={r}"),
                mid,
                hi,
                true,
            ));
        }
    }

    // J_nu(nu r) >= lower_bessel_bound(nu, r)
    for &nu in nu_grid {
        if nu <= 0.0 {
            continue;
        }
        for &r in x_grid {
            if !(r > 0.0 && r <= 1.0) {
                continue;
            }
            out.push(BoundReport::check(
                "bessel-lower-estimate",
                format!("nu={nu} r={r}"),
                lower_bessel_bound(nu, r),
                bessel_j_value(nu, nu * r).unwrap(),
                true,
            ));
        }
    }

    // sqrt(2e)((x+1/2)/e)^{x+1/2} <= Gamma(x+1) <= sqrt(2pi)((x+1/2)/e)^{x+1/2}
    for &x in x_grid {
        if x <= 0.0 {
            continue;
        }
        let core = ((x + 0.5) / std::f64::consts::E).powf(x + 0.5);
        let g = gamma_fn(x + 1.0).unwrap();
        out.push(BoundReport::check(
            "gamma-stirling-lower",
            format!("x={x}"),
            (2.0 * std::f64::consts::E).sqrt() * core,
            g,
            true,
        ));
        out.push(BoundReport::check(
            "gamma-stirling-upper",
            format!("x={x}"),
            g,
            (2.0 * std::f64::consts::PI).sqrt() * core,
            true,
        ));
    }

    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::tally;

    #[test]
    fn catalog_passes_on_standard_grid() {
        let nu: Vec<f64> = vec![0.0, 0.5, 1.0, 2.0, 3.0, 5.0, 8.0, 13.0, 21.0];
        let x: Vec<f64> = (1..=60).map(|i| i as f64 * 0.25).collect();
        let reports = check_bessel_inequalities(&nu, &x);
        let (pass, fail, _skip) = tally(&reports);
        assert!(fail == 0, "failures: {:?}", reports.iter().filter(|r| !r.pass).collect::<Vec<_>>());
        assert!(pass > 100);
    }

    #[test]
    fn power_bound_spot_case() {
        // nu=3, x=2: |J_3(2)|/2^3 <= 1/(8 Gamma(4))
        let lhs = bessel_j_value(3.0, 2.0).unwrap().abs() / 8.0;
        let rhs = 1.0 / (8.0 * 6.0);
        assert!(lhs <= rhs);
    }

    #[test]
    fn ratio_bounds_equal_at_one() {
        // r = 1 makes all three expressions 1
        let nu = 5.0;
        let jnu = bessel_j_value(nu, nu).unwrap();
        let mid = bessel_j_value(nu, nu).unwrap() / jnu;
        assert!((mid - 1.0).abs() < 1e-15);
    }

    #[test]
    fn stirling_bracket_at_four() {
        let core = (4.5f64 / std::f64::consts::E).powf(4.5);
        let lo = (2.0 * std::f64::consts::E).sqrt() * core;
        let hi = (2.0 * std::f64::consts::PI).sqrt() * core;
        assert!(lo <= 24.0 && 24.0 <= hi);
    }
}
