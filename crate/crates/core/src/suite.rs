//! Consolidated verification suites. Each function returns a list of
//! `BoundReport`s; the CLI `verify` subcommands and the acceptance tests both
//! drive these, so the command-line tool and the test suite cannot drift
//! apart.

use crate::approx::{bandlimit, ineq_ball_check, make_gaussian_test, project_ballpoly_sweep, project_prolate_sweep};
use crate::ballpoly::{
    ball_poly_eval, ball_poly_finite_fourier_radial, ball_poly_operator_eigenvalue,
    hankel_jacobi_identity_residual, BallPolyIndex,
};
use crate::error::Result;
use crate::harmonics::{harmonic_dim, sph_basis_eval, zonal_kernel, HarmonicSpace};
use crate::prolate::{
    build_radial_matrix, coeff_decay_report, fourier_image_check, hankel_eigenvalue, solve_family,
    ProblemParams,
};
use crate::quadrature::{ball_cubature, gauss_jacobi, sphere_surface_area, zonal_sphere_integral};
use crate::report::BoundReport;
use crate::specfun::{
    bessel_j_value, check_bessel_inequalities, gegenbauer_at_one, gegenbauer_c, jacobi_p_derivative,
    jacobi_p_normalized, JacobiParams,
};
use crate::spectra::{
    build_spectrum, counting_check, decay_bounds_check, hs_check, supnorm_bounds_check, trace_check,
    trace_formula,
};
use rayon::prelude::*;

/// Deterministic generator for the randomized grids (splitmix64).
pub struct DeterministicRng(u64);

impl DeterministicRng {
    pub fn new(seed: u64) -> Self {
        DeterministicRng(seed.wrapping_add(0x9e3779b97f4a7c15))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in [0, 1).
    pub fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    /// Uniform point in the open unit ball of dimension d.
    pub fn ball_point(&mut self, d: usize) -> Vec<f64> {
        loop {
            let p: Vec<f64> = (0..d).map(|_| 2.0 * self.unit() - 1.0).collect();
            if p.iter().map(|t| t * t).sum::<f64>() < 0.96 {
                return p;
            }
        }
    }
}

/// Identity suite: the closed-form Fourier/Hankel identities of the ball
/// machinery plus the classical Bessel/Gamma inequality catalog.
pub fn identity_suite(seed: u64) -> Result<Vec<BoundReport>> {
    let mut rng = DeterministicRng::new(seed);
    let mut out = Vec::new();

    // finite Fourier transform of the indicator: cubature vs closed form
    for d in 1..=3usize {
        let cub = ball_cubature(d, 80, if d == 2 { 160 } else { 96 })?;
        for &c in &[1.0, 5.0] {
            for _ in 0..5 {
                let y = rng.ball_point(d);
                let z = rng.ball_point(d);
                let diff: Vec<f64> = y.iter().zip(&z).map(|(a, b)| a - b).collect();
                let w = diff.iter().map(|t| t * t).sum::<f64>().sqrt();
                let re = cub.integrate(|x| {
                    let dot: f64 = x.iter().zip(&diff).map(|(a, b)| a * b).sum();
                    (c * dot).cos()
                })?;
                let im = cub.integrate(|x| {
                    let dot: f64 = x.iter().zip(&diff).map(|(a, b)| a * b).sum();
                    (c * dot).sin()
                })?;
                let lhs = (re * re + im * im).sqrt();
                let rhs = (2.0 * std::f64::consts::PI).powf(d as f64 / 2.0)
                    * bessel_j_value(d as f64 / 2.0, c * w)?
                    / (c * w).powf(d as f64 / 2.0);
                out.push(BoundReport::check_close(
                    "indicator-transform",
                    format!("d={d} c={c} |y-z|={w:.4}"),
                    lhs,
                    rhs.abs(),
                    1e-10,
                    true,
                ));
            }
        }
    }

    // Hankel-Jacobi identity residuals
    for n in [0usize, 2, 5, 10] {
        for &alpha in &[0.0, 0.5, 2.5, 10.0] {
            for &cx in &[1.0, 10.0, 50.0] {
                out.push(BoundReport::check(
                    "hankel-jacobi",
                    format!("n={n} alpha={alpha} cx={cx}"),
                    hankel_jacobi_identity_residual(n, alpha, cx, 1.0)?,
                    1e-10,
                    true,
                ));
            }
        }
    }

    // finite Fourier transform of ball polynomials: modulus vs cubature (d = 2)
    {
        let d = 2usize;
        let c = 2.0;
        let cub = ball_cubature(d, 80, 160)?;
        for m in 0..=2usize {
            for k in 0..=2usize {
                let idx = BallPolyIndex::new(d, m, k, 1)?;
                let y = [0.3 + 0.2 * rng.unit(), 0.3 + 0.2 * rng.unit()];
                let tau = (y[0] * y[0] + y[1] * y[1]).sqrt();
                let yhat = [y[0] / tau, y[1] / tau];
                let re = cub.integrate(|x| {
                    let dot = x[0] * y[0] + x[1] * y[1];
                    (c * dot).cos() * ball_poly_eval(&idx, x).unwrap()
                })?;
                let im = cub.integrate(|x| {
                    let dot = x[0] * y[0] + x[1] * y[1];
                    -(c * dot).sin() * ball_poly_eval(&idx, x).unwrap()
                })?;
                let direct = (re * re + im * im).sqrt();
                let formula = (ball_poly_finite_fourier_radial(k, m, d, c, tau)?
                    * sph_basis_eval(d, m, 1, &yhat)?)
                .norm();
                out.push(BoundReport::check_close(
                    "ballpoly-transform",
                    format!("d={d} c={c} m={m} k={k}"),
                    direct,
                    formula,
                    1e-9,
                    true,
                ));
            }
        }
    }

    // addition formula for the explicit bases
    for d in 2..=3usize {
        for n in 0..=6usize {
            let mut worst = 0.0f64;
            for _ in 0..20 {
                let (x, y) = match d {
                    2 => {
                        let a = 2.0 * std::f64::consts::PI * rng.unit();
                        let b = 2.0 * std::f64::consts::PI * rng.unit();
                        (vec![a.cos(), a.sin()], vec![b.cos(), b.sin()])
                    }
                    _ => {
                        let mk = |r: &mut DeterministicRng| {
                            let t = 2.0 * r.unit() - 1.0;
                            let ph = 2.0 * std::f64::consts::PI * r.unit();
                            let st = (1.0f64 - t * t).sqrt();
                            vec![st * ph.cos(), st * ph.sin(), t]
                        };
                        (mk(&mut rng), mk(&mut rng))
                    }
                };
                let mut s = 0.0;
                for ell in 1..=harmonic_dim(d, n)? as usize {
                    s += sph_basis_eval(d, n, ell, &x)? * sph_basis_eval(d, n, ell, &y)?;
                }
                let dot: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
                worst = worst.max((s - zonal_kernel(d, n, dot)?).abs());
            }
            out.push(BoundReport::check(
                "addition-formula",
                format!("d={d} n={n}"),
                worst,
                1e-10,
                true,
            ));
        }
    }

    // zonal normalization integral, d in {2, 3, 4} (d = 4 through the reduction)
    for d in 2..=4usize {
        let lambda = (d as f64 - 2.0) / 2.0;
        for n in 1..=8usize {
            let lhs = zonal_sphere_integral(d, 220, |t| {
                let v = gegenbauer_c(n, lambda, t).unwrap();
                v * v
            })?;
            let c1 = gegenbauer_at_one(n, lambda)?;
            let rhs = sphere_surface_area(d) / harmonic_dim(d, n)? as f64 * c1 * c1;
            out.push(BoundReport::check_close(
                "zonal-normalization",
                format!("d={d} n={n}"),
                lhs,
                rhs,
                1e-10 * rhs.abs().max(1.0),
                true,
            ));
        }
    }

    // sup bound on unit harmonics over a 1000-point sample
    for d in 2..=3usize {
        for m in 0..=4usize {
            let bound = HarmonicSpace::new(d, m)?.max_abs_bound();
            for ell in 1..=harmonic_dim(d, m)? as usize {
                let mut sup = 0.0f64;
                for _ in 0..1000 {
                    let p = match d {
                        2 => {
                            let a = 2.0 * std::f64::consts::PI * rng.unit();
                            vec![a.cos(), a.sin()]
                        }
                        _ => {
                            let t = 2.0 * rng.unit() - 1.0;
                            let ph = 2.0 * std::f64::consts::PI * rng.unit();
                            let st = (1.0f64 - t * t).sqrt();
                            vec![st * ph.cos(), st * ph.sin(), t]
                        }
                    };
                    sup = sup.max(sph_basis_eval(d, m, ell, &p)?.abs());
                }
                out.push(BoundReport::check(
                    "harmonic-sup",
                    format!("d={d} m={m} ell={ell}"),
                    sup,
                    bound,
                    true,
                ));
            }
        }
    }

    // classical Bessel/Gamma inequality catalog
    let nu_grid: Vec<f64> = vec![0.0, 0.5, 1.0, 2.0, 3.0, 5.0, 8.0, 13.0, 21.0];
    let x_grid: Vec<f64> = (1..=60).map(|i| i as f64 * 0.25).collect();
    out.extend(check_bessel_inequalities(&nu_grid, &x_grid));

    Ok(out)
}

/// Zero-bandwidth degeneration: chi -> (m+2k)(m+2k+d) and coefficients -> e_k.
pub fn chi_limit_suite() -> Result<Vec<BoundReport>> {
    let grid: Vec<(usize, usize)> = (1..=3usize).flat_map(|d| (0..=3usize).map(move |m| (d, m))).collect();
    let families: Vec<Vec<BoundReport>> = grid
        .par_iter()
        .map(|&(d, m)| -> Result<Vec<BoundReport>> {
            let params = ProblemParams::new(d, 1e-8, m)?;
            let family = solve_family(params, 10)?;
            let mut reps = Vec::new();
            for p in &family {
                let expect = ball_poly_operator_eigenvalue(p.k, m, d) as f64;
                reps.push(BoundReport::check_close(
                    "chi-zero-limit",
                    format!("d={d} m={m} k={}", p.k),
                    p.chi,
                    expect,
                    1e-8,
                    true,
                ));
                let mut worst = 0.0f64;
                for (j, &cj) in p.coeffs.iter().enumerate() {
                    let e = if j == p.k { 1.0 } else { 0.0 };
                    worst = worst.max((cj - e).abs());
                }
                reps.push(BoundReport::check(
                    "coeff-zero-limit",
                    format!("d={d} m={m} k={}", p.k),
                    worst,
                    1e-8,
                    true,
                ));
            }
            Ok(reps)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(families.into_iter().flatten().collect())
}

/// Two-sided eigenvalue sandwich chi_k(0) <= chi_k(c) <= chi_k(0) + c^2.
pub fn chi_sandwich_suite(c_values: &[f64]) -> Result<Vec<BoundReport>> {
    let mut grid = Vec::new();
    for d in 1..=3usize {
        for m in 0..=3usize {
            for &c in c_values {
                grid.push((d, m, c));
            }
        }
    }
    let families: Vec<Vec<BoundReport>> = grid
        .par_iter()
        .map(|&(d, m, c)| -> Result<Vec<BoundReport>> {
            let params = ProblemParams::new(d, c, m)?;
            let family = solve_family(params, 10)?;
            let tol = 1e-10 * c * c;
            Ok(family
                .iter()
                .flat_map(|p| {
                    let chi0 = ball_poly_operator_eigenvalue(p.k, m, d) as f64;
                    vec![
                        BoundReport::check(
                            "chi-sandwich-lower",
                            format!("d={d} m={m} c={c} k={}", p.k),
                            chi0 - tol,
                            p.chi,
                            true,
                        ),
                        BoundReport::check(
                            "chi-sandwich-upper",
                            format!("d={d} m={m} c={c} k={}", p.k),
                            p.chi,
                            chi0 + c * c + tol,
                            true,
                        ),
                    ]
                })
                .collect())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(families.into_iter().flatten().collect())
}

/// Hand-derived tridiagonal entries vs Gauss-Jacobi Galerkin assembly of the
/// radial operator, at the full chi scale.
pub fn galerkin_oracle_suite() -> Result<Vec<BoundReport>> {
    // (d, m) pairs realizing beta in {0, 0.5, 1, 2.5, 5}
    let cases = [(2usize, 0usize), (3, 0), (2, 1), (3, 2), (2, 5)];
    let c = 3.7;
    let size = 40usize;
    let mut out = Vec::new();
    for &(d, m) in &cases {
        let params = ProblemParams::new(d, c, m)?;
        let beta = params.beta();
        let op = build_radial_matrix(params, size)?;
        let p = JacobiParams { alpha: 0.0, beta };
        let rule_m = gauss_jacobi(size + 30, 0.0, beta + 1.0)?;
        let rule_s = gauss_jacobi(size + 30, 1.0, beta + 1.0)?;
        // deviations measured relative to the operator scale (max diagonal):
        // high-degree quadrature rounding sits far above 1e-11 in absolute
        // terms on entries of size ~4K^2
        let scale = op.diag.iter().fold(0.0f64, |a, &b| a.max(b.abs()));
        let mut worst_diag = 0.0f64;
        let mut worst_off = 0.0f64;
        for i in 0..size {
            for j in i..(i + 2).min(size) {
                let stiff = rule_s.integrate(|x| {
                    jacobi_p_derivative(i, p, x) * jacobi_p_derivative(j, p, x)
                })? * ((-0.5) * (crate::specfun::jacobi_log_h(i, p) + crate::specfun::jacobi_log_h(j, p))).exp();
                let mass = rule_m.integrate(|x| jacobi_p_normalized(i, p, x) * jacobi_p_normalized(j, p, x))?;
                let assembled = 4.0 * (stiff + c * c / 8.0 * mass)
                    + if i == j { params.gamma_md() } else { 0.0 };
                let stored = if i == j { op.diag[i] } else { op.offdiag[i] };
                let dev = (assembled - stored).abs() / scale;
                if i == j {
                    worst_diag = worst_diag.max(dev);
                } else {
                    worst_off = worst_off.max(dev);
                }
            }
        }
        out.push(BoundReport::check(
            "galerkin-diagonal",
            format!("beta={beta} K={size}"),
            worst_diag,
            1e-11,
            true,
        ));
        out.push(BoundReport::check(
            "galerkin-offdiagonal",
            format!("beta={beta} K={size}"),
            worst_off,
            1e-11,
            true,
        ));
    }
    Ok(out)
}

/// Commutation with the finite Hankel transform: eigenrelation residual over
/// the (d, m, k, c) grid.
pub fn commutation_suite(c_values: &[f64], k_max: usize) -> Result<Vec<BoundReport>> {
    let mut grid = Vec::new();
    for d in 1..=3usize {
        for m in 0..=2usize {
            for &c in c_values {
                grid.push((d, m, c));
            }
        }
    }
    let groups: Vec<Vec<BoundReport>> = grid
        .par_iter()
        .map(|&(d, m, c)| -> Result<Vec<BoundReport>> {
            let params = ProblemParams::new(d, c, m)?;
            let family = solve_family(params, k_max)?;
            let mut reps = Vec::new();
            for p in &family {
                let s = hankel_eigenvalue(p)?;
                reps.push(BoundReport::check(
                    "hankel-commutation",
                    format!("d={d} m={m} c={c} k={}", p.k),
                    s.commutation_residual,
                    1e-8,
                    true,
                ));
                reps.push(BoundReport::check_close(
                    "nu-alpha-identity",
                    format!("d={d} m={m} c={c} k={}", p.k),
                    s.nu_q,
                    c * s.alpha_h * s.alpha_h,
                    1e-10 * s.nu_q.abs().max(1e-300),
                    true,
                ));
                if s.nu_q > 1e-12 {
                    reps.push(BoundReport::check(
                        "nu-in-unit-interval",
                        format!("d={d} m={m} c={c} k={}", p.k),
                        s.nu_q,
                        1.0,
                        true,
                    ));
                }
            }
            Ok(reps)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(groups.into_iter().flatten().collect())
}

/// Mercer trace identity over a (d, c) grid.
pub fn trace_suite(pairs: &[(usize, f64)], tail_tol: f64) -> Result<Vec<BoundReport>> {
    pairs
        .par_iter()
        .map(|&(d, c)| -> Result<BoundReport> {
            let table = build_spectrum(d, c, tail_tol)?;
            Ok(trace_check(&table, 10.0 * tail_tol))
        })
        .collect()
}

/// Hilbert-Schmidt identity plus Landau brackets.
pub fn hs_counting_suite(pairs: &[(usize, f64)], deltas: &[f64]) -> Result<Vec<BoundReport>> {
    let groups: Vec<Vec<BoundReport>> = pairs
        .par_iter()
        .map(|&(d, c)| -> Result<Vec<BoundReport>> {
            let table = build_spectrum(d, c, 1e-8)?;
            let mut reps = hs_check(&table, 1e-6)?;
            for &delta in deltas {
                reps.extend(counting_check(&table, delta)?);
            }
            Ok(reps)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(groups.into_iter().flatten().collect())
}

/// Leading-order eigenvalue count at the desk-scale benchmark point.
pub fn counting_suite(d: usize, c: f64, delta: f64) -> Result<Vec<BoundReport>> {
    let table = build_spectrum(d, c, 1e-6)?;
    counting_check(&table, delta)
}

/// The J_c = Tr - HS probe: log-log slope in c strictly below d.
pub fn jc_slope_suite(d: usize, c_values: &[f64]) -> Result<Vec<BoundReport>> {
    let mut pts = Vec::new();
    for &c in c_values {
        let table = build_spectrum(d, c, 1e-8)?;
        let jc = trace_formula(d, c) - table.hs_sum();
        pts.push((c.ln(), jc.ln()));
    }
    let n = pts.len() as f64;
    let xm = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let ym = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let num: f64 = pts.iter().map(|p| (p.0 - xm) * (p.1 - ym)).sum();
    let den: f64 = pts.iter().map(|p| (p.0 - xm) * (p.0 - xm)).sum();
    let slope = num / den;
    Ok(vec![BoundReport::check(
        "jc-growth-slope",
        format!("d={d} c-grid={c_values:?} slope={slope:.4}"),
        slope,
        d as f64,
        true,
    )])
}

/// Spectral decay checks (lower bound as stated plus the slope test).
pub fn decay_suite(d: usize, m: usize, c: f64, n_max: usize) -> Result<Vec<BoundReport>> {
    decay_bounds_check(d, m, c, n_max)
}

/// Sup-norm machinery over the acceptance grid.
pub fn supnorm_suite(c_values: &[f64], k_max: usize) -> Result<Vec<BoundReport>> {
    let mut grid = Vec::new();
    for d in 2..=3usize {
        for m in 1..=2usize {
            for &c in c_values {
                grid.push((d, m, c));
            }
        }
    }
    let groups: Vec<Vec<BoundReport>> = grid
        .par_iter()
        .map(|&(d, m, c)| supnorm_bounds_check(d, m, c, k_max))
        .collect::<Result<Vec<_>>>()?;
    Ok(groups.into_iter().flatten().collect())
}

/// Expansion-coefficient decay bounds for solved eigenpairs.
pub fn coeff_decay_suite(d: usize, c: f64, m_values: &[usize], k_max: usize) -> Result<Vec<BoundReport>> {
    let mut out = Vec::new();
    for &m in m_values {
        let params = ProblemParams::new(d, c, m)?;
        let family = solve_family(params, k_max)?;
        for p in &family {
            let s = hankel_eigenvalue(p)?;
            out.extend(coeff_decay_report(p, &s));
        }
    }
    Ok(out)
}

/// Theorem-B style projection reports converted to the bound stream.
pub fn theorem_b_suite(d: usize, m_values: &[usize], sigma: f64, c: f64, n_max: usize) -> Result<Vec<BoundReport>> {
    let mut out = Vec::new();
    for &m in m_values {
        let f = make_gaussian_test(d, m, 1, sigma)?;
        for r in project_prolate_sweep(&f, c, n_max)? {
            out.push(BoundReport::check(
                "theorem-b",
                format!(
                    "d={d} m={m} c={c} N={} (rhs = max of the two stated constants)",
                    r.n
                ),
                r.error,
                r.rhs_sec4.max(r.rhs_intro),
                r.condition_met,
            ));
        }
    }
    Ok(out)
}

/// Theorem-C style projection reports plus the per-coefficient bound for
/// band-limited inputs.
pub fn theorem_c_suite(d: usize, m_values: &[usize], sigma: f64, c: f64, n_max: usize) -> Result<Vec<BoundReport>> {
    let mut out = Vec::new();
    for &m in m_values {
        let f = make_gaussian_test(d, m, 1, sigma)?;
        for r in project_ballpoly_sweep(&f, c, n_max)? {
            out.push(BoundReport {
                name: "theorem-c".into(),
                params: format!("d={d} m={m} c={c} N={}", r.n),
                lhs: r.error,
                rhs: r.rhs_sec4,
                slack: if r.rhs_sec4.is_finite() { r.rhs_sec4 - r.error } else { f64::NAN },
                condition_met: r.condition_met,
                pass: r.pass,
            });
        }
    }
    // per-coefficient bound on true band-limited inputs
    for d_b in 1..=2usize {
        let cb = 2.0;
        let f = make_gaussian_test(d_b, 0, 1, sigma)?;
        let bf = bandlimit(&f, cb)?;
        let k_lo = (std::f64::consts::E * cb / 2.0).ceil() as usize;
        out.extend(ineq_ball_check(&bf, k_lo..=k_lo + 4)?);
    }
    Ok(out)
}

/// Fourier-image identity of solved eigenfunctions at small bandwidth.
pub fn fourier_image_suite() -> Result<Vec<BoundReport>> {
    let mut out = Vec::new();
    for (d, m, k) in [(2usize, 0usize, 0usize), (2, 0, 1), (2, 1, 0)] {
        let params = ProblemParams::new(d, 2.0, m)?;
        let family = solve_family(params, k)?;
        let p = &family[k];
        let s = hankel_eigenvalue(p)?;
        out.push(fourier_image_check(p, &s)?);
    }
    Ok(out)
}

/// Run every verification family. `quick` uses the acceptance grids; the full
/// run widens a few of them.
pub fn run_all(quick: bool, seed: u64) -> Result<Vec<(&'static str, Vec<BoundReport>)>> {
    let mut groups: Vec<(&'static str, Vec<BoundReport>)> = Vec::new();
    groups.push(("identities", identity_suite(seed)?));
    groups.push(("chi-zero-limit", chi_limit_suite()?));
    groups.push(("chi-sandwich", chi_sandwich_suite(&[1.0, 5.0, 10.0])?));
    groups.push(("galerkin-oracle", galerkin_oracle_suite()?));
    groups.push(("hankel-commutation", commutation_suite(&[1.0, 5.0], 8)?));
    groups.push((
        "trace",
        trace_suite(&[(1, 1.0), (1, 5.0), (2, 1.0), (2, 5.0), (3, 2.0)], 1e-6)?,
    ));
    groups.push((
        "hs-landau",
        hs_counting_suite(&[(1, 1.0), (1, 2.0), (2, 1.0), (2, 2.0)], &[0.1, 0.5, 0.9])?,
    ));
    groups.push(("counting", counting_suite(2, 10.0, 0.5)?));
    groups.push(("jc-slope", jc_slope_suite(2, &[2.0, 5.0, 10.0])?));
    groups.push(("decay", decay_suite(1, 0, 1.0, 8)?));
    groups.push(("supnorm", supnorm_suite(&[1.0, 5.0], 10)?));
    groups.push(("coeff-decay", coeff_decay_suite(2, 5.0, &[0, 1], 2)?));
    groups.push(("theorem-b", theorem_b_suite(2, &[0, 1], 1.0, 5.0, 12)?));
    groups.push(("theorem-c", theorem_c_suite(2, &[0, 1], 1.0, 5.0, 12)?));
    groups.push(("fourier-image", fourier_image_suite()?));
    if !quick {
        groups.push(("supnorm-wide", supnorm_suite(&[2.0], 12)?));
        groups.push(("decay-wide", decay_suite(2, 0, 5.0, 10)?));
        groups.push((
            "trace-wide",
            trace_suite(&[(2, 10.0), (3, 5.0)], 1e-6)?,
        ));
    }
    Ok(groups)
}
