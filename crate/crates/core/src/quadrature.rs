//! Gaussian quadrature rules (Golub-Welsch on the Jacobi recurrence matrix)
//! and cubature over the unit ball. These rules are the oracle for every
//! inner product, Hankel transform and ball integral in the crate.

use crate::error::{Error, Result};
use crate::specfun::log_gamma_fn;
use crate::tridiag::{eigh_tridiagonal, Accumulate, SymmetricTridiagonal};

#[derive(Debug, Clone, PartialEq)]
pub enum RuleKind {
    Legendre,
    Jacobi { alpha: f64, beta: f64 },
}

/// Nodes/weights with a declared polynomial exactness degree on [a, b].
#[derive(Debug, Clone)]
pub struct QuadratureRule {
    pub kind: RuleKind,
    pub a: f64,
    pub b: f64,
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub exactness_degree: usize,
}

impl QuadratureRule {
    /// Sum of w_i f(x_i); errors out on a non-finite integrand value.
    pub fn integrate(&self, mut f: impl FnMut(f64) -> f64) -> Result<f64> {
        let mut acc = 0.0;
        for (&x, &w) in self.nodes.iter().zip(&self.weights) {
            let v = f(x);
            if !v.is_finite() {
                return Err(Error::NonFiniteIntegrand { node: x });
            }
            acc += w * v;
        }
        Ok(acc)
    }

    /// Affine image of a Legendre rule on [a, b].
    pub fn mapped_to(&self, a: f64, b: f64) -> Result<QuadratureRule> {
        if !matches!(self.kind, RuleKind::Legendre) {
            return Err(Error::InvalidParameter(
                "only Legendre rules map affinely; Jacobi weights are tied to [-1,1]".into(),
            ));
        }
        let half = 0.5 * (b - a);
        let mid = 0.5 * (b + a);
        Ok(QuadratureRule {
            kind: RuleKind::Legendre,
            a,
            b,
            nodes: self.nodes.iter().map(|&x| mid + half * x).collect(),
            weights: self.weights.iter().map(|&w| w * half).collect(),
            exactness_degree: self.exactness_degree,
        })
    }
}

/// Free-function form used throughout the verification code.
pub fn integrate(rule: &QuadratureRule, f: impl FnMut(f64) -> f64) -> Result<f64> {
    rule.integrate(f)
}

/// n-point Gauss-Legendre rule on [-1, 1]; exactness degree 2n-1.
pub fn gauss_legendre(n: usize) -> Result<QuadratureRule> {
    if n == 0 || n > 10_000 {
        return Err(Error::InvalidParameter(format!("gauss_legendre: n = {n} out of range")));
    }
    if n == 1 {
        return Ok(QuadratureRule {
            kind: RuleKind::Legendre,
            a: -1.0,
            b: 1.0,
            nodes: vec![0.0],
            weights: vec![2.0],
            exactness_degree: 1,
        });
    }
    let diag = vec![0.0; n];
    let off: Vec<f64> = (1..n)
        .map(|j| {
            let jf = j as f64;
            jf / (4.0 * jf * jf - 1.0).sqrt()
        })
        .collect();
    golub_welsch(RuleKind::Legendre, diag, off, 2.0)
}

/// n-point Gauss-Legendre rule mapped to [0, 1].
pub fn gauss_legendre_01(n: usize) -> Result<QuadratureRule> {
    gauss_legendre(n)?.mapped_to(0.0, 1.0)
}

/// n-point Gauss-Jacobi rule for the weight (1-x)^alpha (1+x)^beta on [-1, 1].
pub fn gauss_jacobi(n: usize, alpha: f64, beta: f64) -> Result<QuadratureRule> {
    if n == 0 || n > 10_000 {
        return Err(Error::InvalidParameter(format!("gauss_jacobi: n = {n} out of range")));
    }
    if !(alpha > -1.0) || !(beta > -1.0) {
        return Err(Error::Domain {
            func: "gauss_jacobi",
            arg: "alpha,beta",
            value: if alpha > -1.0 { beta } else { alpha },
            constraint: "alpha > -1 and beta > -1",
        });
    }
    let mu0 = ((alpha + beta + 1.0) * std::f64::consts::LN_2 + log_gamma_fn(alpha + 1.0)?
        + log_gamma_fn(beta + 1.0)?
        - log_gamma_fn(alpha + beta + 2.0)?)
    .exp();
    let mut diag = Vec::with_capacity(n);
    diag.push((beta - alpha) / (alpha + beta + 2.0));
    for j in 1..n {
        let jf = j as f64;
        let den = (2.0 * jf + alpha + beta) * (2.0 * jf + alpha + beta + 2.0);
        diag.push((beta * beta - alpha * alpha) / den);
    }
    let mut off = Vec::with_capacity(n.saturating_sub(1));
    if n > 1 {
        off.push(
            (4.0 * (1.0 + alpha) * (1.0 + beta)
                / ((2.0 + alpha + beta).powi(2) * (3.0 + alpha + beta)))
            .sqrt(),
        );
        for j in 2..n {
            let jf = j as f64;
            let s = 2.0 * jf + alpha + beta;
            off.push(
                (4.0 * jf * (jf + alpha) * (jf + beta) * (jf + alpha + beta)
                    / (s * s * (s + 1.0) * (s - 1.0)))
                .sqrt(),
            );
        }
    }
    golub_welsch(RuleKind::Jacobi { alpha, beta }, diag, off, mu0)
}

fn golub_welsch(kind: RuleKind, diag: Vec<f64>, off: Vec<f64>, mu0: f64) -> Result<QuadratureRule> {
    let n = diag.len();
    let t = SymmetricTridiagonal::new(diag, off)?;
    let e = eigh_tridiagonal(&t, Accumulate::FirstRow)?;
    let row = e.first_row.expect("requested");
    let weights: Vec<f64> = row.iter().map(|z| mu0 * z * z).collect();
    Ok(QuadratureRule {
        kind,
        a: -1.0,
        b: 1.0,
        nodes: e.values,
        weights,
        exactness_degree: 2 * n - 1,
    })
}

/// Surface area of the unit sphere S^{d-1}: 2 pi^{d/2} / Gamma(d/2).
pub fn sphere_surface_area(d: usize) -> f64 {
    let df = d as f64;
    2.0 * std::f64::consts::PI.powf(df / 2.0)
        / crate::specfun::gamma_fn(df / 2.0).expect("d >= 1")
}

/// Volume of the unit ball B^d: pi^{d/2} / Gamma(d/2 + 1).
pub fn ball_volume(d: usize) -> f64 {
    let df = d as f64;
    std::f64::consts::PI.powf(df / 2.0) / crate::specfun::gamma_fn(df / 2.0 + 1.0).expect("d >= 1")
}

#[derive(Debug, Clone)]
enum AngularRule {
    /// d = 1: the two points of S^0, weight 1 each.
    TwoPoint,
    /// d = 2: trapezoid on the circle, spectrally exact for trigonometric polynomials.
    Circle { n: usize },
    /// d = 3: Gauss-Legendre in cos(theta) x trapezoid in phi.
    Sphere { polar: QuadratureRule, n_az: usize },
}

/// Product cubature over the unit ball for d in {1, 2, 3}.
#[derive(Debug, Clone)]
pub struct BallCubature {
    pub d: usize,
    radial: QuadratureRule,
    angular: AngularRule,
}

pub fn ball_cubature(d: usize, n_r: usize, n_ang: usize) -> Result<BallCubature> {
    let radial = gauss_legendre_01(n_r)?;
    let angular = match d {
        1 => AngularRule::TwoPoint,
        2 => AngularRule::Circle { n: n_ang.max(4) },
        3 => AngularRule::Sphere {
            polar: gauss_legendre(n_ang.max(8) / 2)?,
            n_az: n_ang.max(8),
        },
        _ => {
            return Err(Error::UnsupportedDimension {
                d,
                what: "full ball cubature (use the zonal reduction for d >= 4)",
            })
        }
    };
    Ok(BallCubature { d, radial, angular })
}

impl BallCubature {
    /// Integral of f over the unit ball B^d.
    pub fn integrate(&self, mut f: impl FnMut(&[f64]) -> f64) -> Result<f64> {
        let mut acc = 0.0;
        match &self.angular {
            AngularRule::TwoPoint => {
                for (&r, &wr) in self.radial.nodes.iter().zip(&self.radial.weights) {
                    let v = f(&[r]) + f(&[-r]);
                    if !v.is_finite() {
                        return Err(Error::NonFiniteIntegrand { node: r });
                    }
                    acc += wr * v;
                }
            }
            AngularRule::Circle { n } => {
                let wt = 2.0 * std::f64::consts::PI / *n as f64;
                for (&r, &wr) in self.radial.nodes.iter().zip(&self.radial.weights) {
                    let mut ring = 0.0;
                    for j in 0..*n {
                        let th = 2.0 * std::f64::consts::PI * j as f64 / *n as f64;
                        let v = f(&[r * th.cos(), r * th.sin()]);
                        if !v.is_finite() {
                            return Err(Error::NonFiniteIntegrand { node: r });
                        }
                        ring += v;
                    }
                    acc += wr * r * wt * ring;
                }
            }
            AngularRule::Sphere { polar, n_az } => {
                let wphi = 2.0 * std::f64::consts::PI / *n_az as f64;
                for (&r, &wr) in self.radial.nodes.iter().zip(&self.radial.weights) {
                    let mut shell = 0.0;
                    for (&t, &wt) in polar.nodes.iter().zip(&polar.weights) {
                        let st = (1.0 - t * t).sqrt();
                        for j in 0..*n_az {
                            let ph = 2.0 * std::f64::consts::PI * j as f64 / *n_az as f64;
                            let v = f(&[r * st * ph.cos(), r * st * ph.sin(), r * t]);
                            if !v.is_finite() {
                                return Err(Error::NonFiniteIntegrand { node: r });
                            }
                            shell += wt * wphi * v;
                        }
                    }
                    acc += wr * r * r * shell;
                }
            }
        }
        Ok(acc)
    }

    /// Integral of g over the unit sphere S^{d-1} (the angular factor alone).
    pub fn integrate_sphere(&self, mut g: impl FnMut(&[f64]) -> f64) -> Result<f64> {
        match &self.angular {
            AngularRule::TwoPoint => Ok(g(&[1.0]) + g(&[-1.0])),
            AngularRule::Circle { n } => {
                let wt = 2.0 * std::f64::consts::PI / *n as f64;
                let mut acc = 0.0;
                for j in 0..*n {
                    let th = 2.0 * std::f64::consts::PI * j as f64 / *n as f64;
                    acc += g(&[th.cos(), th.sin()]);
                }
                Ok(wt * acc)
            }
            AngularRule::Sphere { polar, n_az } => {
                let wphi = 2.0 * std::f64::consts::PI / *n_az as f64;
                let mut acc = 0.0;
                for (&t, &wt) in polar.nodes.iter().zip(&polar.weights) {
                    let st = (1.0 - t * t).sqrt();
                    for j in 0..*n_az {
                        let ph = 2.0 * std::f64::consts::PI * j as f64 / *n_az as f64;
                        acc += wt * wphi * g(&[st * ph.cos(), st * ph.sin(), t]);
                    }
                }
                Ok(acc)
            }
        }
    }
}

/// Zonal reduction, any d >= 2: integral over S^{d-1} of g(<xhat, yhat>)
/// equals Omega_{d-2} * ∫_{-1}^{1} g(t) (1-t^2)^{(d-3)/2} dt.
pub fn zonal_sphere_integral(d: usize, n: usize, g: impl FnMut(f64) -> f64) -> Result<f64> {
    if d < 2 {
        return Err(Error::UnsupportedDimension {
            d,
            what: "zonal sphere integral",
        });
    }
    let expo = (d as f64 - 3.0) / 2.0;
    let rule = gauss_jacobi(n, expo, expo)?;
    Ok(sphere_surface_area(d - 1) * rule.integrate(g)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn legendre_basics() {
        let r = gauss_legendre(1).unwrap();
        assert_eq!(r.nodes, vec![0.0]);
        assert_eq!(r.weights, vec![2.0]);
        // n = 5 integrates x^8 exactly: 2/9
        let r = gauss_legendre(5).unwrap();
        let v = r.integrate(|x| x.powi(8)).unwrap();
        assert!((v - 2.0 / 9.0).abs() < 1e-14);
        // n = 20, e^x on [-1,1] = e - 1/e (frozen analytic value)
        let r = gauss_legendre(20).unwrap();
        let v = r.integrate(f64::exp).unwrap();
        assert!((v - 2.350402387287602913765).abs() < 1e-14);
    }

    #[test]
    fn legendre_nodes_sorted_weights_positive() {
        let r = gauss_legendre(64).unwrap();
        for w in &r.weights {
            assert!(*w > 0.0);
        }
        for pair in r.nodes.windows(2) {
            assert!(pair[0] < pair[1]);
        }
        let sum: f64 = r.weights.iter().sum();
        assert!((sum - 2.0).abs() < 1e-13);
    }

    #[test]
    fn jacobi_reduces_to_legendre() {
        let j = gauss_jacobi(1, 0.0, 0.0).unwrap();
        assert!((j.nodes[0]).abs() < 1e-15);
        assert!((j.weights[0] - 2.0).abs() < 1e-14);
    }

    #[test]
    fn jacobi_total_mass_and_constant() {
        // ∫ (1+x)^beta dx = 2^{beta+1}/(beta+1) via the 1-point rule
        for &beta in &[0.5, 2.0, 4.25] {
            let j = gauss_jacobi(1, 0.0, beta).unwrap();
            let total: f64 = j.weights.iter().sum();
            let expect = 2.0f64.powf(beta + 1.0) / (beta + 1.0);
            assert!((total - expect).abs() < expect * 1e-13);
        }
    }

    #[test]
    fn jacobi_moments_exact() {
        // ∫ (1-x)^a (1+x)^b x^k against high-degree reference rule
        let (a, b) = (1.5, 0.25);
        let fine = gauss_jacobi(60, a, b).unwrap();
        let rule = gauss_jacobi(8, a, b).unwrap();
        for k in 0..=15 {
            let lhs = rule.integrate(|x| x.powi(k)).unwrap();
            let rhs = fine.integrate(|x| x.powi(k)).unwrap();
            assert!((lhs - rhs).abs() < 1e-13 * rhs.abs().max(1.0), "k={k}");
        }
    }

    #[test]
    fn refinement_convergence() {
        let f = |x: f64| (3.0 * x).cos() * (-x * x).exp();
        let v1 = gauss_legendre(40).unwrap().integrate(f).unwrap();
        let v2 = gauss_legendre(80).unwrap().integrate(f).unwrap();
        assert!((v1 - v2).abs() < 1e-13 * v2.abs().max(1.0));
    }

    #[test]
    fn non_finite_integrand_is_an_error() {
        let r = gauss_legendre(10).unwrap();
        assert!(matches!(
            r.integrate(|x| 1.0 / (x - r.nodes[3])),
            Err(Error::NonFiniteIntegrand { .. }) | Ok(_)
        ));
        assert!(r.integrate(|_| f64::NAN).is_err());
    }

    #[test]
    fn ball_volumes() {
        for d in 1..=3 {
            let cub = ball_cubature(d, 60, 64).unwrap();
            let v = cub.integrate(|_| 1.0).unwrap();
            assert!((v - ball_volume(d)).abs() < 1e-12 * ball_volume(d), "d={d}: {v}");
        }
    }

    #[test]
    fn ball_radial_monomial() {
        // d=3: ∫ |x|^2 = 4 pi / 5
        let cub = ball_cubature(3, 60, 64).unwrap();
        let v = cub
            .integrate(|x| x.iter().map(|t| t * t).sum::<f64>())
            .unwrap();
        assert!((v - 4.0 * std::f64::consts::PI / 5.0).abs() < 1e-12);
        // d=2, polynomial with angular dependence: ∫ x0^2 = pi/4
        let cub = ball_cubature(2, 40, 64).unwrap();
        let v = cub.integrate(|x| x[0] * x[0]).unwrap();
        assert!((v - std::f64::consts::PI / 4.0).abs() < 1e-12);
    }

    #[test]
    fn sphere_areas() {
        assert!((sphere_surface_area(2) - 2.0 * std::f64::consts::PI).abs() < 1e-13);
        assert!((sphere_surface_area(3) - 4.0 * std::f64::consts::PI).abs() < 1e-12);
        for d in 2..=3 {
            let cub = ball_cubature(d, 8, 64).unwrap();
            let v = cub.integrate_sphere(|_| 1.0).unwrap();
            assert!((v - sphere_surface_area(d)).abs() < 1e-11, "d={d}");
        }
    }

    #[test]
    fn zonal_reduction_matches_direct() {
        // d=3: ∫_{S^2} (t^4 + 0.3 t) dσ, t = <xhat, e3>
        let g = |t: f64| t.powi(4) + 0.3 * t;
        let direct = ball_cubature(3, 8, 128)
            .unwrap()
            .integrate_sphere(|x| g(x[2]))
            .unwrap();
        let zonal = zonal_sphere_integral(3, 64, g).unwrap();
        assert!((direct - zonal).abs() < 1e-10, "{direct} vs {zonal}");
        // d=2 endpoint-singular weight
        let g2 = |t: f64| t * t;
        let direct2 = ball_cubature(2, 8, 256)
            .unwrap()
            .integrate_sphere(|x| g2(x[0]))
            .unwrap();
        let zonal2 = zonal_sphere_integral(2, 64, g2).unwrap();
        assert!((direct2 - zonal2).abs() < 1e-11);
    }
}
