//! Radial eigenproblem of the ball concentration operator.
//!
//! In the normalized Jacobi basis P~_j^{(0,beta)}(2r^2-1), beta = m + d/2 - 1,
//! the radial Sturm-Liouville operator is symmetric tridiagonal: the diagonal
//! carries the polynomial eigenvalues j(j+beta+1) and the bandwidth enters as
//! (c^2/8) times the matrix of multiplication by (1+eta). Eigenvalues are
//! stored at the full chi scale, 4 * (matrix eigenvalue) + m(m+d), so every
//! bound downstream can be checked without rescaling.
//!
//! The eigenvalue of the finite Hankel transform attached to an eigenfunction
//! is computed two ways: a quadrature Rayleigh quotient of the kernel operator
//! (the reference route, with an explicit commutation residual), and an
//! expansion route through the Bessel-ladder images of the basis functions.
//! The expansion route keeps relative accuracy arbitrarily deep in the
//! spectral tail, where the kernel quadrature hits the rounding floor of
//! binary64.

use crate::ballpoly::radial_jacobi_beta;
use crate::error::{Error, Result};
use crate::harmonics::sph_basis_eval;
use crate::quadrature::{gauss_legendre_01, QuadratureRule};
use crate::specfun::{bessel_j_ladder, bessel_j_value, jacobi_log_h, jacobi_p, JacobiParams};
use crate::tridiag::{eigh_tridiagonal, Accumulate, SymmetricTridiagonal};
use serde::{Deserialize, Serialize};

/// Parameters (d, c, m) of one radial eigenproblem family.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProblemParams {
    pub d: usize,
    pub c: f64,
    pub m: usize,
}

impl ProblemParams {
    pub fn new(d: usize, c: f64, m: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidParameter("dimension d must be >= 1".into()));
        }
        if !(c > 0.0) || !c.is_finite() {
            return Err(Error::InvalidParameter(format!("bandwidth c = {c} must be positive")));
        }
        Ok(ProblemParams { d, c, m })
    }

    /// Jacobi exponent beta = m + d/2 - 1 of the radial weight.
    pub fn beta(&self) -> f64 {
        radial_jacobi_beta(self.d, self.m)
    }

    /// Angular constant gamma_{m,d} = m(m+d).
    pub fn gamma_md(&self) -> f64 {
        (self.m * (self.m + self.d)) as f64
    }
}

/// Symmetric tridiagonal radial operator at the full chi scale.
#[derive(Debug, Clone)]
pub struct TridiagonalOperator {
    pub params: ProblemParams,
    pub size: usize,
    pub diag: Vec<f64>,
    pub offdiag: Vec<f64>,
}

/// Recurrence matrix of multiplication by (1 + eta) in the normalized
/// P~^{(0,beta)} basis: returns (diagonal, off-diagonal). This is the one
/// piece of the operator whose entries are hand-derived, so it stays exposed
/// for the quadrature oracle test.
pub fn multiplication_matrix(beta: f64, size: usize) -> (Vec<f64>, Vec<f64>) {
    let mut diag = Vec::with_capacity(size);
    diag.push(1.0 + beta / (beta + 2.0));
    for j in 1..size {
        let jf = j as f64;
        diag.push(1.0 + beta * beta / ((2.0 * jf + beta) * (2.0 * jf + beta + 2.0)));
    }
    let mut off = Vec::with_capacity(size.saturating_sub(1));
    for j in 1..size {
        let jf = j as f64;
        let s = 2.0 * jf + beta;
        off.push(2.0 * jf * (jf + beta) / (s * (s * s - 1.0).sqrt()));
    }
    (diag, off)
}

/// Assemble the radial operator for truncation size `size`.
pub fn build_radial_matrix(params: ProblemParams, size: usize) -> Result<TridiagonalOperator> {
    if size < 4 {
        return Err(Error::InvalidParameter(format!("truncation K = {size} too small (need >= 4)")));
    }
    if (size as f64) < params.c {
        log::warn!(
            "truncation K = {size} below bandwidth c = {}; eigendata will be inaccurate",
            params.c
        );
    }
    let beta = params.beta();
    let gamma = params.gamma_md();
    let cs = params.c * params.c;
    let (mdiag, moff) = multiplication_matrix(beta, size);
    let diag: Vec<f64> = (0..size)
        .map(|j| {
            let jf = j as f64;
            4.0 * (jf * (jf + beta + 1.0) + cs / 8.0 * mdiag[j]) + gamma
        })
        .collect();
    let offdiag: Vec<f64> = moff.iter().map(|a| 4.0 * cs / 8.0 * a).collect();
    Ok(TridiagonalOperator {
        params,
        size,
        diag,
        offdiag,
    })
}

/// One radial eigenpair: chi eigenvalue and expansion coefficients in the
/// normalized Jacobi basis, unit l2 norm, largest-modulus coefficient positive.
#[derive(Debug, Clone)]
pub struct RadialProlate {
    pub params: ProblemParams,
    pub k: usize,
    pub chi: f64,
    pub coeffs: Vec<f64>,
    pub trunc: usize,
    pub tail_bound: f64,
}

const TAIL_REL: f64 = 1e-13;

/// Solve for the k-th radial eigenpair. `k_opt` overrides the starting
/// truncation; the coefficient-tail invariant is certified by doubling.
pub fn solve_prolate(params: ProblemParams, k: usize, k_opt: Option<usize>) -> Result<RadialProlate> {
    let base = ((std::f64::consts::E * params.c / 2.0).ceil() as usize + 30).max(2 * k + 30);
    let mut size = k_opt.unwrap_or(base).max(k + 8).max(6);
    for _doubling in 0..6 {
        let op = build_radial_matrix(params, size)?;
        let t = SymmetricTridiagonal::new(op.diag.clone(), op.offdiag.clone())?;
        let eig = eigh_tridiagonal(&t, Accumulate::Full)?;
        let chi = eig.values[k];
        let mut coeffs = eig.vectors.as_ref().expect("requested")[k].clone();
        refine_coefficient_tails(&op, chi, &mut coeffs);
        let maxc = coeffs.iter().fold(0.0f64, |a, &b| a.max(b.abs()));
        if coeffs[size - 1].abs() <= TAIL_REL * maxc {
            normalize_with_sign(&mut coeffs);
            let tail_bound = tail_estimate(&coeffs);
            return Ok(RadialProlate {
                params,
                k,
                chi,
                coeffs,
                trunc: size,
                tail_bound,
            });
        }
        size *= 2;
    }
    Err(Error::TruncationFailure { k: size, doublings: 6 })
}

/// Solve the whole family k = 0..=kmax in one eigendecomposition. The shared
/// truncation is grown until the worst tail among the requested eigenvectors
/// certifies.
pub fn solve_family(params: ProblemParams, kmax: usize) -> Result<Vec<RadialProlate>> {
    let base = ((std::f64::consts::E * params.c / 2.0).ceil() as usize + 30).max(2 * kmax + 30);
    let mut size = base;
    for _doubling in 0..6 {
        let op = build_radial_matrix(params, size)?;
        let t = SymmetricTridiagonal::new(op.diag.clone(), op.offdiag.clone())?;
        let eig = eigh_tridiagonal(&t, Accumulate::Full)?;
        let vecs = eig.vectors.as_ref().expect("requested");
        let mut out = Vec::with_capacity(kmax + 1);
        let mut ok = true;
        for k in 0..=kmax {
            let chi = eig.values[k];
            let mut coeffs = vecs[k].clone();
            refine_coefficient_tails(&op, chi, &mut coeffs);
            let maxc = coeffs.iter().fold(0.0f64, |a, &b| a.max(b.abs()));
            if coeffs[size - 1].abs() > TAIL_REL * maxc {
                ok = false;
                break;
            }
            normalize_with_sign(&mut coeffs);
            let tail_bound = tail_estimate(&coeffs);
            out.push(RadialProlate {
                params,
                k,
                chi,
                coeffs,
                trunc: size,
                tail_bound,
            });
        }
        if ok {
            return Ok(out);
        }
        size *= 2;
    }
    Err(Error::TruncationFailure { k: size, doublings: 6 })
}

/// Expansion-route Hankel eigenvalues for a whole family, sharing the Bessel
/// ladders and basis rows across eigenpairs.
pub fn hankel_alpha_spectral_family(family: &[RadialProlate]) -> Result<Vec<f64>> {
    if family.is_empty() {
        return Ok(Vec::new());
    }
    let params = family[0].params;
    let beta = params.beta();
    let c = params.c;
    let k = family.iter().map(|p| p.coeffs.len()).max().unwrap();
    let nq = (k + (2.0 * c).ceil() as usize + 60).max(160);
    let rule = gauss_legendre_01(nq)?;
    let scales = jacobi_scales(beta, k);
    let top_order = 2.0 * (k as f64 - 1.0) + beta + 1.0;
    let mu = {
        let f = (beta + 1.0).fract();
        if f < 0.0 {
            f + 1.0
        } else {
            f
        }
    };
    let count = (top_order - mu).round() as usize + 1;
    // z[j][i] = <Jladder_j, tau_i>, tau_i(x) = x^{beta+1/2} P~_i(2x^2-1)
    let mut z = vec![vec![0.0f64; k]; k];
    let mut row = Vec::new();
    for (&x, &w) in rule.nodes.iter().zip(&rule.weights) {
        normalized_jacobi_row(beta, &scales, 2.0 * x * x - 1.0, &mut row);
        let xb = x.powf(beta + 0.5);
        let lad = bessel_j_ladder(mu, count, c * x);
        let sq = (c * x).sqrt();
        for (j, zr) in z.iter_mut().enumerate() {
            let ord = 2.0 * j as f64 + beta + 1.0;
            let idx = (ord - mu).round() as usize;
            let jl = (2.0 * ord).sqrt() * lad[idx] / sq;
            for (i, zv) in zr.iter_mut().enumerate() {
                *zv += w * jl * xb * row[i];
            }
        }
    }
    let pref = 2.0f64.powf((beta + 2.0) / 2.0);
    Ok(family
        .iter()
        .map(|p| {
            let i0 = (0..p.coeffs.len())
                .max_by(|&a, &b| p.coeffs[a].abs().total_cmp(&p.coeffs[b].abs()))
                .unwrap();
            let mut acc = 0.0;
            for (j, &cj) in p.coeffs.iter().enumerate() {
                let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
                acc += sign * cj * z[j][i0];
            }
            pref * acc / p.coeffs[i0]
        })
        .collect())
}

/// Rebuild the decaying head and tail of an eigenvector by shooting the
/// three-term recurrence from both ends, so that deep-tail coefficients keep
/// relative (not just absolute) accuracy. The oscillatory bulk from the QL
/// solve is left untouched.
fn refine_coefficient_tails(op: &TridiagonalOperator, chi: f64, v: &mut [f64]) {
    let n = v.len();
    let jstar = (0..n).max_by(|&a, &b| v[a].abs().total_cmp(&v[b].abs())).unwrap();
    let bulk = 1e-6 * v[jstar].abs();
    if jstar >= 2 {
        let mut u = vec![0.0f64; jstar + 1];
        u[0] = 1.0;
        u[1] = (chi - op.diag[0]) / op.offdiag[0];
        for j in 1..jstar {
            u[j + 1] = ((chi - op.diag[j]) * u[j] - op.offdiag[j - 1] * u[j - 1]) / op.offdiag[j];
            if u[j + 1].abs() > 1e260 {
                for w in u[..=j + 1].iter_mut() {
                    *w *= 1e-180;
                }
            }
        }
        if u[jstar] != 0.0 && u[jstar].is_finite() {
            let s = v[jstar] / u[jstar];
            for j in 0..jstar {
                if v[j].abs() < bulk {
                    let r = u[j] * s;
                    v[j] = if r.is_finite() { r } else { 0.0 };
                }
            }
        }
    }
    if jstar + 2 <= n - 1 {
        let mut w = vec![0.0f64; n];
        w[n - 1] = 1.0;
        w[n - 2] = (chi - op.diag[n - 1]) / op.offdiag[n - 2];
        for j in (jstar + 1..n - 1).rev() {
            w[j - 1] = ((chi - op.diag[j]) * w[j] - op.offdiag[j] * w[j + 1]) / op.offdiag[j - 1];
            if w[j - 1].abs() > 1e260 {
                for t in w[j - 1..].iter_mut() {
                    *t *= 1e-180;
                }
            }
        }
        if w[jstar] != 0.0 && w[jstar].is_finite() {
            let s = v[jstar] / w[jstar];
            for j in jstar + 1..n {
                if v[j].abs() < bulk {
                    let r = w[j] * s;
                    v[j] = if r.is_finite() { r } else { 0.0 };
                }
            }
        }
    }
}

fn normalize_with_sign(v: &mut [f64]) {
    let norm: f64 = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    let jstar = (0..v.len()).max_by(|&a, &b| v[a].abs().total_cmp(&v[b].abs())).unwrap();
    let s = if v[jstar] < 0.0 { -1.0 } else { 1.0 } / norm;
    for x in v.iter_mut() {
        *x *= s;
    }
}

fn tail_estimate(v: &[f64]) -> f64 {
    let n = v.len();
    let last = v[n - 1].abs();
    let prev = v[n - 2].abs();
    let ratio = if prev > 0.0 { (last / prev).min(0.9) } else { 0.5 };
    last * ratio / (1.0 - ratio)
}

/// Normalization scales 1/sqrt(h_j) for the first `size` Jacobi polynomials.
fn jacobi_scales(beta: f64, size: usize) -> Vec<f64> {
    let p = JacobiParams { alpha: 0.0, beta };
    (0..size).map(|j| (-0.5 * jacobi_log_h(j, p)).exp()).collect()
}

/// Evaluate all normalized Jacobi polynomials P~_0..P~_{K-1} at eta in one
/// recurrence sweep (alpha = 0).
fn normalized_jacobi_row(beta: f64, scales: &[f64], eta: f64, out: &mut Vec<f64>) {
    let k = scales.len();
    out.clear();
    let mut p0 = 1.0;
    out.push(p0 * scales[0]);
    if k == 1 {
        return;
    }
    let mut p1 = (beta + 2.0) / 2.0 * eta - beta / 2.0;
    out.push(p1 * scales[1]);
    for j in 2..k {
        let jf = j as f64;
        let a1 = 2.0 * jf * (jf + beta) * (2.0 * jf + beta - 2.0);
        let a2 = (2.0 * jf + beta - 1.0) * (-beta * beta);
        let a3 = (2.0 * jf + beta - 2.0) * (2.0 * jf + beta - 1.0) * (2.0 * jf + beta);
        let a4 = 2.0 * (jf - 1.0) * (jf + beta - 1.0) * (2.0 * jf + beta);
        let p2 = ((a2 + a3 * eta) * p1 - a4 * p0) / a1;
        out.push(p2 * scales[j]);
        p0 = p1;
        p1 = p2;
    }
}

impl RadialProlate {
    /// phi(eta) = sum_j coeffs_j P~_j^{(0,beta)}(eta); the Gauss-Jacobi
    /// weighted norm of phi equals the coefficient l2 norm (= 1).
    pub fn eval_eta(&self, eta: f64) -> f64 {
        let beta = self.params.beta();
        let scales = jacobi_scales(beta, self.coeffs.len());
        let mut row = Vec::with_capacity(self.coeffs.len());
        normalized_jacobi_row(beta, &scales, eta, &mut row);
        row.iter().zip(&self.coeffs).map(|(p, c)| p * c).sum()
    }

    /// Radial profile r^m phi(2r^2 - 1) (bare convention; the L^2(B^d) norm of
    /// the full eigenfunction under this scaling is 2^{-(beta+2)/2}).
    pub fn eval_radial(&self, r: f64) -> f64 {
        r.powi(self.params.m as i32) * self.eval_eta(2.0 * r * r - 1.0)
    }

    /// Radial profile scaled to unit L^2(B^d) norm against an orthonormal
    /// spherical harmonic.
    pub fn eval_radial_normalized(&self, r: f64) -> f64 {
        2.0f64.powf((self.params.beta() + 2.0) / 2.0) * self.eval_radial(r)
    }

    /// Pointwise eigenfunction (bare convention), d in {2, 3}.
    pub fn eval(&self, ell: usize, x: &[f64]) -> Result<f64> {
        let r = x.iter().map(|t| t * t).sum::<f64>().sqrt();
        if r == 0.0 {
            if self.params.m > 0 {
                return Ok(0.0);
            }
            let mut e = vec![0.0; self.params.d];
            e[0] = 1.0;
            return Ok(self.eval_radial(0.0) * sph_basis_eval(self.params.d, 0, ell, &e)?);
        }
        let xhat: Vec<f64> = x.iter().map(|t| t / r).collect();
        Ok(self.eval_radial(r) * sph_basis_eval(self.params.d, self.params.m, ell, &xhat)?)
    }

    /// Substituted profile r^{m + (d-1)/2} phi(2r^2-1), the finite Hankel
    /// eigenfunction.
    pub fn eval_substituted(&self, r: f64) -> f64 {
        r.powf(self.params.m as f64 + (self.params.d as f64 - 1.0) / 2.0) * self.eval_eta(2.0 * r * r - 1.0)
    }

    pub fn to_json(&self) -> String {
        let mut s = String::new();
        s.push_str(&format!(
            "{{\"params\":{{\"d\":{},\"c\":{},\"m\":{},\"beta\":{},\"gamma_md\":{}}},\"k\":{},\"chi\":{},\"coeffs\":[",
            self.params.d,
            g17(self.params.c),
            self.params.m,
            g17(self.params.beta()),
            g17(self.params.gamma_md()),
            self.k,
            g17(self.chi)
        ));
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            s.push_str(&g17(*c));
        }
        s.push_str(&format!("],\"trunc\":{},\"tail_bound\":{}}}", self.trunc, g17(self.tail_bound)));
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RadialProlateJson =
            serde_json::from_str(text).map_err(|e| Error::InvalidParameter(format!("bad JSON: {e}")))?;
        let params = ProblemParams::new(raw.params.d, raw.params.c, raw.params.m)?;
        Ok(RadialProlate {
            params,
            k: raw.k,
            chi: raw.chi,
            coeffs: raw.coeffs,
            trunc: raw.trunc,
            tail_bound: raw.tail_bound,
        })
    }
}

/// Decimal with 17 significant digits (round-trips binary64 exactly).
pub fn g17(x: f64) -> String {
    format!("{:.16e}", x)
}

#[derive(Deserialize)]
struct ParamsJson {
    d: usize,
    c: f64,
    m: usize,
}

#[derive(Deserialize)]
struct RadialProlateJson {
    params: ParamsJson,
    k: usize,
    chi: f64,
    coeffs: Vec<f64>,
    trunc: usize,
    tail_bound: f64,
}

/// Per-eigenpair operator eigenvalues: the finite Hankel eigenvalue alpha, the
/// finite Fourier modulus |mu| = |alpha| (2 pi)^{d/2} / c^{(d-1)/2}, and the
/// concentration eigenvalue nu = c alpha^2 of Q_c.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct SpectralEigenvalues {
    pub alpha_h: f64,
    pub mu_modulus: f64,
    pub nu_q: f64,
    pub commutation_residual: f64,
}

impl SpectralEigenvalues {
    pub fn from_alpha(params: &ProblemParams, alpha: f64, residual: f64) -> Self {
        let c = params.c;
        let d = params.d as f64;
        SpectralEigenvalues {
            alpha_h: alpha,
            mu_modulus: alpha.abs() * (2.0 * std::f64::consts::PI).powf(d / 2.0) / c.powf((d - 1.0) / 2.0),
            nu_q: c * alpha * alpha,
            commutation_residual: residual,
        }
    }

    pub fn to_json(&self) -> String {
        format!(
            "{{\"alpha_h\":{},\"mu_modulus\":{},\"nu_q\":{},\"commutation_residual\":{}}}",
            g17(self.alpha_h),
            g17(self.mu_modulus),
            g17(self.nu_q),
            g17(self.commutation_residual)
        )
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidParameter(format!("bad JSON: {e}")))
    }
}

/// Node count for the Hankel quadrature per the adaptive rule.
pub fn hankel_node_count(params: &ProblemParams, trunc: usize) -> usize {
    ((2.0 * params.c).ceil() as usize + 4 * trunc).max(200)
}

/// Apply the finite Hankel transform H_c^{(beta)} to the substituted profile
/// at one point, with the given rule on [0, 1].
pub fn finite_hankel_apply(p: &RadialProlate, x: f64, rule: &QuadratureRule) -> Result<f64> {
    let c = p.params.c;
    let beta = p.params.beta();
    let scales = jacobi_scales(beta, p.coeffs.len());
    let mut row = Vec::new();
    let mut acc = 0.0;
    for (&t, &w) in rule.nodes.iter().zip(&rule.weights) {
        normalized_jacobi_row(beta, &scales, 2.0 * t * t - 1.0, &mut row);
        let phi: f64 = row.iter().zip(&p.coeffs).map(|(a, b)| a * b).sum();
        let sub = t.powf(p.params.m as f64 + (p.params.d as f64 - 1.0) / 2.0) * phi;
        acc += w * (c * x * t).sqrt() * bessel_j_value(beta, c * x * t)? * sub;
    }
    Ok(acc)
}

fn hankel_rayleigh(p: &RadialProlate, n: usize) -> Result<f64> {
    let rule = gauss_legendre_01(n)?;
    let c = p.params.c;
    let beta = p.params.beta();
    let scales = jacobi_scales(beta, p.coeffs.len());
    let mut row = Vec::new();
    let phi: Vec<f64> = rule
        .nodes
        .iter()
        .map(|&t| {
            normalized_jacobi_row(beta, &scales, 2.0 * t * t - 1.0, &mut row);
            let s: f64 = row.iter().zip(&p.coeffs).map(|(a, b)| a * b).sum();
            t.powf(p.params.m as f64 + (p.params.d as f64 - 1.0) / 2.0) * s
        })
        .collect();
    let mut num = 0.0;
    let mut den = 0.0;
    for (i, (&x, &wx)) in rule.nodes.iter().zip(&rule.weights).enumerate() {
        let mut hv = 0.0;
        for (j, (&y, &wy)) in rule.nodes.iter().zip(&rule.weights).enumerate() {
            let arg = c * x * y;
            hv += wy * arg.sqrt() * bessel_j_value(beta, arg)? * phi[j];
        }
        num += wx * hv * phi[i];
        den += wx * phi[i] * phi[i];
    }
    Ok(num / den)
}

/// Quadrature route: Rayleigh quotient of the finite Hankel operator, with a
/// node-doubling consistency check and a 64-point commutation residual
/// normalized by the profile scale.
pub fn hankel_eigenvalue(p: &RadialProlate) -> Result<SpectralEigenvalues> {
    let n = hankel_node_count(&p.params, p.trunc);
    let a1 = hankel_rayleigh(p, n)?;
    let a2 = hankel_rayleigh(p, 2 * n)?;
    if (a1 - a2).abs() > 1e-11 * a2.abs().max(1.0) {
        log::warn!(
            "hankel quadrature under-resolved: alpha moved by {:e} on doubling",
            (a1 - a2).abs()
        );
    }
    let alpha = a2;
    let rule = gauss_legendre_01(n)?;
    let grid = 64;
    let mut samples = Vec::with_capacity(grid);
    let mut max_phi = 0.0f64;
    for i in 0..grid {
        let r = 0.5 * (1.0 + (std::f64::consts::PI * (i as f64 + 0.5) / grid as f64).cos());
        let f = p.eval_substituted(r);
        max_phi = max_phi.max(f.abs());
        samples.push((r, f));
    }
    let mut max_resid = 0.0f64;
    for (r, f) in samples {
        let hv = finite_hankel_apply(p, r, &rule)?;
        max_resid = max_resid.max((hv - alpha * f).abs());
    }
    let residual = max_resid / (max_phi * alpha.abs().max(1.0));
    if residual > 1e-6 {
        log::warn!("hankel eigenrelation residual {residual:e} above 1e-6; result flagged");
    }
    Ok(SpectralEigenvalues::from_alpha(&p.params, alpha, residual))
}

/// Expansion route for the finite Hankel eigenvalue: the image of basis
/// function j is (-1)^j times a spherical Bessel function, so alpha comes out
/// of accurately-tiny Bessel values instead of a cancelling oscillatory
/// quadrature. Keeps relative accuracy down to the underflow limit.
pub fn hankel_alpha_spectral(p: &RadialProlate) -> Result<f64> {
    let beta = p.params.beta();
    let c = p.params.c;
    let k = p.coeffs.len();
    let nq = (k + (2.0 * c).ceil() as usize + 60).max(160);
    let rule = gauss_legendre_01(nq)?;
    let i0 = (0..k).max_by(|&a, &b| p.coeffs[a].abs().total_cmp(&p.coeffs[b].abs())).unwrap();
    let scales = jacobi_scales(beta, k);
    let pj = JacobiParams { alpha: 0.0, beta };
    let top_order = 2.0 * (k as f64 - 1.0) + beta + 1.0;
    let mu = {
        let f = (beta + 1.0).fract();
        if f < 0.0 {
            f + 1.0
        } else {
            f
        }
    };
    let count = (top_order - mu).round() as usize + 1;
    let mut z = vec![0.0f64; k];
    for (&x, &w) in rule.nodes.iter().zip(&rule.weights) {
        let tau = x.powf(beta + 0.5) * jacobi_p(i0, pj, 2.0 * x * x - 1.0) * scales[i0];
        let lad = bessel_j_ladder(mu, count, c * x);
        for (j, zj) in z.iter_mut().enumerate() {
            let ord = 2.0 * j as f64 + beta + 1.0;
            let idx = (ord - mu).round() as usize;
            *zj += w * (2.0 * ord).sqrt() * lad[idx] / (c * x).sqrt() * tau;
        }
    }
    let mut acc = 0.0;
    for (j, (&cj, &zj)) in p.coeffs.iter().zip(&z).enumerate() {
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        acc += sign * cj * zj;
    }
    Ok(2.0f64.powf((beta + 2.0) / 2.0) * acc / p.coeffs[i0])
}

/// Sup of |eval_radial| on a Chebyshev-distributed grid; returns (sup, argmax).
pub fn sup_norm(p: &RadialProlate, grid_size: usize) -> (f64, f64) {
    let g = grid_size.max(512);
    let mut best = (0.0f64, 0.0f64);
    for i in 0..=g {
        let r = 0.5 * (1.0 + (std::f64::consts::PI * (g - i) as f64 / g as f64).cos());
        let v = p.eval_radial(r).abs();
        if v > best.0 {
            best = (v, r);
        }
    }
    best
}

/// Local maxima of |phi(eta)| on [0, 1], for the extrema-structure checks.
pub fn radial_local_maxima(p: &RadialProlate, grid_size: usize) -> Vec<(f64, f64)> {
    let g = grid_size.max(512);
    let vals: Vec<(f64, f64)> = (0..=g)
        .map(|i| {
            let eta = i as f64 / g as f64;
            (eta, p.eval_eta(eta).abs())
        })
        .collect();
    let mut out = Vec::new();
    for i in 1..g {
        if vals[i].1 > vals[i - 1].1 && vals[i].1 >= vals[i + 1].1 {
            out.push(vals[i]);
        }
    }
    out
}

/// Per-coefficient decay bounds: |beta_j| against
/// (2 pi)^{d/2} c^{2j+m} / (2^{4j+2m+d} (4j+2m+d) |mu|) * (ec/X)^X with
/// X = 2j + m + (d+1)/2; the hypothesis is j >= ec/2.
pub fn coeff_decay_report(p: &RadialProlate, s: &SpectralEigenvalues) -> Vec<crate::report::BoundReport> {
    let d = p.params.d as f64;
    let m = p.params.m as f64;
    let c = p.params.c;
    let gate = std::f64::consts::E * c / 2.0;
    let mut out = Vec::new();
    for (j, &cj) in p.coeffs.iter().enumerate() {
        let jf = j as f64;
        let x_expo = 2.0 * jf + m + (d + 1.0) / 2.0;
        let log_bound = d / 2.0 * (2.0 * std::f64::consts::PI).ln() + (2.0 * jf + m) * c.ln()
            - (4.0 * jf + 2.0 * m + d) * std::f64::consts::LN_2
            - (4.0 * jf + 2.0 * m + d).ln()
            - s.mu_modulus.ln()
            + x_expo * (std::f64::consts::E * c / x_expo).ln();
        out.push(crate::report::BoundReport::check(
            "coeff-decay",
            format!("d={} c={} m={} k={} j={}", p.params.d, c, p.params.m, p.k, j),
            cj.abs(),
            log_bound.exp(),
            jf >= gate,
        ));
    }
    out
}

/// Verify the Fourier-image relation: for xi inside B^d(0, c), the finite
/// Fourier integral of the unit-norm eigenfunction over B^d has modulus
/// |mu| |psi(xi/c)|. Reports the maximum relative deviation over the samples.
pub fn fourier_image_check(p: &RadialProlate, s: &SpectralEigenvalues) -> Result<crate::report::BoundReport> {
    let d = p.params.d;
    if d != 2 && d != 3 {
        return Err(Error::UnsupportedDimension {
            d,
            what: "fourier_image_check (needs pointwise harmonics)",
        });
    }
    let c = p.params.c;
    let cub = crate::quadrature::ball_cubature(d, 90, 128)?;
    let ell = 1usize;
    let scale = 2.0f64.powf((p.params.beta() + 2.0) / 2.0);
    let mut samples: Vec<Vec<f64>> = (0..5)
        .map(|i| {
            let t = 0.15 + 0.17 * i as f64;
            let th = 1.0 + 0.9 * i as f64;
            match d {
                2 => vec![c * t * th.cos(), c * t * th.sin()],
                _ => {
                    let zc = -0.8 + 0.4 * i as f64;
                    let st = (1.0f64 - zc * zc).sqrt();
                    vec![c * t * st * th.cos(), c * t * st * th.sin(), c * t * zc]
                }
            }
        })
        .collect();
    if p.params.m == 0 {
        // scalar case at the origin
        samples.push(vec![0.0; d]);
    }
    let mut worst = 0.0f64;
    for xi in &samples {
        let re = cub.integrate(|y| {
            let dot: f64 = y.iter().zip(xi).map(|(a, b)| a * b).sum();
            dot.cos() * scale * p.eval(ell, y).unwrap()
        })?;
        let im = cub.integrate(|y| {
            let dot: f64 = y.iter().zip(xi).map(|(a, b)| a * b).sum();
            -dot.sin() * scale * p.eval(ell, y).unwrap()
        })?;
        let lhs = (re * re + im * im).sqrt();
        let inner: Vec<f64> = xi.iter().map(|t| t / c).collect();
        let rhs = s.mu_modulus * (scale * p.eval(ell, &inner)?).abs();
        if rhs > 1e-10 {
            worst = worst.max((lhs / rhs - 1.0).abs());
        }
    }
    Ok(crate::report::BoundReport::check(
        "fourier-image",
        format!("d={d} c={c} m={} k={}", p.params.m, p.k),
        worst,
        1e-6,
        true,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::gauss_jacobi;

    #[test]
    fn multiplication_matrix_matches_quadrature() {
        // primary guard on the hand-derived recurrence entries
        for &beta in &[0.0, 0.5, 1.0, 2.5, 5.0, -0.5] {
            let k = 12;
            let (diag, off) = multiplication_matrix(beta, k);
            let rule = gauss_jacobi(2 * k + 4, 0.0, beta).unwrap();
            let p = JacobiParams { alpha: 0.0, beta };
            for i in 0..k {
                for j in i..k {
                    let v = rule
                        .integrate(|x| {
                            (1.0 + x)
                                * crate::specfun::jacobi_p_normalized(i, p, x)
                                * crate::specfun::jacobi_p_normalized(j, p, x)
                        })
                        .unwrap();
                    let expect = if i == j {
                        diag[i]
                    } else if j == i + 1 {
                        off[i]
                    } else {
                        0.0
                    };
                    assert!((v - expect).abs() < 1e-12, "beta={beta} ({i},{j}): {v} vs {expect}");
                }
            }
        }
    }

    #[test]
    fn zero_bandwidth_limit() {
        let params = ProblemParams::new(2, 1e-8, 1).unwrap();
        for k in 0..6 {
            let p = solve_prolate(params, k, None).unwrap();
            let expect = crate::ballpoly::ball_poly_operator_eigenvalue(k, 1, 2) as f64;
            assert!((p.chi - expect).abs() < 1e-10, "k={k}: {} vs {expect}", p.chi);
            for (j, &cj) in p.coeffs.iter().enumerate() {
                let e = if j == k { 1.0 } else { 0.0 };
                assert!((cj - e).abs() < 1e-8, "k={k} j={j}");
            }
        }
    }

    #[test]
    fn chi_sandwich_small_grid() {
        for d in 1..=3usize {
            for m in 0..=2usize {
                for &c in &[1.0, 5.0] {
                    let params = ProblemParams::new(d, c, m).unwrap();
                    for k in 0..=4usize {
                        let p = solve_prolate(params, k, None).unwrap();
                        let chi0 = crate::ballpoly::ball_poly_operator_eigenvalue(k, m, d) as f64;
                        assert!(p.chi >= chi0 - 1e-10 * c * c, "d={d} m={m} c={c} k={k}");
                        assert!(p.chi <= chi0 + c * c * (1.0 + 1e-10), "d={d} m={m} c={c} k={k}");
                    }
                }
            }
        }
    }

    #[test]
    fn weighted_norm_is_coefficient_norm() {
        let params = ProblemParams::new(3, 4.0, 1).unwrap();
        let p = solve_prolate(params, 2, None).unwrap();
        let beta = params.beta();
        let rule = gauss_jacobi(2 * p.trunc, 0.0, beta).unwrap();
        let norm = rule.integrate(|eta| p.eval_eta(eta).powi(2)).unwrap();
        assert!((norm - 1.0).abs() < 1e-10, "{norm}");
        // radial form: ∫_0^1 r^{2m+d-1} phi(2r^2-1)^2 dr = 2^{-(beta+2)}
        let gl = gauss_legendre_01(200).unwrap();
        let radial = gl
            .integrate(|r| {
                r.powi((2 * params.m + params.d - 1) as i32) * p.eval_eta(2.0 * r * r - 1.0).powi(2)
            })
            .unwrap();
        assert!((radial - 2.0f64.powf(-(beta + 2.0))).abs() < 1e-10);
    }

    #[test]
    fn radial_orthogonality_between_indices() {
        let params = ProblemParams::new(2, 5.0, 0).unwrap();
        let p0 = solve_prolate(params, 0, None).unwrap();
        let p1 = solve_prolate(params, 1, Some(p0.trunc)).unwrap();
        let dot: f64 = p0.coeffs.iter().zip(&p1.coeffs).map(|(a, b)| a * b).sum();
        assert!(dot.abs() < 1e-10);
        let beta = params.beta();
        let rule = gauss_jacobi(2 * p0.trunc, 0.0, beta).unwrap();
        let v = rule.integrate(|eta| p0.eval_eta(eta) * p1.eval_eta(eta)).unwrap();
        assert!(v.abs() < 1e-10);
    }

    #[test]
    fn hankel_eigenrelation_and_nu_identity() {
        let params = ProblemParams::new(2, 3.0, 1).unwrap();
        let p = solve_prolate(params, 1, None).unwrap();
        let s = hankel_eigenvalue(&p).unwrap();
        assert!(s.commutation_residual < 1e-10, "residual {}", s.commutation_residual);
        assert!(s.nu_q > 0.0 && s.nu_q < 1.0);
        assert!((s.nu_q - params.c * s.alpha_h * s.alpha_h).abs() < 1e-14 * s.nu_q);
        let a = hankel_alpha_spectral(&p).unwrap();
        assert!(
            (a - s.alpha_h).abs() < 1e-10 * s.alpha_h.abs().max(1e-3),
            "{a} vs {}",
            s.alpha_h
        );
    }

    #[test]
    fn spectral_alpha_sign_alternation() {
        let params = ProblemParams::new(1, 1.0, 0).unwrap();
        for k in 0..6 {
            let p = solve_prolate(params, k, None).unwrap();
            let a = hankel_alpha_spectral(&p).unwrap();
            let expect = if k % 2 == 0 { 1.0 } else { -1.0 };
            assert_eq!(a.signum(), expect, "k={k}: {a:e}");
        }
    }

    #[test]
    fn classical_even_case_d1() {
        // d=1, m=0, c=1: chi_0 = 0.319000 and nu_0 = lambda_0(1) = 0.5725818...
        let params = ProblemParams::new(1, 1.0, 0).unwrap();
        let p = solve_prolate(params, 0, None).unwrap();
        assert!((p.chi - 0.319).abs() < 5e-4, "{}", p.chi);
        let s = hankel_eigenvalue(&p).unwrap();
        assert!((s.nu_q - 0.5725818).abs() < 1e-6, "{}", s.nu_q);
    }

    #[test]
    fn json_roundtrip() {
        let params = ProblemParams::new(2, 2.5, 1).unwrap();
        let p = solve_prolate(params, 1, None).unwrap();
        let q = RadialProlate::from_json(&p.to_json()).unwrap();
        assert_eq!(p.k, q.k);
        assert_eq!(p.trunc, q.trunc);
        assert_eq!(p.chi.to_bits(), q.chi.to_bits());
        for (a, b) in p.coeffs.iter().zip(&q.coeffs) {
            assert_eq!(a.to_bits(), b.to_bits());
        }
        let s = hankel_eigenvalue(&p).unwrap();
        let s2 = SpectralEigenvalues::from_json(&s.to_json()).unwrap();
        assert_eq!(s.nu_q.to_bits(), s2.nu_q.to_bits());
    }

    #[test]
    fn tail_refinement_consistency() {
        // deep-tail coefficients agree relatively between truncations
        let params = ProblemParams::new(2, 5.0, 0).unwrap();
        let p1 = solve_prolate(params, 1, None).unwrap();
        let p2 = solve_prolate(params, 1, Some(2 * p1.trunc)).unwrap();
        for j in 0..p1.trunc - 1 {
            let a = p1.coeffs[j];
            let b = p2.coeffs[j];
            if a.abs() > 1e-200 {
                assert!(
                    ((a - b) / a).abs() < 1e-7,
                    "j={j}: {a:e} vs {b:e} (rel {:e})",
                    ((a - b) / a).abs()
                );
            }
        }
    }

    #[test]
    fn chi_increasing_in_c() {
        let mut prev = 0.0;
        for &c in &[0.5, 1.0, 2.0, 4.0, 8.0] {
            let params = ProblemParams::new(2, c, 1).unwrap();
            let p = solve_prolate(params, 3, None).unwrap();
            assert!(p.chi > prev, "c={c}");
            prev = p.chi;
        }
    }

    #[test]
    fn eigenvector_orthonormality_block() {
        let params = ProblemParams::new(2, 5.0, 0).unwrap();
        let op = build_radial_matrix(params, 50).unwrap();
        let t = SymmetricTridiagonal::new(op.diag, op.offdiag).unwrap();
        let e = eigh_tridiagonal(&t, Accumulate::Full).unwrap();
        let vs = e.vectors.unwrap();
        for a in 0..12 {
            for b in 0..12 {
                let dot: f64 = vs[a].iter().zip(&vs[b]).map(|(x, y)| x * y).sum();
                let expect = if a == b { 1.0 } else { 0.0 };
                assert!((dot - expect).abs() <= 1e-10, "({a},{b}): {dot}");
            }
        }
    }
}
