//! Spectrum tables of the concentration operator and the verification of the
//! decay, trace, Hilbert-Schmidt, counting and sup-norm statements.

use crate::error::{Error, Result};
use crate::harmonics::harmonic_dim;
use crate::prolate::{
    hankel_alpha_spectral_family, solve_family, sup_norm, ProblemParams,
};
use crate::quadrature::gauss_legendre;
use crate::report::BoundReport;
use crate::specfun::{bessel_j_value, gamma_fn, ALPHA_ZERO};
use rayon::prelude::*;

/// Multiplicity of the radial eigenvalue family (d, m): the count of
/// orthonormal degree-m harmonics, with the two-point sphere S^0 contributing
/// one even (m = 0) and one odd (m = 1) channel.
pub fn multiplicity(d: usize, m: usize) -> u64 {
    if d == 1 {
        if m <= 1 {
            1
        } else {
            0
        }
    } else {
        harmonic_dim(d, m).expect("d >= 2")
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SpectrumEntry {
    pub m: usize,
    pub k: usize,
    pub multiplicity: u64,
    pub chi: f64,
    pub alpha: f64,
    pub nu: f64,
}

/// All eigenvalues with non-negligible concentration, sorted by chi ascending
/// (ties by (m, k)); `tail_bound` bounds the total nu mass of everything the
/// enumeration dropped.
#[derive(Debug, Clone)]
pub struct SpectrumTable {
    pub d: usize,
    pub c: f64,
    pub entries: Vec<SpectrumEntry>,
    pub tail_bound: f64,
}

impl SpectrumTable {
    pub fn trace_sum(&self) -> f64 {
        self.entries.iter().map(|e| e.multiplicity as f64 * e.nu).sum()
    }

    pub fn hs_sum(&self) -> f64 {
        self.entries.iter().map(|e| e.multiplicity as f64 * e.nu * e.nu).sum()
    }

    pub fn count_at_least(&self, delta: f64) -> u64 {
        self.entries.iter().filter(|e| e.nu >= delta).map(|e| e.multiplicity).sum()
    }

    /// Sum of mult * nu over eigenvalues >= delta.
    pub fn mass_at_least(&self, delta: f64) -> f64 {
        self.entries
            .iter()
            .filter(|e| e.nu >= delta)
            .map(|e| e.multiplicity as f64 * e.nu)
            .sum()
    }
}

/// Closed-form trace of the concentration operator: c^d / (2^d Gamma(d/2+1)^2).
pub fn trace_formula(d: usize, c: f64) -> f64 {
    let g = gamma_fn(d as f64 / 2.0 + 1.0).expect("positive");
    c.powi(d as i32) / (2.0f64.powi(d as i32) * g * g)
}

fn solve_channel(d: usize, c: f64, m: usize, per_entry_tol: f64) -> Result<Vec<SpectrumEntry>> {
    let mult = multiplicity(d, m);
    let mut kmax = ((std::f64::consts::E * c / 4.0).ceil() as usize + 6).max(8);
    for _ in 0..5 {
        let params = ProblemParams::new(d, c, m)?;
        let family = solve_family(params, kmax)?;
        let alphas = hankel_alpha_spectral_family(&family)?;
        let mut out = Vec::new();
        for (p, &a) in family.iter().zip(&alphas) {
            let nu = c * a * a;
            out.push(SpectrumEntry {
                m,
                k: p.k,
                multiplicity: mult,
                chi: p.chi,
                alpha: a,
                nu,
            });
            if nu < per_entry_tol && p.k >= 1 {
                return Ok(out);
            }
        }
        kmax *= 2;
    }
    Err(Error::Other(format!(
        "spectrum channel (d={d}, c={c}, m={m}) did not decay below {per_entry_tol:e}"
    )))
}

/// Enumerate every (m, k) with concentration above the per-entry threshold and
/// certify the dropped tail by geometric extrapolation.
pub fn build_spectrum(d: usize, c: f64, tail_tol: f64) -> Result<SpectrumTable> {
    if !(tail_tol > 0.0) {
        return Err(Error::InvalidParameter("tail_tol must be positive".into()));
    }
    let per_entry = tail_tol * 1e-3;
    // channels are independent; enumerate in blocks so the m loop can stop
    let mut channels: Vec<Vec<SpectrumEntry>> = Vec::new();
    let mut m = 0usize;
    let mut consecutive_small = 0usize;
    let mut m_exhausted = false;
    loop {
        if multiplicity(d, m) == 0 {
            m_exhausted = true;
            break;
        }
        let block: Vec<usize> = (m..m + 4).filter(|&mm| multiplicity(d, mm) > 0).collect();
        let solved: Vec<Vec<SpectrumEntry>> = block
            .par_iter()
            .map(|&mm| solve_channel(d, c, mm, per_entry))
            .collect::<Result<Vec<_>>>()?;
        let mut stop = false;
        for ch in solved {
            let head = ch.first().map(|e| e.nu).unwrap_or(0.0);
            channels.push(ch);
            if head < per_entry {
                consecutive_small += 1;
                if consecutive_small >= 2 {
                    stop = true;
                    break;
                }
            } else {
                consecutive_small = 0;
            }
        }
        if stop {
            break;
        }
        m = block.last().unwrap() + 1;
    }

    // dropped-tail bound: the k tail of each channel, plus (when the m loop
    // stopped on small heads rather than running out of channels) a geometric
    // bound on every channel never started
    let mut tail = 0.0f64;
    for ch in &channels {
        if ch.len() >= 2 {
            let last = ch[ch.len() - 1];
            let prev = ch[ch.len() - 2];
            let ratio = if prev.nu > 0.0 { (last.nu / prev.nu).min(0.5) } else { 0.5 };
            tail += last.multiplicity as f64 * last.nu * ratio / (1.0 - ratio);
        }
    }
    if !m_exhausted && channels.len() >= 2 {
        let heads: Vec<f64> = channels.iter().map(|ch| ch.first().map(|e| e.nu).unwrap_or(0.0)).collect();
        let h_last = heads[heads.len() - 1];
        let h_prev = heads[heads.len() - 2];
        let rho = if h_prev > 0.0 { (h_last / h_prev).min(0.5) } else { 0.5 };
        let m_last = channels.len() - 1;
        let mult_last = multiplicity(d, m_last).max(1) as f64;
        let mult_step = if d == 3 { 2.0 } else { 0.0 };
        // sum_{j>=1} (A + B j) rho^j, each unstarted channel carrying ~2x its head
        let geo = mult_last * rho / (1.0 - rho) + mult_step * rho / ((1.0 - rho) * (1.0 - rho));
        tail += 2.0 * h_last * geo;
    }
    if tail > tail_tol {
        return Err(Error::Other(format!(
            "spectrum tail bound {tail:e} exceeds requested tolerance {tail_tol:e}"
        )));
    }

    let mut entries: Vec<SpectrumEntry> = channels.into_iter().flatten().collect();
    entries.sort_by(|a, b| a.chi.total_cmp(&b.chi).then(a.m.cmp(&b.m)).then(a.k.cmp(&b.k)));
    Ok(SpectrumTable {
        d,
        c,
        entries,
        tail_bound: tail,
    })
}

/// Mercer trace identity: sum mult*nu = c^d/(2^d Gamma(d/2+1)^2).
pub fn trace_check(table: &SpectrumTable, tail_tol: f64) -> BoundReport {
    BoundReport::check_close(
        "trace",
        format!("d={} c={}", table.d, table.c),
        table.trace_sum(),
        trace_formula(table.d, table.c),
        tail_tol + 1e-8,
        true,
    )
}

/// Kernel double integral sum nu^2 = (c^{2d}/(2 pi)^d) ∫∫ K(c|x-y|)^2, reduced
/// through the distance distribution of two points in B^d (d <= 2).
pub fn hs_double_integral(d: usize, c: f64) -> Result<f64> {
    if d > 2 {
        return Err(Error::UnsupportedDimension {
            d,
            what: "Hilbert-Schmidt kernel integral (reduction implemented for d <= 2)",
        });
    }
    let df = d as f64;
    let ksq = |t: f64| -> f64 {
        let k = if t < 1e-8 {
            1.0 / (2.0f64.powf(df / 2.0) * gamma_fn(df / 2.0 + 1.0).unwrap())
        } else {
            bessel_j_value(df / 2.0, t).unwrap() / t.powf(df / 2.0)
        };
        k * k
    };
    let rule = gauss_legendre(600)?.mapped_to(0.0, 2.0)?;
    let weight = |u: f64| -> f64 {
        match d {
            1 => 2.0 * (2.0 - u),
            _ => {
                let lens = 2.0 * (u / 2.0).acos() - (u / 2.0) * (4.0 - u * u).sqrt();
                2.0 * std::f64::consts::PI * u * lens
            }
        }
    };
    let integral = rule.integrate(|u| ksq(c * u) * weight(u))?;
    Ok(c.powi(2 * d as i32) / (2.0 * std::f64::consts::PI).powi(d as i32) * integral)
}

/// Hilbert-Schmidt checks: the exact identity against the kernel double
/// integral (d <= 2), and the informational comparison with the leading-order
/// asymptote c^d/(2^d Gamma(d/2+1)).
pub fn hs_check(table: &SpectrumTable, tol: f64) -> Result<Vec<BoundReport>> {
    let mut out = Vec::new();
    let sum = table.hs_sum();
    if table.d <= 2 {
        let dbl = hs_double_integral(table.d, table.c)?;
        out.push(BoundReport::check_close(
            "hs-identity",
            format!("d={} c={}", table.d, table.c),
            sum,
            dbl,
            tol,
            true,
        ));
    }
    let g = gamma_fn(table.d as f64 / 2.0 + 1.0)?;
    let asym = table.c.powi(table.d as i32) / (2.0f64.powi(table.d as i32) * g);
    out.push(BoundReport::check_close(
        "hs-asymptote-ratio",
        format!("d={} c={} (informational: o(c^d) statement)", table.d, table.c),
        sum / asym,
        1.0,
        0.5,
        false,
    ));
    Ok(out)
}

/// Eigenvalue counting: leading order with a desk-scale guard band, plus the
/// exact two-sided brackets from the trace and the Hilbert-Schmidt sum.
pub fn counting_check(table: &SpectrumTable, delta: f64) -> Result<Vec<BoundReport>> {
    if !(delta > 0.0 && delta < 1.0) {
        return Err(Error::InvalidParameter(format!("delta = {delta} outside (0,1)")));
    }
    let d = table.d;
    let c = table.c;
    let m_count = table.count_at_least(delta) as f64;
    let tr = trace_formula(d, c);
    let leading = tr; // c^d/(2^d Gamma^2(d/2+1))
    let guard = 4.0f64.max(0.15 * c.powi(d as i32 - 1));
    let mut out = vec![BoundReport::check_close(
        "counting-leading",
        format!("d={d} c={c} delta={delta}"),
        m_count,
        leading,
        guard,
        true,
    )];
    let mass = table.mass_at_least(delta);
    out.push(BoundReport::check(
        "counting-lower-bracket",
        format!("d={d} c={c} delta={delta}: delta*M <= sum_{{nu>=delta}} nu"),
        delta * m_count,
        mass,
        true,
    ));
    out.push(BoundReport::check(
        "counting-trace-bracket",
        format!("d={d} c={c} delta={delta}: sum_{{nu>=delta}} nu <= Tr"),
        mass,
        tr,
        true,
    ));
    let marzo = tr - (tr - table.hs_sum()) / (1.0 - delta);
    out.push(BoundReport::check(
        "counting-upper-bracket",
        format!("d={d} c={c} delta={delta}: Marzo lower bound"),
        marzo,
        m_count,
        true,
    ));
    Ok(out)
}

fn decay_rate_log(d: usize, m: usize, c: f64, n: usize) -> f64 {
    let expo = (4 * n + 2 * m + d) as f64;
    expo * (std::f64::consts::E * c / expo).ln()
}

/// Explicit constant of the lower decay bound (evaluated per index, since the
/// printed constant carries the index inside).
pub fn decay_lower_constant(d: usize, m: usize, c: f64, n: usize) -> f64 {
    let alpha = m as f64 + d as f64 / 2.0 - 1.0;
    let g13 = gamma_fn(1.0 / 3.0).expect("positive");
    let inner = g13
        / (2.0f64.powf(2.0 / 3.0)
            * 3.0f64.powf(1.0 / 6.0)
            * std::f64::consts::PI
            * (2.0 * n as f64 + alpha + ALPHA_ZERO + 1.0).powf(1.0 / 3.0));
    inner * inner * (2.0 * std::f64::consts::PI).powf(d as f64 / 2.0) / c.powf((d as f64 + 1.0) / 2.0)
}

/// Decay checks for one (d, m) channel: the lower bound with the explicit
/// constant (as stated, on the concentration eigenvalues), the same bound
/// evaluated against the Hankel eigenvalues (diagnostic), and the upper-decay
/// slope test on the last four indices.
pub fn decay_bounds_check(d: usize, m: usize, c: f64, n_max: usize) -> Result<Vec<BoundReport>> {
    let params = ProblemParams::new(d, c, m)?;
    let family = solve_family(params, n_max)?;
    let alphas = hankel_alpha_spectral_family(&family)?;
    let gate = std::f64::consts::E * c / 4.0;
    let mut out = Vec::new();
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for n in 1..=n_max {
        let nu = c * alphas[n] * alphas[n];
        let log_bound = decay_lower_constant(d, m, c, n).ln() + decay_rate_log(d, m, c, n);
        let cond = n as f64 >= gate;
        out.push(BoundReport::check(
            "decay-lower",
            format!("d={d} m={m} c={c} n={n}"),
            log_bound.exp(),
            nu,
            cond,
        ));
        out.push(BoundReport::check(
            "decay-lower-hankel",
            format!("d={d} m={m} c={c} n={n} (diagnostic: bound vs |alpha_n|)"),
            log_bound.exp(),
            alphas[n].abs(),
            cond,
        ));
        if cond {
            // abscissa (4n+2m+d) ln((4n+2m+d)/(ec))
            xs.push(-decay_rate_log(d, m, c, n));
            ys.push(nu.ln());
        }
    }
    if xs.len() >= 4 {
        let xs4 = &xs[xs.len() - 4..];
        let ys4 = &ys[ys.len() - 4..];
        let xm: f64 = xs4.iter().sum::<f64>() / 4.0;
        let ym: f64 = ys4.iter().sum::<f64>() / 4.0;
        let num: f64 = xs4.iter().zip(ys4).map(|(x, y)| (x - xm) * (y - ym)).sum();
        let den: f64 = xs4.iter().map(|x| (x - xm) * (x - xm)).sum();
        let slope = num / den;
        out.push(BoundReport::check(
            "decay-upper-slope",
            format!("d={d} m={m} c={c}: |slope+1| of ln nu vs (4n+2m+d) ln((4n+2m+d)/(ec)), slope={slope:.4}"),
            (slope + 1.0).abs(),
            0.1,
            true,
        ));
    }
    Ok(out)
}

/// Sup-norm machinery for one channel: boundary-max lemma, local estimate,
/// and the two sup-norm theorem variants, each with its own hypothesis flag.
/// Requires m + d/2 - 1 > 0.
pub fn supnorm_bounds_check(d: usize, m: usize, c: f64, k_max: usize) -> Result<Vec<BoundReport>> {
    let beta = crate::ballpoly::radial_jacobi_beta(d, m);
    if !(beta > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "supnorm machinery needs m + d/2 - 1 > 0 (got {beta}); the m=0, d=2 case is excluded"
        )));
    }
    let params = ProblemParams::new(d, c, m)?;
    let family = solve_family(params, k_max)?;
    let n_over_omega = multiplicity(d, m) as f64 / crate::quadrature::sphere_surface_area(d);
    let a_md = (2.0 * m as f64 + d as f64 - 2.0) / (2.0 * m as f64 + d as f64);
    let mf = m as f64;
    let df = d as f64;
    let mut out = Vec::new();
    for p in &family {
        let chi = p.chi;
        let alpha_l = 0.25 * (chi - p.params.gamma_md());
        let scale_2beta = 2.0f64.powf(beta / 2.0);
        // grid sup over [a_md, 1] in eta
        let g = 2048usize;
        let mut sup_phi = 0.0f64;
        let mut sup_weighted = 0.0f64;
        for i in 0..=g {
            let eta = a_md + (1.0 - a_md) * i as f64 / g as f64;
            let v = (scale_2beta * p.eval_eta(eta)).abs();
            sup_phi = sup_phi.max(v);
            let w = ((1.0 - eta) * (1.0 + eta).powf(mf + df / 2.0)).max(0.0).sqrt();
            sup_weighted = sup_weighted.max(w * v);
        }
        let phi_at_one = (scale_2beta * p.eval_eta(1.0)).abs();
        let cond_b = alpha_l > c * c / 4.0;
        out.push(BoundReport::check(
            "supnorm-boundary-max",
            format!("d={d} m={m} c={c} k={}", p.k),
            sup_phi,
            phi_at_one,
            cond_b,
        ));
        out.push(BoundReport::check(
            "supnorm-local-estimate",
            format!("d={d} m={m} c={c} k={}", p.k),
            sup_weighted,
            (2.0f64.powf(mf + df / 2.0 + 1.0) * (mf + df / 2.0 - 1.0)).sqrt(),
            cond_b,
        ));
        // theorem-max: unit L^2(B^d) eigenfunction via the normalized radial profile
        let (sup_rad, _arg) = sup_norm(p, 2048);
        let sup_psi = 2.0f64.powf((beta + 2.0) / 2.0) * sup_rad * n_over_omega.sqrt();
        let c_md = c * c / 4.0 + (mf + df / 2.0) * (mf + df / 2.0 - 1.0) - 1.0;
        let cond_max = alpha_l
            > ((c * c + 8.0) / (4.0 * (2.0 * mf + df)))
                .max((2.0f64 / 3.0).powi(6) * (std::f64::consts::PI / (mf + df / 2.0 - 1.0)).powi(2) + c_md);
        out.push(BoundReport::check(
            "supnorm-theorem-max",
            format!("d={d} m={m} c={c} k={}", p.k),
            sup_psi,
            1.5 * 3.0f64.sqrt()
                * (2.0f64.powf(mf + df / 2.0 + 1.0) * (mf + df / 2.0 - 1.0)).sqrt()
                * n_over_omega.sqrt()
                * chi.sqrt(),
            cond_max,
        ));
        let cond_a = chi
            > ((c * c + 8.0) / (2.0 * mf + df)).max(
                (2.0f64 / 3.0).powi(6) * (2.0 * std::f64::consts::PI / (mf + df / 2.0 - 1.0)).powi(2)
                    + 4.0 * (mf + df / 2.0) * (mf + df / 2.0 - 1.0)
                    - 4.0
                    + c * c,
            ) + p.params.gamma_md();
        out.push(BoundReport::check(
            "supnorm-theorem-a",
            format!("d={d} m={m} c={c} k={}", p.k),
            sup_psi,
            1.5 * (3.0 * (mf + df / 2.0 - 1.0)).sqrt() * n_over_omega.sqrt() * chi.sqrt(),
            cond_a,
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiplicities() {
        assert_eq!(multiplicity(1, 0), 1);
        assert_eq!(multiplicity(1, 1), 1);
        assert_eq!(multiplicity(1, 2), 0);
        assert_eq!(multiplicity(2, 3), 2);
        assert_eq!(multiplicity(3, 4), 9);
    }

    #[test]
    fn small_spectrum_d1() {
        let t = build_spectrum(1, 1.0, 1e-6).unwrap();
        assert!(t.entries.len() >= 5);
        // nu strictly decreasing within each channel
        for m in 0..=1usize {
            let nus: Vec<f64> = t.entries.iter().filter(|e| e.m == m).map(|e| e.nu).collect();
            for w in nus.windows(2) {
                assert!(w[1] < w[0]);
            }
        }
        // interleaved table sorted by chi
        for w in t.entries.windows(2) {
            assert!(w[0].chi <= w[1].chi);
        }
        let r = trace_check(&t, 1e-6);
        assert!(r.pass, "{r:?}");
    }

    #[test]
    fn trace_d2_c1_quarter() {
        let t = build_spectrum(2, 1.0, 1e-6).unwrap();
        let s = t.trace_sum();
        assert!((s - 0.25).abs() < 1e-7, "{s}");
    }

    #[test]
    fn hs_identity_d1() {
        let t = build_spectrum(1, 1.0, 1e-8).unwrap();
        let dbl = hs_double_integral(1, 1.0).unwrap();
        assert!((t.hs_sum() - dbl).abs() < 1e-8, "{} vs {dbl}", t.hs_sum());
    }

    #[test]
    fn counting_brackets_d1() {
        let t = build_spectrum(1, 5.0, 1e-6).unwrap();
        for &delta in &[0.1, 0.5, 0.9] {
            let reps = counting_check(&t, delta).unwrap();
            for r in &reps {
                if r.name != "counting-leading" {
                    assert!(r.pass, "{r:?}");
                }
            }
        }
    }

    #[test]
    fn decay_reports_shape() {
        let reps = decay_bounds_check(1, 0, 1.0, 8).unwrap();
        let lower: Vec<_> = reps.iter().filter(|r| r.name == "decay-lower").collect();
        assert_eq!(lower.len(), 8);
        // hypothesis gate below ec/4 marks condition_met = false
        let gated = lower.iter().filter(|r| !r.condition_met).count();
        assert_eq!(gated, 0, "ec/4 < 1 so every n >= 1 qualifies at c=1");
        // the diagnostic alpha-form passes everywhere on the grid
        for r in reps.iter().filter(|r| r.name == "decay-lower-hankel") {
            assert!(r.pass, "{r:?}");
        }
        assert!(reps.iter().any(|r| r.name == "decay-upper-slope"));
    }

    #[test]
    fn supnorm_reports_d2_m1() {
        let reps = supnorm_bounds_check(2, 1, 5.0, 8).unwrap();
        let (pass, fail, _skip) = crate::report::tally(&reps);
        assert!(fail == 0, "{:?}", reps.iter().filter(|r| r.condition_met && !r.pass).collect::<Vec<_>>());
        assert!(pass > 10);
        // the m=0, d=2 case is excluded by the hypothesis
        assert!(supnorm_bounds_check(2, 0, 5.0, 4).is_err());
    }

    #[test]
    fn local_maxima_structure() {
        // decreasing-then-increasing local maxima of |phi| on [0, 1]
        let params = ProblemParams::new(2, 5.0, 1).unwrap();
        let family = solve_family(params, 8).unwrap();
        let p = &family[6];
        let maxima = crate::prolate::radial_local_maxima(p, 4096);
        assert!(maxima.len() >= 3, "need several interior maxima, got {}", maxima.len());
        let vals: Vec<f64> = maxima.iter().map(|(_, v)| *v).collect();
        let min_idx = (0..vals.len()).min_by(|&a, &b| vals[a].total_cmp(&vals[b])).unwrap();
        for i in 1..=min_idx {
            assert!(vals[i] <= vals[i - 1] * (1.0 + 1e-9), "not decreasing before the dip");
        }
        for i in min_idx + 1..vals.len() {
            assert!(vals[i] >= vals[i - 1] * (1.0 - 1e-9), "not increasing after the dip");
        }
    }
}
