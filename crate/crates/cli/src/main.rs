//! Command-line front end: eigenvalue tables, eigenfunction samples, and the
//! verification report families, emitted as CSV or JSON.
//!
//! Exit codes: 0 success, 1 invalid configuration, 2 solver failure,
//! 3 verification failure (a report whose hypothesis held did not pass).

use ball_prolate::prolate::{
    g17, hankel_alpha_spectral_family, hankel_eigenvalue, solve_family, solve_prolate, ProblemParams,
    SpectralEigenvalues,
};
use ball_prolate::report::{tally, BoundReport};
use ball_prolate::suite;
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::io::Write;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "ballprolate", version, about = "Prolate spheroidal wave functions on the unit ball")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct OutputOpts {
    /// Output format
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    /// Output path (stdout when omitted)
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Eigenvalue table for one (d, c, m) family
    Eigs {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        c: f64,
        #[arg(long, default_value_t = 0)]
        m: usize,
        /// Largest radial index to solve
        #[arg(long, default_value_t = 5)]
        kmax: usize,
        /// Truncation override
        #[arg(long)]
        trunc: Option<usize>,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Radial samples of one eigenfunction
    Eval {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        c: f64,
        #[arg(long, default_value_t = 0)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        k: usize,
        /// Number of radial grid points on [0, 1]
        #[arg(long, default_value_t = 33)]
        grid: usize,
        /// Truncation override
        #[arg(long)]
        trunc: Option<usize>,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Run a verification family and emit its bound reports
    Verify {
        #[command(subcommand)]
        family: VerifyFamily,
    },
}

#[derive(Args)]
struct VerifyCommon {
    /// Seed for the randomized grids
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    output: OutputOpts,
}

#[derive(Subcommand)]
enum VerifyFamily {
    /// Mercer trace identity for one spectrum table
    Trace {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        c: f64,
        /// Dropped-tail tolerance of the table
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        #[command(flatten)]
        common: VerifyCommon,
    },
    /// Hilbert-Schmidt identity and Landau brackets
    Hs {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        c: f64,
        #[arg(long, default_value_t = 0.5)]
        delta: f64,
        #[command(flatten)]
        common: VerifyCommon,
    },
    /// Eigenvalue counting at level delta
    Counting {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        c: f64,
        #[arg(long, default_value_t = 0.5)]
        delta: f64,
        #[command(flatten)]
        common: VerifyCommon,
    },
    /// Spectral decay bounds for one channel
    Decay {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        c: f64,
        #[arg(long, default_value_t = 0)]
        m: usize,
        #[arg(long, default_value_t = 8)]
        nmax: usize,
        #[command(flatten)]
        common: VerifyCommon,
    },
    /// Sup-norm lemmas and theorems for one channel
    Supnorm {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        c: f64,
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long, default_value_t = 10)]
        kmax: usize,
        #[command(flatten)]
        common: VerifyCommon,
    },
    /// Expansion-coefficient decay bounds
    Coeffdecay {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        c: f64,
        #[arg(long, default_value_t = 0)]
        m: usize,
        #[arg(long, default_value_t = 2)]
        kmax: usize,
        #[command(flatten)]
        common: VerifyCommon,
    },
    /// Projection bound for the prolate family (Gaussian test function)
    TheoremB {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        c: f64,
        #[arg(long, default_value_t = 0)]
        m: usize,
        #[arg(long, default_value_t = 1.0)]
        sigma: f64,
        #[arg(long, default_value_t = 12)]
        nmax: usize,
        #[command(flatten)]
        common: VerifyCommon,
    },
    /// Projection bound for the ball polynomial family
    TheoremC {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        c: f64,
        #[arg(long, default_value_t = 0)]
        m: usize,
        #[arg(long, default_value_t = 1.0)]
        sigma: f64,
        #[arg(long, default_value_t = 12)]
        nmax: usize,
        #[command(flatten)]
        common: VerifyCommon,
    },
    /// Closed-form identity suite
    Identities {
        #[command(flatten)]
        common: VerifyCommon,
    },
    /// Fourier-image relation of solved eigenfunctions
    FourierImage {
        #[command(flatten)]
        common: VerifyCommon,
    },
    /// Every verification family
    All {
        /// Acceptance-scale grids only
        #[arg(long)]
        quick: bool,
        #[command(flatten)]
        common: VerifyCommon,
    },
}

fn main() -> ExitCode {
    env_logger::init();
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // help/version requests are not configuration errors
            if e.use_stderr() {
                eprintln!("{e}");
                return ExitCode::from(1);
            }
            print!("{e}");
            return ExitCode::SUCCESS;
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(AppError::Config(msg)) => {
            eprintln!("configuration error: {msg}");
            ExitCode::from(1)
        }
        Err(AppError::Solver(e)) => {
            eprintln!("solver error: {e}");
            ExitCode::from(2)
        }
        Err(AppError::Io(e)) => {
            eprintln!("io error: {e}");
            ExitCode::from(2)
        }
    }
}

enum AppError {
    Config(String),
    Solver(ball_prolate::Error),
    Io(std::io::Error),
}

impl From<ball_prolate::Error> for AppError {
    fn from(e: ball_prolate::Error) -> Self {
        match e {
            ball_prolate::Error::InvalidParameter(_) | ball_prolate::Error::UnsupportedDimension { .. } => {
                AppError::Config(e.to_string())
            }
            other => AppError::Solver(other),
        }
    }
}

impl From<std::io::Error> for AppError {
    fn from(e: std::io::Error) -> Self {
        AppError::Io(e)
    }
}

fn validate(d: usize, c: f64, pointwise: bool) -> Result<(), AppError> {
    if d == 0 || d > 3 {
        return Err(AppError::Config(format!(
            "--d {d} out of range: cubature-dependent commands require 1 <= d <= 3"
        )));
    }
    if pointwise && d < 2 {
        return Err(AppError::Config(format!(
            "--d {d} unsupported: pointwise evaluation requires d in {{2, 3}}"
        )));
    }
    if !(c > 0.0 && c <= 20.0) {
        return Err(AppError::Config(format!("--c {c} out of range (0, 20]")));
    }
    Ok(())
}

fn emit(output: &OutputOpts, text: &str) -> Result<(), AppError> {
    match &output.out {
        Some(path) => {
            let mut fh = std::fs::File::create(path)?;
            fh.write_all(text.as_bytes())?;
        }
        None => {
            print!("{text}");
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode, AppError> {
    match cli.command {
        Command::Eigs {
            d,
            c,
            m,
            kmax,
            trunc,
            output,
        } => {
            validate(d, c, false)?;
            let params = ProblemParams::new(d, c, m)?;
            let family = match trunc {
                Some(t) => (0..=kmax)
                    .map(|k| solve_prolate(params, k, Some(t)))
                    .collect::<ball_prolate::Result<Vec<_>>>()?,
                None => solve_family(params, kmax)?,
            };
            let spectral: Vec<SpectralEigenvalues> = family
                .iter()
                .map(hankel_eigenvalue)
                .collect::<ball_prolate::Result<Vec<_>>>()?;
            let text = match output.format {
                Format::Csv => {
                    let mut s = String::from("m,k,chi,alpha,mu_modulus,nu_q,commutation_residual,trunc\n");
                    for (p, sp) in family.iter().zip(&spectral) {
                        s.push_str(&format!(
                            "{},{},{},{},{},{},{},{}\n",
                            m,
                            p.k,
                            g17(p.chi),
                            g17(sp.alpha_h),
                            g17(sp.mu_modulus),
                            g17(sp.nu_q),
                            g17(sp.commutation_residual),
                            p.trunc
                        ));
                    }
                    s
                }
                Format::Json => {
                    let rows: Vec<String> = family
                        .iter()
                        .zip(&spectral)
                        .map(|(p, sp)| {
                            format!("{{\"prolate\":{},\"spectral\":{}}}", p.to_json(), sp.to_json())
                        })
                        .collect();
                    format!("[{}]\n", rows.join(","))
                }
            };
            emit(&output, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Eval {
            d,
            c,
            m,
            k,
            grid,
            trunc,
            output,
        } => {
            validate(d, c, false)?;
            let params = ProblemParams::new(d, c, m)?;
            let p = solve_prolate(params, k, trunc)?;
            let text = match output.format {
                Format::Csv => {
                    let mut s = String::from("r,phi_eta,radial,radial_normalized\n");
                    let g = grid.max(2);
                    for i in 0..g {
                        let r = i as f64 / (g - 1) as f64;
                        s.push_str(&format!(
                            "{},{},{},{}\n",
                            g17(r),
                            g17(p.eval_eta(2.0 * r * r - 1.0)),
                            g17(p.eval_radial(r)),
                            g17(p.eval_radial_normalized(r))
                        ));
                    }
                    s
                }
                Format::Json => format!("{}\n", p.to_json()),
            };
            emit(&output, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { family } => run_verify(family),
    }
}

/// Pull a numeric token like `d=2` out of a report parameter string.
fn token(params: &str, key: &str) -> String {
    for part in params.split_whitespace() {
        if let Some(rest) = part.strip_prefix(key) {
            if let Some(v) = rest.strip_prefix('=') {
                return v.trim_end_matches(|c: char| c == ',' || c == ';').to_string();
            }
        }
    }
    String::new()
}

fn reports_csv(reports: &[BoundReport]) -> String {
    let mut s = String::from("name,d,c,m,k,lhs,rhs,slack,condition_met,pass\n");
    for r in reports {
        let k = ["k", "n", "j", "N"]
            .iter()
            .map(|key| token(&r.params, key))
            .find(|v| !v.is_empty())
            .unwrap_or_default();
        s.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{}\n",
            r.name,
            token(&r.params, "d"),
            token(&r.params, "c"),
            token(&r.params, "m"),
            k,
            g17(r.lhs),
            g17(r.rhs),
            g17(r.slack),
            r.condition_met,
            r.pass
        ));
    }
    s
}

fn projection_csv(reports: &[ball_prolate::approx::ProjectionReport]) -> String {
    let mut s = String::from("kind,d,m,c,N,error,rhs_sec4,rhs_intro,eps_term,spectral_term,condition_met,pass\n");
    for r in reports {
        s.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{},{}\n",
            match r.kind {
                ball_prolate::approx::ProjectorKind::Prolate => "prolate",
                ball_prolate::approx::ProjectorKind::BallPoly => "ballpoly",
            },
            r.d,
            r.m,
            g17(r.c),
            r.n,
            g17(r.error),
            g17(r.rhs_sec4),
            g17(r.rhs_intro),
            g17(r.eps_term),
            g17(r.spectral_term),
            r.condition_met,
            r.pass
        ));
    }
    s
}

fn finish(reports: Vec<BoundReport>, common: &VerifyCommon) -> Result<ExitCode, AppError> {
    let (pass, fail, skip) = tally(&reports);
    emit(&common.output, &reports_csv(&reports))?;
    eprintln!("verify: {pass} passed, {fail} failed, {skip} skipped (hypothesis not met)");
    if fail > 0 {
        Ok(ExitCode::from(3))
    } else {
        Ok(ExitCode::SUCCESS)
    }
}

fn run_verify(family: VerifyFamily) -> Result<ExitCode, AppError> {
    match family {
        VerifyFamily::Trace { d, c, tol, common } => {
            validate(d, c, false)?;
            let table = ball_prolate::spectra::build_spectrum(d, c, tol)?;
            finish(vec![ball_prolate::spectra::trace_check(&table, 10.0 * tol)], &common)
        }
        VerifyFamily::Hs { d, c, delta, common } => {
            validate(d, c, false)?;
            if d > 2 {
                return Err(AppError::Config(format!(
                    "--d {d} out of range: the Hilbert-Schmidt kernel integral is implemented for d <= 2"
                )));
            }
            let table = ball_prolate::spectra::build_spectrum(d, c, 1e-8)?;
            let mut reports = ball_prolate::spectra::hs_check(&table, 1e-6)?;
            reports.extend(ball_prolate::spectra::counting_check(&table, delta)?);
            finish(reports, &common)
        }
        VerifyFamily::Counting { d, c, delta, common } => {
            validate(d, c, false)?;
            let table = ball_prolate::spectra::build_spectrum(d, c, 1e-6)?;
            finish(ball_prolate::spectra::counting_check(&table, delta)?, &common)
        }
        VerifyFamily::Decay { d, c, m, nmax, common } => {
            validate(d, c, false)?;
            finish(ball_prolate::spectra::decay_bounds_check(d, m, c, nmax)?, &common)
        }
        VerifyFamily::Supnorm { d, c, m, kmax, common } => {
            validate(d, c, true)?;
            finish(ball_prolate::spectra::supnorm_bounds_check(d, m, c, kmax)?, &common)
        }
        VerifyFamily::Coeffdecay { d, c, m, kmax, common } => {
            validate(d, c, false)?;
            finish(suite::coeff_decay_suite(d, c, &[m], kmax)?, &common)
        }
        VerifyFamily::TheoremB {
            d,
            c,
            m,
            sigma,
            nmax,
            common,
        } => {
            validate(d, c, false)?;
            let f = ball_prolate::approx::make_gaussian_test(d, m, 1, sigma)?;
            let reports = ball_prolate::approx::project_prolate_sweep(&f, c, nmax)?;
            emit(&common.output, &projection_csv(&reports))?;
            let failed = reports.iter().filter(|r| r.condition_met && !r.pass).count();
            eprintln!(
                "verify theorem-b: {} rows, {} failing under their hypotheses",
                reports.len(),
                failed
            );
            Ok(if failed > 0 { ExitCode::from(3) } else { ExitCode::SUCCESS })
        }
        VerifyFamily::TheoremC {
            d,
            c,
            m,
            sigma,
            nmax,
            common,
        } => {
            validate(d, c, false)?;
            let f = ball_prolate::approx::make_gaussian_test(d, m, 1, sigma)?;
            let reports = ball_prolate::approx::project_ballpoly_sweep(&f, c, nmax)?;
            emit(&common.output, &projection_csv(&reports))?;
            let failed = reports.iter().filter(|r| r.condition_met && !r.pass).count();
            eprintln!(
                "verify theorem-c: {} rows, {} failing under their hypotheses",
                reports.len(),
                failed
            );
            Ok(if failed > 0 { ExitCode::from(3) } else { ExitCode::SUCCESS })
        }
        VerifyFamily::Identities { common } => finish(suite::identity_suite(common.seed)?, &common),
        VerifyFamily::FourierImage { common } => finish(suite::fourier_image_suite()?, &common),
        VerifyFamily::All { quick, common } => {
            let started = std::time::Instant::now();
            let groups = suite::run_all(quick, common.seed)?;
            let mut all = Vec::new();
            let mut any_fail = false;
            let mut summary = String::new();
            for (name, reports) in groups {
                let (pass, fail, skip) = tally(&reports);
                summary.push_str(&format!(
                    "{name}: {pass} passed, {fail} failed, {skip} skipped\n"
                ));
                if fail > 0 {
                    any_fail = true;
                }
                all.extend(reports);
            }
            emit(&common.output, &reports_csv(&all))?;
            eprint!("{summary}");
            eprintln!(
                "verify all: {} reports in {:.1} s",
                all.len(),
                started.elapsed().as_secs_f64()
            );
            Ok(if any_fail { ExitCode::from(3) } else { ExitCode::SUCCESS })
        }
    }
}
