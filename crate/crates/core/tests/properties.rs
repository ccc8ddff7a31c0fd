//! Property-based invariants: quadrature exactness on random polynomials,
//! Bessel recurrence consistency, orthonormality of the normalized Jacobi
//! family, and the zonal-kernel identity at random geometry.

use ball_prolate::harmonics::{harmonic_dim, sph_basis_eval, zonal_kernel};
use ball_prolate::quadrature::{gauss_jacobi, gauss_legendre};
use ball_prolate::specfun::{bessel_j_value, gegenbauer_c, jacobi_p, jacobi_p_normalized, JacobiParams};
use proptest::prelude::*;

fn horner(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gauss_legendre_exact_on_random_polynomials(
        coeffs in proptest::collection::vec(-1.0f64..1.0, 1..12),
        n in 6usize..30,
    ) {
        let rule = gauss_legendre(n).unwrap();
        prop_assume!(coeffs.len() <= rule.exactness_degree + 1);
        let quad = rule.integrate(|x| horner(&coeffs, x)).unwrap();
        // analytic: ∫ x^k over [-1,1] = [1 - (-1)^{k+1}]/(k+1)
        let exact: f64 = coeffs
            .iter()
            .enumerate()
            .map(|(k, &c)| if k % 2 == 0 { 2.0 * c / (k as f64 + 1.0) } else { 0.0 })
            .sum();
        prop_assert!((quad - exact).abs() < 1e-12 * exact.abs().max(1.0));
    }

    #[test]
    fn gauss_jacobi_matches_reference_rule(
        coeffs in proptest::collection::vec(-1.0f64..1.0, 1..10),
        alpha in -0.9f64..3.0,
        beta in -0.9f64..5.0,
    ) {
        let small = gauss_jacobi(8, alpha, beta).unwrap();
        let fine = gauss_jacobi(48, alpha, beta).unwrap();
        let a = small.integrate(|x| horner(&coeffs, x)).unwrap();
        let b = fine.integrate(|x| horner(&coeffs, x)).unwrap();
        prop_assert!((a - b).abs() < 1e-11 * b.abs().max(1.0), "{a} vs {b}");
    }

    #[test]
    fn bessel_three_term_recurrence(nu in 1.0f64..40.0, x in 0.05f64..80.0) {
        let jm = bessel_j_value(nu - 1.0, x).unwrap();
        let j0 = bessel_j_value(nu, x).unwrap();
        let jp = bessel_j_value(nu + 1.0, x).unwrap();
        let scale = jm.abs().max(j0.abs()).max(jp.abs()).max(1e-280);
        prop_assert!((jm + jp - 2.0 * nu / x * j0).abs() <= 1e-10 * scale);
    }

    #[test]
    fn jacobi_orthonormality_random_degree(n in 0usize..12, beta in -0.45f64..4.0) {
        let p = JacobiParams { alpha: 0.0, beta };
        let rule = gauss_jacobi(2 * n + 6, 0.0, beta).unwrap();
        let diag = rule.integrate(|x| jacobi_p_normalized(n, p, x).powi(2)).unwrap();
        prop_assert!((diag - 1.0).abs() < 1e-12, "{diag}");
        if n > 0 {
            let cross = rule
                .integrate(|x| jacobi_p_normalized(n, p, x) * jacobi_p_normalized(n - 1, p, x))
                .unwrap();
            prop_assert!(cross.abs() < 1e-12, "{cross}");
        }
    }

    #[test]
    fn gegenbauer_jacobi_proportionality(n in 0usize..9, lambda in 0.05f64..3.0, x in -1.0f64..1.0) {
        // C_n^{(lambda)} is proportional to P_n^{(lambda-1/2, lambda-1/2)};
        // check the ratio against the value at a reference point
        let p = JacobiParams { alpha: lambda - 0.5, beta: lambda - 0.5 };
        let c_ref = gegenbauer_c(n, lambda, 0.73).unwrap();
        let j_ref = jacobi_p(n, p, 0.73);
        prop_assume!(j_ref.abs() > 1e-8 && c_ref.abs() > 1e-12);
        let ratio = c_ref / j_ref;
        let lhs = gegenbauer_c(n, lambda, x).unwrap();
        let rhs = ratio * jacobi_p(n, p, x);
        prop_assert!((lhs - rhs).abs() <= 1e-11 * lhs.abs().max(1.0), "{lhs} vs {rhs}");
    }

    #[test]
    fn addition_formula_random_geometry(n in 0usize..7, a in 0.0f64..6.28, b in 0.0f64..6.28) {
        let x = [a.cos(), a.sin()];
        let y = [b.cos(), b.sin()];
        let mut s = 0.0;
        for ell in 1..=harmonic_dim(2, n).unwrap() as usize {
            s += sph_basis_eval(2, n, ell, &x).unwrap() * sph_basis_eval(2, n, ell, &y).unwrap();
        }
        let zk = zonal_kernel(2, n, (a - b).cos()).unwrap();
        prop_assert!((s - zk).abs() < 1e-10);
    }
}
