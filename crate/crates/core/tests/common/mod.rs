//! Shared oracle machinery for the integration tests: a dense symmetric
//! eigensolver (cyclic Jacobi rotations) independent of the library's
//! tridiagonal QL path.

/// Eigenvalues of a dense symmetric matrix by cyclic Jacobi rotations,
/// returned ascending. O(n^3) per sweep; plenty for oracle sizes.
pub fn dense_symmetric_eigenvalues(mut a: Vec<Vec<f64>>) -> Vec<f64> {
    let n = a.len();
    for _sweep in 0..100 {
        let mut off = 0.0f64;
        for i in 0..n {
            for j in i + 1..n {
                off += a[i][j] * a[i][j];
            }
        }
        if off.sqrt() < 1e-14 * frobenius(&a).max(1e-300) {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut ev: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    ev.sort_by(|x, y| x.total_cmp(y));
    ev
}

fn frobenius(a: &[Vec<f64>]) -> f64 {
    a.iter().flat_map(|r| r.iter()).map(|x| x * x).sum::<f64>().sqrt()
}

/// Eigenvalues sorted by descending modulus.
pub fn dense_eigenvalues_by_modulus(a: Vec<Vec<f64>>) -> Vec<f64> {
    let mut ev = dense_symmetric_eigenvalues(a);
    ev.sort_by(|x, y| y.abs().total_cmp(&x.abs()));
    ev
}
