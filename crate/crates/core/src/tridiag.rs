//! Symmetric tridiagonal eigensolver: implicit-shift QL in the classic
//! tql2 formulation, with three accumulation modes. `FirstRow` carries only
//! the first component of each eigenvector through the rotations, which is all
//! Golub-Welsch quadrature needs and keeps rule construction O(n^2).

use crate::error::{Error, Result};

/// Symmetric tridiagonal matrix; `offdiag[i]` couples rows `i` and `i+1`.
#[derive(Debug, Clone)]
pub struct SymmetricTridiagonal {
    pub diag: Vec<f64>,
    pub offdiag: Vec<f64>,
}

impl SymmetricTridiagonal {
    pub fn new(diag: Vec<f64>, offdiag: Vec<f64>) -> Result<Self> {
        if diag.is_empty() || offdiag.len() + 1 != diag.len() {
            return Err(Error::InvalidParameter(format!(
                "tridiagonal sizes inconsistent: {} diagonal, {} off-diagonal",
                diag.len(),
                offdiag.len()
            )));
        }
        Ok(SymmetricTridiagonal { diag, offdiag })
    }

    pub fn size(&self) -> usize {
        self.diag.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Accumulate {
    None,
    FirstRow,
    Full,
}

/// Eigendecomposition result, sorted by ascending eigenvalue.
#[derive(Debug, Clone)]
pub struct TridiagEigen {
    pub values: Vec<f64>,
    /// First component of each (unit) eigenvector, when requested.
    pub first_row: Option<Vec<f64>>,
    /// Full eigenvectors (column j of the orthogonal factor), when requested.
    pub vectors: Option<Vec<Vec<f64>>>,
}

const MAX_SWEEPS: usize = 60;

pub fn eigh_tridiagonal(t: &SymmetricTridiagonal, acc: Accumulate) -> Result<TridiagEigen> {
    let n = t.size();
    let mut d = t.diag.clone();
    let mut e = t.offdiag.clone();
    e.push(0.0);

    let mut row: Vec<f64> = match acc {
        Accumulate::FirstRow => {
            let mut r = vec![0.0; n];
            r[0] = 1.0;
            r
        }
        _ => Vec::new(),
    };
    let mut z: Vec<Vec<f64>> = match acc {
        Accumulate::Full => (0..n)
            .map(|i| {
                let mut col = vec![0.0; n];
                col[i] = 1.0;
                col
            })
            .collect(),
        _ => Vec::new(),
    };
    // z is stored row-major here: z[k][j] entry (k, j); columns become eigenvectors.

    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > MAX_SWEEPS {
                return Err(Error::EigenNonConvergence {
                    size: n,
                    iterations: MAX_SWEEPS,
                });
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let mut s = 1.0;
            let mut c = 1.0;
            let mut p = 0.0;
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                match acc {
                    Accumulate::FirstRow => {
                        let f = row[i + 1];
                        row[i + 1] = s * row[i] + c * f;
                        row[i] = c * row[i] - s * f;
                    }
                    Accumulate::Full => {
                        for zk in z.iter_mut() {
                            let f = zk[i + 1];
                            zk[i + 1] = s * zk[i] + c * f;
                            zk[i] = c * zk[i] - s * f;
                        }
                    }
                    Accumulate::None => {}
                }
            }
            if r == 0.0 && i > l {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }

    // sort ascending, carrying the accumulated data
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| d[a].total_cmp(&d[b]));
    let values: Vec<f64> = order.iter().map(|&j| d[j]).collect();
    let first_row = match acc {
        Accumulate::FirstRow => Some(order.iter().map(|&j| row[j]).collect()),
        _ => None,
    };
    let vectors = match acc {
        Accumulate::Full => Some(
            order
                .iter()
                .map(|&j| (0..n).map(|k| z[k][j]).collect::<Vec<f64>>())
                .collect(),
        ),
        _ => None,
    };
    Ok(TridiagEigen {
        values,
        first_row,
        vectors,
    })
}
