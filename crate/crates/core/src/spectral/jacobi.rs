//! Cyclic Jacobi eigensolver for dense symmetric matrices.

use crate::error::{Error, Result};

/// Dense symmetric matrix, row-major. Symmetry is exact as stored.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseSymMatrix {
    order: usize,
    data: Vec<f64>,
}

impl DenseSymMatrix {
    /// Builds from square rows; fails unless `rows[i][j] == rows[j][i]`
    /// exactly for all entries.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().position(|r| r.len() != n) {
            return Err(Error::InvalidParameter(format!(
                "row {bad} has {} entries, expected {n}",
                rows[bad].len()
            )));
        }
        for (i, row) in rows.iter().enumerate() {
            if let Some(j) = (i + 1..n).find(|&j| row[j] != rows[j][i]) {
                return Err(Error::NotSymmetric { row: i, col: j });
            }
        }
        Ok(Self {
            order: n,
            data: rows.iter().flatten().copied().collect(),
        })
    }

    /// Symmetric matrix from its upper triangle generator `f(i, j)`, `i <= j`.
    pub fn from_upper(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            for j in i..n {
                let x = f(i, j);
                data[i * n + j] = x;
                data[j * n + i] = x;
            }
        }
        Self { order: n, data }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.order + j]
    }

    /// Maximum absolute row sum.
    pub fn norm_inf(&self) -> f64 {
        self.data
            .chunks(self.order.max(1))
            .map(|row| row.iter().map(|x| x.abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    /// `self · x`.
    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        self.data
            .chunks(self.order.max(1))
            .take(self.order)
            .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }
}

/// Eigenpairs with eigenvalues ascending. `vectors[j]` is the unit
/// eigenvector for `values[j]`.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenPairs {
    pub values: Vec<f64>,
    pub vectors: Vec<Vec<f64>>,
}

pub const MAX_SWEEPS: usize = 100;

/// Relative off-diagonal Frobenius norm at which the sweep loop stops.
const OFF_DIAGONAL_TOL: f64 = 1e-14;

/// Full eigendecomposition by cyclic Jacobi rotations.
pub fn eigen_symmetric(m: &DenseSymMatrix) -> Result<EigenPairs> {
    let n = m.order;
    let mut a = m.data.clone();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let scale = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let off_norm = |a: &[f64]| {
        let mut s = 0.0;
        for i in 0..n {
            for j in i + 1..n {
                s += a[i * n + j] * a[i * n + j];
            }
        }
        (2.0 * s).sqrt()
    };

    let mut converged = false;
    for sweep in 0..MAX_SWEEPS {
        if off_norm(&a) <= OFF_DIAGONAL_TOL * scale {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let (app, aqq) = (a[p * n + p], a[q * n + q]);
                // Late sweeps: drop entries that no longer register against
                // either diagonal.
                if sweep > 3 {
                    let g = 100.0 * apq.abs();
                    if app.abs() + g == app.abs() && aqq.abs() + g == aqq.abs() {
                        a[p * n + q] = 0.0;
                        a[q * n + p] = 0.0;
                        continue;
                    }
                }
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;

                for k in 0..n {
                    let (akp, akq) = (a[k * n + p], a[k * n + q]);
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p * n + k], a[q * n + k]);
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for k in 0..n {
                    let (vkp, vkq) = (v[k * n + p], v[k * n + q]);
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    if !converged {
        let residual = off_norm(&a);
        if residual > OFF_DIAGONAL_TOL * scale {
            return Err(Error::NoConvergence {
                sweeps: MAX_SWEEPS,
                residual,
            });
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i * n + i].total_cmp(&a[j * n + j]).then(i.cmp(&j)));
    let values = order.iter().map(|&i| a[i * n + i]).collect();
    let vectors = order
        .iter()
        .map(|&j| (0..n).map(|k| v[k * n + j]).collect())
        .collect();
    Ok(EigenPairs { values, vectors })
}

/// The `k` smallest eigenpairs, ascending.
pub fn eigen_smallest_k(m: &DenseSymMatrix, k: usize) -> Result<EigenPairs> {
    if k == 0 || k > m.order {
        return Err(Error::InvalidParameter(format!(
            "k = {k} must lie in 1..={}",
            m.order
        )));
    }
    let mut all = eigen_symmetric(m)?;
    all.values.truncate(k);
    all.vectors.truncate(k);
    Ok(all)
}
