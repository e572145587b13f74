//! Cyclic Jacobi eigenvalue iteration for dense symmetric matrices.

use crate::error::{Error, Result};

/// Sweep cap; cyclic Jacobi converges quadratically once the off-diagonal
/// part is small, so hitting this means something is wrong with the input.
pub const MAX_SWEEPS: usize = 100;

/// Off-diagonal Frobenius norm below which iteration stops.
pub const OFF_TARGET: f64 = 1e-12;

#[derive(Clone, Debug)]
pub struct Eigen {
    pub values: Vec<f64>,
    /// Final off-diagonal Frobenius norm.
    pub off: f64,
    pub sweeps: usize,
}

fn off_norm(a: &[Vec<f64>]) -> f64 {
    let mut s = 0.0;
    for (i, row) in a.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            if i != j {
                s += v * v;
            }
        }
    }
    s.sqrt()
}

/// Eigenvalues of a symmetric matrix, ascending.
pub fn symmetric_eigenvalues(mut a: Vec<Vec<f64>>) -> Result<Eigen> {
    let n = a.len();
    if a.iter().any(|r| r.len() != n) {
        return Err(Error::Domain("matrix is not square".into()));
    }
    let mut sweeps = 0;
    let mut off = off_norm(&a);
    while off > OFF_TARGET {
        if sweeps == MAX_SWEEPS {
            return Err(Error::Convergence {
                what: "Jacobi sweeps",
                estimate: f64::NAN,
                error: off,
            });
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                // Rotation angle from the stable tangent formula.
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                a[p][q] = 0.0;
                a[q][p] = 0.0;
            }
        }
        sweeps += 1;
        off = off_norm(&a);
    }
    let mut values: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    values.sort_by(f64::total_cmp);
    Ok(Eigen { values, off, sweeps })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two() {
        let e = symmetric_eigenvalues(vec![vec![2.0, 1.0], vec![1.0, 2.0]]).unwrap();
        assert!((e.values[0] - 1.0).abs() < 1e-14);
        assert!((e.values[1] - 3.0).abs() < 1e-14);
    }

    #[test]
    fn trace_and_frobenius_preserved() {
        let n = 7;
        let a: Vec<Vec<f64>> = (0..n)
            .map(|i| (0..n).map(|j| ((i * 3 + j * 3 + i * j) % 5) as f64 - 2.0).collect())
            .collect();
        let e = symmetric_eigenvalues(a.clone()).unwrap();
        let trace: f64 = (0..n).map(|i| a[i][i]).sum();
        let fro: f64 = a.iter().flatten().map(|v| v * v).sum();
        assert!((e.values.iter().sum::<f64>() - trace).abs() < 1e-10);
        assert!((e.values.iter().map(|v| v * v).sum::<f64>() - fro).abs() < 1e-9);
    }

    #[test]
    fn diagonal_input_needs_no_sweeps() {
        let e = symmetric_eigenvalues(vec![vec![3.0, 0.0], vec![0.0, -1.0]]).unwrap();
        assert_eq!(e.sweeps, 0);
        assert_eq!(e.values, vec![-1.0, 3.0]);
    }
}
