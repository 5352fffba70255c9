//! Cyclic Jacobi eigensolver for dense symmetric matrices.
//!
//! A sequence of plane rotations annihilates off-diagonal entries one at a
//! time; each sweep visits the whole upper triangle. The off-diagonal mass
//! shrinks quadratically once rotations get small, so a handful of sweeps
//! suffices for the well-conditioned 0/1 matrices this crate produces.
//! Eigenvectors are never accumulated; only the eigenvalues are needed.

use crate::error::{Error, Result};
use crate::limits::JACOBI_OFF_PER_VERTEX;

const MAX_SWEEPS: usize = 100;

/// Frobenius norm of the off-diagonal part.
fn off_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            let v = a[i * n + j];
            s += v * v;
        }
    }
    (2.0 * s).sqrt()
}

/// Eigenvalues of the symmetric matrix `a` (row-major, consumed as scratch),
/// unsorted. Converges when the off-diagonal Frobenius norm drops below
/// `1e-12 * n`.
pub fn symmetric_eigenvalues(mut a: Vec<f64>, n: usize) -> Result<Vec<f64>> {
    assert_eq!(a.len(), n * n);
    if n == 1 {
        return Ok(vec![a[0]]);
    }
    let target = JACOBI_OFF_PER_VERTEX * n as f64;
    let mut d: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    let mut b = d.clone();
    let mut z = vec![0.0; n];

    for sweep in 0..MAX_SWEEPS {
        let off = off_norm(&a, n);
        if off < target {
            return Ok(d);
        }
        // small rotations are skipped during the first sweeps
        let tresh = if sweep < 3 {
            0.2 * off * off / (2.0 * (n * n) as f64)
        } else {
            0.0
        };
        for p in 0..n - 1 {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                let g = 100.0 * apq.abs();
                if sweep > 3
                    && d[p].abs() + g == d[p].abs()
                    && d[q].abs() + g == d[q].abs()
                {
                    a[p * n + q] = 0.0;
                    continue;
                }
                if apq.abs() <= tresh {
                    continue;
                }
                let h = d[q] - d[p];
                let t = if h.abs() + g == h.abs() {
                    apq / h
                } else {
                    let theta = 0.5 * h / apq;
                    let mut t = 1.0 / (theta.abs() + (1.0 + theta * theta).sqrt());
                    if theta < 0.0 {
                        t = -t;
                    }
                    t
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);
                let h = t * apq;
                z[p] -= h;
                z[q] += h;
                d[p] -= h;
                d[q] += h;
                a[p * n + q] = 0.0;
                let rotate = |a: &mut [f64], i: usize, j: usize, k: usize, l: usize| {
                    let g = a[i * n + j];
                    let h = a[k * n + l];
                    a[i * n + j] = g - s * (h + g * tau);
                    a[k * n + l] = h + s * (g - h * tau);
                };
                for j in 0..p {
                    rotate(&mut a, j, p, j, q);
                }
                for j in (p + 1)..q {
                    rotate(&mut a, p, j, j, q);
                }
                for j in (q + 1)..n {
                    rotate(&mut a, p, j, q, j);
                }
            }
        }
        for i in 0..n {
            b[i] += z[i];
            d[i] = b[i];
            z[i] = 0.0;
        }
    }

    Err(Error::NumericFailure {
        sweeps: MAX_SWEEPS,
        residual: off_norm(&a, n),
    })
}
