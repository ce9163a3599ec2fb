//! Small symmetric eigenproblems.
//!
//! Two routines cover everything the crate needs: an implicit-shift QL
//! iteration on symmetric tridiagonal matrices (quadrature-rule construction,
//! where only eigenvalues and the first eigenvector component are required)
//! and cyclic Jacobi sweeps for the dense degenerate-block matrices, which
//! are at most a few tens on a side.

use crate::error::{Error, Result};

/// Eigenvalues of a symmetric tridiagonal matrix together with the first
/// component of each normalized eigenvector, sorted by ascending eigenvalue.
///
/// `diag` has length n; `offdiag` has length n-1 (entry i couples rows i and
/// i+1).
pub fn tridiagonal_eigen_first_row(diag: &[f64], offdiag: &[f64]) -> Result<Vec<(f64, f64)>> {
    let n = diag.len();
    if n == 0 {
        return Err(Error::Domain("empty tridiagonal matrix".into()));
    }
    if offdiag.len() + 1 != n {
        return Err(Error::Usage(format!(
            "offdiagonal length {} does not match diagonal length {}",
            offdiag.len(),
            n
        )));
    }

    let mut d = diag.to_vec();
    // e is padded with a trailing zero so e[m] is always addressable.
    let mut e: Vec<f64> = offdiag.iter().copied().chain(std::iter::once(0.0)).collect();
    // First row of the accumulated rotation matrix, starts as e₀ᵀ.
    let mut z = vec![0.0; n];
    z[0] = 1.0;

    for l in 0..n {
        let mut iter = 0usize;
        loop {
            // Look for a negligible off-diagonal element.
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
            if iter > 50 {
                return Err(Error::Convergence(format!(
                    "tridiagonal QL: eigenvalue {l} of {n} not isolated after 50 sweeps \
                     (|e| = {:.3e})",
                    e[l].abs()
                )));
            }

            // Implicit shift from the 2x2 block at l.
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c) = (1.0f64, 1.0f64);
            let mut p = 0.0f64;

            let mut underflow = false;
            for i in (l..m).rev() {
                let mut f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    // Deflate: rotation annihilated prematurely.
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                // Apply the rotation to the tracked first row.
                f = z[i + 1];
                z[i + 1] = s * z[i] + c * f;
                z[i] = c * z[i] - s * f;
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }

    let mut pairs: Vec<(f64, f64)> = d.into_iter().zip(z).collect();
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
    Ok(pairs)
}

/// Eigenvalues of a small dense symmetric matrix by cyclic Jacobi sweeps,
/// sorted ascending. `a` is row-major n×n; only the symmetric part is used.
pub fn symmetric_eigenvalues(a: &[Vec<f64>]) -> Result<Vec<f64>> {
    let n = a.len();
    if n == 0 {
        return Err(Error::Domain("empty matrix".into()));
    }
    for (i, row) in a.iter().enumerate() {
        if row.len() != n {
            return Err(Error::Usage(format!(
                "row {i} has length {} in a {n}x{n} matrix",
                row.len()
            )));
        }
    }
    let mut m: Vec<Vec<f64>> = a.to_vec();

    let off = |m: &[Vec<f64>]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                s += m[i][j] * m[i][j];
            }
        }
        s.sqrt()
    };
    let scale: f64 = (0..n)
        .map(|i| m[i][i].abs())
        .fold(off(&m), f64::max)
        .max(f64::MIN_POSITIVE);

    for _sweep in 0..100 {
        if off(&m) <= 1e-15 * scale {
            let mut ev: Vec<f64> = (0..n).map(|i| m[i][i]).collect();
            ev.sort_by(f64::total_cmp);
            return Ok(ev);
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = m[p][q];
                if apq.abs() <= 1e-18 * scale {
                    continue;
                }
                let theta = (m[q][q] - m[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = m[k][p];
                    let akq = m[k][q];
                    m[k][p] = c * akp - s * akq;
                    m[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = m[p][k];
                    let aqk = m[q][k];
                    m[p][k] = c * apk - s * aqk;
                    m[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    Err(Error::Convergence(format!(
        "Jacobi sweeps did not reduce off-diagonal norm below tolerance for a {n}x{n} matrix \
         (off = {:.3e}, scale = {:.3e})",
        off(&m),
        scale
    )))
}
