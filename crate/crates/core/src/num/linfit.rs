//! Tiny dense linear algebra: least-squares fits with a handful of basis
//! functions, via normal equations and a pivoted dense solve. All systems in
//! this crate that are not banded have at most ~6 unknowns.

use crate::error::{Error, Result};

/// Solves the dense system `a x = b` in place with partial pivoting.
/// `a` is row-major `n x n`.
pub fn solve_dense(a: &mut [f64], b: &mut [f64], n: usize) -> Result<()> {
    for k in 0..n {
        let mut piv = k;
        for i in (k + 1)..n {
            if a[i * n + k].abs() > a[piv * n + k].abs() {
                piv = i;
            }
        }
        if a[piv * n + k].abs() < 1e-300 {
            return Err(Error::internal("singular dense system".to_string()));
        }
        if piv != k {
            for j in 0..n {
                a.swap(k * n + j, piv * n + j);
            }
            b.swap(k, piv);
        }
        let d = a[k * n + k];
        for i in (k + 1)..n {
            let l = a[i * n + k] / d;
            if l == 0.0 {
                continue;
            }
            for j in k..n {
                a[i * n + j] -= l * a[k * n + j];
            }
            b[i] -= l * b[k];
        }
    }
    for i in (0..n).rev() {
        let mut s = b[i];
        for j in (i + 1)..n {
            s -= a[i * n + j] * b[j];
        }
        b[i] = s / a[i * n + i];
    }
    Ok(())
}

/// Least-squares fit of `y ~ sum_j c_j * phi_j` given per-sample basis rows.
/// Returns the coefficient vector. Normal equations are fine at these sizes
/// provided the basis is not degenerate on the sample set.
pub fn lsq_fit(rows: &[Vec<f64>], ys: &[f64]) -> Result<Vec<f64>> {
    let m = rows.first().map(|r| r.len()).unwrap_or(0);
    if m == 0 || rows.len() < m {
        return Err(Error::invalid("least-squares fit needs at least as many samples as basis functions"));
    }
    let mut ata = vec![0.0; m * m];
    let mut atb = vec![0.0; m];
    for (row, &y) in rows.iter().zip(ys) {
        for i in 0..m {
            atb[i] += row[i] * y;
            for j in 0..m {
                ata[i * m + j] += row[i] * row[j];
            }
        }
    }
    solve_dense(&mut ata, &mut atb, m)?;
    Ok(atb)
}

/// Convenience: fit `y ~ a + b*x` and return `(a, b)`.
pub fn fit_affine(xs: &[f64], ys: &[f64]) -> Result<(f64, f64)> {
    let rows: Vec<Vec<f64>> = xs.iter().map(|&x| vec![1.0, x]).collect();
    let c = lsq_fit(&rows, ys)?;
    Ok((c[0], c[1]))
}

/// Convenience: fit `y ~ a + b*x + c*x^2` and return `(a, b, c)`.
pub fn fit_quadratic(xs: &[f64], ys: &[f64]) -> Result<(f64, f64, f64)> {
    let rows: Vec<Vec<f64>> = xs.iter().map(|&x| vec![1.0, x, x * x]).collect();
    let c = lsq_fit(&rows, ys)?;
    Ok((c[0], c[1], c[2]))
}
