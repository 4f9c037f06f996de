//! Dense linear algebra used internally: LU determinants with partial
//! pivoting and a real-symmetric eigensolver (Householder tridiagonalization
//! followed by implicit-shift QL). Matrices are flat row-major slices.

use crate::error::{Error, Result};
use num_complex::Complex64;

const QL_MAX_SWEEPS: usize = 60;

/// Determinant of a complex matrix by LU with partial pivoting. Consumes the
/// buffer.
pub(crate) fn det_lu_complex(a: &mut [Complex64], n: usize) -> Complex64 {
    debug_assert_eq!(a.len(), n * n);
    let mut det = Complex64::new(1.0, 0.0);
    for k in 0..n {
        let mut piv = k;
        let mut best = a[k * n + k].norm_sqr();
        for i in k + 1..n {
            let m = a[i * n + k].norm_sqr();
            if m > best {
                best = m;
                piv = i;
            }
        }
        if best == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        if piv != k {
            for j in 0..n {
                a.swap(k * n + j, piv * n + j);
            }
            det = -det;
        }
        let pivot = a[k * n + k];
        det *= pivot;
        for i in k + 1..n {
            let factor = a[i * n + k] / pivot;
            if factor.norm_sqr() == 0.0 {
                continue;
            }
            for j in k..n {
                let akj = a[k * n + j];
                a[i * n + j] -= factor * akj;
            }
        }
    }
    det
}

/// Determinant of a real matrix by LU with partial pivoting.
pub(crate) fn det_lu_real(a: &mut [f64], n: usize) -> f64 {
    debug_assert_eq!(a.len(), n * n);
    let mut det = 1.0;
    for k in 0..n {
        let mut piv = k;
        let mut best = a[k * n + k].abs();
        for i in k + 1..n {
            let m = a[i * n + k].abs();
            if m > best {
                best = m;
                piv = i;
            }
        }
        if best == 0.0 {
            return 0.0;
        }
        if piv != k {
            for j in 0..n {
                a.swap(k * n + j, piv * n + j);
            }
            det = -det;
        }
        let pivot = a[k * n + k];
        det *= pivot;
        for i in k + 1..n {
            let factor = a[i * n + k] / pivot;
            if factor == 0.0 {
                continue;
            }
            for j in k..n {
                let akj = a[k * n + j];
                a[i * n + j] -= factor * akj;
            }
        }
    }
    det
}

pub(crate) fn mat_mul_complex(a: &[Complex64], b: &[Complex64], n: usize) -> Vec<Complex64> {
    let mut c = vec![Complex64::new(0.0, 0.0); n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i * n + k];
            if aik.norm_sqr() == 0.0 {
                continue;
            }
            for j in 0..n {
                c[i * n + j] += aik * b[k * n + j];
            }
        }
    }
    c
}

pub(crate) fn trace_complex(a: &[Complex64], n: usize) -> Complex64 {
    (0..n).map(|i| a[i * n + i]).sum()
}

/// Householder reduction of a symmetric matrix to tridiagonal form.
/// Returns (diagonal, subdiagonal) and, when requested, the accumulated
/// orthogonal transform Q with A = Q T Q^T.
fn tridiagonalize(a: &mut [f64], n: usize, want_q: bool) -> (Vec<f64>, Vec<f64>, Option<Vec<f64>>) {
    let mut e = vec![0.0; n.saturating_sub(1)];
    let mut reflectors: Vec<(usize, Vec<f64>, f64)> = Vec::new();

    for k in 0..n.saturating_sub(2) {
        let m = n - k - 1; // active column length
        let mut norm2 = 0.0;
        for i in k + 1..n {
            norm2 += a[i * n + k] * a[i * n + k];
        }
        let x0 = a[(k + 1) * n + k];
        let below2 = norm2 - x0 * x0;
        if below2 <= 0.0 || norm2 == 0.0 {
            e[k] = x0;
            continue;
        }
        let sigma = norm2.sqrt();
        let alpha = if x0 >= 0.0 { -sigma } else { sigma };
        let mut v = vec![0.0; m];
        v[0] = x0 - alpha;
        for i in k + 2..n {
            v[i - k - 1] = a[i * n + k];
        }
        let vtv = 2.0 * (norm2 - alpha * x0);
        let beta = 2.0 / vtv;

        // p = beta A22 v, w = p - (beta/2)(p.v) v, A22 -= v w^T + w v^T
        let mut p = vec![0.0; m];
        for (i, pi) in p.iter_mut().enumerate() {
            let row = (k + 1 + i) * n + k + 1;
            let mut acc = 0.0;
            for j in 0..m {
                acc += a[row + j] * v[j];
            }
            *pi = beta * acc;
        }
        let pv: f64 = p.iter().zip(&v).map(|(pi, vi)| pi * vi).sum();
        let kappa = 0.5 * beta * pv;
        let w: Vec<f64> = p.iter().zip(&v).map(|(pi, vi)| pi - kappa * vi).collect();
        for i in 0..m {
            let row = (k + 1 + i) * n + k + 1;
            for j in 0..m {
                a[row + j] -= v[i] * w[j] + w[i] * v[j];
            }
        }
        e[k] = alpha;
        if want_q {
            reflectors.push((k, v, beta));
        }
    }
    if n >= 2 {
        e[n - 2] = a[(n - 1) * n + n - 2];
    }
    let d: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();

    // Q is accumulated and rotated transposed (row r of qt = column r of Q)
    // so both the reflector applications here and the QL rotations below walk
    // contiguous memory.
    let q = want_q.then(|| {
        let mut qt = vec![0.0; n * n];
        for i in 0..n {
            qt[i * n + i] = 1.0;
        }
        // Q = H_0 H_1 ... applied right-to-left to the identity.
        for (k, v, beta) in reflectors.iter().rev() {
            let m = v.len();
            for col in 0..n {
                let row = &mut qt[col * n + k + 1..col * n + k + 1 + m];
                let mut dot = 0.0;
                for (vi, qi) in v.iter().zip(row.iter()) {
                    dot += vi * qi;
                }
                let s = beta * dot;
                for (vi, qi) in v.iter().zip(row.iter_mut()) {
                    *qi -= s * vi;
                }
            }
        }
        qt
    });

    (d, e, q)
}

/// Implicit-shift QL iteration on a tridiagonal matrix. `z`, when present, is
/// the transposed transform (row r = eigenvector r as it converges); pass the
/// transposed Q from the reduction to obtain eigenvectors of the original
/// matrix.
fn ql_implicit(d: &mut [f64], e: &mut [f64], mut z: Option<&mut [f64]>, n: usize) -> Result<()> {
    if n == 0 {
        return Ok(());
    }
    let mut work = vec![0.0; n];
    work[..n - 1].copy_from_slice(&e[..n - 1]);

    // Absolute deflation floor: clustered and zero eigenvalues otherwise keep
    // a subdiagonal entry hovering just above the relative threshold forever.
    let anorm = (0..n)
        .map(|i| d[i].abs() + work[i].abs())
        .fold(0.0f64, f64::max);

    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if work[m].abs() <= f64::EPSILON * (dd + 0.5 * anorm) {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > QL_MAX_SWEEPS {
                return Err(Error::Convergence(format!(
                    "QL iteration for eigenvalue {l} of {n} exceeded {QL_MAX_SWEEPS} sweeps"
                )));
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * work[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + work[l] / (g + r.copysign(if g == 0.0 { 1.0 } else { g }));
            let mut s = 1.0;
            let mut c = 1.0;
            let mut p = 0.0;
            let mut i = m;
            let mut underflow = false;
            while i > l {
                i -= 1;
                let mut f = s * work[i];
                let b = c * work[i];
                r = f.hypot(g);
                work[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    work[m] = 0.0;
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
                if let Some(zm) = z.as_deref_mut() {
                    let (lo, hi) = zm.split_at_mut((i + 1) * n);
                    let row_i = &mut lo[i * n..];
                    let row_i1 = &mut hi[..n];
                    for (a, b) in row_i.iter_mut().zip(row_i1.iter_mut()) {
                        f = *b;
                        *b = s * *a + c * f;
                        *a = c * *a - s * f;
                    }
                }
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            work[l] = g;
            work[m] = 0.0;
        }
    }
    Ok(())
}

/// Eigenvalues of a symmetric matrix, ascending. Consumes the buffer.
pub(crate) fn sym_eigenvalues(a: &mut [f64], n: usize) -> Result<Vec<f64>> {
    debug_assert_eq!(a.len(), n * n);
    if n == 0 {
        return Ok(Vec::new());
    }
    let (mut d, mut e, _) = tridiagonalize(a, n, false);
    ql_implicit(&mut d, &mut e, None, n)?;
    d.sort_by(|x, y| x.partial_cmp(y).unwrap());
    Ok(d)
}

/// Full eigendecomposition of a symmetric matrix: eigenvalues ascending and
/// the matching orthonormal eigenvectors as columns of a row-major matrix.
pub(crate) fn sym_eigen(a: &mut [f64], n: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    debug_assert_eq!(a.len(), n * n);
    if n == 0 {
        return Ok((Vec::new(), Vec::new()));
    }
    let (mut d, mut e, q) = tridiagonalize(a, n, true);
    let mut zt = q.expect("accumulation requested");
    ql_implicit(&mut d, &mut e, Some(&mut zt), n)?;

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| d[i].partial_cmp(&d[j]).unwrap());
    let values: Vec<f64> = order.iter().map(|&i| d[i]).collect();
    // Untranspose: eigenvector `new_col` is row `old` of the rotated zt.
    let mut vectors = vec![0.0; n * n];
    for (new_col, &old) in order.iter().enumerate() {
        for row in 0..n {
            vectors[row * n + new_col] = zt[old * n + row];
        }
    }
    Ok((values, vectors))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lcg(state: &mut u64) -> f64 {
        *state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        (*state >> 11) as f64 / (1u64 << 53) as f64 - 0.5
    }

    #[test]
    fn lu_real_known_values() {
        let mut ident = vec![1.0, 0.0, 0.0, 1.0];
        assert_eq!(det_lu_real(&mut ident, 2), 1.0);
        let mut a = vec![2.0, 1.0, 1.0, 2.0];
        assert!((det_lu_real(&mut a, 2) - 3.0).abs() < 1e-14);
        let mut b = vec![0.0, 1.0, 2.0, 3.0, 0.0, 4.0, 5.0, 6.0, 0.0];
        // det = 0*(0-24) - 1*(0-20) + 2*(18-0) = 56
        assert!((det_lu_real(&mut b, 3) - 56.0).abs() < 1e-12);
        let mut sing = vec![1.0, 2.0, 2.0, 4.0];
        assert_eq!(det_lu_real(&mut sing, 2), 0.0);
    }

    #[test]
    fn lu_complex_known_value() {
        let i = Complex64::new(0.0, 1.0);
        let one = Complex64::new(1.0, 0.0);
        let mut a = vec![i, one, one, i];
        let det = det_lu_complex(&mut a, 2);
        assert!((det - Complex64::new(-2.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn eigenvalues_of_diagonal_matrix() {
        let mut a = vec![0.0; 16];
        for (i, &v) in [3.0, -1.0, 2.0, 0.5].iter().enumerate() {
            a[i * 4 + i] = v;
        }
        let ev = sym_eigenvalues(&mut a, 4).unwrap();
        assert_eq!(ev, vec![-1.0, 0.5, 2.0, 3.0]);
    }

    #[test]
    fn eigenvalues_of_small_laplacians() {
        let mut a = vec![2.0, 1.0, 1.0, 2.0];
        let ev = sym_eigenvalues(&mut a, 2).unwrap();
        assert!((ev[0] - 1.0).abs() < 1e-13 && (ev[1] - 3.0).abs() < 1e-13);

        let mut b = vec![2.0, -1.0, 0.0, -1.0, 2.0, -1.0, 0.0, -1.0, 2.0];
        let ev = sym_eigenvalues(&mut b, 3).unwrap();
        let expect = [2.0 - 2.0_f64.sqrt(), 2.0, 2.0 + 2.0_f64.sqrt()];
        for (got, want) in ev.iter().zip(expect) {
            assert!((got - want).abs() < 1e-13, "{got} vs {want}");
        }
    }

    #[test]
    fn random_symmetric_eigen_invariants() {
        let n = 40;
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut a = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..=i {
                let v = lcg(&mut state);
                a[i * n + j] = v;
                a[j * n + i] = v;
            }
        }
        let trace: f64 = (0..n).map(|i| a[i * n + i]).sum();
        let det = det_lu_real(&mut a.clone(), n);

        let (values, vectors) = sym_eigen(&mut a.clone(), n).unwrap();
        let sum: f64 = values.iter().sum();
        let prod: f64 = values.iter().product();
        assert!((sum - trace).abs() < 1e-10, "trace mismatch: {sum} vs {trace}");
        assert!(
            (prod - det).abs() < 1e-10 * det.abs().max(1.0),
            "det mismatch: {prod} vs {det}"
        );

        // Residual || A v - lambda v || and orthonormality.
        for col in 0..n {
            let mut residual = 0.0;
            for row in 0..n {
                let mut av = 0.0;
                for k in 0..n {
                    av += a[row * n + k] * vectors[k * n + col];
                }
                residual += (av - values[col] * vectors[row * n + col]).powi(2);
            }
            assert!(residual.sqrt() < 1e-10, "residual col {col}: {residual}");
        }
        for c1 in 0..n {
            for c2 in c1..n {
                let dot: f64 = (0..n)
                    .map(|r| vectors[r * n + c1] * vectors[r * n + c2])
                    .sum();
                let want = if c1 == c2 { 1.0 } else { 0.0 };
                assert!((dot - want).abs() < 1e-10);
            }
        }

        // Values-only path agrees with the full decomposition.
        let only = sym_eigenvalues(&mut a.clone(), n).unwrap();
        for (x, y) in only.iter().zip(&values) {
            assert!((x - y).abs() < 1e-11);
        }
    }

    #[test]
    fn complex_multiply_and_trace() {
        let i = Complex64::new(0.0, 1.0);
        let a = vec![
            Complex64::new(1.0, 0.0),
            i,
            Complex64::new(0.0, 0.0),
            Complex64::new(2.0, 0.0),
        ];
        let sq = mat_mul_complex(&a, &a, 2);
        // [[1, i],[0,2]]^2 = [[1, 3i],[0,4]]
        assert!((sq[0] - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        assert!((sq[1] - Complex64::new(0.0, 3.0)).norm() < 1e-15);
        assert!((sq[3] - Complex64::new(4.0, 0.0)).norm() < 1e-15);
        assert!((trace_complex(&sq, 2) - Complex64::new(5.0, 0.0)).norm() < 1e-15);
    }
}
