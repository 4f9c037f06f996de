//! The moment generating function Q(lambda, t, l) = det[1 + lambda K] of the
//! cumulative correlation operator F_l = sum_{m >= l} a^dag_m a_{-m}, its
//! moments M_n = n! e_n(K), and the two hyperbolic combinations G_1, G_2 that
//! converge to the soft-edge GSE/GOE generating functions.
//!
//! For the alternating state the kernel is similar (by the diagonal phase
//! i^m) to the real symmetric matrix (1/2) J_{m+n}(4t), which is
//! eigendecomposed directly; moments follow from the eigenvalues through the
//! Newton-identity recursion for elementary symmetric polynomials. General
//! patterns keep complex arithmetic and a trace-based power-sum route, with
//! the reality of every output checked rather than assumed.

use crate::error::{Error, Result};
use crate::lattice::{default_kernel_dim, kernel_matrix, KernelMatrix, PeriodicPattern};
use crate::linalg::{det_lu_complex, mat_mul_complex, sym_eigenvalues, trace_complex};
use crate::specfun::{bessel_j_row, support_order};
use num_complex::Complex64;

/// Moments beyond this order drown in round-off at desk-scale times.
pub const MAX_MOMENT_ORDER: usize = 8;

/// Tolerated imaginary residue of determinants and moments.
const IMAG_TOL: f64 = 1e-8;

/// The front-tracking window: the lattice cutoff l = floor(2t + s (2t)^(1/3)/2)
/// attached to a rescaled coordinate s at time t >= 2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrontWindow {
    /// Time of the window (>= 2).
    pub t: f64,
    /// Requested rescaled coordinate.
    pub s: f64,
    /// Lattice cutoff, always >= 1.
    pub l: i64,
}

impl FrontWindow {
    /// Window at nominal coordinate s. Fails when the resulting cutoff would
    /// leave the positive half-axis.
    pub fn new(t: f64, s: f64) -> Result<Self> {
        if !t.is_finite() || t < 2.0 {
            return Err(Error::InvalidInput(format!(
                "front windows need t >= 2, got {t}"
            )));
        }
        let l = (2.0 * t + 0.5 * s * (2.0 * t).cbrt()).floor();
        if l < 1.0 {
            return Err(Error::InvalidInput(format!(
                "window (t = {t}, s = {s}) gives lattice cutoff l = {l} < 1"
            )));
        }
        Ok(Self { t, s, l: l as i64 })
    }

    /// Window anchored directly at an integer cutoff.
    pub fn from_l(t: f64, l: i64) -> Result<Self> {
        if !t.is_finite() || t < 2.0 {
            return Err(Error::InvalidInput(format!(
                "front windows need t >= 2, got {t}"
            )));
        }
        if l < 1 {
            return Err(Error::InvalidInput(format!("cutoff must be >= 1, got {l}")));
        }
        let s = 2.0 * (l as f64 - 2.0 * t) / (2.0 * t).cbrt();
        Ok(Self { t, s, l })
    }

    /// The rescaled coordinate the integer cutoff actually realizes,
    /// s_l = 2 (l - 2t) / (2t)^(1/3). Coincides with `s` when the nominal
    /// coordinate is exactly representable.
    pub fn realized_s(&self) -> f64 {
        2.0 * (self.l as f64 - 2.0 * self.t) / (2.0 * self.t).cbrt()
    }

    /// The continuum edge coordinate represented by the cutoff.
    ///
    /// The lattice sum over m >= l is a midpoint-rule discretization of the
    /// soft-edge half-line: site m covers the cell of width
    /// Delta = 2/(2t)^(1/3) centered on its rescaled coordinate, so the
    /// half-line starts half a cell below the coordinate of l itself,
    ///
    ///   s_edge = s_l - Delta/2 = (2(l - 2t) - 1) / (2t)^(1/3).
    ///
    /// Lattice-vs-continuum comparisons at s_edge converge at O(Delta^2)
    /// instead of the O(Delta) left-endpoint error at the bare s_l.
    pub fn edge_s(&self) -> f64 {
        (2.0 * (self.l as f64 - 2.0 * self.t) - 1.0) / (2.0 * self.t).cbrt()
    }
}

/// Moments M_1..M_n of the cumulative correlation operator at one (t, l).
#[derive(Debug, Clone)]
pub struct MomentTable {
    pub t: f64,
    pub l: i64,
    /// values[n - 1] = M_n.
    pub values: Vec<f64>,
}

impl MomentTable {
    /// M_n, 1-based. Panics when n is outside the table.
    pub fn m(&self, n: usize) -> f64 {
        self.values[n - 1]
    }

    pub fn order(&self) -> usize {
        self.values.len()
    }

    /// Whether M_n stands above the round-off noise floor of the extraction.
    pub fn is_resolved(&self, n: usize) -> bool {
        let scale = self.values.first().map(|m1| m1.abs()).unwrap_or(0.0).max(1.0);
        let factorial: f64 = (1..=n).map(|k| k as f64).product();
        (self.m(n) / factorial).abs() >= 1e-14 * scale
    }
}

/// det[1 + lambda K] for a prebuilt kernel; the imaginary residue of the
/// complex determinant is checked against 1e-8 and the real part returned.
pub fn generating_q_kernel(kernel: &KernelMatrix, lambda: f64) -> Result<f64> {
    if !lambda.is_finite() {
        return Err(Error::InvalidInput(format!(
            "generating function needs finite lambda, got {lambda}"
        )));
    }
    let n = kernel.dim;
    let mut a = kernel.entries.clone();
    for v in a.iter_mut() {
        *v *= lambda;
    }
    for i in 0..n {
        a[i * n + i] += 1.0;
    }
    let det = det_lu_complex(&mut a, n);
    if det.im.abs() > IMAG_TOL {
        return Err(Error::Instability(format!(
            "determinant imaginary residue {:e} exceeds {IMAG_TOL:e} (t = {}, l = {}, lambda = {lambda})",
            det.im, kernel.t, kernel.l
        )));
    }
    Ok(det.re)
}

/// Q(lambda, t, l) for the alternating initial state.
pub fn generating_q(lambda: f64, t: f64, l: i64) -> Result<f64> {
    generating_q_with(&PeriodicPattern::alternating(), lambda, t, l)
}

/// Q(lambda, t, l) for an arbitrary periodic initial pattern.
pub fn generating_q_with(pattern: &PeriodicPattern, lambda: f64, t: f64, l: i64) -> Result<f64> {
    let kernel = kernel_matrix(pattern, t, l, default_kernel_dim(t, l))?;
    generating_q_kernel(&kernel, lambda)
}

/// Q with a truncation self-check: the determinant is recomputed at dim + 50
/// and the two values must agree to 1e-6.
pub fn generating_q_verified(pattern: &PeriodicPattern, lambda: f64, t: f64, l: i64) -> Result<f64> {
    let dim = default_kernel_dim(t, l);
    let base = generating_q_kernel(&kernel_matrix(pattern, t, l, dim)?, lambda)?;
    let wide = generating_q_kernel(&kernel_matrix(pattern, t, l, dim + 50)?, lambda)?;
    if (base - wide).abs() > 1e-6 {
        return Err(Error::Instability(format!(
            "Q truncation drift {:e} at dim {dim} -> {} (t = {t}, l = {l}, lambda = {lambda})",
            (base - wide).abs(),
            dim + 50
        )));
    }
    Ok(base)
}

/// The real symmetric image (1/2) J_{m+n}(4t) of the alternating kernel under
/// the diagonal phase similarity i^m.
fn alternating_symmetric_kernel(t: f64, l: i64, dim: usize) -> Result<Vec<f64>> {
    let max_order = 2 * (l as usize + dim - 1);
    let extent = ((support_order(4.0 * t) + 8.0 * (4.0 * t).cbrt() + 20.0).ceil() as usize)
        .min(max_order);
    let row = bessel_j_row(4.0 * t, extent)?;
    let mut s = vec![0.0; dim * dim];
    for i in 0..dim {
        for j in 0..=i {
            let order = 2 * l as usize + i + j;
            let v = if order <= extent { 0.5 * row.value(order) } else { 0.0 };
            s[i * dim + j] = v;
            s[j * dim + i] = v;
        }
    }
    Ok(s)
}

/// Newton's identities: elementary symmetric polynomials e_1..e_n from power
/// sums p_1..p_n.
fn elementary_from_power_sums(p: &[f64]) -> Vec<f64> {
    let n = p.len();
    let mut e = vec![0.0; n + 1];
    e[0] = 1.0;
    for k in 1..=n {
        let mut acc = 0.0;
        for j in 1..=k {
            let sign = if j % 2 == 1 { 1.0 } else { -1.0 };
            acc += sign * p[j - 1] * e[k - j];
        }
        e[k] = acc / k as f64;
    }
    e.remove(0);
    e
}

fn elementary_from_power_sums_complex(p: &[Complex64]) -> Vec<Complex64> {
    let n = p.len();
    let mut e = vec![Complex64::new(0.0, 0.0); n + 1];
    e[0] = Complex64::new(1.0, 0.0);
    for k in 1..=n {
        let mut acc = Complex64::new(0.0, 0.0);
        for j in 1..=k {
            let sign = if j % 2 == 1 { 1.0 } else { -1.0 };
            acc += sign * p[j - 1] * e[k - j];
        }
        e[k] = acc / k as f64;
    }
    e.remove(0);
    e
}

/// Moments M_1..M_{n_max} for the alternating state.
pub fn moments(t: f64, l: i64, n_max: usize) -> Result<MomentTable> {
    moments_with(&PeriodicPattern::alternating(), t, l, n_max)
}

/// Moments M_1..M_{n_max} for an arbitrary periodic pattern.
pub fn moments_with(
    pattern: &PeriodicPattern,
    t: f64,
    l: i64,
    n_max: usize,
) -> Result<MomentTable> {
    if n_max == 0 || n_max > MAX_MOMENT_ORDER {
        return Err(Error::InvalidInput(format!(
            "moment order must lie in 1..={MAX_MOMENT_ORDER}, got {n_max}"
        )));
    }
    if l < 1 {
        return Err(Error::InvalidInput(format!("cutoff must be >= 1, got {l}")));
    }
    if !t.is_finite() || t < 0.0 {
        return Err(Error::InvalidInput(format!("time must be >= 0, got {t}")));
    }
    let dim = default_kernel_dim(t, l);

    let e = if pattern.is_alternating() {
        let mut s = alternating_symmetric_kernel(t, l, dim)?;
        let eigenvalues = sym_eigenvalues(&mut s, dim)?;
        let p: Vec<f64> = (1..=n_max)
            .map(|j| eigenvalues.iter().map(|x| x.powi(j as i32)).sum())
            .collect();
        elementary_from_power_sums(&p)
    } else {
        let kernel = kernel_matrix(pattern, t, l, dim)?;
        let mut p = Vec::with_capacity(n_max);
        let mut power = kernel.entries.clone();
        p.push(trace_complex(&power, dim));
        for _ in 2..=n_max {
            power = mat_mul_complex(&power, &kernel.entries, dim);
            p.push(trace_complex(&power, dim));
        }
        let e = elementary_from_power_sums_complex(&p);
        let mut real = Vec::with_capacity(n_max);
        for (k, v) in e.iter().enumerate() {
            if v.im.abs() > IMAG_TOL {
                return Err(Error::Instability(format!(
                    "moment e_{} imaginary residue {:e} (pattern {pattern}, t = {t}, l = {l})",
                    k + 1,
                    v.im
                )));
            }
            real.push(v.re);
        }
        real
    };

    let mut values = Vec::with_capacity(n_max);
    let mut factorial = 1.0;
    for (n, en) in e.iter().enumerate() {
        factorial *= (n + 1) as f64;
        values.push(factorial * en);
    }
    Ok(MomentTable { t, l, values })
}

/// G_1(lambda, t, l) = (1/2) Q(2 sqrt(lambda)) + (1/2) Q(-2 sqrt(lambda)),
/// the even-moment generating combination.
pub fn lattice_g1(lambda: f64, t: f64, l: i64) -> Result<f64> {
    lattice_g1_with(&PeriodicPattern::alternating(), lambda, t, l)
}

pub fn lattice_g1_with(pattern: &PeriodicPattern, lambda: f64, t: f64, l: i64) -> Result<f64> {
    if !lambda.is_finite() || lambda < 0.0 {
        return Err(Error::InvalidInput(format!(
            "G_1 needs lambda >= 0, got {lambda}"
        )));
    }
    let kernel = kernel_matrix(pattern, t, l, default_kernel_dim(t, l))?;
    let r = 2.0 * lambda.sqrt();
    Ok(0.5 * generating_q_kernel(&kernel, r)? + 0.5 * generating_q_kernel(&kernel, -r)?)
}

/// G_2(lambda, t, l), the all-moment combination, for 0 <= lambda < 2:
///
///   (1/2)(1 + sqrt(lambda/(2-lambda))) Q(-2 sqrt(lambda(2-lambda)))
/// + (1/2)(1 - sqrt(lambda/(2-lambda))) Q(+2 sqrt(lambda(2-lambda))).
///
/// lambda >= 2 would need an analytic continuation of the square roots and is
/// rejected.
pub fn lattice_g2(lambda: f64, t: f64, l: i64) -> Result<f64> {
    lattice_g2_with(&PeriodicPattern::alternating(), lambda, t, l)
}

pub fn lattice_g2_with(pattern: &PeriodicPattern, lambda: f64, t: f64, l: i64) -> Result<f64> {
    if !lambda.is_finite() || !(0.0..2.0).contains(&lambda) {
        return Err(Error::InvalidInput(format!(
            "G_2 needs lambda in [0, 2), got {lambda}"
        )));
    }
    let kernel = kernel_matrix(pattern, t, l, default_kernel_dim(t, l))?;
    let z = 2.0 * (lambda * (2.0 - lambda)).sqrt();
    let w = (lambda / (2.0 - lambda)).sqrt();
    let plus = 0.5 * (1.0 + w);
    let minus = 0.5 * (1.0 - w);
    let mut total = plus * generating_q_kernel(&kernel, -z)?;
    if minus != 0.0 {
        total += minus * generating_q_kernel(&kernel, z)?;
    }
    Ok(total)
}
