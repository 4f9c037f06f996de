//! Soft-edge random-matrix functionals: the Airy-kernel Fredholm determinant
//! H(z, s) = det[1 - (z/2) Ai((x+y)/2)] on L^2(s, inf), the GOE Tracy-Widom
//! distribution F_1(s) = H(1, s), the GSE/GOE gap-probability generating
//! functions assembled from H (Bornemann, Math. Comp. 79 (2010) 871), the
//! closed-form one-point edge densities R_1, and the moment predictions they
//! imply for the lattice front.
//!
//! Determinants use Nystrom discretization: a Gauss-Legendre rule on
//! [s, s + 40], the symmetrized matrix delta_ij - (z/2) sqrt(w_i) Ai((x_i +
//! x_j)/2) sqrt(w_j), and an LU determinant. The kernel decays
//! super-exponentially, so hard truncation of the domain is sound; every call
//! is self-checked by node doubling.

use crate::error::{Error, Result};
use crate::moments::MomentTable;
use crate::specfun::{airy_ai, airy_tail_integral, composite_gauss_legendre, gauss_legendre};

/// Default Nystrom resolution.
pub const DEFAULT_NODES: usize = 64;

/// Integration window for the semi-infinite determinant domain.
const DETERMINANT_WINDOW: f64 = 40.0;

/// The two soft-edge ensembles with closed-form one-point densities here.
#[allow(clippy::upper_case_acronyms)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ensemble {
    GOE,
    GSE,
}

/// One evaluation of H(z, s) with its discretization size.
#[derive(Debug, Clone, Copy)]
pub struct SoftEdgeDeterminant {
    pub z: f64,
    pub s: f64,
    pub value: f64,
    pub nodes_used: usize,
}

fn check_s(s: f64) -> Result<()> {
    if !s.is_finite() || s < -12.0 {
        return Err(Error::InvalidInput(format!(
            "soft-edge determinants support s >= -12, got {s}"
        )));
    }
    Ok(())
}

/// Raw Nystrom determinant at a fixed node count and window, with no
/// self-check. Exposed within the crate so stability tests can compare
/// resolutions directly.
pub(crate) fn fredholm_h_raw(z: f64, s: f64, nodes: usize, window: f64) -> Result<f64> {
    let rule = gauss_legendre(nodes, s, s + window)?;
    let sqrt_w: Vec<f64> = rule.weights.iter().map(|w| w.sqrt()).collect();
    let n = nodes;
    let mut a = vec![0.0f64; n * n];
    for i in 0..n {
        for j in 0..=i {
            let arg = 0.5 * (rule.nodes[i] + rule.nodes[j]);
            let v = -0.5 * z * sqrt_w[i] * airy_ai(arg)?.ai * sqrt_w[j];
            a[i * n + j] = v;
            a[j * n + i] = v;
        }
        a[i * n + i] += 1.0;
    }
    Ok(crate::linalg::det_lu_real(&mut a, n))
}

/// H(z, s) at the default 64-node resolution.
pub fn fredholm_h(z: f64, s: f64) -> Result<SoftEdgeDeterminant> {
    fredholm_h_with_nodes(z, s, DEFAULT_NODES)
}

/// H(z, s) at a chosen resolution. The value is recomputed with doubled nodes
/// and the two must agree to 1e-6, otherwise the discretization is reported
/// as unstable.
pub fn fredholm_h_with_nodes(z: f64, s: f64, nodes: usize) -> Result<SoftEdgeDeterminant> {
    if !z.is_finite() || z.abs() > 4.0 {
        return Err(Error::InvalidInput(format!(
            "fredholm_h supports |z| <= 4, got {z}"
        )));
    }
    check_s(s)?;
    if !(4..=crate::specfun::MAX_NODES / 2).contains(&nodes) {
        return Err(Error::InvalidInput(format!(
            "fredholm_h node count must lie in 4..={}, got {nodes}",
            crate::specfun::MAX_NODES / 2
        )));
    }
    let value = fredholm_h_raw(z, s, nodes, DETERMINANT_WINDOW)?;
    let doubled = fredholm_h_raw(z, s, 2 * nodes, DETERMINANT_WINDOW)?;
    if (value - doubled).abs() > 1e-6 {
        return Err(Error::Instability(format!(
            "H({z}, {s}) moved by {:e} under node doubling {nodes} -> {}",
            (value - doubled).abs(),
            2 * nodes
        )));
    }
    Ok(SoftEdgeDeterminant {
        z,
        s,
        value,
        nodes_used: nodes,
    })
}

/// The GOE Tracy-Widom cumulative distribution, F_1(s) = H(1, s).
pub fn tw1_cdf(s: f64) -> Result<f64> {
    tw1_cdf_with_nodes(s, DEFAULT_NODES)
}

pub fn tw1_cdf_with_nodes(s: f64, nodes: usize) -> Result<f64> {
    Ok(fredholm_h_with_nodes(1.0, s, nodes)?.value)
}

/// G_GSE(lambda, s) = (1/2) H(sqrt(lambda), s) + (1/2) H(-sqrt(lambda), s).
pub fn g_gse(lambda: f64, s: f64) -> Result<f64> {
    g_gse_with_nodes(lambda, s, DEFAULT_NODES)
}

pub fn g_gse_with_nodes(lambda: f64, s: f64, nodes: usize) -> Result<f64> {
    if !lambda.is_finite() || !(0.0..=4.0).contains(&lambda) {
        return Err(Error::InvalidInput(format!(
            "G_GSE needs lambda in [0, 4], got {lambda}"
        )));
    }
    let z = lambda.sqrt();
    Ok(0.5 * fredholm_h_with_nodes(z, s, nodes)?.value
        + 0.5 * fredholm_h_with_nodes(-z, s, nodes)?.value)
}

/// G_GOE(lambda, s) for 0 <= lambda < 2:
///
///   (1/2)(1 + sqrt(lambda/(2-lambda))) H(+sqrt(lambda(2-lambda)), s)
/// + (1/2)(1 - sqrt(lambda/(2-lambda))) H(-sqrt(lambda(2-lambda)), s).
///
/// At lambda = 1 the weights degenerate to {1, 0} and the value is exactly
/// the Tracy-Widom CDF.
pub fn g_goe(lambda: f64, s: f64) -> Result<f64> {
    g_goe_with_nodes(lambda, s, DEFAULT_NODES)
}

pub fn g_goe_with_nodes(lambda: f64, s: f64, nodes: usize) -> Result<f64> {
    if !lambda.is_finite() || !(0.0..2.0).contains(&lambda) {
        return Err(Error::InvalidInput(format!(
            "G_GOE needs lambda in [0, 2), got {lambda}"
        )));
    }
    let z = (lambda * (2.0 - lambda)).sqrt();
    let w = (lambda / (2.0 - lambda)).sqrt();
    let plus = 0.5 * (1.0 + w);
    let minus = 0.5 * (1.0 - w);
    let mut total = plus * fredholm_h_with_nodes(z, s, nodes)?.value;
    if minus != 0.0 {
        total += minus * fredholm_h_with_nodes(-z, s, nodes)?.value;
    }
    Ok(total)
}

/// One-point soft-edge densities, with Ai'' eliminated through the Airy ODE
/// Ai'' = x Ai:
///
///   R_1^GSE = (1/2)(Ai')^2 - (Ai/2) x Ai - (Ai/4) int_x^inf Ai,
///   R_1^GOE = (Ai')^2 - Ai x Ai - (Ai/2) int_x^inf Ai + Ai/2.
pub fn r1(ensemble: Ensemble, x: f64) -> Result<f64> {
    if !x.is_finite() || x.abs() > 12.0 {
        return Err(Error::InvalidInput(format!(
            "r1 supports |x| <= 12, got {x}"
        )));
    }
    let v = airy_ai(x)?;
    let tail = airy_tail_integral(x)?;
    let dd = v.ai_prime * v.ai_prime - x * v.ai * v.ai;
    Ok(match ensemble {
        Ensemble::GSE => 0.5 * dd - 0.25 * v.ai * tail,
        Ensemble::GOE => dd - 0.5 * v.ai * tail + 0.5 * v.ai,
    })
}

/// int_s^inf R_1 dx, by composite Gauss-Legendre over [s, min(s + 30, 12)];
/// the density is far below round-off beyond x = 12.
pub fn r1_integral(ensemble: Ensemble, s: f64) -> Result<f64> {
    check_s(s)?;
    let upper = (s + 30.0).min(12.0);
    if upper <= s {
        return Ok(0.0);
    }
    composite_gauss_legendre(|x| r1(ensemble, x).unwrap_or(0.0), s, upper, 1.0, 16)
}

/// The asymptotic moment predictions
///
///   M_1(s) = (1/2) int_s^inf (R_1^GOE - 2 R_1^GSE),
///   M_2(s) = -(1/2) int_s^inf R_1^GSE.
pub fn predicted_moment(n: usize, s: f64) -> Result<f64> {
    check_s(s)?;
    match n {
        1 => {
            let upper = (s + 30.0).min(12.0);
            if upper <= s {
                return Ok(0.0);
            }
            composite_gauss_legendre(
                |x| {
                    0.5 * (r1(Ensemble::GOE, x).unwrap_or(0.0)
                        - 2.0 * r1(Ensemble::GSE, x).unwrap_or(0.0))
                },
                s,
                upper,
                1.0,
                16,
            )
        }
        2 => Ok(-0.5 * r1_integral(Ensemble::GSE, s)?),
        _ => Err(Error::InvalidInput(format!(
            "predicted_moment is available for n in {{1, 2}}, got {n}"
        ))),
    }
}

/// Exact rational coefficient n!/(d1! d2! d3!) * 2^p with sign, as f64.
fn coefficient(sign_exp: u32, pow2: u32, fact_num: &[u64], fact_den: &[u64]) -> f64 {
    let f = |k: u64| -> i128 { (1..=k as i128).product::<i128>().max(1) };
    let mut num: i128 = 1 << pow2;
    for &k in fact_num {
        num *= f(k);
    }
    let mut den: i128 = 1;
    for &k in fact_den {
        den *= f(k);
    }
    let g = gcd(num, den);
    num /= g;
    den /= g;
    let sign = if sign_exp.is_multiple_of(2) { 1.0 } else { -1.0 };
    sign * num as f64 / den as f64
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.abs().max(1)
}

/// The left-hand side of the odd-moment extraction identity at order n,
///
/// ```text
///   sum_{k=0}^{floor(n/2)} (-1)^{k+n} 2^{3n-4k} (n-k)! n! /
///       ((2n-2k)! (n-2k)! k!) M_{2n-2k}
/// - sum_{k=0}^{floor((n-1)/2)} (-1)^{k+n} 2^{3n-4k-2} (n-k-1)! n! /
///       ((2n-2k-1)! (n-2k-1)! k!) M_{2n-2k-1},
/// ```
///
/// which converges to the n-fold integral of R_n^GOE over (s, inf)^n. For
/// n = 1 the combination is 2 M_1 - 4 M_2.
pub fn moment_combination_lhs(n: usize, table: &MomentTable) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidInput("combination order must be >= 1".into()));
    }
    if table.order() < 2 * n {
        return Err(Error::InvalidInput(format!(
            "combination at order {n} needs moments up to M_{}, table holds {}",
            2 * n,
            table.order()
        )));
    }
    let nu = n as u64;
    let mut total = 0.0;
    for k in 0..=(n / 2) as u64 {
        let c = coefficient(
            (k + nu) as u32,
            (3 * nu - 4 * k) as u32,
            &[nu - k, nu],
            &[2 * nu - 2 * k, nu - 2 * k, k],
        );
        total += c * table.m((2 * nu - 2 * k) as usize);
    }
    for k in 0..=((n - 1) / 2) as u64 {
        let c = coefficient(
            (k + nu) as u32,
            (3 * nu - 4 * k - 2) as u32,
            &[nu - k - 1, nu],
            &[2 * nu - 2 * k - 1, nu - 2 * k - 1, k],
        );
        total -= c * table.m((2 * nu - 2 * k - 1) as usize);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_operator_gives_unit_determinant() {
        for &s in &[-12.0, -3.0, 0.0, 11.0] {
            assert_eq!(fredholm_h(0.0, s).unwrap().value, 1.0);
        }
    }

    #[test]
    fn kernel_support_vanishes_far_right() {
        for &z in &[-4.0, 1.0, 4.0] {
            let h = fredholm_h(z, 30.0).unwrap().value;
            assert!((h - 1.0).abs() < 1e-10, "z = {z}: {h}");
        }
    }

    #[test]
    fn tw1_is_a_cdf_on_the_working_range() {
        let mut prev = -1e-9;
        let mut s = -12.0;
        while s <= 8.0 {
            let v = tw1_cdf(s).unwrap();
            assert!((-1e-9..=1.0 + 1e-9).contains(&v), "s = {s}: {v}");
            assert!(v >= prev - 1e-10, "not nondecreasing at s = {s}");
            prev = v;
            s += 0.5;
        }
        assert!((tw1_cdf(8.0).unwrap() - 1.0).abs() < 1e-8);
        assert!(tw1_cdf(-11.0).unwrap().abs() < 1e-4);
    }

    #[test]
    fn tw1_density_has_a_single_peak() {
        let mut density = Vec::new();
        let mut s = -6.0;
        while s <= 2.0 {
            density.push(tw1_cdf(s + 0.25).unwrap() - tw1_cdf(s).unwrap());
            s += 0.25;
        }
        let peak = density
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.partial_cmp(b.1).unwrap())
            .unwrap()
            .0;
        for i in 1..density.len() {
            if i <= peak {
                assert!(density[i] >= density[i - 1] - 1e-9, "dip before peak at {i}");
            } else {
                assert!(density[i] <= density[i - 1] + 1e-9, "rise after peak at {i}");
            }
        }
    }

    #[test]
    fn tw1_median_is_stable_under_node_doubling() {
        let median = |nodes: usize| -> f64 {
            let (mut lo, mut hi) = (-3.0f64, 0.0f64);
            for _ in 0..60 {
                let mid = 0.5 * (lo + hi);
                let v = fredholm_h_raw(1.0, mid, nodes, 40.0).unwrap();
                if v < 0.5 {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            0.5 * (lo + hi)
        };
        let m64 = median(64);
        let m128 = median(128);
        assert!((m64 - m128).abs() < 1e-6, "median {m64} vs {m128}");
        // The GOE Tracy-Widom median sits near -1.27.
        assert!((-1.5..=-1.0).contains(&m64), "median {m64}");
    }

    #[test]
    fn node_doubling_and_window_extension_are_quiet() {
        for &(z, s) in &[(1.0, -12.0), (1.0, -4.0), (-1.0, 0.0), (2.0, 2.0), (1.0, -2.0)] {
            let a = fredholm_h_raw(z, s, 64, 40.0).unwrap();
            let b = fredholm_h_raw(z, s, 128, 40.0).unwrap();
            assert!((a - b).abs() < 1e-8, "doubling at ({z}, {s}): {:e}", (a - b).abs());
            let c = fredholm_h_raw(z, s, 128, 60.0).unwrap();
            assert!((b - c).abs() < 1e-10, "window at ({z}, {s}): {:e}", (b - c).abs());
        }
    }

    #[test]
    fn gse_and_goe_generating_functions_normalize() {
        for &s in &[-4.0, 0.0, 3.0] {
            assert_eq!(g_gse(0.0, s).unwrap(), 1.0);
            assert_eq!(g_goe(0.0, s).unwrap(), 1.0);
        }
        for &lambda in &[0.25, 1.0, 3.5] {
            assert!((g_gse(lambda, 30.0).unwrap() - 1.0).abs() < 1e-9);
        }
        assert!((g_goe(1.5, 30.0).unwrap() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn goe_degenerates_to_tracy_widom_at_unit_lambda() {
        for &s in &[-5.0, -1.3, 0.0, 2.0] {
            assert_eq!(g_goe(1.0, s).unwrap(), tw1_cdf(s).unwrap());
        }
    }

    #[test]
    fn generating_function_slope_matches_the_density_integral() {
        // d G_alpha / d lambda at 0 = -int_s^inf R_1^alpha (one-sided 5-point
        // stencil at h = 0.01).
        let h = 0.01;
        let stencil = |g: &dyn Fn(f64) -> f64| {
            (-25.0 / 12.0 * g(0.0) + 4.0 * g(h) - 3.0 * g(2.0 * h) + 4.0 / 3.0 * g(3.0 * h)
                - 0.25 * g(4.0 * h))
                / h
        };
        for &s in &[-2.0, 0.0] {
            let d_gse = stencil(&|x| g_gse(x, s).unwrap());
            let int_gse = r1_integral(Ensemble::GSE, s).unwrap();
            assert!(
                (d_gse + int_gse).abs() < 1e-5,
                "GSE s = {s}: {d_gse} vs -{int_gse}"
            );
            let d_goe = stencil(&|x| g_goe(x, s).unwrap());
            let int_goe = r1_integral(Ensemble::GOE, s).unwrap();
            assert!(
                (d_goe + int_goe).abs() < 1e-5,
                "GOE s = {s}: {d_goe} vs -{int_goe}"
            );
        }
    }

    #[test]
    fn densities_are_nonnegative_and_vanish_at_the_far_edge() {
        assert!(r1(Ensemble::GOE, 10.0).unwrap() < 1e-10);
        assert!(r1(Ensemble::GSE, 10.0).unwrap() < 1e-10);
        let mut x = -10.0;
        while x <= 6.0 {
            assert!(r1(Ensemble::GOE, x).unwrap() >= -1e-12, "GOE at {x}");
            assert!(r1(Ensemble::GSE, x).unwrap() >= -1e-12, "GSE at {x}");
            x += 0.1;
        }
    }

    #[test]
    fn densities_grow_toward_the_bulk() {
        // Unit-bin averages of R_1^GOE increase as x moves left of -4.
        let bin_avg = |a: f64| {
            composite_gauss_legendre(|x| r1(Ensemble::GOE, x).unwrap(), a, a + 1.0, 0.5, 8)
                .unwrap()
        };
        let mut prev = bin_avg(-5.0);
        for k in 1..6 {
            let a = -5.0 - k as f64;
            let v = bin_avg(a);
            assert!(v > prev, "bin [{a}, {}]: {v} vs {prev}", a + 1.0);
            prev = v;
        }
    }

    #[test]
    fn predicted_moments_far_right_vanish_and_m2_is_nonpositive() {
        assert!(predicted_moment(1, 8.0).unwrap().abs() < 1e-8);
        assert!(predicted_moment(2, 8.0).unwrap().abs() < 1e-8);
        let mut s = -10.0;
        while s <= 6.0 {
            assert!(predicted_moment(2, s).unwrap() <= 1e-12);
            s += 1.0;
        }
        assert!(predicted_moment(3, 0.0).is_err());
    }

    #[test]
    fn combination_coefficients_at_low_order() {
        let table = |values: Vec<f64>| MomentTable { t: 10.0, l: 1, values };
        // n = 1: LHS = 2 M1 - 4 M2.
        assert_eq!(moment_combination_lhs(1, &table(vec![1.0, 0.0])).unwrap(), 2.0);
        assert_eq!(moment_combination_lhs(1, &table(vec![0.0, 1.0])).unwrap(), -4.0);
        assert_eq!(moment_combination_lhs(1, &table(vec![0.0, 0.0])).unwrap(), 0.0);
        // n = 2: LHS = (16/3) M4 - 4 M2 - (16/3) M3.
        let lhs = moment_combination_lhs(2, &table(vec![0.0, 1.0, 1.0, 1.0])).unwrap();
        assert!((lhs - (16.0 / 3.0 - 4.0 - 16.0 / 3.0)).abs() < 1e-12);
        // Insufficient moments.
        assert!(moment_combination_lhs(2, &table(vec![1.0, 1.0])).is_err());
    }

    #[test]
    fn domain_errors() {
        assert!(fredholm_h(4.5, 0.0).is_err());
        assert!(fredholm_h(1.0, -12.5).is_err());
        assert!(g_gse(-0.1, 0.0).is_err());
        assert!(g_gse(4.1, 0.0).is_err());
        assert!(g_goe(2.0, 0.0).is_err());
        assert!(r1(Ensemble::GOE, 12.5).is_err());
        assert!(fredholm_h_with_nodes(1.0, 0.0, 2).is_err());
        assert!(fredholm_h_with_nodes(1.0, 0.0, 300).is_err());
    }
}
