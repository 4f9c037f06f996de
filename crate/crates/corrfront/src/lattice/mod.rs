//! Exact two-point correlators of free fermions on the infinite 1D lattice
//! after a quench from a periodic product state, the anti-diagonal kernel
//! built from them, and finite-ring oracles.
//!
//! The Hamiltonian is nearest-neighbour hopping with unit amplitude. For the
//! alternating initial state (fermions on every other site) the correlator has
//! the closed form
//!
//!   C_{m,n}(t) = (1/2) delta_{m,n} + (1/2) i^{n+m} J_{n-m}(4t),
//!
//! and for a general periodic occupation pattern S_p it is the bilinear
//! Bessel sum
//!
//!   C_{m,n}(t) = i^{n-m} sum_p S_p J_{m-p}(2t) J_{n-p}(2t),
//!
//! truncated where the Bessel factors are negligible. Both paths agree on the
//! alternating state.

pub mod manybody;

use crate::error::{Error, Result};
use crate::specfun::{bessel_j_row, support_order, BesselRow};
use num_complex::Complex64;

/// Largest site index accepted by the correlator routines.
const MAX_SITE: i64 = 10_000_000;

/// Hard cap on kernel truncation size.
const MAX_KERNEL_DIM: usize = 5000;

/// i^k for signed k.
pub(crate) fn i_pow(k: i64) -> Complex64 {
    match k.rem_euclid(4) {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        3 => Complex64::new(0.0, -1.0),
        _ => unreachable!(),
    }
}

/// One unit cell of site occupations, repeated over the whole lattice.
/// Site p is occupied iff `cell[p mod period]` is set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodicPattern {
    cell: Vec<bool>,
}

impl PeriodicPattern {
    /// Build a pattern from 0/1 entries. The cell must be non-empty and
    /// contain at least one fermion.
    pub fn from_bits(bits: &[u8]) -> Result<Self> {
        if bits.is_empty() {
            return Err(Error::InvalidInput("pattern cell must be non-empty".into()));
        }
        if bits.iter().any(|&b| b > 1) {
            return Err(Error::InvalidInput(
                "pattern cell entries must be 0 or 1".into(),
            ));
        }
        if bits.iter().all(|&b| b == 0) {
            return Err(Error::InvalidInput(
                "pattern cell must occupy at least one site".into(),
            ));
        }
        Ok(Self {
            cell: bits.iter().map(|&b| b == 1).collect(),
        })
    }

    /// Parse a bit string such as "10" or "110100".
    pub fn parse(s: &str) -> Result<Self> {
        let bits: Result<Vec<u8>> = s
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(Error::InvalidInput(format!(
                    "pattern string may contain only 0 and 1, got {c:?}"
                ))),
            })
            .collect();
        Self::from_bits(&bits?)
    }

    /// The half-filled state with fermions on the even sites.
    pub fn alternating() -> Self {
        Self {
            cell: vec![true, false],
        }
    }

    pub fn period(&self) -> usize {
        self.cell.len()
    }

    /// Number of occupied sites per cell.
    pub fn ones(&self) -> usize {
        self.cell.iter().filter(|&&b| b).count()
    }

    /// Mean particle number per site.
    pub fn filling(&self) -> f64 {
        self.ones() as f64 / self.period() as f64
    }

    /// Occupation of lattice site p.
    pub fn occupied(&self, p: i64) -> bool {
        self.cell[p.rem_euclid(self.period() as i64) as usize]
    }

    /// True exactly for the cell [1, 0], for which the closed-form correlator
    /// applies.
    pub fn is_alternating(&self) -> bool {
        self.cell == [true, false]
    }

    pub fn bits(&self) -> Vec<u8> {
        self.cell.iter().map(|&b| b as u8).collect()
    }
}

impl std::fmt::Display for PeriodicPattern {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for &b in &self.cell {
            write!(f, "{}", b as u8)?;
        }
        Ok(())
    }
}

impl std::str::FromStr for PeriodicPattern {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

fn check_site(label: &str, v: i64) -> Result<()> {
    if v.abs() > MAX_SITE {
        return Err(Error::InvalidInput(format!(
            "site index {label} = {v} exceeds the supported range +/-{MAX_SITE}"
        )));
    }
    Ok(())
}

fn check_time(t: f64) -> Result<()> {
    if !t.is_finite() || t < 0.0 {
        return Err(Error::InvalidInput(format!("time must be >= 0, got {t}")));
    }
    Ok(())
}

/// Row extent that buries every Bessel factor below ~1e-20.
fn padded_support(x: f64) -> usize {
    (support_order(x) + 8.0 * x.cbrt() + 20.0).ceil() as usize
}

/// The two-point correlator <a^dag_m a_n> at time t for the given initial
/// pattern.
pub fn correlator(pattern: &PeriodicPattern, m: i64, n: i64, t: f64) -> Result<Complex64> {
    check_time(t)?;
    check_site("m", m)?;
    check_site("n", n)?;
    if pattern.is_alternating() {
        alternating_correlator(m, n, t)
    } else {
        let row = bessel_j_row(2.0 * t, padded_support(2.0 * t))?;
        Ok(general_correlator(pattern, &row, m, n))
    }
}

/// Correlators at many index pairs sharing one Bessel row; much cheaper than
/// repeated [`correlator`] calls when sweeping grids at fixed time.
pub fn correlator_batch(
    pattern: &PeriodicPattern,
    t: f64,
    points: &[(i64, i64)],
) -> Result<Vec<Complex64>> {
    check_time(t)?;
    for &(m, n) in points {
        check_site("m", m)?;
        check_site("n", n)?;
    }
    if pattern.is_alternating() {
        let extent = padded_support(4.0 * t);
        let row = bessel_j_row(4.0 * t, extent)?;
        Ok(points
            .iter()
            .map(|&(m, n)| {
                let delta = if m == n { 0.5 } else { 0.0 };
                let diff = n - m;
                let j = if diff.unsigned_abs() as usize > extent {
                    0.0
                } else {
                    row.signed(diff)
                };
                Complex64::new(delta, 0.0) + i_pow(n + m) * 0.5 * j
            })
            .collect())
    } else {
        let row = bessel_j_row(2.0 * t, padded_support(2.0 * t))?;
        Ok(points
            .iter()
            .map(|&(m, n)| general_correlator(pattern, &row, m, n))
            .collect())
    }
}

/// Closed form for the alternating state.
fn alternating_correlator(m: i64, n: i64, t: f64) -> Result<Complex64> {
    let delta = if m == n { 0.5 } else { 0.0 };
    let diff = n - m;
    let extent = padded_support(4.0 * t) as i64;
    let j = if diff.abs() > extent {
        0.0
    } else {
        bessel_j_row(4.0 * t, diff.unsigned_abs() as usize)?.signed(diff)
    };
    Ok(Complex64::new(delta, 0.0) + i_pow(n + m) * 0.5 * j)
}

/// General-pattern correlator evaluated against a precomputed Bessel row at
/// argument 2t. The p-sum runs over the window where both factors can be
/// non-negligible.
fn general_correlator(pattern: &PeriodicPattern, row: &BesselRow, m: i64, n: i64) -> Complex64 {
    let extent = row.n_max() as i64;
    let lo = m.max(n) - extent;
    let hi = m.min(n) + extent;
    let mut sum = 0.0;
    let mut p = lo;
    while p <= hi {
        if pattern.occupied(p) {
            sum += row.signed(m - p) * row.signed(n - p);
        }
        p += 1;
    }
    i_pow(n - m) * sum
}

/// Finite truncation of the anti-diagonal kernel C_{m,-n}(t) with
/// m, n in [l, l + dim).
#[derive(Debug, Clone)]
pub struct KernelMatrix {
    pub t: f64,
    pub l: i64,
    pub dim: usize,
    /// Row-major entries, entries[i * dim + j] = C_{l+i, -(l+j)}(t).
    pub entries: Vec<Complex64>,
}

impl KernelMatrix {
    pub fn entry(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i * self.dim + j]
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries
            .iter()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }
}

/// Default truncation: the kernel support ends where the Bessel order
/// exceeds 4t by a dozen front widths.
pub fn default_kernel_dim(t: f64, l: i64) -> usize {
    let cutoff = (4.0 * t + 12.0 * (2.0 * t).cbrt() + 40.0).ceil() as i64;
    (cutoff - 2 * l).max(8) as usize
}

/// Build the kernel matrix for the given pattern, time, offset and size.
pub fn kernel_matrix(
    pattern: &PeriodicPattern,
    t: f64,
    l: i64,
    dim: usize,
) -> Result<KernelMatrix> {
    check_time(t)?;
    if l < 1 {
        return Err(Error::InvalidInput(format!("kernel offset l must be >= 1, got {l}")));
    }
    if dim == 0 || dim > MAX_KERNEL_DIM {
        return Err(Error::InvalidInput(format!(
            "kernel dimension must lie in 1..={MAX_KERNEL_DIM}, got {dim}"
        )));
    }
    check_site("l + dim", l + dim as i64)?;

    let mut entries = vec![Complex64::new(0.0, 0.0); dim * dim];
    if pattern.is_alternating() {
        // C_{m,-n} = (1/2) i^{n-m} J_{m+n}(4t): one Bessel row covers every
        // entry, and the phase depends only on j - i.
        let max_order = 2 * (l as usize + dim - 1);
        let extent = padded_support(4.0 * t).min(max_order);
        let row = bessel_j_row(4.0 * t, extent)?;
        for i in 0..dim {
            for j in 0..dim {
                let order = 2 * l as usize + i + j;
                let jv = if order <= extent { row.value(order) } else { 0.0 };
                entries[i * dim + j] = i_pow(j as i64 - i as i64) * 0.5 * jv;
            }
        }
    } else {
        let row = bessel_j_row(2.0 * t, padded_support(2.0 * t))?;
        for i in 0..dim {
            let m = l + i as i64;
            for j in 0..dim {
                let n = l + j as i64;
                entries[i * dim + j] = general_correlator(pattern, &row, m, -n);
            }
        }
    }
    Ok(KernelMatrix { t, l, dim, entries })
}

/// One point of the front-scaling comparison: the phase-stripped lattice value
/// at m = floor(2t + x (2t)^(1/3)/2) against the Airy profile.
#[derive(Debug, Clone, Copy)]
pub struct FrontProfilePoint {
    /// 2 (2t)^(1/3) times the phase-stripped correlator C_{m,-m}(t),
    /// i.e. (2t)^(1/3) J_{2m}(4t).
    pub lattice: f64,
    /// Ai(x) at the requested rescaled coordinate.
    pub airy: f64,
    /// The lattice site the window landed on.
    pub m: i64,
}

/// Evaluate the correlation-front profile of the alternating state at rescaled
/// coordinate x for t >= 2.
pub fn front_profile(t: f64, x: f64) -> Result<FrontProfilePoint> {
    if !t.is_finite() || t < 2.0 {
        return Err(Error::InvalidInput(format!(
            "front_profile needs t >= 2, got {t}"
        )));
    }
    if !(-8.0..=12.0).contains(&x) {
        return Err(Error::InvalidInput(format!(
            "front_profile needs x in [-8, 12], got {x}"
        )));
    }
    let w = (2.0 * t).cbrt();
    let m = (2.0 * t + 0.5 * x * w).floor() as i64;
    let order = 2 * m.unsigned_abs() as usize;
    let extent = padded_support(4.0 * t);
    let j = if order > extent {
        0.0
    } else {
        bessel_j_row(4.0 * t, order)?.value(order)
    };
    Ok(FrontProfilePoint {
        lattice: w * j,
        airy: crate::specfun::airy_ai(x)?.ai,
        m,
    })
}

/// Exact correlator of the alternating state on a periodic ring of `sites`
/// sites (labels -L..L-1 with L = sites/2), from the momentum sum
///
///   C_{m,n}(t) = (1/2) delta_{m,n}
///              + ((-1)^n / 4L) sum_alpha exp[-4it cos(pi alpha/L) + i pi alpha (n-m)/L].
///
/// Served as an independent cross-check of the many-body oracle and of the
/// infinite-lattice formula before the wavefront wraps around.
pub fn ring_correlator(sites: usize, m: i64, n: i64, t: f64) -> Result<Complex64> {
    check_time(t)?;
    if sites < 4 || !sites.is_multiple_of(2) {
        return Err(Error::InvalidInput(format!(
            "ring size must be even and >= 4, got {sites}"
        )));
    }
    let big_l = (sites / 2) as i64;
    let two_l = sites as i64;
    let same_site = (m - n).rem_euclid(two_l) == 0;
    let delta = if same_site { 0.5 } else { 0.0 };
    let sign = if n.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
    let dk = std::f64::consts::PI / big_l as f64;
    let mut acc = Complex64::new(0.0, 0.0);
    for alpha in -big_l..big_l {
        let phase = -4.0 * t * (dk * alpha as f64).cos() + dk * alpha as f64 * (n - m) as f64;
        acc += Complex64::from_polar(1.0, phase);
    }
    Ok(Complex64::new(delta, 0.0) + acc * (sign / (4.0 * big_l as f64)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn pattern_construction_and_validation() {
        let p = PeriodicPattern::parse("110100").unwrap();
        assert_eq!(p.period(), 6);
        assert_eq!(p.ones(), 3);
        assert!((p.filling() - 0.5).abs() < 1e-15);
        assert!(p.occupied(0) && p.occupied(1) && !p.occupied(2) && p.occupied(3));
        assert!(p.occupied(-6) && p.occupied(9));
        assert!(PeriodicPattern::parse("").is_err());
        assert!(PeriodicPattern::parse("000").is_err());
        assert!(PeriodicPattern::parse("1x0").is_err());
        assert!(PeriodicPattern::alternating().is_alternating());
        assert!(!PeriodicPattern::parse("01").unwrap().is_alternating());
    }

    #[test]
    fn initial_state_is_uncorrelated_occupation() {
        let alt = PeriodicPattern::alternating();
        // C_{m,n}(0) = delta_{m,n} (1 + (-1)^n)/2
        assert_eq!(correlator(&alt, 2, 2, 0.0).unwrap(), Complex64::new(1.0, 0.0));
        assert_eq!(correlator(&alt, 1, 1, 0.0).unwrap(), Complex64::new(0.0, 0.0));
        assert_eq!(correlator(&alt, 2, 4, 0.0).unwrap(), Complex64::new(0.0, 0.0));
        // General patterns reproduce their own cell at t = 0.
        let p = PeriodicPattern::parse("1100").unwrap();
        for site in -4i64..8 {
            let c = correlator(&p, site, site, 0.0).unwrap();
            let expect = if p.occupied(site) { 1.0 } else { 0.0 };
            assert!((c.re - expect).abs() < 1e-12 && c.im.abs() < 1e-14);
        }
    }

    #[test]
    fn particle_number_is_conserved_in_windows() {
        for pattern in [
            PeriodicPattern::alternating(),
            PeriodicPattern::parse("110").unwrap(),
            PeriodicPattern::parse("110100").unwrap(),
        ] {
            let t = 1.5;
            let window = 3 * pattern.period() as i64;
            let mut sum = 0.0;
            for m in -window / 2..window - window / 2 {
                sum += correlator(&pattern, m, m, t).unwrap().re;
            }
            let expect = pattern.filling() * window as f64;
            assert!(
                (sum - expect).abs() < 1e-8,
                "pattern {pattern}: sum {sum} vs {expect}"
            );
        }
    }

    #[test]
    fn closed_form_matches_general_path_on_the_alternating_state() {
        let shifted = PeriodicPattern::parse("10").unwrap(); // same cell, general path
        assert!(shifted.is_alternating());
        // Force the general path by writing the cell as period 4.
        let alt4 = PeriodicPattern::parse("1010").unwrap();
        assert!(!alt4.is_alternating());
        for &(m, n, t) in &[(3i64, -3i64, 5.0f64), (0, 2, 1.3), (-4, 7, 2.6), (5, 5, 0.7)] {
            let closed = correlator(&PeriodicPattern::alternating(), m, n, t).unwrap();
            let general = correlator(&alt4, m, n, t).unwrap();
            assert!(
                (closed - general).norm() < 1e-10,
                "({m},{n},{t}): {closed} vs {general}"
            );
        }
    }

    #[test]
    fn batch_correlators_match_pointwise_calls() {
        let points: Vec<(i64, i64)> = vec![(0, 0), (3, -3), (-2, 5), (40, -40), (7, 7)];
        for pattern in [PeriodicPattern::alternating(), PeriodicPattern::parse("110").unwrap()] {
            let batch = correlator_batch(&pattern, 4.2, &points).unwrap();
            for (&(m, n), b) in points.iter().zip(&batch) {
                let single = correlator(&pattern, m, n, 4.2).unwrap();
                assert!((b - single).norm() < 1e-14, "({m},{n}): {b} vs {single}");
            }
        }
    }

    #[test]
    fn hermiticity_and_occupation_bounds() {
        let p = PeriodicPattern::parse("1101").unwrap();
        for &(m, n) in &[(0i64, 3i64), (-2, 5), (1, 1), (-7, -7)] {
            let c_mn = correlator(&p, m, n, 2.2).unwrap();
            let c_nm = correlator(&p, n, m, 2.2).unwrap();
            assert!((c_mn - c_nm.conj()).norm() < 1e-12);
            assert!(c_mn.norm() <= 1.0 + 1e-12);
        }
        for m in -3i64..4 {
            let d = correlator(&p, m, m, 1.9).unwrap();
            assert!(d.im.abs() < 1e-12);
            assert!((-1e-12..=1.0 + 1e-12).contains(&d.re));
        }
    }

    #[test]
    fn translation_covariance_in_modulus() {
        let p = PeriodicPattern::parse("110100").unwrap();
        let period = p.period() as i64;
        for &(m, n) in &[(0i64, 1i64), (-2, 4), (3, 3)] {
            let a = correlator(&p, m, n, 1.7).unwrap().norm();
            let b = correlator(&p, m + period, n + period, 1.7).unwrap().norm();
            assert!((a - b).abs() < 1e-10, "({m},{n}): {a} vs {b}");
        }
    }

    #[test]
    fn projector_sum_rule_for_the_alternating_state() {
        // sum_m |C_{m,n}|^2 = C_{n,n} for product states of filled orbitals.
        let alt = PeriodicPattern::alternating();
        let t = 2.0;
        for &n in &[0i64, 3] {
            let reach = padded_support(4.0 * t) as i64;
            let mut sum = 0.0;
            for m in n - reach..=n + reach {
                sum += correlator(&alt, m, n, t).unwrap().norm_sqr();
            }
            let diag = correlator(&alt, n, n, t).unwrap().re;
            assert!((sum - diag).abs() < 1e-8, "n = {n}: {sum} vs {diag}");
        }
    }

    #[test]
    fn kernel_at_time_zero_is_zero() {
        let k = kernel_matrix(&PeriodicPattern::alternating(), 0.0, 1, 12).unwrap();
        assert!(k.frobenius_norm() < 1e-14);
        let k = kernel_matrix(&PeriodicPattern::parse("1100").unwrap(), 0.0, 2, 9).unwrap();
        assert!(k.frobenius_norm() < 1e-14);
    }

    #[test]
    fn kernel_entries_match_the_correlator() {
        let alt = PeriodicPattern::alternating();
        let k = kernel_matrix(&alt, 3.0, 2, 10).unwrap();
        for i in 0..k.dim {
            for j in 0..k.dim {
                let direct = correlator(&alt, 2 + i as i64, -(2 + j as i64), 3.0).unwrap();
                assert!((k.entry(i, j) - direct).norm() < 1e-12);
                // modulus symmetric in (i, j)
                assert!((k.entry(i, j).norm() - k.entry(j, i).norm()).abs() < 1e-12);
            }
        }
        // phase-stripped entries are real symmetric: i^{i-j} K_{ij} = J/2
        for i in 0..k.dim {
            for j in 0..k.dim {
                let stripped = i_pow(i as i64 - j as i64) * k.entry(i, j);
                assert!(stripped.im.abs() < 1e-14);
                let other = i_pow(j as i64 - i as i64) * k.entry(j, i);
                assert!((stripped - other).norm() < 1e-14);
            }
        }
    }

    #[test]
    fn kernel_tail_entries_are_negligible() {
        let t = 5.0;
        let l = 1;
        let dim = default_kernel_dim(t, l);
        let k = kernel_matrix(&PeriodicPattern::alternating(), t, l, dim).unwrap();
        let cutoff = 4.0 * t + 12.0 * (2.0 * t).cbrt() + 40.0;
        for i in 0..dim {
            for j in 0..dim {
                let order = (2 * l as usize + i + j) as f64;
                if order > cutoff {
                    assert!(k.entry(i, j).norm() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn kernel_is_stable_under_wider_truncation() {
        for pattern in [PeriodicPattern::alternating(), PeriodicPattern::parse("110100").unwrap()] {
            let t = 10.0;
            let l = 4;
            let dim = default_kernel_dim(t, l);
            let a = kernel_matrix(&pattern, t, l, dim).unwrap();
            let b = kernel_matrix(&pattern, t, l, dim + 50).unwrap();
            let mut diff = 0.0;
            for i in 0..dim {
                for j in 0..dim {
                    diff += (a.entry(i, j) - b.entry(i, j)).norm_sqr();
                }
            }
            // identical common block ...
            assert!(diff.sqrt() < 1e-14);
            // ... and the extension carries no weight.
            let grown: f64 = (b.frobenius_norm().powi(2) - a.frobenius_norm().powi(2)).abs();
            assert!(grown.sqrt() < 1e-10, "pattern {pattern}: {}", grown.sqrt());
        }
    }

    #[test]
    fn kernel_rejects_bad_arguments() {
        let alt = PeriodicPattern::alternating();
        assert!(kernel_matrix(&alt, 1.0, 0, 8).is_err());
        assert!(kernel_matrix(&alt, 1.0, 1, MAX_KERNEL_DIM + 1).is_err());
        assert!(kernel_matrix(&alt, -1.0, 1, 8).is_err());
        assert!(correlator(&alt, MAX_SITE + 1, 0, 1.0).is_err());
    }

    #[test]
    fn front_profile_decays_beyond_the_front() {
        for &t in &[100.0, 400.0] {
            let p = front_profile(t, 10.0).unwrap();
            assert!(p.lattice.abs() < 1e-2, "t = {t}: {}", p.lattice);
        }
    }

    #[test]
    fn front_profile_converges_toward_airy() {
        let sup = |t: f64| {
            let mut worst = 0.0f64;
            let mut x = -8.0;
            while x <= 6.0 {
                let p = front_profile(t, x).unwrap();
                worst = worst.max((p.lattice - p.airy).abs());
                x += 0.25;
            }
            worst
        };
        // Monotone over the decade grid; the window discretization dominates
        // the sup, shrinking like (2t)^(-1/3).
        let sups = [sup(10.0), sup(100.0), sup(1000.0)];
        assert!(
            sups[0] > sups[1] && sups[1] > sups[2],
            "sup error should shrink with t: {sups:?}"
        );
    }

    #[test]
    fn front_peak_sits_at_the_light_cone() {
        let t = 100.0;
        let alt = PeriodicPattern::alternating();
        let mut best = (0i64, 0.0f64);
        for m in 150..260i64 {
            let v = correlator(&alt, m, -m, t).unwrap().norm();
            if v > best.1 {
                best = (m, v);
            }
        }
        let width = 2.0 * (2.0 * t).cbrt();
        assert!(
            (best.0 as f64 - 2.0 * t).abs() <= width,
            "peak at {} vs 2t = {}",
            best.0,
            2.0 * t
        );
    }

    #[test]
    fn ring_formula_reduces_to_infinite_lattice_before_wraparound() {
        // 14-site ring, t <= 0.8: the wraparound images enter at Bessel order
        // 14 - |m - n|, so pairs inside the light cone agree to 1e-6 while
        // wider separations are probed at the earlier time.
        let alt = PeriodicPattern::alternating();
        for &(m, n) in &[(0i64, 0i64), (1, -1), (0, 2), (2, 1)] {
            let ring = ring_correlator(14, m, n, 0.8).unwrap();
            let inf = correlator(&alt, m, n, 0.8).unwrap();
            assert!(
                (ring - inf).norm() < 1e-6,
                "({m},{n}): ring {ring} vs infinite {inf}"
            );
        }
        for &(m, n) in &[(2i64, -3i64), (0, 4), (3, -3)] {
            let ring = ring_correlator(14, m, n, 0.3).unwrap();
            let inf = correlator(&alt, m, n, 0.3).unwrap();
            assert!(
                (ring - inf).norm() < 1e-6,
                "({m},{n}) at t = 0.3: ring {ring} vs infinite {inf}"
            );
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]
        #[test]
        fn hermiticity_holds_for_random_patterns(
            bits in prop::collection::vec(0u8..2, 1..7),
            m in -12i64..12,
            n in -12i64..12,
            t in 0.0f64..6.0,
        ) {
            prop_assume!(bits.contains(&1));
            let p = PeriodicPattern::from_bits(&bits).unwrap();
            let c_mn = correlator(&p, m, n, t).unwrap();
            let c_nm = correlator(&p, n, m, t).unwrap();
            prop_assert!((c_mn - c_nm.conj()).norm() < 1e-10);
            prop_assert!(c_mn.norm() <= 1.0 + 1e-10);
        }
    }
}
