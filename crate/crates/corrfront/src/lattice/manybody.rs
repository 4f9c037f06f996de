//! Brute-force many-body oracle on a small periodic ring.
//!
//! The fixed-particle-number Fock sector is built explicitly, the hopping
//! Hamiltonian is diagonalized densely, and correlators are evaluated by
//! applying creation/annihilation strings to the evolved state. Nothing here
//! reuses the single-particle machinery, which is the point: Wick
//! factorization and the closed-form correlators are validated against this
//! module.

use super::PeriodicPattern;
use crate::error::{Error, Result};
use crate::linalg::sym_eigen;
use num_complex::Complex64;

/// Largest ring size; the half-filled sector of 14 sites has dimension 3432.
pub const MAX_RING_SITES: usize = 14;

/// A periodic chain of `sites` sites with unit hopping. Site labels run over
/// -L..L-1 with L = sites/2 and wrap periodically.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FiniteRing {
    pub sites: usize,
}

impl FiniteRing {
    pub fn new(sites: usize) -> Result<Self> {
        if sites < 4 || !sites.is_multiple_of(2) || sites > MAX_RING_SITES {
            return Err(Error::InvalidInput(format!(
                "ring size must be even and within 4..={MAX_RING_SITES}, got {sites}"
            )));
        }
        Ok(Self { sites })
    }

    /// Build and diagonalize the number-conserving sector selected by the
    /// initial pattern.
    pub fn diagonalize(&self, pattern: &PeriodicPattern) -> Result<ManybodyOracle> {
        if !self.sites.is_multiple_of(pattern.period()) {
            return Err(Error::InvalidInput(format!(
                "pattern period {} does not divide ring size {}",
                pattern.period(),
                self.sites
            )));
        }
        let sites = self.sites;
        let mut initial: u32 = 0;
        for bit in 0..sites {
            if pattern.occupied(bit as i64 - (sites / 2) as i64) {
                initial |= 1 << bit;
            }
        }
        let particles = initial.count_ones();

        let basis: Vec<u32> = (0u32..1 << sites)
            .filter(|m| m.count_ones() == particles)
            .collect();
        let dim = basis.len();
        let index_of = |mask: u32| basis.binary_search(&mask).expect("mask in sector");

        // Dense Hamiltonian: -sum over bonds of (a^dag_{b+1} a_b + h.c.),
        // periodic closure included.
        let mut h = vec![0.0f64; dim * dim];
        for (col, &mask) in basis.iter().enumerate() {
            for b in 0..sites {
                let b2 = (b + 1) % sites;
                for (from, to) in [(b, b2), (b2, b)] {
                    if let Some((m1, s1)) = annihilate(mask, from) {
                        if let Some((m2, s2)) = create(m1, to) {
                            let row = index_of(m2);
                            h[row * dim + col] += -s1 * s2;
                        }
                    }
                }
            }
        }
        let (eigenvalues, eigenvectors) = sym_eigen(&mut h, dim)?;
        let initial_index = index_of(initial);
        Ok(ManybodyOracle {
            sites,
            basis,
            initial_index,
            eigenvalues,
            eigenvectors,
        })
    }
}

/// A correlator request against the many-body state.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingObservable {
    /// <a^dag_m a_n>
    TwoPoint { m: i64, n: i64 },
    /// <a^dag_a a_b a^dag_c a_d>
    FourPoint { a: i64, b: i64, c: i64, d: i64 },
}

/// Exact eigendecomposition of one Fock sector, reusable across times.
pub struct ManybodyOracle {
    sites: usize,
    basis: Vec<u32>,
    initial_index: usize,
    eigenvalues: Vec<f64>,
    eigenvectors: Vec<f64>,
}

impl ManybodyOracle {
    pub fn sector_dimension(&self) -> usize {
        self.basis.len()
    }

    /// Amplitudes of the evolved state in the Fock basis.
    pub fn state_at(&self, t: f64) -> Vec<Complex64> {
        let n = self.basis.len();
        let v = &self.eigenvectors;
        // V exp(-i Lambda t) V^T e_k0
        let mut rotated = vec![Complex64::new(0.0, 0.0); n];
        for (j, r) in rotated.iter_mut().enumerate() {
            let overlap = v[self.initial_index * n + j];
            *r = Complex64::from_polar(overlap, -self.eigenvalues[j] * t);
        }
        let mut c = vec![Complex64::new(0.0, 0.0); n];
        for (i, ci) in c.iter_mut().enumerate() {
            let mut acc = Complex64::new(0.0, 0.0);
            for (j, rj) in rotated.iter().enumerate() {
                acc += v[i * n + j] * rj;
            }
            *ci = acc;
        }
        c
    }

    fn bit(&self, label: i64) -> usize {
        (label + (self.sites / 2) as i64).rem_euclid(self.sites as i64) as usize
    }

    /// Evaluate the requested correlators at time t.
    pub fn evaluate(&self, t: f64, points: &[RingObservable]) -> Vec<Complex64> {
        let state = self.state_at(t);
        points
            .iter()
            .map(|point| self.expectation(&state, *point))
            .collect()
    }

    fn expectation(&self, state: &[Complex64], point: RingObservable) -> Complex64 {
        // Operators in application (right-to-left) order: (bit, is_creation).
        let chain: Vec<(usize, bool)> = match point {
            RingObservable::TwoPoint { m, n } => {
                vec![(self.bit(n), false), (self.bit(m), true)]
            }
            RingObservable::FourPoint { a, b, c, d } => vec![
                (self.bit(d), false),
                (self.bit(c), true),
                (self.bit(b), false),
                (self.bit(a), true),
            ],
        };
        let mut acc = Complex64::new(0.0, 0.0);
        'outer: for (k, &ck) in state.iter().enumerate() {
            if ck.norm_sqr() < 1e-60 {
                continue;
            }
            let mut mask = self.basis[k];
            let mut sign = 1.0;
            for &(bit, creation) in &chain {
                let step = if creation {
                    create(mask, bit)
                } else {
                    annihilate(mask, bit)
                };
                match step {
                    Some((m, s)) => {
                        mask = m;
                        sign *= s;
                    }
                    None => continue 'outer,
                }
            }
            let target = self.basis.binary_search(&mask).expect("sector preserved");
            acc += state[target].conj() * sign * ck;
        }
        acc
    }
}

/// Convenience wrapper: diagonalize once and evaluate a batch of correlators.
pub fn manybody_oracle(
    ring: FiniteRing,
    pattern: &PeriodicPattern,
    t: f64,
    points: &[RingObservable],
) -> Result<Vec<Complex64>> {
    if !t.is_finite() || t < 0.0 {
        return Err(Error::InvalidInput(format!("time must be >= 0, got {t}")));
    }
    Ok(ring.diagonalize(pattern)?.evaluate(t, points))
}

fn annihilate(mask: u32, bit: usize) -> Option<(u32, f64)> {
    if mask & (1 << bit) == 0 {
        return None;
    }
    let below = (mask & ((1u32 << bit) - 1)).count_ones();
    let sign = if below.is_multiple_of(2) { 1.0 } else { -1.0 };
    Some((mask ^ (1 << bit), sign))
}

fn create(mask: u32, bit: usize) -> Option<(u32, f64)> {
    if mask & (1 << bit) != 0 {
        return None;
    }
    let below = (mask & ((1u32 << bit) - 1)).count_ones();
    let sign = if below.is_multiple_of(2) { 1.0 } else { -1.0 };
    Some((mask | (1 << bit), sign))
}
