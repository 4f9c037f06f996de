//! Classification of periodic initial states by whether the correlation front
//! carries soft-edge random-matrix statistics.
//!
//! The front amplitude of the kernel Bessel term for a cell S_0..S_{p-1} is
//! c = (1/p) sum_j S_j (-1)^j, the pi-momentum Fourier weight of the initial
//! density over one cell. States with c = 0 lose the Airy front and with it
//! the GOE/GSE moment structure; states with c != 0 collapse onto the
//! alternating-state moment curves after rescaling M_1 by A_1 = (1/2)/c and
//! M_2 by A_2 = A_1^2.

use crate::error::{Error, Result};
use crate::lattice::PeriodicPattern;

/// Scans beyond this period add nothing and cost exponentially more.
pub const MAX_SCAN_PERIOD: usize = 12;

/// Front classification of one periodic pattern.
#[derive(Debug, Clone, PartialEq)]
pub struct PatternReport {
    pub pattern: PeriodicPattern,
    /// Front Bessel amplitude c.
    pub coefficient: f64,
    /// Whether GOE/GSE front statistics emerge (c != 0).
    pub admits_rmt: bool,
    /// Moment rescaling factors (A_1, A_2) onto the alternating curves;
    /// absent exactly when the front coefficient vanishes.
    pub rescale: Option<(f64, f64)>,
}

/// The alternating sum over one cell, sum_j S_j (-1)^j, exact in integers.
fn alternating_sum(pattern: &PeriodicPattern) -> i64 {
    pattern
        .bits()
        .iter()
        .enumerate()
        .map(|(j, &b)| {
            if b == 0 {
                0
            } else if j % 2 == 0 {
                1
            } else {
                -1
            }
        })
        .sum()
}

/// Front amplitude c = (1/p) sum_j S_j (-1)^j. The alternating state gives
/// 1/2, the amplitude of its Bessel correlator term.
pub fn front_coefficient(pattern: &PeriodicPattern) -> f64 {
    alternating_sum(pattern) as f64 / pattern.period() as f64
}

/// True iff the front coefficient is non-zero (decided in exact integer
/// arithmetic).
pub fn admits_rmt_front(pattern: &PeriodicPattern) -> bool {
    alternating_sum(pattern) != 0
}

/// Rescaling (A_1, A_2) = ((1/2)/c, ((1/2)/c)^2) collapsing the pattern's
/// first and second moment curves onto the alternating-state ones.
pub fn rescale_factors(pattern: &PeriodicPattern) -> Result<(f64, f64)> {
    let sum = alternating_sum(pattern);
    if sum == 0 {
        return Err(Error::InvalidInput(format!(
            "pattern {pattern} has zero front coefficient; no rescaling exists"
        )));
    }
    let a1 = pattern.period() as f64 / (2.0 * sum as f64);
    Ok((a1, a1 * a1))
}

/// Full classification of one pattern.
pub fn analyze(pattern: &PeriodicPattern) -> PatternReport {
    let coefficient = front_coefficient(pattern);
    let admits = admits_rmt_front(pattern);
    PatternReport {
        rescale: rescale_factors(pattern).ok(),
        pattern: pattern.clone(),
        coefficient,
        admits_rmt: admits,
    }
}

/// Exhaustively classify every non-vacuum cell of exactly the given period.
/// Returns (number admitting RMT fronts, number of valid cells).
pub fn scan_period(period: usize) -> Result<(usize, usize)> {
    if period == 0 || period > MAX_SCAN_PERIOD {
        return Err(Error::InvalidInput(format!(
            "scan period must lie in 1..={MAX_SCAN_PERIOD}, got {period}"
        )));
    }
    let mut admitting = 0usize;
    let mut total = 0usize;
    for mask in 1u32..(1 << period) {
        let bits: Vec<u8> = (0..period).map(|j| ((mask >> j) & 1) as u8).collect();
        let pattern = PeriodicPattern::from_bits(&bits)?;
        total += 1;
        if admits_rmt_front(&pattern) {
            admitting += 1;
        }
    }
    Ok((admitting, total))
}
