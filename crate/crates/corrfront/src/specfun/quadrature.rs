//! Gauss–Legendre quadrature rules.
//!
//! Nodes are the roots of the Legendre polynomial P_n, found by Newton
//! iteration from the Chebyshev-like initial guess cos(pi (i - 1/4)/(n + 1/2)),
//! then mapped affinely to the requested interval. An n-point rule integrates
//! polynomials up to degree 2n - 1 exactly.

use crate::error::{Error, Result};

/// Maximum supported rule size.
pub const MAX_NODES: usize = 512;

const NEWTON_MAX_ITER: usize = 100;

/// A Gauss–Legendre rule on a finite interval.
#[derive(Debug, Clone)]
pub struct QuadratureRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub interval: (f64, f64),
}

impl QuadratureRule {
    /// Apply the rule to an integrand.
    pub fn integrate<F: FnMut(f64) -> f64>(&self, mut f: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }
}

/// Build the n-point Gauss–Legendre rule on [a, b].
pub fn gauss_legendre(n: usize, a: f64, b: f64) -> Result<QuadratureRule> {
    if n < 2 {
        return Err(Error::InvalidInput(format!(
            "gauss_legendre needs n >= 2, got {n}"
        )));
    }
    if n > MAX_NODES {
        return Err(Error::InvalidInput(format!(
            "gauss_legendre supports at most {MAX_NODES} nodes, got {n}"
        )));
    }
    if !a.is_finite() || !b.is_finite() || a >= b {
        return Err(Error::InvalidInput(format!(
            "gauss_legendre needs a finite interval a < b, got [{a}, {b}]"
        )));
    }

    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);

    // Roots come in +/- pairs; solve for the upper half.
    let m = n.div_ceil(2);
    for i in 0..m {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        // Evaluate P_n and P_n' by the three-term recurrence.
        let legendre = |x: f64| {
            let mut p0 = 1.0;
            let mut p1 = x;
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            (p1, n as f64 * (x * p1 - p0) / (x * x - 1.0))
        };
        let mut converged = false;
        for _ in 0..NEWTON_MAX_ITER {
            let (p, dp) = legendre(x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() <= 1e-15 {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::Convergence(format!(
                "Legendre root {i} of {n} did not converge in {NEWTON_MAX_ITER} Newton steps"
            )));
        }
        let (_, dp) = legendre(x);

        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = mid - half * x;
        nodes[n - 1 - i] = mid + half * x;
        weights[i] = half * w;
        weights[n - 1 - i] = half * w;
    }

    Ok(QuadratureRule {
        nodes,
        weights,
        interval: (a, b),
    })
}

/// Integrate `f` over [a, b] with a composite rule: panels of width at most
/// `panel` with `nodes_per_panel` Gauss–Legendre nodes each.
pub fn composite_gauss_legendre<F: FnMut(f64) -> f64>(
    mut f: F,
    a: f64,
    b: f64,
    panel: f64,
    nodes_per_panel: usize,
) -> Result<f64> {
    if !a.is_finite() || !b.is_finite() || a >= b {
        return Err(Error::InvalidInput(format!(
            "composite quadrature needs a finite interval a < b, got [{a}, {b}]"
        )));
    }
    let n_panels = ((b - a) / panel).ceil().max(1.0) as usize;
    let width = (b - a) / n_panels as f64;
    let unit = gauss_legendre(nodes_per_panel, 0.0, 1.0)?;
    let mut total = 0.0;
    for p in 0..n_panels {
        let left = a + p as f64 * width;
        for (&u, &w) in unit.nodes.iter().zip(&unit.weights) {
            total += w * width * f(left + u * width);
        }
    }
    Ok(total)
}
