//! The Airy function Ai, its derivative, and its tail integral.
//!
//! Two regimes, matched at fixed switchover points:
//!
//! * a Maclaurin series built from the ODE recurrence a_{n+3} = a_n/((n+3)(n+2))
//!   on the central window, and
//! * the standard asymptotic expansions in zeta = (2/3)|x|^(3/2) outside it
//!   ("Handbook of Mathematical Functions", eqs. 10.4.59-10.4.62).
//!
//! The positive boundary sits at x = 4.8. On the negative side the asymptotic
//! error floor exp(-2 zeta) is much larger at the same |x| because the
//! function does not decay there, so the series is kept out to x = -6.8,
//! where both regimes agree to ~1e-10.

use super::quadrature::composite_gauss_legendre;
use crate::error::{Error, Result};

/// Ai(0) = 3^(-2/3) / Gamma(2/3).
const AI_ZERO: f64 = 0.355_028_053_887_817_2;
/// Ai'(0) = -3^(-1/3) / Gamma(1/3).
const AI_PRIME_ZERO: f64 = -0.258_819_403_792_806_8;

/// Series/asymptotic switchover on the positive axis.
pub(crate) const SWITCH_POS: f64 = 4.8;
/// Series/asymptotic switchover on the negative axis.
pub(crate) const SWITCH_NEG: f64 = -6.8;

/// Lower edge of the supported domain.
const DOMAIN_MIN: f64 = -30.0;

/// Quadrature window length for the tail integral; the remainder beyond it is
/// below 1e-14 for every x >= -30.
const TAIL_WINDOW: f64 = 60.0;

/// Value and first derivative of Ai at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AiryValue {
    pub ai: f64,
    pub ai_prime: f64,
}

/// Evaluate Ai(x) and Ai'(x) for x >= -30.
///
/// Absolute accuracy is ~1e-10 or better over the whole domain; far on the
/// positive axis the result underflows gracefully toward zero.
pub fn airy_ai(x: f64) -> Result<AiryValue> {
    if !x.is_finite() || x < DOMAIN_MIN {
        return Err(Error::InvalidInput(format!(
            "airy_ai supports x >= {DOMAIN_MIN}, got {x}"
        )));
    }
    if x > SWITCH_POS {
        Ok(ai_asymptotic_pos(x))
    } else if x < SWITCH_NEG {
        Ok(ai_asymptotic_neg(x))
    } else {
        Ok(ai_series(x))
    }
}

/// The tail integral int_x^infinity Ai(y) dy for x >= -30, by composite
/// Gauss-Legendre quadrature over [x, x + 60]; absolute error <= 1e-9.
pub fn airy_tail_integral(x: f64) -> Result<f64> {
    if !x.is_finite() || x < DOMAIN_MIN {
        return Err(Error::InvalidInput(format!(
            "airy_tail_integral supports x >= {DOMAIN_MIN}, got {x}"
        )));
    }
    composite_gauss_legendre(
        |y| airy_ai(y).map(|v| v.ai).unwrap_or(0.0),
        x,
        x + TAIL_WINDOW,
        2.0,
        16,
    )
}

/// Maclaurin series about 0. Valid (and used) on [-6.8, 4.8].
pub(crate) fn ai_series(x: f64) -> AiryValue {
    if x == 0.0 {
        return AiryValue {
            ai: AI_ZERO,
            ai_prime: AI_PRIME_ZERO,
        };
    }
    let x3 = x * x * x;

    // Lane f: 1 + x^3/(2*3) + x^6/(2*3*5*6) + ...
    // Lane g: x + x^4/(3*4) + x^7/(3*4*6*7) + ...
    let mut tf = 1.0_f64;
    let mut tg = x;
    let mut f = tf;
    let mut g = tg;
    let mut fp = 0.0_f64; // f'
    let mut gp = 1.0_f64; // g' (k = 0 term: d/dx x = 1)
    for k in 0..200usize {
        let kf = k as f64;
        tf *= x3 / ((3.0 * kf + 2.0) * (3.0 * kf + 3.0));
        tg *= x3 / ((3.0 * kf + 3.0) * (3.0 * kf + 4.0));
        f += tf;
        g += tg;
        // Derivative terms of order 3k+3 resp. 3k+4.
        fp += (3.0 * kf + 3.0) * tf / x;
        gp += (3.0 * kf + 4.0) * tg / x;
        if tf.abs() < 1e-25 && tg.abs() < 1e-25 {
            break;
        }
    }
    AiryValue {
        ai: AI_ZERO * f + AI_PRIME_ZERO * g,
        ai_prime: AI_ZERO * fp + AI_PRIME_ZERO * gp,
    }
}

/// Asymptotic coefficient ratio u_{k+1}/u_k of the Airy expansions.
fn u_ratio(k: usize) -> f64 {
    let kf = k as f64;
    (6.0 * kf + 1.0) * (6.0 * kf + 3.0) * (6.0 * kf + 5.0)
        / (216.0 * (kf + 1.0) * (2.0 * kf + 1.0))
}

/// v_k/u_k for the derivative expansion.
fn v_over_u(k: usize) -> f64 {
    let kf = k as f64;
    (6.0 * kf + 1.0) / (1.0 - 6.0 * kf)
}

/// Asymptotic expansion for x > SWITCH_POS.
pub(crate) fn ai_asymptotic_pos(x: f64) -> AiryValue {
    let zeta = 2.0 / 3.0 * x.powf(1.5);
    let mut term = 1.0_f64; // (-1)^k u_k zeta^{-k}
    let mut sum_u = 1.0_f64;
    let mut sum_v = 1.0_f64;
    let mut prev = f64::INFINITY;
    for k in 0..40usize {
        let next = -term * u_ratio(k) / zeta;
        if next.abs() >= prev {
            break; // divergent tail of the asymptotic series
        }
        prev = next.abs();
        sum_u += next;
        sum_v += next * v_over_u(k + 1);
        term = next;
        if next.abs() < 1e-20 {
            break;
        }
    }
    let pref = (-zeta).exp() / (2.0 * std::f64::consts::PI.sqrt());
    AiryValue {
        ai: pref * sum_u / x.powf(0.25),
        ai_prime: -pref * sum_v * x.powf(0.25),
    }
}

/// Oscillatory asymptotic expansion for x < SWITCH_NEG.
pub(crate) fn ai_asymptotic_neg(x: f64) -> AiryValue {
    let t = -x;
    let zeta = 2.0 / 3.0 * t.powf(1.5);
    let phase = zeta - std::f64::consts::FRAC_PI_4;
    let (sin_p, cos_p) = phase.sin_cos();

    // w_k = u_k / zeta^k with the in-pair alternating signs:
    //   P = w_0 - w_2 + w_4 - ...,  Q = w_1 - w_3 + ...
    let mut w = 1.0_f64;
    let mut p_sum = 0.0_f64;
    let mut q_sum = 0.0_f64;
    let mut r_sum = 0.0_f64;
    let mut s_sum = 0.0_f64;
    let mut prev = f64::INFINITY;
    for k in 0..40usize {
        if w.abs() >= prev {
            break;
        }
        prev = w.abs();
        let signed = if (k / 2) % 2 == 0 { w } else { -w };
        if k % 2 == 0 {
            p_sum += signed;
            r_sum += signed * v_over_u(k);
        } else {
            q_sum += signed;
            s_sum += signed * v_over_u(k);
        }
        if w.abs() < 1e-20 {
            break;
        }
        w *= u_ratio(k) / zeta;
    }

    let rt_pi = std::f64::consts::PI.sqrt();
    AiryValue {
        ai: (cos_p * p_sum + sin_p * q_sum) / (rt_pi * t.powf(0.25)),
        ai_prime: (sin_p * r_sum - cos_p * s_sum) * t.powf(0.25) / rt_pi,
    }
}
