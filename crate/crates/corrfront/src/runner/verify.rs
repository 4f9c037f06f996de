//! The `verify` subcommand: a curated invariant suite over every module,
//! printing one pass/fail line per check. All thresholds are fixed here; a
//! fresh build is expected to pass them all.

use crate::error::{Error, Result};
use crate::initcond;
use crate::lattice::manybody::{FiniteRing, RingObservable};
use crate::lattice::{correlator, kernel_matrix, ring_correlator, PeriodicPattern};
use crate::moments::{
    generating_q, generating_q_verified, lattice_g2, moments, moments_with, FrontWindow,
};
use crate::rmt::{fredholm_h_raw, g_goe, g_gse, r1, r1_integral, tw1_cdf, Ensemble};
use crate::specfun::{airy_ai, airy_tail_integral, bessel_j_row, gauss_legendre, support_order};
use num_complex::Complex64;
use rayon::prelude::*;

type CheckResult = std::result::Result<String, String>;

struct Check {
    name: &'static str,
    run: fn() -> CheckResult,
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)*) => {
        match $cond {
            true => {}
            false => return Err(format!($($msg)*)),
        }
    };
}

fn ok(detail: String) -> CheckResult {
    Ok(detail)
}

fn bessel_normalization() -> CheckResult {
    let mut worst: f64 = 0.0;
    for &x in &[1.0, 40.0, 400.0] {
        let row = bessel_j_row(x, support_order(x).ceil() as usize).map_err(|e| e.to_string())?;
        worst = worst.max(row.normalization_defect().abs());
        ensure!(
            row.values.iter().all(|v| v.abs() <= 1.0),
            "|J_n({x})| exceeded 1"
        );
    }
    ensure!(worst < 1e-10, "normalization defect {worst:e} >= 1e-10");
    ok(format!("max defect {worst:.2e}"))
}

fn bessel_integral_representation() -> CheckResult {
    // Trapezoid quadrature of the integral representation, spectrally exact
    // for periodic integrands.
    let oracle = |n: u32, x: f64, nodes: usize| -> f64 {
        let (mut re, mut im) = (0.0, 0.0);
        for j in 0..nodes {
            let theta = 2.0 * std::f64::consts::PI * j as f64 / nodes as f64;
            let phase = x * theta.cos() + n as f64 * theta;
            re += phase.cos();
            im += phase.sin();
        }
        re /= nodes as f64;
        im /= nodes as f64;
        match n % 4 {
            0 => re,
            1 => im,
            2 => -re,
            _ => -im,
        }
    };
    let row = bessel_j_row(400.0, 440).map_err(|e| e.to_string())?;
    let mut worst: f64 = 0.0;
    for &n in &[0u32, 17, 400, 430] {
        worst = worst.max((row.value(n as usize) - oracle(n, 400.0, 32768)).abs());
    }
    ensure!(worst < 1e-10, "integral-representation gap {worst:e}");
    ok(format!("max gap {worst:.2e}"))
}

fn airy_ode_residual() -> CheckResult {
    let h = 1e-3;
    let f = |y: f64| airy_ai(y).unwrap().ai;
    let mut worst: f64 = 0.0;
    for &x in &[-8.0, -4.0, -1.0, 0.0, 1.0, 3.0, 6.0] {
        let second = (-f(x + 2.0 * h) + 16.0 * f(x + h) - 30.0 * f(x) + 16.0 * f(x - h)
            - f(x - 2.0 * h))
            / (12.0 * h * h);
        worst = worst.max((second - x * f(x)).abs());
    }
    ensure!(worst < 1e-6, "ODE residual {worst:e} >= 1e-6");
    ok(format!("max residual {worst:.2e}"))
}

fn airy_tail() -> CheckResult {
    let t0 = airy_tail_integral(0.0).map_err(|e| e.to_string())?;
    ensure!((t0 - 1.0 / 3.0).abs() < 1e-9, "tail(0) = {t0} != 1/3");
    let h = 1e-3;
    let mut worst: f64 = 0.0;
    for &x in &[-2.0, 0.0, 1.0] {
        let d = (airy_tail_integral(x + h).unwrap() - airy_tail_integral(x - h).unwrap())
            / (2.0 * h);
        worst = worst.max((d + airy_ai(x).unwrap().ai).abs());
    }
    ensure!(worst < 1e-6, "d tail/dx residual {worst:e}");
    ok(format!("tail(0) - 1/3 = {:.2e}", t0 - 1.0 / 3.0))
}

fn quadrature_exactness() -> CheckResult {
    let r3 = gauss_legendre(3, 0.0, 1.0).map_err(|e| e.to_string())?;
    let gap = (r3.integrate(|x| x.powi(5)) - 1.0 / 6.0).abs();
    ensure!(gap < 1e-14, "degree-5 exactness gap {gap:e}");
    let r20 = gauss_legendre(20, 0.0, std::f64::consts::PI).map_err(|e| e.to_string())?;
    let sine = (r20.integrate(f64::sin) - 2.0).abs();
    ensure!(sine < 1e-10, "sine integral gap {sine:e}");
    let f = |x: f64| (x * x).cos() * (-x).exp();
    let d = (gauss_legendre(24, 0.0, 2.0).unwrap().integrate(f)
        - gauss_legendre(48, 0.0, 2.0).unwrap().integrate(f))
    .abs();
    ensure!(d < 1e-10, "doubling drift {d:e}");
    ok(format!("monomial {gap:.1e}, sine {sine:.1e}, doubling {d:.1e}"))
}

fn correlator_initial_state() -> CheckResult {
    let alt = PeriodicPattern::alternating();
    for (m, n, want) in [(2i64, 2i64, 1.0), (1, 1, 0.0), (2, 4, 0.0)] {
        let c = correlator(&alt, m, n, 0.0).map_err(|e| e.to_string())?;
        ensure!((c - want).norm() < 1e-14, "C_({m},{n})(0) = {c}");
    }
    ok("alternating occupation reproduced".into())
}

fn correlator_conservation() -> CheckResult {
    let mut worst: f64 = 0.0;
    for text in ["10", "110", "110100"] {
        let p = PeriodicPattern::parse(text).unwrap();
        let window = 3 * p.period() as i64;
        let mut sum = 0.0;
        for m in 0..window {
            sum += correlator(&p, m, m, 1.5).map_err(|e| e.to_string())?.re;
        }
        worst = worst.max((sum - p.filling() * window as f64).abs());
    }
    ensure!(worst < 1e-8, "particle-number drift {worst:e}");
    ok(format!("max drift {worst:.2e}"))
}

fn correlator_dual_formula() -> CheckResult {
    let alt = PeriodicPattern::alternating();
    let alt4 = PeriodicPattern::parse("1010").unwrap();
    let mut worst: f64 = 0.0;
    for &(m, n, t) in &[(3i64, -3i64, 5.0f64), (0, 2, 1.3), (-4, 7, 2.6)] {
        let a = correlator(&alt, m, n, t).map_err(|e| e.to_string())?;
        let b = correlator(&alt4, m, n, t).map_err(|e| e.to_string())?;
        worst = worst.max((a - b).norm());
    }
    ensure!(worst < 1e-10, "closed form vs bilinear sum gap {worst:e}");
    ok(format!("max gap {worst:.2e}"))
}

fn correlator_sum_rule() -> CheckResult {
    let alt = PeriodicPattern::alternating();
    let t = 2.0;
    let reach = (support_order(4.0 * t) + 40.0) as i64;
    let mut worst: f64 = 0.0;
    for &n in &[0i64, 3] {
        let mut sum = 0.0;
        for m in n - reach..=n + reach {
            sum += correlator(&alt, m, n, t).unwrap().norm_sqr();
        }
        worst = worst.max((sum - correlator(&alt, n, n, t).unwrap().re).abs());
    }
    ensure!(worst < 1e-8, "projector sum rule defect {worst:e}");
    ok(format!("max defect {worst:.2e}"))
}

fn kernel_truncation() -> CheckResult {
    let mut worst: f64 = 0.0;
    for &(t, l) in &[(10.0, 4i64), (50.0, 85)] {
        let dim = crate::lattice::default_kernel_dim(t, l);
        let a = kernel_matrix(&PeriodicPattern::alternating(), t, l, dim).unwrap();
        let b = kernel_matrix(&PeriodicPattern::alternating(), t, l, dim + 50).unwrap();
        let grown = (b.frobenius_norm().powi(2) - a.frobenius_norm().powi(2))
            .abs()
            .sqrt();
        worst = worst.max(grown);
    }
    ensure!(worst < 1e-10, "kernel tail weight {worst:e}");
    ok(format!("max tail weight {worst:.2e}"))
}

fn ring_vs_infinite() -> CheckResult {
    let alt = PeriodicPattern::alternating();
    let mut worst: f64 = 0.0;
    for &(m, n) in &[(0i64, 0i64), (1, -1), (0, 2), (2, 1)] {
        let a = ring_correlator(14, m, n, 0.8).map_err(|e| e.to_string())?;
        let b = correlator(&alt, m, n, 0.8).unwrap();
        worst = worst.max((a - b).norm());
    }
    ensure!(worst < 1e-6, "ring vs infinite gap {worst:e}");
    ok(format!("max gap {worst:.2e}"))
}

fn wick_factorization() -> CheckResult {
    let oracle = FiniteRing::new(8)
        .map_err(|e| e.to_string())?
        .diagonalize(&PeriodicPattern::alternating())
        .map_err(|e| e.to_string())?;
    let t = 1.7;
    let g = |m: i64, n: i64| oracle.evaluate(t, &[RingObservable::TwoPoint { m, n }])[0];
    let mut worst: f64 = 0.0;
    for &(a, b, c, d) in &[(1i64, -1i64, 2i64, -2i64), (1, -1, 3, -3), (0, 1, 2, 3)] {
        let four = oracle.evaluate(t, &[RingObservable::FourPoint { a, b, c, d }])[0];
        let delta = if (b - c).rem_euclid(8) == 0 { 1.0 } else { 0.0 };
        let wick = g(a, b) * g(c, d) + g(a, d) * (Complex64::new(delta, 0.0) - g(c, b));
        worst = worst.max((four - wick).norm());
    }
    ensure!(worst < 1e-10, "Wick residual {worst:e}");
    ok(format!("max residual {worst:.2e}"))
}

fn q_normalization() -> CheckResult {
    ensure!(
        (generating_q(0.0, 7.0, 3).unwrap() - 1.0).abs() < 1e-12,
        "Q(0) != 1"
    );
    ensure!(
        (generating_q(-2.0, 0.0, 3).unwrap() - 1.0).abs() < 1e-12,
        "Q(lambda, t=0) != 1"
    );
    let w = FrontWindow::new(100.0, -2.0).unwrap();
    let q = generating_q_verified(&PeriodicPattern::alternating(), -2.0, w.t, w.l)
        .map_err(|e| e.to_string())?;
    ensure!((0.0..=1.0).contains(&q), "Q(-2) = {q} outside [0, 1]");
    ok(format!("verified Q(-2, 100, l_-2) = {q:.6}"))
}

fn moment_direct_sum() -> CheckResult {
    let t = 100.0;
    let w = FrontWindow::new(t, -2.0).unwrap();
    let table = moments(t, w.l, 2).unwrap();
    let alt = PeriodicPattern::alternating();
    let reach = (4.0 * t + 12.0 * (2.0 * t).cbrt() + 60.0) as i64 / 2;
    let mut direct = 0.0;
    for m in w.l..=reach {
        direct += correlator(&alt, m, -m, t).unwrap().re;
    }
    let gap = (table.m(1) - direct).abs();
    ensure!(gap < 1e-9, "M1 vs diagonal sum gap {gap:e}");
    ok(format!("gap {gap:.2e}"))
}

fn moment_fd_consistency() -> CheckResult {
    let t = 100.0;
    let l = FrontWindow::new(t, -2.0).unwrap().l;
    let table = moments(t, l, 4).unwrap();
    let q = |lambda: f64| generating_q(lambda, t, l).unwrap();
    let fd = |n: usize, h: f64| -> f64 {
        match n {
            1 => (q(h) - q(-h)) / (2.0 * h),
            2 => (q(h) - 2.0 * q(0.0) + q(-h)) / (h * h),
            3 => (q(2.0 * h) - 2.0 * q(h) + 2.0 * q(-h) - q(-2.0 * h)) / (2.0 * h * h * h),
            _ => (q(2.0 * h) - 4.0 * q(h) + 6.0 * q(0.0) - 4.0 * q(-h) + q(-2.0 * h)) / h.powi(4),
        }
    };
    let mut worst: f64 = 0.0;
    for n in 1..=4 {
        let refined = (4.0 * fd(n, 0.08) - fd(n, 0.16)) / 3.0;
        worst = worst.max((refined - table.m(n)).abs() / table.m(n).abs());
    }
    ensure!(worst < 1e-4, "FD vs Newton relative gap {worst:e}");
    ok(format!("max relative gap {worst:.2e}"))
}

fn m2_sign() -> CheckResult {
    let t = 200.0;
    let mut s = -4.0;
    let mut least: f64 = 0.0;
    while s <= 2.0 {
        let w = FrontWindow::new(t, s).unwrap();
        let m2 = moments(t, w.l, 2).unwrap().m(2);
        ensure!(m2 <= 1e-12, "M2({s}) = {m2} > 0");
        least = least.min(m2);
        s += 1.0;
    }
    ok(format!("min M2 = {least:.4}"))
}

fn fredholm_stability() -> CheckResult {
    let mut worst_double: f64 = 0.0;
    let mut worst_window: f64 = 0.0;
    for &(z, s) in &[(1.0, -12.0), (1.0, -4.0), (-1.0, 0.0), (2.0, 2.0)] {
        let a = fredholm_h_raw(z, s, 64, 40.0).map_err(|e| e.to_string())?;
        let b = fredholm_h_raw(z, s, 128, 40.0).map_err(|e| e.to_string())?;
        let c = fredholm_h_raw(z, s, 128, 60.0).map_err(|e| e.to_string())?;
        worst_double = worst_double.max((a - b).abs());
        worst_window = worst_window.max((b - c).abs());
    }
    ensure!(worst_double < 1e-8, "node doubling drift {worst_double:e}");
    ensure!(worst_window < 1e-10, "window drift {worst_window:e}");
    for &s in &[-3.0, 0.0] {
        ensure!(
            g_goe(1.0, s).unwrap() == tw1_cdf(s).unwrap(),
            "degeneration identity broken at s = {s}"
        );
    }
    ok(format!(
        "doubling {worst_double:.2e}, window {worst_window:.2e}"
    ))
}

fn tw1_shape() -> CheckResult {
    ensure!(
        (tw1_cdf(8.0).unwrap() - 1.0).abs() < 1e-8,
        "upper tail off"
    );
    ensure!(tw1_cdf(-11.0).unwrap().abs() < 1e-4, "lower tail off");
    let mut prev = -1e-9;
    let mut s = -12.0;
    while s <= 8.0 {
        let v = tw1_cdf(s).unwrap();
        ensure!(v >= prev - 1e-10, "F1 not monotone at s = {s}");
        ensure!((-1e-9..=1.0 + 1e-9).contains(&v), "F1({s}) = {v}");
        prev = v;
        s += 0.5;
    }
    ok("tails and monotonicity hold".into())
}

fn rmt_slope_identity() -> CheckResult {
    let h = 0.01;
    let stencil = |g: &dyn Fn(f64) -> f64| {
        (-25.0 / 12.0 * g(0.0) + 4.0 * g(h) - 3.0 * g(2.0 * h) + 4.0 / 3.0 * g(3.0 * h)
            - 0.25 * g(4.0 * h))
            / h
    };
    let mut worst: f64 = 0.0;
    for &s in &[-4.0, -2.0, 0.0, 2.0] {
        let d = stencil(&|x| g_gse(x, s).unwrap());
        worst = worst.max((d + r1_integral(Ensemble::GSE, s).unwrap()).abs());
        let d = stencil(&|x| g_goe(x, s).unwrap());
        worst = worst.max((d + r1_integral(Ensemble::GOE, s).unwrap()).abs());
    }
    ensure!(worst < 1e-5, "slope-density residual {worst:e}");
    ok(format!("max residual {worst:.2e}"))
}

fn r1_positivity() -> CheckResult {
    ensure!(r1(Ensemble::GOE, 10.0).unwrap() < 1e-10, "GOE tail");
    ensure!(r1(Ensemble::GSE, 10.0).unwrap() < 1e-10, "GSE tail");
    let mut x = -10.0;
    while x <= 6.0 {
        ensure!(r1(Ensemble::GOE, x).unwrap() >= -1e-12, "GOE negative at {x}");
        ensure!(r1(Ensemble::GSE, x).unwrap() >= -1e-12, "GSE negative at {x}");
        x += 0.1;
    }
    ok("densities nonnegative on [-10, 6]".into())
}

fn goe_tw_trend() -> CheckResult {
    let sup = |t: f64| -> f64 {
        let mut worst: f64 = 0.0;
        let mut s = -5.0;
        while s <= 3.0 + 1e-9 {
            if let Ok(w) = FrontWindow::new(t, s) {
                let q = generating_q(-2.0, t, w.l).unwrap();
                worst = worst.max((q - tw1_cdf(w.edge_s()).unwrap()).abs());
            }
            s += 0.5;
        }
        worst
    };
    let d10 = sup(10.0);
    let d100 = sup(100.0);
    ensure!(d10 > d100, "no improvement: {d10:e} -> {d100:e}");
    ensure!(d100 < 1e-2, "sup at t=100 is {d100:e}");
    ok(format!("sup {d10:.2e} -> {d100:.2e}"))
}

fn moment_prediction_trend() -> CheckResult {
    let sup = |t: f64| -> (f64, f64) {
        let (mut d1, mut d2): (f64, f64) = (0.0, 0.0);
        let mut s = -6.0;
        while s <= 4.0 + 1e-9 {
            if let Ok(w) = FrontWindow::new(t, s) {
                let table = moments(t, w.l, 2).unwrap();
                let se = w.edge_s();
                d1 = d1.max((table.m(1) - crate::rmt::predicted_moment(1, se).unwrap()).abs());
                d2 = d2.max((table.m(2) - crate::rmt::predicted_moment(2, se).unwrap()).abs());
            }
            s += 0.5;
        }
        (d1, d2)
    };
    let (a1, a2) = sup(10.0);
    let (b1, b2) = sup(100.0);
    ensure!(a1 > b1 && a2 > b2, "no improvement: ({a1:e},{a2:e}) -> ({b1:e},{b2:e})");
    ensure!(b1 < 1e-2 && b2 < 1e-2, "sup at t=100: ({b1:e}, {b2:e})");
    ok(format!("D1 {a1:.2e}->{b1:.2e}, D2 {a2:.2e}->{b2:.2e}"))
}

fn g2_degeneration() -> CheckResult {
    let (t, l) = (20.0, 38);
    let g2 = lattice_g2(1.0, t, l).unwrap();
    let q = generating_q(-2.0, t, l).unwrap();
    ensure!(g2 == q, "G2(1) = {g2} vs Q(-2) = {q}");
    ok("G2(1, t, l) = Q(-2, t, l) exactly".into())
}

fn initcond_classification() -> CheckResult {
    let pat = |s: &str| PeriodicPattern::parse(s).unwrap();
    ensure!(initcond::front_coefficient(&pat("10")) == 0.5, "c(10)");
    ensure!(
        initcond::front_coefficient(&pat("111000")) == 1.0 / 6.0,
        "c(111000)"
    );
    ensure!(
        initcond::front_coefficient(&pat("110100")) == -1.0 / 6.0,
        "c(110100)"
    );
    ensure!(!initcond::admits_rmt_front(&pat("1100")), "1100 admits");
    ensure!(
        initcond::rescale_factors(&pat("111000")).unwrap() == (3.0, 9.0),
        "rescale(111000)"
    );
    ensure!(
        initcond::rescale_factors(&pat("110100")).unwrap() == (-3.0, 9.0),
        "rescale(110100)"
    );
    let (adm8, tot8) = initcond::scan_period(8).unwrap();
    ensure!(2 * adm8 > tot8, "period-8 admitting {adm8}/{tot8}");
    let mut admitting = 0;
    let mut total = 0;
    for p in 1..=8 {
        let (a, t) = initcond::scan_period(p).unwrap();
        admitting += a;
        total += t;
    }
    ensure!(
        2 * admitting > total,
        "exceptional cells are a majority: {admitting}/{total}"
    );
    ok(format!("period<=8: {admitting}/{total} admit"))
}

fn initstate_collapse() -> CheckResult {
    let t = 100.0;
    let alt = PeriodicPattern::alternating();
    let pa = PeriodicPattern::parse("1100").unwrap();
    let pb = PeriodicPattern::parse("111000").unwrap();
    let (mut worst_a, mut worst_b): (f64, f64) = (0.0, 0.0);
    let mut s = -6.0;
    while s <= 4.0 + 1e-9 {
        if let Ok(w) = FrontWindow::new(t, s) {
            let ma = moments_with(&pa, t, w.l, 2).unwrap();
            let mb = moments_with(&pb, t, w.l, 2).unwrap();
            let mr = moments_with(&alt, t, w.l, 2).unwrap();
            worst_a = worst_a.max(ma.m(1).abs());
            worst_b = worst_b
                .max((3.0 * mb.m(1) - mr.m(1)).abs())
                .max((9.0 * mb.m(2) - mr.m(2)).abs());
        }
        s += 1.0;
    }
    ensure!(worst_a < 2e-2, "pattern 1100 front is not flat: {worst_a:e}");
    ensure!(worst_b < 3e-2, "pattern 111000 does not collapse: {worst_b:e}");
    ok(format!("flat {worst_a:.2e}, collapse {worst_b:.2e}"))
}

const CHECKS: &[Check] = &[
    Check { name: "bessel_normalization", run: bessel_normalization },
    Check { name: "bessel_integral_representation", run: bessel_integral_representation },
    Check { name: "airy_ode_residual", run: airy_ode_residual },
    Check { name: "airy_tail", run: airy_tail },
    Check { name: "quadrature_exactness", run: quadrature_exactness },
    Check { name: "correlator_initial_state", run: correlator_initial_state },
    Check { name: "correlator_conservation", run: correlator_conservation },
    Check { name: "correlator_dual_formula", run: correlator_dual_formula },
    Check { name: "correlator_sum_rule", run: correlator_sum_rule },
    Check { name: "kernel_truncation", run: kernel_truncation },
    Check { name: "ring_vs_infinite", run: ring_vs_infinite },
    Check { name: "wick_factorization", run: wick_factorization },
    Check { name: "q_normalization", run: q_normalization },
    Check { name: "moment_direct_sum", run: moment_direct_sum },
    Check { name: "moment_fd_consistency", run: moment_fd_consistency },
    Check { name: "m2_sign", run: m2_sign },
    Check { name: "fredholm_stability", run: fredholm_stability },
    Check { name: "tw1_shape", run: tw1_shape },
    Check { name: "rmt_slope_identity", run: rmt_slope_identity },
    Check { name: "r1_positivity", run: r1_positivity },
    Check { name: "goe_tw_trend", run: goe_tw_trend },
    Check { name: "moment_prediction_trend", run: moment_prediction_trend },
    Check { name: "g2_degeneration", run: g2_degeneration },
    Check { name: "initcond_classification", run: initcond_classification },
    Check { name: "initstate_collapse", run: initstate_collapse },
];

/// Run the whole suite, printing one line per check. Fails with a
/// numerical-instability error naming every violated check.
pub fn run_verify(verbose: bool) -> Result<()> {
    let results: Vec<(&'static str, CheckResult)> = CHECKS
        .par_iter()
        .map(|check| (check.name, (check.run)()))
        .collect();
    let mut failed = Vec::new();
    for (name, result) in &results {
        match result {
            Ok(detail) => {
                if verbose {
                    println!("PASS  {name} ({detail})");
                } else {
                    println!("PASS  {name}");
                }
            }
            Err(detail) => {
                println!("FAIL  {name}: {detail}");
                failed.push(*name);
            }
        }
    }
    println!("{} checks, {} failed", results.len(), failed.len());
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Error::Instability(format!(
            "verification failed: {}",
            failed.join(", ")
        )))
    }
}
