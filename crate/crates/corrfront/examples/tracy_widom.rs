//! Emergence of the GOE Tracy-Widom distribution in the correlation front.
//!
//! The generating function at lambda = -2 is a lattice determinant; around
//! the front window l_{t,s} it converges to the Tracy-Widom CDF F_1. The
//! table compares both sides at t = 200 on the continuum edge coordinate of
//! each window, then locates the distribution's median by bisection.
//!
//! Run with: cargo run --release --example tracy_widom

use corrfront::moments::{generating_q, FrontWindow};
use corrfront::rmt::tw1_cdf;

fn main() -> corrfront::Result<()> {
    let t = 200.0;
    println!("t = {t}: Q(-2, t, l) vs the GOE Tracy-Widom CDF");
    println!("{:>6} {:>8} {:>8} {:>12} {:>12} {:>10}", "s", "l", "s_edge", "Q(-2)", "F1", "diff");
    let mut s = -5.0;
    while s <= 3.0 {
        let window = FrontWindow::new(t, s)?;
        let q = generating_q(-2.0, t, window.l)?;
        let f1 = tw1_cdf(window.edge_s())?;
        println!(
            "{s:>6.2} {:>8} {:>8.3} {q:>12.8} {f1:>12.8} {:>10.2e}",
            window.l,
            window.edge_s(),
            (q - f1).abs()
        );
        s += 0.5;
    }

    let (mut lo, mut hi) = (-3.0f64, 0.0f64);
    for _ in 0..50 {
        let mid = 0.5 * (lo + hi);
        if tw1_cdf(mid)? < 0.5 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    println!("\nGOE Tracy-Widom median: s = {:.6}", 0.5 * (lo + hi));
    Ok(())
}
