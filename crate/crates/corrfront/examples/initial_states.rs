//! Which periodic initial states develop random-matrix front statistics.
//!
//! Classifies a few unit cells by their front coefficient, then shows the
//! moment curves of an admitted pattern collapsing onto the alternating-state
//! curves under the exact rescaling (A_1, A_2) while an exceptional pattern
//! stays flat.
//!
//! Run with: cargo run --release --example initial_states

use corrfront::initcond::{analyze, scan_period};
use corrfront::lattice::PeriodicPattern;
use corrfront::moments::{moments_with, FrontWindow};

fn main() -> corrfront::Result<()> {
    println!("{:>10} {:>12} {:>8} {:>14}", "cell", "coefficient", "rmt?", "(A1, A2)");
    for text in ["10", "1100", "111000", "110100", "100", "11010010"] {
        let report = analyze(&PeriodicPattern::parse(text)?);
        println!(
            "{:>10} {:>12.4} {:>8} {:>14}",
            text,
            report.coefficient,
            report.admits_rmt,
            match report.rescale {
                Some((a1, a2)) => format!("({a1}, {a2})"),
                None => "-".into(),
            }
        );
    }

    let (admitting, total) = scan_period(8)?;
    println!("\nperiod-8 cells admitting RMT fronts: {admitting}/{total}");

    let t = 100.0;
    let alt = PeriodicPattern::alternating();
    let admitted = PeriodicPattern::parse("111000")?;
    let exceptional = PeriodicPattern::parse("1100")?;
    let (a1, a2) = analyze(&admitted).rescale.unwrap();
    println!("\nt = {t}: rescaled collapse of 111000 (x{a1}, x{a2}) vs alternating; 1100 stays flat");
    println!(
        "{:>6} {:>12} {:>12} {:>12} {:>12} {:>12}",
        "s", "A1*M1_B", "alt_M1", "A2*M2_B", "alt_M2", "M1_A"
    );
    let mut s = -4.0;
    while s <= 3.0 {
        let window = FrontWindow::new(t, s)?;
        let mb = moments_with(&admitted, t, window.l, 2)?;
        let ma = moments_with(&exceptional, t, window.l, 2)?;
        let mr = moments_with(&alt, t, window.l, 2)?;
        println!(
            "{s:>6.2} {:>12.7} {:>12.7} {:>12.7} {:>12.7} {:>12.2e}",
            a1 * mb.m(1),
            mr.m(1),
            a2 * mb.m(2),
            mr.m(2),
            ma.m(1)
        );
        s += 1.0;
    }
    Ok(())
}
