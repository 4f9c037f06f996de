//! The lattice generating-function combinations against their soft-edge
//! limits.
//!
//! G_1 collects the even moments and converges to the GSE gap generating
//! function; G_2 mixes all moments and converges to the GOE one. Both sides
//! are Fredholm/kernel determinants evaluated independently.
//!
//! Run with: cargo run --release --example generating_functions

use corrfront::moments::{lattice_g1, lattice_g2, FrontWindow};
use corrfront::rmt::{g_goe, g_gse};

fn main() -> corrfront::Result<()> {
    let t = 200.0;
    println!("t = {t}");
    println!(
        "{:>6} {:>6} {:>12} {:>12} {:>10} {:>12} {:>12} {:>10}",
        "s", "lam", "G1", "G_GSE", "diff", "G2", "G_GOE", "diff"
    );
    for &s in &[-3.0, -1.0, 1.0] {
        let window = FrontWindow::new(t, s)?;
        let se = window.edge_s();
        for &lambda in &[0.25, 0.5, 1.0, 1.5] {
            let g1 = lattice_g1(lambda, t, window.l)?;
            let gse = g_gse(lambda, se)?;
            let g2 = lattice_g2(lambda, t, window.l)?;
            let goe = g_goe(lambda, se)?;
            println!(
                "{s:>6.2} {lambda:>6.2} {g1:>12.8} {gse:>12.8} {:>10.2e} {g2:>12.8} {goe:>12.8} {:>10.2e}",
                (g1 - gse).abs(),
                (g2 - goe).abs()
            );
        }
    }
    println!("\nAt lambda = 1 the GOE weights degenerate: G2 = Q(-2) and G_GOE = F1.");
    Ok(())
}
