//! Exact correlation-front dynamics of free fermions on a 1D lattice quenched
//! from periodic product states, and the soft-edge random-matrix statistics
//! the fronts develop at late times.
//!
//! The crate computes, in closed form plus controlled truncations:
//!
//! * two-point correlators C_{m,n}(t) for the alternating state and arbitrary
//!   periodic fillings ([`lattice`]);
//! * the determinantal generating function Q(lambda, t, l) of the cumulative
//!   correlation operator, its moments, and the hyperbolic combinations G_1,
//!   G_2 ([`moments`]);
//! * Airy-kernel Fredholm determinants, the GOE Tracy-Widom distribution,
//!   GSE/GOE gap generating functions, one-point edge densities, and the
//!   moment predictions they imply ([`rmt`]);
//! * classification of initial patterns by front coefficient and the
//!   rescalings that collapse their moments onto the alternating curves
//!   ([`initcond`]);
//! * a brute-force many-body oracle on small rings validating Wick
//!   factorization ([`lattice::manybody`]).
//!
//! Start with the runnable examples:
//!
//! ```text
//! cargo run --release --example front_profile
//! cargo run --release --example tracy_widom
//! cargo run --release --example moment_convergence
//! cargo run --release --example generating_functions
//! cargo run --release --example initial_states
//! cargo run --release --example wick_check
//! ```
//!
//! A thin CLI (`corrfront`) drives the same library for CSV table production
//! and self-verification; see [`runner`].

pub mod error;
pub mod initcond;
pub mod lattice;
mod linalg;
pub mod moments;
pub mod rmt;
pub mod runner;
pub mod specfun;

pub use error::{Error, Result};
pub use lattice::PeriodicPattern;
pub use moments::FrontWindow;
