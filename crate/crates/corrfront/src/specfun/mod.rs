//! Special functions underpinning the rest of the crate: integer-order Bessel
//! J rows at large order and argument, the Airy function with derivative and
//! tail integral, and Gauss-Legendre quadrature rules.
//!
//! Everything here is a pure function of its inputs and safe to call from any
//! number of threads.

mod airy;
mod bessel;
mod quadrature;

pub use airy::{airy_ai, airy_tail_integral, AiryValue};
pub use bessel::{bessel_j_row, support_order, BesselRow};
pub use quadrature::{composite_gauss_legendre, gauss_legendre, QuadratureRule, MAX_NODES};
