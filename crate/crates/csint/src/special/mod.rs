//! Self-contained classical special functions: Gamma and Pochhammer,
//! Bessel J/I/K, the Tricomi confluent function U, and the recurrence-based
//! orthogonal polynomials that serve as oracles elsewhere in the crate.
//!
//! Everything here is pure and deterministic; no shared mutable state.

pub mod bessel;
pub mod gamma;
pub mod poly;
pub mod tricomi;

pub use bessel::{bessel, bessel_i, bessel_j, bessel_k, BesselKind};
pub use gamma::{
    as_integer, as_nonpositive_integer, gamma, ln_abs_gamma, ln_abs_pochhammer, ln_gamma,
    ln_gamma_complex, pochhammer,
};
pub use poly::{classical_poly, PolyFamily};
pub use tricomi::tricomi_u;
