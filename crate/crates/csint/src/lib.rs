//! Numerical kernel and verification engine for the integral identities that
//! fall out of the generalized coherent-state construction: fundamental
//! Mellin moments of Meijer-G weights, complex/angular/real-space integrals,
//! and integral representations of the classical orthogonal polynomials and
//! Bessel functions, each checked by two independent numerical routes.

pub mod coherent;
pub mod engine;
pub mod error;
pub mod hypergeom;
pub mod quadrature;
pub mod special;
pub mod value;
pub mod weight;

pub use error::{Error, Result};
pub use value::{EvalOptions, SeriesValue};
