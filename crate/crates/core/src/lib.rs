//! Exact and floating-point tools for Jacobi polynomials `P_n^(an,bn)` whose
//! parameters grow linearly with the degree, and for the sign of the
//! Turán-type determinant built from them.
//!
//! - [`poly`] and [`rational`]: exact dense polynomial arithmetic over `Q`.
//! - [`jacobi`]: exact construction and the recurrence-coefficient algebra.
//! - [`identities`]: polynomial identities checked with zero residual.
//! - [`turan`] and [`sturm`]: the determinant and its sign certificates.
//! - [`numeric`]: binary64 evaluation and sweeps for large degrees.
//! - [`cli`] and [`report`]: the command-line surface.

pub mod cli;
pub mod error;
mod exact_serde;
pub mod identities;
pub mod jacobi;
pub mod numeric;
pub mod poly;
pub mod rational;
pub mod report;
pub mod sturm;
pub mod turan;

pub use error::{Error, Result};
pub use jacobi::{FamilyParams, JacobiIndex, RecurrenceCoeffs, RsConstants};
pub use poly::Poly;
pub use rational::Rational;
pub use turan::{SignCertificate, TuranDeterminant, Verdict};
