//! Sato-Tate distributions for abelian surfaces, from both ends:
//!
//! * [`catalog`] holds the exact data for the 55 closed subgroups of
//!   `USp(4)` that can occur as Sato-Tate groups in genus 2 — component
//!   structure, moment sequences, atom masses, density functions and the
//!   11-integer signatures that tell them apart.
//! * [`sampler`] draws Haar-random characteristic-polynomial coefficients
//!   `(a1, a2)` from any of the 55 groups, as an independent Monte-Carlo
//!   check on the catalog.
//! * [`counting`], [`jacobian`] and [`stats`] compute normalized
//!   L-polynomial coefficients of genus-2 curves `y^2 = f(x)` over number
//!   fields, by naive point counting over `F_p` and `F_{p^2}` or by group
//!   computations in the Jacobian, and accumulate moment statistics and
//!   histograms over primes.
//! * [`survey`] matches empirical signatures of curves against the catalog
//!   and runs the zero-trace search for curves with exceptional
//!   distributions.
//!
//! Everything is exact where it can be: moments are integers, atom
//! detection is integer arithmetic on `(c1, c2)`, and the Monte-Carlo and
//! quadrature layers are held to explicit tolerances by the test suite.

pub mod catalog;
pub mod counting;
pub mod ffield;
pub mod fixtures;
pub mod jacobian;
pub mod numeric;
pub mod parallel;
pub mod sampler;
pub mod stats;
pub mod survey;

mod error;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
