//! Numerical and exact machinery for zeta functions of length spectra.
//!
//! The crate is organized around four computational pillars:
//!
//! - [`regprod`] — zeta-regularized determinants and products of eigenvalue
//!   sequences via the heat-trace Mellin transform, plus independent
//!   Euler–Maclaurin special-function oracles.
//! - [`spectra`] + [`selberg`] — generalized Selberg and Ruelle zeta
//!   functions evaluated from finite length-spectrum data, with certified
//!   tail bounds and the Ruelle-to-Selberg decomposition check.
//! - [`graphzeta`] — the zeta function of a finite graph as an Euler
//!   product over primitive non-backtracking cycles, with exact integer
//!   rationality, divisor, and log-derivative verification against two
//!   determinant oracles.
//! - [`tfverify`] — exact verification of the trace formula (spectral
//!   kernel trace vs. orbital-integral expansion) on finite group models.
//!
//! [`verify`] bundles the property suites behind the `zetalab verify`
//! command.

pub mod graphzeta;
pub mod regprod;
pub mod selberg;
pub mod spectra;
pub mod tfverify;
pub mod verify;

pub use num_complex::Complex64;
