//! Prolate spheroidal wave functions on the d-dimensional unit ball.
//!
//! The crate computes the radial eigenfunctions of the ball concentration
//! problem by spectral expansion in normalized Jacobi polynomials (a
//! Bouwkamp-type tridiagonal eigenproblem), derives the finite Hankel and
//! finite Fourier eigenvalues of each eigenfunction, and verifies the
//! spectral-decay, counting, sup-norm and approximation bounds that the
//! eigenvalue tables are expected to satisfy. Everything runs in binary64
//! with quadrature oracles standing next to each closed-form path.

pub mod approx;
pub mod ballpoly;
pub mod error;
pub mod harmonics;
pub mod prolate;
pub mod quadrature;
pub mod report;
pub mod specfun;
pub mod spectra;
pub mod suite;
pub mod tridiag;

pub use error::{Error, Result};
pub use report::BoundReport;
