//! High-precision Fourier–Galerkin solver for bound states of the 1-D
//! time-independent Schrödinger equation, with variational optimization of
//! the truncation domain and self-consistent error estimation.
//!
//! The dimensionless problem −ψ″ + f(x)ψ = εψ is projected onto a finite
//! Fourier basis (periodic sine/cosine on [−L, L] or confinement sine-only
//! on [0, 2L]); the resulting dense symmetric matrix is diagonalized by
//! cyclic Jacobi rotations at arbitrary precision. For each basis size N the
//! half-length L is tuned to its optimal value L̂(N), which is what makes
//! spectral accuracies of 10⁻¹³⁰ and beyond reachable at desk scale.

pub mod basis;
pub mod calibration;
pub mod eigen;
pub mod error;
pub mod hamiltonian;
pub mod matrix;
pub mod numeric;
pub mod optimize;
pub mod potential;
pub mod reference;
pub mod run;
pub mod solution;

pub use basis::{BasisSpec, BoundaryMode, Parity};
pub use eigen::{solve_potential, Spectrum};
pub use error::{Result, VismError};
pub use numeric::{HPReal, PrecisionContext};
pub use potential::PotentialSpec;
