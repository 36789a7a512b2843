//! Numerical kernels for the two-dimensional Aharonov-Bohm operator
//!
//! This crate evaluates the closed-form heat and wave propagator kernels of
//! the scaling-critical electromagnetic operator
//!
//! ```text
//!     L = (i∇ + A(x̂)/|x|)² + a(x̂)/|x|²,        x ∈ ℝ²,
//! ```
//!
//! where `A` is tangential (transversal gauge) and `a` is a bounded angular
//! electric profile. Both kernels split into a *geometric* part carried by
//! classical rays and a *diffractive* part created by the conical singularity
//! at the origin. Everything is cross-checked against a partial-wave mode sum
//! built from Bessel integrals, and an `estimates` layer measures dispersive
//! decay, local smoothing and Strichartz quotients at desk scale.
//!
//! Module map:
//!
//! * [`quad`] — adaptive Gauss–Kronrod and tanh-sinh quadrature primitives.
//! * [`specfun`] — Γ, J_ν and I_ν through their integral representations.
//! * [`angular`] — the circle operator: flux, Hardy constant, exact
//!   Aharonov-Bohm spectrum and a Fourier–Galerkin eigensolver.
//! * [`transform`] — Hankel transforms, functional calculus, dyadic
//!   frequency windows and spectral Sobolev/Besov norms.
//! * [`heatkernel`] / [`wavekernel`] — the closed-form kernels and their
//!   pointwise bounds.
//! * [`estimates`] — the verification harness (decay fits, Q_k dyadics,
//!   Strichartz quotients, Hardy consistency).
//! * [`config`] / [`report`] — run configuration and CLI-facing reports.

pub mod angular;
pub mod config;
pub mod error;
pub mod estimates;
pub mod geometry;
pub mod heatkernel;
pub mod quad;
pub mod report;
pub mod specfun;
pub mod transform;
pub mod wavekernel;

pub use error::{Error, Result};
pub use geometry::PolarPoint;
