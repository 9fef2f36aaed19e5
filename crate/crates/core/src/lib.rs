//! A 1D finite-volume numerics laboratory.
//!
//! The crate bundles three things that are usually scattered over separate
//! research codes:
//!
//! * essentially non-oscillatory reconstructions from cell averages
//!   (WENO, CWENO and CWENOZ, orders 3 to 9) in [`recon`],
//! * a spectral analyzer for nonlinear discrete derivative operators
//!   (diffusion, dispersion, distortion and temperature curves) in
//!   [`spectral`],
//! * a semidiscrete finite-volume solver with local Lax-Friedrichs fluxes,
//!   explicit Runge-Kutta time stepping and a quadrature hook for balance-law
//!   source terms in [`solver`], together with concrete [`models`]
//!   (linear advection, 1D Euler, shallow water with topography).
//!
//! [`bench`] contains the harness used by the command line front end:
//! convergence tables, reference-solution management and diagnostic traces.

pub mod bench;
pub mod error;
pub mod mesh;
pub mod models;
pub mod quad;
pub mod recon;
pub mod solver;
pub mod spectral;

pub use error::{Error, Result};
