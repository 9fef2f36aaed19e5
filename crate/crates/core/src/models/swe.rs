//! Shallow water equations with bottom topography:
//! `(h, q)_t + (q, q^2/h + g h^2/2)_x = (0, -g h z_x)`.
//!
//! The topography and its derivative are supplied analytically, which keeps
//! the source quadrature free of differencing error.

use crate::quad;
use crate::recon::LocalPoly;
use crate::solver::FluxModel;

pub struct ShallowWater {
    pub g: f64,
    pub z: fn(f64) -> f64,
    pub z_x: fn(f64) -> f64,
    sourced: bool,
}

fn flat(_x: f64) -> f64 {
    0.0
}

impl ShallowWater {
    /// Flat-bottom system (no source).
    pub fn flat_bottom() -> Self {
        Self {
            g: 9.81,
            z: flat,
            z_x: flat,
            sourced: false,
        }
    }

    pub fn with_topography(z: fn(f64) -> f64, z_x: fn(f64) -> f64) -> Self {
        Self {
            g: 9.81,
            z,
            z_x,
            sourced: true,
        }
    }
}

impl FluxModel for ShallowWater {
    fn components(&self) -> usize {
        2
    }

    fn flux(&self, state: &[f64], out: &mut [f64]) {
        let (h, q) = (state[0], state[1]);
        out[0] = q;
        out[1] = q * q / h + 0.5 * self.g * h * h;
    }

    fn max_wavespeed(&self, state: &[f64]) -> f64 {
        let (h, q) = (state[0], state[1]);
        (q / h).abs() + (self.g * h).sqrt()
    }

    fn admissible(&self, state: &[f64]) -> bool {
        state.iter().all(|v| v.is_finite()) && state[0] > 0.0
    }

    fn has_eigensystem(&self) -> bool {
        true
    }

    fn eigensystem(&self, state: &[f64], left: &mut [f64], right: &mut [f64]) {
        let (h, q) = (state[0], state[1]);
        let u = q / h;
        let c = (self.g * h).sqrt();
        // columns for waves u - c, u + c
        right[0] = 1.0;
        right[1] = 1.0;
        right[2] = u - c;
        right[3] = u + c;
        left[0] = (u + c) / (2.0 * c);
        left[1] = -1.0 / (2.0 * c);
        left[2] = (c - u) / (2.0 * c);
        left[3] = 1.0 / (2.0 * c);
    }

    fn has_source(&self) -> bool {
        self.sourced
    }

    fn source(&self, state: &[f64], x: f64, out: &mut [f64]) {
        out[0] = 0.0;
        out[1] = -self.g * state[0] * (self.z_x)(x);
    }
}

/// Average of the momentum source `-g h(x) z_x(x)` over one cell, with the
/// water height taken from the cell's reconstruction polynomial.
///
/// The quadrature is Richardson-extrapolated trapezoid sums on nested dyadic
/// node sets: the two boundary reconstructions plus 1, 3, 7 or 15 internal
/// nodes for orders 3, 5, 7 and 9.
pub fn swe_source_average(
    h_poly: &LocalPoly,
    x_center: f64,
    h: f64,
    g: f64,
    z_x: impl Fn(f64) -> f64,
    order: usize,
) -> f64 {
    assert!(order >= 3 && order % 2 == 1);
    let levels = (order - 1) / 2;
    let a = x_center - 0.5 * h;
    quad::romberg(
        |x| -g * h_poly.eval((x - x_center) / h) * z_x(x),
        a,
        a + h,
        levels,
    ) / h
}
