//! The discrete real Fourier basis on the periodic unit domain.
//!
//! The domain `[0, 1)` is split into `2N + 1` equal cells; the basis holds
//! the constant mode plus `sin(2 pi k x)` and `cos(2 pi k x)` for
//! `k = 1..=N`, sampled at the cell centers. With an odd number of
//! equispaced samples these vectors are exactly orthogonal under the
//! discrete inner product, so expansion coefficients are plain (compensated)
//! inner products.
//!
//! Coefficient layout used throughout: index `0` is the constant mode,
//! `2k - 1` the cosine and `2k` the sine of mode `k`.

use crate::quad::KahanSum;
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Trig {
    Cos,
    Sin,
}

#[derive(Debug, Clone)]
pub struct ModeBasis {
    n_modes: usize,
    n_cells: usize,
    length: f64,
    h: f64,
    /// Row `k-1` holds the samples of mode `k` at the cell centers.
    cos_t: Vec<f64>,
    sin_t: Vec<f64>,
}

impl ModeBasis {
    /// Basis on the unit domain.
    pub fn new(n_modes: usize) -> Self {
        Self::with_length(n_modes, 1.0)
    }

    /// Basis of `sin/cos(2 pi k x / L)` on a periodic domain of length `L`.
    ///
    /// The orthogonality and attenuation properties only depend on the
    /// number of cells per mode, but the derivative scale (and through
    /// `eps(h)` the behaviour of nonlinear operators) does not, so the
    /// domain length is part of the analyzer configuration.
    pub fn with_length(n_modes: usize, length: f64) -> Self {
        assert!(n_modes >= 1);
        assert!(length > 0.0);
        let n_cells = 2 * n_modes + 1;
        let h = length / n_cells as f64;
        let mut cos_t = Vec::with_capacity(n_modes * n_cells);
        let mut sin_t = Vec::with_capacity(n_modes * n_cells);
        for k in 1..=n_modes {
            for j in 0..n_cells {
                let phase = 2.0 * PI * k as f64 * (j as f64 + 0.5) / n_cells as f64;
                cos_t.push(phase.cos());
                sin_t.push(phase.sin());
            }
        }
        Self {
            n_modes,
            n_cells,
            length,
            h,
            cos_t,
            sin_t,
        }
    }

    pub fn n_modes(&self) -> usize {
        self.n_modes
    }

    pub fn n_cells(&self) -> usize {
        self.n_cells
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    pub fn length(&self) -> f64 {
        self.length
    }

    /// Exact derivative symbol of mode `k`: `2 pi k / L`.
    pub fn exact_symbol(&self, k: usize) -> f64 {
        2.0 * PI * k as f64 / self.length
    }

    pub fn samples(&self, k: usize, trig: Trig) -> &[f64] {
        debug_assert!(k >= 1 && k <= self.n_modes);
        let row = &match trig {
            Trig::Cos => &self.cos_t,
            Trig::Sin => &self.sin_t,
        }[(k - 1) * self.n_cells..k * self.n_cells];
        row
    }

    /// Attenuation of mode `k` under exact cell averaging:
    /// `sigma_k = sin(pi k h / L) / (pi k h / L)`.
    pub fn averaging_factor(&self, k: usize) -> f64 {
        if k == 0 {
            return 1.0;
        }
        let a = PI * k as f64 / self.n_cells as f64;
        a.sin() / a
    }

    /// Exact cell averages of a unit-amplitude mode.
    pub fn mode_averages(&self, k: usize, trig: Trig) -> Vec<f64> {
        let sigma = self.averaging_factor(k);
        self.samples(k, trig).iter().map(|s| sigma * s).collect()
    }

    /// Expansion coefficients of `values` (taken as point samples at the
    /// cell centers) in the layout `[const, cos_1, sin_1, cos_2, ...]`.
    pub fn project(&self, values: &[f64]) -> Vec<f64> {
        assert_eq!(values.len(), self.n_cells);
        let mut coeffs = vec![0.0; self.n_cells];
        let mut mean = KahanSum::default();
        for v in values {
            mean.add(*v);
        }
        coeffs[0] = mean.value() / self.n_cells as f64;
        let scale = 2.0 / self.n_cells as f64;
        for k in 1..=self.n_modes {
            let mut c = KahanSum::default();
            let mut s = KahanSum::default();
            let cos_row = self.samples(k, Trig::Cos);
            let sin_row = self.samples(k, Trig::Sin);
            for j in 0..self.n_cells {
                c.add(values[j] * cos_row[j]);
                s.add(values[j] * sin_row[j]);
            }
            coeffs[2 * k - 1] = scale * c.value();
            coeffs[2 * k] = scale * s.value();
        }
        coeffs
    }

    /// Inverse of [`ModeBasis::project`].
    pub fn synthesize(&self, coeffs: &[f64]) -> Vec<f64> {
        assert_eq!(coeffs.len(), self.n_cells);
        let mut out = vec![coeffs[0]; self.n_cells];
        for k in 1..=self.n_modes {
            let (a, b) = (coeffs[2 * k - 1], coeffs[2 * k]);
            if a == 0.0 && b == 0.0 {
                continue;
            }
            let cos_row = self.samples(k, Trig::Cos);
            let sin_row = self.samples(k, Trig::Sin);
            for j in 0..self.n_cells {
                out[j] += a * cos_row[j] + b * sin_row[j];
            }
        }
        out
    }
}
