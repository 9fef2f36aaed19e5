//! Discrete derivative operators on periodic cell data.

use super::basis::ModeBasis;
use crate::recon::ReconScheme;

/// A discrete approximation of `d/dx` acting on the cell averages of a
/// periodic field; the output holds per-cell values of the derivative.
pub trait DiscreteDerivative {
    fn apply(&self, averages: &[f64], h: f64) -> Vec<f64>;
    fn name(&self) -> &'static str;
}

/// Finite-volume upwind derivative for unit positive advection speed:
/// `D(u)_j = (u^-_{j+1/2} - u^-_{j-1/2}) / h` with the left-biased
/// reconstructed boundary values of the given scheme.
pub struct UpwindFv {
    scheme: ReconScheme,
}

impl UpwindFv {
    pub fn new(scheme: ReconScheme) -> Self {
        Self { scheme }
    }

    pub fn scheme(&self) -> &ReconScheme {
        &self.scheme
    }
}

impl DiscreteDerivative for UpwindFv {
    fn apply(&self, averages: &[f64], h: f64) -> Vec<f64> {
        let n = averages.len();
        let r = self.scheme.r();
        let w = self.scheme.window_len();
        assert!(n >= w, "periodic field shorter than the stencil");
        let mut window = [0.0; crate::recon::poly::MAX_COEFFS];
        let mut right_edge = vec![0.0; n];
        for j in 0..n {
            for (i, slot) in window[..w].iter_mut().enumerate() {
                let idx = (j + n + i - (r - 1)) % n;
                *slot = averages[idx];
            }
            right_edge[j] = self.scheme.reconstruct(&window[..w], h).right;
        }
        (0..n)
            .map(|j| (right_edge[j] - right_edge[(j + n - 1) % n]) / h)
            .collect()
    }

    fn name(&self) -> &'static str {
        match self.scheme.family() {
            crate::recon::Family::Weno => "weno-upwind",
            crate::recon::Family::Cweno => "cweno-upwind",
            crate::recon::Family::CwenoZ => "cwenoz-upwind",
        }
    }
}

/// First-order upwind difference, the `r = 1` reference operator.
pub struct FirstOrderUpwind;

impl DiscreteDerivative for FirstOrderUpwind {
    fn apply(&self, averages: &[f64], h: f64) -> Vec<f64> {
        let n = averages.len();
        (0..n)
            .map(|j| (averages[j] - averages[(j + n - 1) % n]) / h)
            .collect()
    }

    fn name(&self) -> &'static str {
        "upwind1"
    }
}

/// Second-order central difference.
pub struct CentralDifference;

impl DiscreteDerivative for CentralDifference {
    fn apply(&self, averages: &[f64], h: f64) -> Vec<f64> {
        let n = averages.len();
        (0..n)
            .map(|j| (averages[(j + 1) % n] - averages[(j + n - 1) % n]) / (2.0 * h))
            .collect()
    }

    fn name(&self) -> &'static str {
        "linear-central"
    }
}

/// Exact derivative of the trigonometric interpolant of the input samples.
pub struct ExactSpectralDerivative {
    basis: ModeBasis,
}

impl ExactSpectralDerivative {
    pub fn new(n_modes: usize) -> Self {
        Self::with_length(n_modes, 1.0)
    }

    pub fn with_length(n_modes: usize, length: f64) -> Self {
        Self {
            basis: ModeBasis::with_length(n_modes, length),
        }
    }
}

impl DiscreteDerivative for ExactSpectralDerivative {
    fn apply(&self, averages: &[f64], _h: f64) -> Vec<f64> {
        assert_eq!(averages.len(), self.basis.n_cells());
        let coeffs = self.basis.project(averages);
        let mut dcoeffs = vec![0.0; coeffs.len()];
        for k in 1..=self.basis.n_modes() {
            let omega = self.basis.exact_symbol(k);
            // d/dx [a cos + b sin] = omega b cos - omega a sin
            dcoeffs[2 * k - 1] = omega * coeffs[2 * k];
            dcoeffs[2 * k] = -omega * coeffs[2 * k - 1];
        }
        self.basis.synthesize(&dcoeffs)
    }

    fn name(&self) -> &'static str {
        "exact"
    }
}
