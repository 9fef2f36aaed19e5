//! Linear transport `u_t + u_x = 0`.

use crate::solver::FluxModel;

pub struct Advection;

impl FluxModel for Advection {
    fn components(&self) -> usize {
        1
    }

    fn flux(&self, state: &[f64], out: &mut [f64]) {
        out[0] = state[0];
    }

    fn max_wavespeed(&self, _state: &[f64]) -> f64 {
        1.0
    }
}
