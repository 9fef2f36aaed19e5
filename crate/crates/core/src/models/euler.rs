//! 1D Euler equations of gas dynamics in conserved variables
//! `(rho, rho u, E)` with the ideal-gas law `p = (E - rho u^2 / 2)(gamma - 1)`.

use crate::solver::FluxModel;

pub struct Euler {
    pub gamma: f64,
}

impl Default for Euler {
    fn default() -> Self {
        Self { gamma: 1.4 }
    }
}

impl Euler {
    pub fn pressure(&self, state: &[f64]) -> f64 {
        let [rho, momentum, energy] = [state[0], state[1], state[2]];
        (energy - 0.5 * momentum * momentum / rho) * (self.gamma - 1.0)
    }

    pub fn sound_speed(&self, state: &[f64]) -> f64 {
        (self.gamma * self.pressure(state) / state[0]).sqrt()
    }

    /// Conserved state from primitive `(rho, u, p)`.
    pub fn conserved(&self, rho: f64, u: f64, p: f64) -> [f64; 3] {
        [rho, rho * u, p / (self.gamma - 1.0) + 0.5 * rho * u * u]
    }
}

impl FluxModel for Euler {
    fn components(&self) -> usize {
        3
    }

    fn flux(&self, state: &[f64], out: &mut [f64]) {
        let [rho, momentum, energy] = [state[0], state[1], state[2]];
        let u = momentum / rho;
        let p = self.pressure(state);
        out[0] = momentum;
        out[1] = momentum * u + p;
        out[2] = u * (energy + p);
    }

    fn max_wavespeed(&self, state: &[f64]) -> f64 {
        (state[1] / state[0]).abs() + self.sound_speed(state)
    }

    fn admissible(&self, state: &[f64]) -> bool {
        state.iter().all(|v| v.is_finite()) && state[0] > 0.0 && self.pressure(state) > 0.0
    }

    fn has_eigensystem(&self) -> bool {
        true
    }

    fn eigensystem(&self, state: &[f64], left: &mut [f64], right: &mut [f64]) {
        let rho = state[0];
        let u = state[1] / rho;
        let p = self.pressure(state);
        let c = (self.gamma * p / rho).sqrt();
        let enthalpy = (state[2] + p) / rho;
        let b1 = (self.gamma - 1.0) / (c * c);
        let b2 = 0.5 * b1 * u * u;

        // Right eigenvectors as columns, for waves u-c, u, u+c.
        right[0] = 1.0;
        right[1] = 1.0;
        right[2] = 1.0;
        right[3] = u - c;
        right[4] = u;
        right[5] = u + c;
        right[6] = enthalpy - u * c;
        right[7] = 0.5 * u * u;
        right[8] = enthalpy + u * c;

        left[0] = 0.5 * (b2 + u / c);
        left[1] = -0.5 * (b1 * u + 1.0 / c);
        left[2] = 0.5 * b1;
        left[3] = 1.0 - b2;
        left[4] = b1 * u;
        left[5] = -b1;
        left[6] = 0.5 * (b2 - u / c);
        left[7] = -0.5 * (b1 * u - 1.0 / c);
        left[8] = 0.5 * b1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn pressure_and_flux() {
        let m = Euler::default();
        let state = m.conserved(1.0, 2.0, 3.0);
        assert_relative_eq!(m.pressure(&state), 3.0, epsilon = 1e-14);
        let mut f = [0.0; 3];
        m.flux(&state, &mut f);
        assert_relative_eq!(f[0], 2.0); // rho u
        assert_relative_eq!(f[1], 1.0 * 4.0 + 3.0); // rho u^2 + p
        let energy = 3.0 / 0.4 + 0.5 * 4.0;
        assert_relative_eq!(f[2], 2.0 * (energy + 3.0)); // u (E + p)
    }

    #[test]
    fn velocity_mirror_symmetry() {
        // Mirrored velocity: mass flux flips sign, momentum flux does not.
        let m = Euler::default();
        let a = m.conserved(0.7, 1.3, 2.1);
        let b = m.conserved(0.7, -1.3, 2.1);
        let mut fa = [0.0; 3];
        let mut fb = [0.0; 3];
        m.flux(&a, &mut fa);
        m.flux(&b, &mut fb);
        assert_relative_eq!(fa[0], -fb[0], epsilon = 1e-14);
        assert_relative_eq!(fa[1], fb[1], epsilon = 1e-14);
        assert_relative_eq!(fa[2], -fb[2], epsilon = 1e-14);
    }

    #[test]
    fn eigensystem_round_trip_on_random_states() {
        let m = Euler::default();
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let mut l = [0.0; 9];
        let mut r = [0.0; 9];
        for _ in 0..100 {
            let rho = rng.random_range(0.1..5.0);
            let u = rng.random_range(-3.0..3.0);
            let p = rng.random_range(0.1..10.0);
            let state = m.conserved(rho, u, p);
            assert!(m.admissible(&state));
            m.eigensystem(&state, &mut l, &mut r);
            for i in 0..3 {
                for j in 0..3 {
                    let mut acc = 0.0;
                    for k in 0..3 {
                        acc += l[i * 3 + k] * r[k * 3 + j];
                    }
                    let expect = if i == j { 1.0 } else { 0.0 };
                    assert!(
                        (acc - expect).abs() < 1e-12,
                        "LR[{i}][{j}] = {acc} at rho={rho}, u={u}, p={p}"
                    );
                }
            }
        }
    }

    #[test]
    fn vacuum_states_are_inadmissible() {
        let m = Euler::default();
        assert!(!m.admissible(&[0.0, 0.0, 1.0]));
        assert!(!m.admissible(&[1.0, 10.0, 1.0])); // negative pressure
        assert!(!m.admissible(&[1.0, f64::NAN, 1.0]));
    }
}
