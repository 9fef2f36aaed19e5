//! Initial data for the scalar transport benchmarks.

use std::f64::consts::PI;

/// Smooth signal mixing one low and one high frequency:
/// `sin(pi x) - sin(15 pi x) exp(-20 x^2)` on `[-1, 1]`.
pub fn smooth_mix(x: f64) -> f64 {
    (PI * x).sin() - (15.0 * PI * x).sin() * (-20.0 * x * x).exp()
}

fn ellipse(x: f64, alpha: f64, a: f64) -> f64 {
    (1.0 - alpha * alpha * (x - a) * (x - a)).max(0.0).sqrt()
}

fn gaussian(x: f64, beta: f64, z: f64) -> f64 {
    (-beta * (x - z) * (x - z)).exp()
}

/// The smoothed semi-ellipse centered at `x = 0.5`:
/// `(F(x,10,0.5-d) + F(x,10,0.5+d) + 4 F(x,10,0.5)) / 6` with `d = 0.005`.
pub fn semi_ellipse(x: f64) -> f64 {
    let (alpha, a, d) = (10.0, 0.5, 0.005);
    (ellipse(x, alpha, a - d) + ellipse(x, alpha, a + d) + 4.0 * ellipse(x, alpha, a)) / 6.0
}

/// The classical four-feature profile on `[-1, 1]`: a smoothed Gaussian
/// bump, a square wave, a triangular wave and a smoothed semi-ellipse.
///
/// Breakpoints: bump on `[-0.8, -0.6]` centered at `z = -0.7`, square on
/// `[-0.4, -0.2]`, triangle on `[0, 0.2]` with apex at `0.1`, ellipse on
/// `[0.4, 0.6]` centered at `a = 0.5`; zero elsewhere. The bump and the
/// ellipse are averaged over center offsets `+-d` as in the original test.
pub fn composite_profile(x: f64) -> f64 {
    let d = 0.005;
    let z = -0.7;
    let beta = (2.0f64).ln() / (36.0 * d * d);
    if (-0.8..=-0.6).contains(&x) {
        (gaussian(x, beta, z - d) + gaussian(x, beta, z + d) + 4.0 * gaussian(x, beta, z)) / 6.0
    } else if (-0.4..=-0.2).contains(&x) {
        1.0
    } else if (0.0..=0.2).contains(&x) {
        1.0 - (10.0 * (x - 0.1)).abs()
    } else if (0.4..=0.6).contains(&x) {
        semi_ellipse(x)
    } else {
        0.0
    }
}
