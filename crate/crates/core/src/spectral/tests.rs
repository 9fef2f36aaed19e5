use super::*;
use crate::recon::{Family, ReconScheme};
use approx::assert_relative_eq;

fn max_abs(m: &DMatrix<f64>) -> f64 {
    m.iter().fold(0.0f64, |a, v| a.max(v.abs()))
}

#[test]
fn exact_derivative_reproduces_the_exact_symbol_matrix() {
    let n = 16;
    let op = ExactSpectralDerivative::new(n);
    let sig = signature(&op, n);
    let d = exact_derivative_matrix(n);
    let mut worst = 0.0f64;
    for i in 0..sig.omega.nrows() {
        for j in 0..sig.omega.ncols() {
            worst = worst.max((sig.omega[(i, j)] - d[(i, j)]).abs());
        }
    }
    // E is the frequency-normalized version of the same difference.
    assert!(max_abs(&sig.error) <= 1e-12, "E not zero: {}", max_abs(&sig.error));
    assert!(sig.delta.iter().all(|d| *d <= 1e-12));
    assert!(sig.temperature <= 1e-12);
    assert!(sig.diffusion.iter().all(|v| v.abs() <= 1e-10));
    assert!(sig.dispersion.iter().all(|v| v.abs() <= 1e-10));
    assert!(worst < 1e-9, "omega deviates from D by {worst}");
}

#[test]
fn first_order_upwind_matches_its_closed_form_symbol() {
    // s_k = (1 - e^{-i theta})/h with theta = 2 pi k h.
    let n = 32;
    let sig = signature(&FirstOrderUpwind, n);
    let h = 1.0 / (2 * n + 1) as f64;
    for k in 1..=n {
        let theta = 2.0 * PI * k as f64 * h;
        let expect = Complex64::new(
            (1.0 - theta.cos()) / h,
            theta.sin() / h,
        );
        let got = sig.omega_c[(k - 1, k - 1)];
        assert!(
            (got - expect).norm() <= 1e-10,
            "k={k}: got {got}, expected {expect}"
        );
    }
    // Linear operator: strictly block diagonal, zero distortion.
    assert!(sig.delta.iter().all(|d| *d <= 1e-12));
    assert!(sig.temperature <= 1e-12);
}

#[test]
fn central_difference_matches_its_closed_form_symbol() {
    let n = 32;
    let sig = signature(&CentralDifference, n);
    let h = 1.0 / (2 * n + 1) as f64;
    for k in 1..=n {
        let theta = 2.0 * PI * k as f64 * h;
        let expect = Complex64::new(0.0, theta.sin() / h);
        let got = sig.omega_c[(k - 1, k - 1)];
        assert!((got - expect).norm() <= 1e-10);
        // purely dispersive
        assert!(sig.diffusion[k - 1].abs() <= 1e-12);
    }
    // Small-kh dispersion expansion: -(2 pi k)^3 h^2 / 6.
    for k in 1..=n {
        let kh = k as f64 * h;
        if kh < 0.02 {
            let w = 2.0 * PI * k as f64;
            let expect = -w * w * w * h * h / 6.0;
            assert_relative_eq!(sig.dispersion[k - 1], expect, max_relative = 5e-2);
        }
    }
}

#[test]
fn upwind_diffusion_expansion_for_small_kh() {
    // |Re symbol| = (2 pi k)^2 h / 2 + O(h^3 k^4) for small kh.
    let n = 64;
    let sig = signature(&FirstOrderUpwind, n);
    let h = 1.0 / (2 * n + 1) as f64;
    for k in 1..=n {
        let kh = k as f64 * h;
        if kh < 0.05 {
            let w = 2.0 * PI * k as f64;
            let expect = w * w * h / 2.0;
            assert_relative_eq!(sig.diffusion[k - 1].abs(), expect, max_relative = 5e-2);
        }
    }
}

#[test]
fn error_matrix_scaling_check() {
    // A single spurious entry of size 2 pi in the block column of k = 1
    // becomes exactly 1 after the frequency normalization.
    let n = 8;
    let mut omega = exact_derivative_matrix(n);
    omega[(7, 1)] = 2.0 * PI; // some output mode fed by the cos_1 column
    let e = error_matrix(&omega);
    assert_relative_eq!(e[(6, 0)], 1.0, epsilon = 1e-14);
    let nonzero: usize = e.iter().filter(|v| v.abs() > 1e-14).count();
    assert_eq!(nonzero, 1);
}

#[test]
fn nonlinear_operator_fills_high_frequency_columns() {
    // Column mass far from the diagonal grows towards the high-k end.
    let n = 64;
    let scheme = ReconScheme::with_defaults(Family::CwenoZ, 5).unwrap();
    let sig = signature(&UpwindFv::new(scheme), n);
    let low = sig.delta[(n as f64 * 0.2) as usize - 1];
    let high = sig.delta[(n as f64 * 0.9) as usize - 1];
    assert!(
        high > 10.0 * low,
        "expected distortion growth with k: low {low}, high {high}"
    );
}

#[test]
fn distortion_is_grid_independent() {
    // delta curves at N and 2N superpose on shared abscissae. Isolated
    // resonance notches drift slightly with N, so the statistic is the
    // median relative deviation over the resolved part of the curve.
    let scheme = ReconScheme::with_defaults(Family::CwenoZ, 5).unwrap();
    let op = UpwindFv::new(scheme);
    let a = signature(&op, 32);
    let b = signature(&op, 64);
    let mut rels = Vec::new();
    for k in 1..=32usize {
        let da = a.delta[k - 1];
        let db = b.delta[2 * k - 1];
        if da.max(db) > 1e-9 {
            rels.push((da - db).abs() / da.max(db));
        }
    }
    assert!(rels.len() > 16, "too few comparable abscissae");
    rels.sort_by(|x, y| x.total_cmp(y));
    let median = rels[rels.len() / 2];
    assert!(median < 0.10, "median relative deviation {median}");
}

#[test]
fn cwenoz_distorts_less_than_cweno_at_low_frequencies() {
    let n = 64;
    let z = signature(
        &UpwindFv::new(ReconScheme::with_defaults(Family::CwenoZ, 5).unwrap()),
        n,
    );
    let c = signature(
        &UpwindFv::new(ReconScheme::with_defaults(Family::Cweno, 5).unwrap()),
        n,
    );
    for k in 1..=n {
        if PI * k as f64 / (n as f64) < 0.3 {
            assert!(
                z.delta[k - 1] <= c.delta[k - 1] + 1e-14,
                "k={k}: cwenoz {} vs cweno {}",
                z.delta[k - 1],
                c.delta[k - 1]
            );
        }
    }
}

#[test]
fn temperatures_are_positive_and_ordered_at_order_five() {
    let n = 32;
    let z = signature(
        &UpwindFv::new(ReconScheme::with_defaults(Family::CwenoZ, 5).unwrap()),
        n,
    )
    .temperature;
    let c = signature(
        &UpwindFv::new(ReconScheme::with_defaults(Family::Cweno, 5).unwrap()),
        n,
    )
    .temperature;
    assert!(z > 0.0 && c > 0.0);
    assert!(z < c, "cwenoz {z} should be cooler than cweno {c}");
}
