//! Jiang-Shu regularity indicators.
//!
//! `I[P] = sum_{l>=1} h^{2l-1} int_cell (d^l P / dx^l)^2 dx`. In the scaled
//! local basis the powers of `h` cancel, so the indicator is a pure function
//! of the `xi`-coefficients. Two evaluation paths are provided: direct
//! integration of the squared derivatives, and the quadratic form
//! `<w, C w>` with `w_i = i! a_i`.

use num_rational::BigRational;

use super::coeffs;
use super::poly::LocalPoly;

/// The bilinear form of the Jiang-Shu indicator for polynomials of degree `q`.
#[derive(Debug, Clone)]
pub struct SmoothnessMatrix {
    q: usize,
    entries: Vec<f64>,
    exact: Vec<Vec<BigRational>>,
}

impl SmoothnessMatrix {
    pub fn new(q: usize) -> Self {
        assert!(q >= 1);
        Self {
            q,
            entries: coeffs::smoothness_entries_f64(q),
            exact: coeffs::smoothness_entries(q),
        }
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn entry(&self, i: usize, j: usize) -> f64 {
        self.entries[(i - 1) * self.q + (j - 1)]
    }

    /// Exact rational entry, 1-based indices.
    pub fn entry_exact(&self, i: usize, j: usize) -> &BigRational {
        &self.exact[i - 1][j - 1]
    }

    /// `<w, C w>` with `w_i = i! a_i`; accepts any polynomial with
    /// `degree <= q`.
    pub fn quadratic_form(&self, p: &LocalPoly) -> f64 {
        debug_assert!(p.degree() <= self.q);
        let mut w = [0.0; super::poly::MAX_COEFFS];
        let mut fact = 1.0;
        for i in 1..=self.q {
            fact *= i as f64;
            w[i] = fact * p.coeff(i);
        }
        let mut acc = 0.0;
        for i in 1..=self.q {
            if w[i] == 0.0 {
                continue;
            }
            for j in 1..=self.q {
                let c = self.entries[(i - 1) * self.q + (j - 1)];
                if c != 0.0 {
                    acc += c * w[i] * w[j];
                }
            }
        }
        acc
    }
}

/// Direct evaluation: sum over derivative orders of the exact integral of the
/// squared derivative over the central cell.
pub fn jiang_shu_direct(p: &LocalPoly) -> f64 {
    let mut acc = 0.0;
    let mut d = p.derivative();
    loop {
        acc += integral_of_square(&d);
        if d.degree() == 0 {
            break;
        }
        d = d.derivative();
    }
    acc
}

/// `int_{-1/2}^{1/2} q(xi)^2 dxi` by exact monomial moments.
fn integral_of_square(q: &LocalPoly) -> f64 {
    let mut acc = 0.0;
    for i in 0..=q.degree() {
        let ci = q.coeff(i);
        if ci == 0.0 {
            continue;
        }
        for j in 0..=q.degree() {
            let e = i + j;
            if e % 2 != 0 {
                continue;
            }
            // int_{-1/2}^{1/2} xi^e = (1/2)^e / (e + 1) for even e
            acc += ci * q.coeff(j) * 0.5f64.powi(e as i32) / (e as f64 + 1.0);
        }
    }
    acc
}

/// Evaluation path selector for [`jiang_shu_indicator`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IndicatorPath {
    Direct,
    Bilinear,
}

/// Jiang-Shu indicator of `p` through the requested path.
pub fn jiang_shu_indicator(p: &LocalPoly, via: IndicatorPath) -> f64 {
    match via {
        IndicatorPath::Direct => jiang_shu_direct(p),
        IndicatorPath::Bilinear => {
            if p.degree() == 0 {
                0.0
            } else {
                SmoothnessMatrix::new(p.degree()).quadratic_form(p)
            }
        }
    }
}
