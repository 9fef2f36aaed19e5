//! Polynomials in the scaled local basis of a reconstruction cell.
//!
//! Coefficients are stored against `xi^l` with `xi = (x - x_0) / h`, where
//! `x_0` is the center of the reconstruction cell. Cell `j` of the stencil
//! occupies `[j - 1/2, j + 1/2]` in `xi`. This scaling makes cell averages,
//! point values at edges and the Jiang-Shu indicator independent of `h`.

/// Degree is capped by the widest supported stencil (r = 6, degree 2r-2).
pub const MAX_COEFFS: usize = 11;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LocalPoly {
    len: usize,
    a: [f64; MAX_COEFFS],
}

impl LocalPoly {
    pub fn new(coeffs: &[f64]) -> Self {
        assert!(!coeffs.is_empty() && coeffs.len() <= MAX_COEFFS);
        let mut a = [0.0; MAX_COEFFS];
        a[..coeffs.len()].copy_from_slice(coeffs);
        Self {
            len: coeffs.len(),
            a,
        }
    }

    pub fn zero(degree: usize) -> Self {
        assert!(degree + 1 <= MAX_COEFFS);
        Self {
            len: degree + 1,
            a: [0.0; MAX_COEFFS],
        }
    }

    pub fn constant(c: f64) -> Self {
        Self::new(&[c])
    }

    pub fn degree(&self) -> usize {
        self.len - 1
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.a[..self.len]
    }

    pub fn coeff(&self, l: usize) -> f64 {
        if l < self.len {
            self.a[l]
        } else {
            0.0
        }
    }

    /// Horner evaluation at local coordinate `xi`.
    pub fn eval(&self, xi: f64) -> f64 {
        let mut acc = 0.0;
        for &c in self.coeffs().iter().rev() {
            acc = acc * xi + c;
        }
        acc
    }

    /// Derivative with respect to `xi`.
    pub fn derivative(&self) -> LocalPoly {
        if self.len == 1 {
            return LocalPoly::constant(0.0);
        }
        let mut out = LocalPoly::zero(self.degree() - 1);
        for l in 1..self.len {
            out.a[l - 1] = l as f64 * self.a[l];
        }
        out
    }

    /// Average over stencil cell `j`, i.e. over `[j - 1/2, j + 1/2]` in `xi`.
    pub fn cell_average(&self, j: i64) -> f64 {
        let lo = j as f64 - 0.5;
        let hi = j as f64 + 0.5;
        let mut acc = 0.0;
        // int xi^l = (hi^{l+1} - lo^{l+1})/(l+1)
        let mut plo = lo;
        let mut phi = hi;
        for l in 0..self.len {
            acc += self.a[l] * (phi - plo) / (l as f64 + 1.0);
            plo *= lo;
            phi *= hi;
        }
        acc
    }

    /// Mean over the reconstruction cell itself.
    pub fn mean(&self) -> f64 {
        self.cell_average(0)
    }

    /// `self += s * other`, widening the coefficient range as needed.
    pub fn axpy(&mut self, s: f64, other: &LocalPoly) {
        self.len = self.len.max(other.len);
        for l in 0..other.len {
            self.a[l] += s * other.a[l];
        }
    }

    pub fn scale(&mut self, s: f64) {
        for c in self.a[..self.len].iter_mut() {
            *c *= s;
        }
    }

    /// Reflection `xi -> -xi`: odd coefficients change sign.
    pub fn reflected(&self) -> LocalPoly {
        let mut out = *self;
        for l in (1..self.len).step_by(2) {
            out.a[l] = -out.a[l];
        }
        out
    }
}
