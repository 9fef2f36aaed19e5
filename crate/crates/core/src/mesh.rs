//! Uniform 1D meshes and cell-average fields with ghost layers.
//!
//! A [`CellField`] stores per-cell averages of one or more conserved
//! components, component-major so that the window of one component over
//! consecutive cells is a contiguous slice.

use crate::error::{Error, Result};
use crate::quad;

/// A uniform grid of `m` cells on `[x_lo, x_hi]` with `ghost` ghost cells on
/// each side.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    x_lo: f64,
    x_hi: f64,
    m: usize,
    ghost: usize,
    h: f64,
}

impl Grid {
    /// Builds a grid; cell `j` covers `[x_lo + j h, x_lo + (j+1) h]`.
    pub fn new(x_lo: f64, x_hi: f64, m: usize, ghost: usize) -> Result<Self> {
        if !(x_hi > x_lo) {
            return Err(Error::InvalidExtent(format!(
                "x_hi = {x_hi} must exceed x_lo = {x_lo}"
            )));
        }
        if m < 2 * ghost + 1 {
            return Err(Error::InvalidExtent(format!(
                "m = {m} must be at least 2*ghost+1 = {}",
                2 * ghost + 1
            )));
        }
        Ok(Self {
            x_lo,
            x_hi,
            m,
            ghost,
            h: (x_hi - x_lo) / m as f64,
        })
    }

    pub fn x_lo(&self) -> f64 {
        self.x_lo
    }

    pub fn x_hi(&self) -> f64 {
        self.x_hi
    }

    /// Number of interior cells.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn ghost(&self) -> usize {
        self.ghost
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    /// Total cell count including ghosts.
    pub fn n_total(&self) -> usize {
        self.m + 2 * self.ghost
    }

    /// Center of interior cell `j`; negative indices address left ghosts.
    pub fn center(&self, j: isize) -> f64 {
        self.x_lo + (j as f64 + 0.5) * self.h
    }

    /// Left edge of interior cell `j`.
    pub fn left_edge(&self, j: isize) -> f64 {
        self.x_lo + j as f64 * self.h
    }

    /// Right edge of interior cell `j`.
    pub fn right_edge(&self, j: isize) -> f64 {
        self.x_lo + (j + 1) as f64 * self.h
    }

    /// Raw storage index of interior cell `j` (ghost offset applied).
    pub fn raw(&self, j: isize) -> usize {
        debug_assert!(j >= -(self.ghost as isize));
        (j + self.ghost as isize) as usize
    }
}

/// Ghost-cell filling rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryCondition {
    Periodic,
    /// Zero-order copy of the nearest interior cell.
    Extrapolate,
}

/// Cell averages of `components` conserved variables, ghosts included.
///
/// Storage is component-major: component `c` occupies the contiguous range
/// `[c * n_total, (c+1) * n_total)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CellField {
    grid: Grid,
    components: usize,
    data: Vec<f64>,
}

impl CellField {
    pub fn zeros(grid: Grid, components: usize) -> Self {
        assert!(components >= 1);
        let data = vec![0.0; components * grid.n_total()];
        Self {
            grid,
            components,
            data,
        }
    }

    /// Initializes cell averages of a vector-valued point function by
    /// Gauss-Legendre quadrature with `quad_order` nodes per cell.
    ///
    /// Ghost cells are also initialized (useful for tests with exact data);
    /// production runs overwrite them through [`CellField::fill_ghosts`].
    pub fn from_fn<F>(grid: Grid, components: usize, quad_order: usize, f: F) -> Self
    where
        F: Fn(f64, &mut [f64]),
    {
        let mut field = Self::zeros(grid, components);
        let (nodes, weights) = quad::gauss_legendre(quad_order.max(1));
        let half = 0.5 * grid.h();
        let mut buf = vec![0.0; components];
        let g = grid.ghost() as isize;
        for j in -g..(grid.m() as isize + g) {
            let mid = grid.center(j);
            let mut acc = vec![0.0; components];
            for (x, w) in nodes.iter().zip(&weights) {
                f(mid + half * x, &mut buf);
                for (a, v) in acc.iter_mut().zip(&buf) {
                    *a += w * v;
                }
            }
            let raw = grid.raw(j);
            for (c, a) in acc.iter().enumerate() {
                field.data[c * grid.n_total() + raw] = 0.5 * a;
            }
        }
        field
    }

    /// Scalar convenience wrapper around [`CellField::from_fn`].
    pub fn from_scalar_fn<F>(grid: Grid, quad_order: usize, f: F) -> Self
    where
        F: Fn(f64) -> f64,
    {
        Self::from_fn(grid, 1, quad_order, |x, out| out[0] = f(x))
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn components(&self) -> usize {
        self.components
    }

    /// Full storage of one component, ghosts included.
    pub fn component(&self, c: usize) -> &[f64] {
        let n = self.grid.n_total();
        &self.data[c * n..(c + 1) * n]
    }

    pub fn component_mut(&mut self, c: usize) -> &mut [f64] {
        let n = self.grid.n_total();
        &mut self.data[c * n..(c + 1) * n]
    }

    /// Interior cells of one component.
    pub fn interior(&self, c: usize) -> &[f64] {
        let g = self.grid.ghost();
        &self.component(c)[g..g + self.grid.m()]
    }

    /// Average of component `c` in interior cell `j` (negative = ghost).
    pub fn value(&self, c: usize, j: isize) -> f64 {
        self.component(c)[self.grid.raw(j)]
    }

    pub fn set(&mut self, c: usize, j: isize, v: f64) {
        let raw = self.grid.raw(j);
        self.component_mut(c)[raw] = v;
    }

    /// Gathers the state vector of interior cell `j`.
    pub fn state(&self, j: isize, out: &mut [f64]) {
        for c in 0..self.components {
            out[c] = self.value(c, j);
        }
    }

    /// Fills the ghost layers from the interior values.
    pub fn fill_ghosts(&mut self, bc: BoundaryCondition) {
        let g = self.grid.ghost();
        let m = self.grid.m();
        if g == 0 {
            return;
        }
        assert!(
            m >= g,
            "periodic fill needs at least as many interior cells as ghosts"
        );
        for c in 0..self.components {
            let comp = self.component_mut(c);
            match bc {
                BoundaryCondition::Periodic => {
                    for i in 0..g {
                        comp[i] = comp[m + i];
                        comp[g + m + i] = comp[g + i];
                    }
                }
                BoundaryCondition::Extrapolate => {
                    let left = comp[g];
                    let right = comp[g + m - 1];
                    for i in 0..g {
                        comp[i] = left;
                        comp[g + m + i] = right;
                    }
                }
            }
        }
    }

    /// `h * sum` of the interior averages, one entry per component.
    pub fn totals(&self) -> Vec<f64> {
        let h = self.grid.h();
        (0..self.components)
            .map(|c| {
                let mut acc = quad::KahanSum::default();
                for v in self.interior(c) {
                    acc.add(*v);
                }
                h * acc.value()
            })
            .collect()
    }

    pub fn all_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }
}
