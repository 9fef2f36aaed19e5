//! Named benchmark problems.

use std::f64::consts::PI;

use super::{data, Advection, Euler, ShallowWater};
use crate::error::{Error, Result};
use crate::mesh::{BoundaryCondition, CellField, Grid};
use crate::solver::FluxModel;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum ModelKind {
    Advection,
    Euler,
    Swe,
}

/// A named test problem: model, domain, final time and initial data.
pub struct ProblemSpec {
    pub name: &'static str,
    pub x_lo: f64,
    pub x_hi: f64,
    pub bc: BoundaryCondition,
    pub t_end: f64,
    pub components: usize,
    /// Whether the solver should reconstruct characteristic variables by
    /// default for this problem.
    pub characteristic: bool,
    kind: ModelKind,
    init: fn(f64, &mut [f64]),
}

impl ProblemSpec {
    pub fn model(&self) -> Box<dyn FluxModel> {
        match self.kind {
            ModelKind::Advection => Box::new(Advection),
            ModelKind::Euler => Box::new(Euler::default()),
            ModelKind::Swe => Box::new(ShallowWater::with_topography(topo_z, topo_z_x)),
        }
    }

    pub fn initial(&self, x: f64, out: &mut [f64]) {
        (self.init)(x, out);
    }

    /// Cell averages of the initial data on an `m`-cell grid.
    pub fn initial_field(&self, m: usize, ghost: usize, quad_order: usize) -> Result<CellField> {
        let grid = Grid::new(self.x_lo, self.x_hi, m, ghost)?;
        let mut field = CellField::from_fn(grid, self.components, quad_order, self.init);
        field.fill_ghosts(self.bc);
        Ok(field)
    }

    /// Scalar transport problems have the exact solution
    /// `u0(x - t)` wrapped into the periodic domain.
    pub fn has_exact_solution(&self) -> bool {
        self.kind == ModelKind::Advection
    }

    pub fn exact(&self, x: f64, t: f64, out: &mut [f64]) -> bool {
        if !self.has_exact_solution() {
            return false;
        }
        let width = self.x_hi - self.x_lo;
        let mut y = x - t;
        y = self.x_lo + (y - self.x_lo).rem_euclid(width);
        (self.init)(y, out);
        true
    }
}

fn topo_z(x: f64) -> f64 {
    let s = (PI * x).sin();
    s * s
}

fn topo_z_x(x: f64) -> f64 {
    PI * (2.0 * PI * x).sin()
}

fn init_smooth17(x: f64, out: &mut [f64]) {
    out[0] = data::smooth_mix(x);
}

fn init_jiangshu(x: f64, out: &mut [f64]) {
    out[0] = data::composite_profile(x);
}

fn init_ellipse18(x: f64, out: &mut [f64]) {
    out[0] = data::semi_ellipse(x);
}

fn init_lax(x: f64, out: &mut [f64]) {
    let euler = Euler::default();
    let state = if x < 0.0 {
        euler.conserved(0.445, 0.6989, 3.5277)
    } else {
        euler.conserved(0.5, 0.0, 0.571)
    };
    out.copy_from_slice(&state);
}

fn init_shuosher(x: f64, out: &mut [f64]) {
    let euler = Euler::default();
    let state = if x < -4.0 {
        euler.conserved(3.857143, 2.629369, 10.333333)
    } else {
        euler.conserved(1.0 + 0.2 * (5.0 * x).sin(), 0.0, 1.0)
    };
    out.copy_from_slice(&state);
}

fn init_swe_smooth(x: f64, out: &mut [f64]) {
    let c = (2.0 * PI * x).cos();
    out[0] = 5.0 + c.exp();
    out[1] = c.sin();
}

static REGISTRY: [ProblemSpec; 6] = [
    ProblemSpec {
        name: "advection-smooth17",
        x_lo: -1.0,
        x_hi: 1.0,
        bc: BoundaryCondition::Periodic,
        t_end: 2.0,
        components: 1,
        characteristic: false,
        kind: ModelKind::Advection,
        init: init_smooth17,
    },
    ProblemSpec {
        name: "advection-jiangshu",
        x_lo: -1.0,
        x_hi: 1.0,
        bc: BoundaryCondition::Periodic,
        t_end: 8.0,
        components: 1,
        characteristic: false,
        kind: ModelKind::Advection,
        init: init_jiangshu,
    },
    ProblemSpec {
        name: "advection-ellipse18",
        x_lo: -1.0,
        x_hi: 1.0,
        bc: BoundaryCondition::Periodic,
        t_end: 8.0,
        components: 1,
        characteristic: false,
        kind: ModelKind::Advection,
        init: init_ellipse18,
    },
    ProblemSpec {
        name: "euler-lax",
        x_lo: -5.0,
        x_hi: 5.0,
        bc: BoundaryCondition::Extrapolate,
        t_end: 1.3,
        components: 3,
        characteristic: true,
        kind: ModelKind::Euler,
        init: init_lax,
    },
    ProblemSpec {
        name: "euler-shuosher",
        x_lo: -5.0,
        x_hi: 5.0,
        bc: BoundaryCondition::Extrapolate,
        t_end: 1.8,
        components: 3,
        characteristic: true,
        kind: ModelKind::Euler,
        init: init_shuosher,
    },
    ProblemSpec {
        name: "swe-smooth19",
        x_lo: 0.0,
        x_hi: 1.0,
        bc: BoundaryCondition::Periodic,
        t_end: 0.1,
        components: 2,
        characteristic: false,
        kind: ModelKind::Swe,
        init: init_swe_smooth,
    },
];

pub fn registry() -> &'static [ProblemSpec] {
    &REGISTRY
}

pub fn lookup(name: &str) -> Result<&'static ProblemSpec> {
    REGISTRY
        .iter()
        .find(|p| p.name == name)
        .ok_or_else(|| Error::UnknownProblem(name.into()))
}
