//! Semidiscrete finite-volume evolution.
//!
//! The right-hand side reconstructs boundary values in every cell
//! (componentwise or in local characteristic variables), evaluates the local
//! Lax-Friedrichs flux at the interfaces and, for balance laws, integrates
//! the source term over each cell with Richardson-extrapolated trapezoid
//! sums over the reconstruction polynomial. Time stepping is explicit
//! Runge-Kutta with a CFL-driven step size.

pub mod tableau;

pub use tableau::RkTableau;

use crate::error::{Error, Result};
use crate::mesh::{BoundaryCondition, CellField, Grid};
use crate::quad;
use crate::recon::{Family, LocalPoly, ReconScheme};

/// A hyperbolic balance-law model `u_t + f(u)_x = S(u, x)`.
pub trait FluxModel: Sync {
    fn components(&self) -> usize;
    fn flux(&self, state: &[f64], out: &mut [f64]);
    /// Spectral radius of the flux Jacobian.
    fn max_wavespeed(&self, state: &[f64]) -> f64;
    fn admissible(&self, state: &[f64]) -> bool {
        state.iter().all(|v| v.is_finite())
    }
    fn has_eigensystem(&self) -> bool {
        false
    }
    /// Left and right eigenvector matrices at `state`, row-major
    /// `components x components`, normalized so that `L R = I`.
    fn eigensystem(&self, _state: &[f64], _left: &mut [f64], _right: &mut [f64]) {
        unimplemented!("model has no eigensystem")
    }
    fn has_source(&self) -> bool {
        false
    }
    /// Pointwise source `S(u, x)`.
    fn source(&self, _state: &[f64], _x: f64, out: &mut [f64]) {
        out.fill(0.0);
    }
}

/// Local Lax-Friedrichs interface flux
/// `F = (f(uL) + f(uR))/2 - alpha (uR - uL)/2` with the pairwise maximal
/// wavespeed `alpha`.
pub fn llf_flux(model: &dyn FluxModel, ul: &[f64], ur: &[f64]) -> Result<Vec<f64>> {
    let nc = model.components();
    let mut fl = vec![0.0; nc];
    let mut fr = vec![0.0; nc];
    let mut out = vec![0.0; nc];
    llf_flux_into(model, ul, ur, &mut fl, &mut fr, &mut out)?;
    Ok(out)
}

fn llf_flux_into(
    model: &dyn FluxModel,
    ul: &[f64],
    ur: &[f64],
    fl: &mut [f64],
    fr: &mut [f64],
    out: &mut [f64],
) -> Result<()> {
    if !model.admissible(ul) {
        return Err(Error::InadmissibleState(format!("left state {ul:?}")));
    }
    if !model.admissible(ur) {
        return Err(Error::InadmissibleState(format!("right state {ur:?}")));
    }
    let alpha = model.max_wavespeed(ul).max(model.max_wavespeed(ur));
    model.flux(ul, fl);
    model.flux(ur, fr);
    for c in 0..out.len() {
        out[c] = 0.5 * (fl[c] + fr[c]) - 0.5 * alpha * (ur[c] - ul[c]);
    }
    Ok(())
}

/// Solver configuration; a run is fully described by
/// (model, initial field, config, tableau).
#[derive(Debug, Clone)]
pub struct SolverConfig {
    pub scheme: ReconScheme,
    pub cfl: f64,
    pub bc: BoundaryCondition,
    /// Reconstruct in local characteristic variables.
    pub characteristic: bool,
    pub t_end: f64,
}

impl SolverConfig {
    pub fn new(scheme: ReconScheme, bc: BoundaryCondition, t_end: f64) -> Self {
        Self {
            scheme,
            cfl: 0.45,
            bc,
            characteristic: false,
            t_end,
        }
    }

    pub fn with_cfl(mut self, cfl: f64) -> Self {
        self.cfl = cfl;
        self
    }

    pub fn with_characteristic(mut self, on: bool) -> Self {
        self.characteristic = on;
        self
    }

    fn validate(&self, model: &dyn FluxModel, grid: &Grid) -> Result<()> {
        if !(self.cfl > 0.0 && self.cfl < 1.0) {
            return Err(Error::Config(format!(
                "cfl = {} must lie in (0, 1)",
                self.cfl
            )));
        }
        if grid.ghost() < self.scheme.r() - 1 {
            return Err(Error::Config(format!(
                "scheme of order {} needs {} ghost cells, grid has {}",
                self.scheme.order(),
                self.scheme.r() - 1,
                grid.ghost()
            )));
        }
        if self.characteristic && !model.has_eigensystem() {
            return Err(Error::Config(
                "characteristic reconstruction requires an eigensystem".into(),
            ));
        }
        if model.has_source() && self.scheme.family() == Family::Weno {
            return Err(Error::Config(
                "source quadrature needs the cell polynomial; use cweno or cwenoz".into(),
            ));
        }
        Ok(())
    }
}

/// One time-step record for the step log.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StepRecord {
    pub t: f64,
    pub dt: f64,
    pub max_wavespeed: f64,
}

/// Scratch buffers reused across right-hand-side evaluations.
pub struct RhsScratch {
    m: usize,
    left: Vec<f64>,
    right: Vec<f64>,
    polys: Vec<LocalPoly>,
    flux: Vec<f64>,
    fl: Vec<f64>,
    fr: Vec<f64>,
    fbuf: Vec<f64>,
    eig_l: Vec<f64>,
    eig_r: Vec<f64>,
    state: Vec<f64>,
    char_win: Vec<f64>,
    ul: Vec<f64>,
    ur: Vec<f64>,
}

impl RhsScratch {
    pub fn new(model: &dyn FluxModel, grid: &Grid, scheme: &ReconScheme) -> Self {
        let m = grid.m();
        let nc = model.components();
        let w = scheme.window_len();
        Self {
            m,
            left: vec![0.0; m * nc],
            right: vec![0.0; m * nc],
            polys: vec![LocalPoly::constant(0.0); if model.has_source() { m * nc } else { 0 }],
            flux: vec![0.0; (m + 1) * nc],
            fl: vec![0.0; nc],
            fr: vec![0.0; nc],
            fbuf: vec![0.0; nc],
            eig_l: vec![0.0; nc * nc],
            eig_r: vec![0.0; nc * nc],
            state: vec![0.0; nc],
            char_win: vec![0.0; w],
            ul: vec![0.0; nc],
            ur: vec![0.0; nc],
        }
    }

    /// Interface flux component `c` at interface `i` (`0..=m`) from the last
    /// right-hand-side evaluation.
    pub fn interface_flux(&self, c: usize, i: usize) -> f64 {
        self.flux[c * (self.m + 1) + i]
    }
}

/// Largest wavespeed over the interior cell averages.
pub fn max_wavespeed(model: &dyn FluxModel, field: &CellField) -> f64 {
    let mut state = vec![0.0; model.components()];
    let mut ws = 0.0f64;
    for j in 0..field.grid().m() as isize {
        field.state(j, &mut state);
        ws = ws.max(model.max_wavespeed(&state));
    }
    ws
}

/// Semidiscrete right-hand side `du/dt` of the interior cells
/// (component-major, `c * m + j`). Ghost cells of `field` must be filled.
pub fn semidiscrete_rhs(
    model: &dyn FluxModel,
    field: &CellField,
    config: &SolverConfig,
    scratch: &mut RhsScratch,
    dudt: &mut [f64],
) -> Result<()> {
    let grid = *field.grid();
    let m = grid.m();
    let nc = model.components();
    let h = grid.h();
    let scheme = &config.scheme;
    let r = scheme.r();
    let w = scheme.window_len();
    debug_assert_eq!(dudt.len(), m * nc);

    let with_polys = model.has_source();
    for j in 0..m {
        if config.characteristic && nc > 1 {
            reconstruct_characteristic(model, field, config, scratch, j);
        } else {
            for c in 0..nc {
                let comp = field.component(c);
                let start = grid.raw(j as isize - (r as isize - 1));
                let rec = scheme.reconstruct(&comp[start..start + w], h);
                scratch.left[c * m + j] = rec.left;
                scratch.right[c * m + j] = rec.right;
                if with_polys {
                    scratch.polys[c * m + j] = rec.poly.expect("cweno-type enforced for sources");
                }
            }
        }
    }

    // Interface fluxes: interface i sits between cells i-1 and i.
    for i in 0..=m {
        for c in 0..nc {
            scratch.ul[c] = if i == 0 {
                match config.bc {
                    BoundaryCondition::Periodic => scratch.right[c * m + m - 1],
                    // Constant ghost data reconstructs to the ghost average.
                    BoundaryCondition::Extrapolate => field.value(c, -1),
                }
            } else {
                scratch.right[c * m + i - 1]
            };
            scratch.ur[c] = if i == m {
                match config.bc {
                    BoundaryCondition::Periodic => scratch.left[c * m],
                    BoundaryCondition::Extrapolate => field.value(c, m as isize),
                }
            } else {
                scratch.left[c * m + i]
            };
        }
        let mut out = std::mem::take(&mut scratch.fbuf);
        let res = llf_flux_into(
            model,
            &scratch.ul,
            &scratch.ur,
            &mut scratch.fl,
            &mut scratch.fr,
            &mut out,
        );
        scratch.fbuf = out;
        res?;
        for c in 0..nc {
            scratch.flux[c * (m + 1) + i] = scratch.fbuf[c];
        }
    }

    for j in 0..m {
        for c in 0..nc {
            dudt[c * m + j] =
                -(scratch.flux[c * (m + 1) + j + 1] - scratch.flux[c * (m + 1) + j]) / h;
        }
    }

    if with_polys {
        add_source_averages(model, &grid, scheme, scratch, dudt);
    }
    Ok(())
}

/// Richardson-extrapolated trapezoid average of the source over each cell,
/// with the state taken from the reconstruction polynomials. The dyadic node
/// sets use the two boundary values plus 1, 3, 7 and 15 internal nodes for
/// orders 3, 5, 7 and 9.
fn add_source_averages(
    model: &dyn FluxModel,
    grid: &Grid,
    scheme: &ReconScheme,
    scratch: &RhsScratch,
    dudt: &mut [f64],
) {
    let m = grid.m();
    let nc = model.components();
    let h = grid.h();
    let levels = (scheme.r() - 1).max(1);
    for j in 0..m {
        let xl = grid.left_edge(j as isize);
        let xc = grid.center(j as isize);
        for c in 0..nc {
            let polys = &scratch.polys;
            let integral = quad::romberg(
                |x| {
                    let xi = (x - xc) / h;
                    let mut state = [0.0; 8];
                    for d in 0..nc {
                        state[d] = polys[d * m + j].eval(xi);
                    }
                    let mut s = [0.0; 8];
                    model.source(&state[..nc], x, &mut s[..nc]);
                    s[c]
                },
                xl,
                xl + h,
                levels,
            );
            dudt[c * m + j] += integral / h;
        }
    }
}

fn reconstruct_characteristic(
    model: &dyn FluxModel,
    field: &CellField,
    config: &SolverConfig,
    scratch: &mut RhsScratch,
    j: usize,
) {
    let grid = field.grid();
    let m = grid.m();
    let nc = model.components();
    let h = grid.h();
    let scheme = &config.scheme;
    let r = scheme.r();
    let w = scheme.window_len();

    // Decomposition frozen at the central cell average of the stencil.
    field.state(j as isize, &mut scratch.state);
    model.eigensystem(&scratch.state, &mut scratch.eig_l, &mut scratch.eig_r);

    let with_polys = model.has_source();
    let mut char_left = [0.0; 8];
    let mut char_right = [0.0; 8];
    let mut char_polys = [LocalPoly::constant(0.0); 8];
    for c in 0..nc {
        for i in 0..w {
            let cell = j as isize + i as isize - (r as isize - 1);
            let mut acc = 0.0;
            for d in 0..nc {
                acc += scratch.eig_l[c * nc + d] * field.value(d, cell);
            }
            scratch.char_win[i] = acc;
        }
        let rec = scheme.reconstruct(&scratch.char_win[..w], h);
        char_left[c] = rec.left;
        char_right[c] = rec.right;
        if with_polys {
            char_polys[c] = rec.poly.expect("cweno-type enforced for sources");
        }
    }
    for d in 0..nc {
        let mut l = 0.0;
        let mut rgt = 0.0;
        for c in 0..nc {
            l += scratch.eig_r[d * nc + c] * char_left[c];
            rgt += scratch.eig_r[d * nc + c] * char_right[c];
        }
        scratch.left[d * m + j] = l;
        scratch.right[d * m + j] = rgt;
        if with_polys {
            let mut poly = LocalPoly::zero(2 * r - 2);
            for c in 0..nc {
                poly.axpy(scratch.eig_r[d * nc + c], &char_polys[c]);
            }
            scratch.polys[d * m + j] = poly;
        }
    }
}

/// Integrates `field0` to `config.t_end`; returns the final field and the
/// per-step log. The step size is `cfl * h / max_wavespeed`, recomputed each
/// step from the cell averages, and the final step is clipped to land on
/// `t_end` exactly.
pub fn advance(
    model: &dyn FluxModel,
    field0: &CellField,
    config: &SolverConfig,
    tableau: &RkTableau,
) -> Result<(CellField, Vec<StepRecord>)> {
    let grid = *field0.grid();
    config.validate(model, &grid)?;
    if !(config.t_end > 0.0) {
        return Err(Error::Config(format!(
            "t_end = {} must be positive",
            config.t_end
        )));
    }
    let m = grid.m();
    let nc = model.components();
    let h = grid.h();
    let s = tableau.stages();

    let mut u = field0.clone();
    u.fill_ghosts(config.bc);
    let mut stage = u.clone();
    let mut scratch = RhsScratch::new(model, &grid, &config.scheme);
    let mut k = vec![vec![0.0; m * nc]; s];
    let mut log = Vec::new();

    let mut t = 0.0;
    let mut step = 0usize;
    const MAX_STEPS: usize = 50_000_000;
    while t < config.t_end {
        let ws = max_wavespeed(model, &u);
        if !ws.is_finite() {
            return Err(Error::BlowUp {
                step,
                time: t,
                detail: "non-finite wavespeed".into(),
            });
        }
        let mut dt = config.cfl * h / ws.max(1e-300);
        if t + dt >= config.t_end {
            dt = config.t_end - t;
        }
        if !(dt > 0.0) || step >= MAX_STEPS {
            return Err(Error::BlowUp {
                step,
                time: t,
                detail: format!("step size collapsed (dt = {dt})"),
            });
        }
        for i in 0..s {
            for c in 0..nc {
                let g = grid.ghost();
                let dst = stage.component_mut(c);
                dst.copy_from_slice(u.component(c));
                for j in 0..m {
                    let mut acc = 0.0;
                    for l in 0..i {
                        acc += tableau.a(i, l) * k[l][c * m + j];
                    }
                    dst[g + j] += dt * acc;
                }
            }
            stage.fill_ghosts(config.bc);
            if !stage.all_finite() {
                return Err(Error::BlowUp {
                    step,
                    time: t,
                    detail: format!("non-finite state in stage {i}"),
                });
            }
            semidiscrete_rhs(model, &stage, config, &mut scratch, &mut k[i]).map_err(|e| {
                Error::BlowUp {
                    step,
                    time: t,
                    detail: e.to_string(),
                }
            })?;
        }
        for c in 0..nc {
            let g = grid.ghost();
            let dst = u.component_mut(c);
            for j in 0..m {
                let mut acc = 0.0;
                for (i, ki) in k.iter().enumerate() {
                    acc += tableau.b()[i] * ki[c * m + j];
                }
                dst[g + j] += dt * acc;
            }
        }
        u.fill_ghosts(config.bc);
        if !u.all_finite() {
            return Err(Error::BlowUp {
                step,
                time: t,
                detail: "non-finite state after step".into(),
            });
        }
        log.push(StepRecord {
            t,
            dt,
            max_wavespeed: ws,
        });
        t += dt;
        step += 1;
    }
    Ok((u, log))
}
