//! Benchmark harness shared by the command line front end and the
//! acceptance suite: problem runs, discrete errors, convergence tables,
//! reference-solution caching and diagnostic traces.

use std::fs;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::mesh::CellField;
use crate::models::{lookup, ProblemSpec};
use crate::quad::KahanSum;
use crate::recon::{Edge, Family, ReconParams, ReconScheme};
use crate::solver::{advance, RkTableau, SolverConfig, StepRecord};
use crate::spectral::{
    signature_with_length, CentralDifference, DiscreteDerivative, SpectralSignature, UpwindFv,
};

/// Wavenumber convention of the spectral analyzer: on a domain of length
/// `2 pi` the exact symbol of mode `k` is `k` itself, which is the scale the
/// reported temperature tables use.
pub const SPECTRAL_DOMAIN: f64 = std::f64::consts::TAU;

/// Fine-grid resolution of cached self-references.
pub const REFERENCE_M: usize = 8192;

/// A reconstruction scheme selection as it appears on the command line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SchemeConfig {
    pub family: Family,
    pub order: usize,
    pub params: ReconParams,
}

impl SchemeConfig {
    pub fn new(family: Family, order: usize) -> Self {
        Self {
            family,
            order,
            params: ReconParams::default(),
        }
    }

    pub fn build(&self) -> Result<ReconScheme> {
        ReconScheme::new(self.family, self.order, self.params)
    }

    pub fn label(&self) -> String {
        format!("{}{}", self.family.name(), self.order)
    }
}

/// Quadrature nodes per cell used to initialize cell averages: enough to
/// keep the initialization error below every tested scheme order.
pub fn init_quad_order(order: usize) -> usize {
    ((order + 1) / 2 + 1).max(5)
}

fn tableau_for(order: usize, custom: Option<&RkTableau>) -> Result<RkTableau> {
    if let Some(t) = custom {
        return Ok(t.clone());
    }
    RkTableau::for_order(order).ok_or_else(|| {
        Error::UnsupportedOrder(format!(
            "no built-in time integrator of order {order}; supply a tableau file"
        ))
    })
}

/// Runs `problem` with the given scheme on `m` cells to the problem's final
/// time.
pub fn solve_problem(
    problem: &ProblemSpec,
    scheme: &SchemeConfig,
    m: usize,
    cfl: f64,
    custom_tableau: Option<&RkTableau>,
) -> Result<(CellField, Vec<StepRecord>)> {
    let recon = scheme.build()?;
    let tableau = tableau_for(scheme.order, custom_tableau)?;
    let field = problem.initial_field(m, recon.r() - 1, init_quad_order(scheme.order))?;
    let cfg = SolverConfig::new(recon, problem.bc, problem.t_end)
        .with_cfl(cfl)
        .with_characteristic(problem.characteristic);
    let model = problem.model();
    advance(model.as_ref(), &field, &cfg, &tableau)
}

/// Discrete `L1` distance `h * sum |a - b|`, summed over components.
pub fn l1_error(a: &CellField, b: &CellField) -> f64 {
    assert_eq!(a.components(), b.components());
    assert_eq!(a.grid().m(), b.grid().m());
    let h = a.grid().h();
    let mut acc = KahanSum::default();
    for c in 0..a.components() {
        for (x, y) in a.interior(c).iter().zip(b.interior(c)) {
            acc.add((x - y).abs());
        }
    }
    h * acc.value()
}

/// Restriction of a fine solution to a coarser grid by exact aggregation of
/// the child-cell averages.
pub fn restrict(fine: &CellField, coarse_m: usize) -> CellField {
    let fm = fine.grid().m();
    assert!(
        fm % coarse_m == 0,
        "fine resolution {fm} is not a multiple of {coarse_m}"
    );
    let factor = fm / coarse_m;
    let grid = crate::mesh::Grid::new(
        fine.grid().x_lo(),
        fine.grid().x_hi(),
        coarse_m,
        fine.grid().ghost().min(coarse_m.saturating_sub(1) / 2),
    )
    .expect("valid coarse grid");
    let mut out = CellField::zeros(grid, fine.components());
    for c in 0..fine.components() {
        let src = fine.interior(c).to_vec();
        for j in 0..coarse_m {
            let mut acc = KahanSum::default();
            for i in 0..factor {
                acc.add(src[j * factor + i]);
            }
            out.set(c, j as isize, acc.value() / factor as f64);
        }
    }
    out
}

/// One row of a convergence table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergenceRow {
    pub m: usize,
    pub error: f64,
    pub rate: Option<f64>,
}

/// The reference a convergence study compares against.
enum ReferenceData {
    /// Exact cell averages of the known solution on each requested grid.
    Exact,
    /// A cached fine-grid solution, restricted by exact aggregation.
    Fine(CellField),
}

/// Convergence study of `scheme` on `problem` over the resolutions `ms`.
///
/// Problems with an exact solution are compared against its exact cell
/// averages; the others use a fine-grid self-reference (CWENOZ of order 5
/// on [`REFERENCE_M`] cells) cached under `cache_dir`. A missing cache is
/// regenerated unless `allow_regen` is false, in which case the study fails
/// with [`Error::MissingReference`].
pub fn convergence(
    problem: &ProblemSpec,
    scheme: &SchemeConfig,
    ms: &[usize],
    cfl: f64,
    cache_dir: &Path,
    allow_regen: bool,
) -> Result<Vec<ConvergenceRow>> {
    let reference = if problem.has_exact_solution() {
        ReferenceData::Exact
    } else {
        ReferenceData::Fine(load_or_build_reference(problem, cache_dir, allow_regen)?)
    };
    let mut rows: Vec<ConvergenceRow> = Vec::with_capacity(ms.len());
    for &m in ms {
        let (solution, _) = solve_problem(problem, scheme, m, cfl, None)?;
        let expected = match &reference {
            ReferenceData::Exact => exact_average_field(problem, m)?,
            ReferenceData::Fine(fine) => restrict(fine, m),
        };
        let error = l1_error(&solution, &expected);
        let rate = rows.last().map(|prev: &ConvergenceRow| {
            (prev.error / error).ln() / (m as f64 / prev.m as f64).ln()
        });
        rows.push(ConvergenceRow { m, error, rate });
    }
    Ok(rows)
}

/// Exact cell averages of the problem's exact solution at its final time.
pub fn exact_average_field(problem: &ProblemSpec, m: usize) -> Result<CellField> {
    if !problem.has_exact_solution() {
        return Err(Error::MissingReference(format!(
            "problem `{}` has no exact solution",
            problem.name
        )));
    }
    let grid = crate::mesh::Grid::new(problem.x_lo, problem.x_hi, m, 0)?;
    let t = problem.t_end;
    Ok(CellField::from_fn(grid, problem.components, 8, |x, out| {
        problem.exact(x, t, out);
    }))
}

/// Path of the cached fine-grid reference for `problem`.
pub fn reference_path(problem: &ProblemSpec, cache_dir: &Path) -> PathBuf {
    cache_dir.join(format!("ref_{}_cwenoz5_M{}.csv", problem.name, REFERENCE_M))
}

fn reference_scheme() -> SchemeConfig {
    SchemeConfig::new(Family::CwenoZ, 5)
}

fn load_or_build_reference(
    problem: &ProblemSpec,
    cache_dir: &Path,
    allow_regen: bool,
) -> Result<CellField> {
    let path = reference_path(problem, cache_dir);
    if path.exists() {
        return load_reference(problem, &path);
    }
    if !allow_regen {
        return Err(Error::MissingReference(format!(
            "no cached reference at {} (regeneration disabled)",
            path.display()
        )));
    }
    let reference = build_reference(problem)?;
    fs::create_dir_all(cache_dir)?;
    store_reference(&reference, &path)?;
    Ok(reference)
}

/// Computes the fine-grid self-reference (deterministic, so regeneration
/// reproduces the cache bit for bit).
pub fn build_reference(problem: &ProblemSpec) -> Result<CellField> {
    let (solution, _) = solve_problem(problem, &reference_scheme(), REFERENCE_M, 0.45, None)?;
    Ok(solution)
}

fn store_reference(field: &CellField, path: &Path) -> Result<()> {
    let mut out = String::new();
    out.push_str(&format!(
        "# reference m={} components={} x_lo={:.17e} x_hi={:.17e}\n",
        field.grid().m(),
        field.components(),
        field.grid().x_lo(),
        field.grid().x_hi()
    ));
    for j in 0..field.grid().m() {
        for c in 0..field.components() {
            if c > 0 {
                out.push(',');
            }
            out.push_str(&format!("{:.17e}", field.interior(c)[j]));
        }
        out.push('\n');
    }
    fs::write(path, out)?;
    Ok(())
}

fn load_reference(problem: &ProblemSpec, path: &Path) -> Result<CellField> {
    let text = fs::read_to_string(path)?;
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::MissingReference(format!("{}: empty file", path.display())))?;
    if !header.starts_with('#') {
        return Err(Error::MissingReference(format!(
            "{}: missing header",
            path.display()
        )));
    }
    let grid = crate::mesh::Grid::new(problem.x_lo, problem.x_hi, REFERENCE_M, 0)?;
    let mut field = CellField::zeros(grid, problem.components);
    let mut count = 0usize;
    for (j, line) in lines.enumerate() {
        for (c, tok) in line.split(',').enumerate() {
            let v: f64 = tok.trim().parse().map_err(|_| {
                Error::MissingReference(format!("{}: bad value `{tok}`", path.display()))
            })?;
            field.set(c, j as isize, v);
        }
        count += 1;
    }
    if count != REFERENCE_M {
        return Err(Error::MissingReference(format!(
            "{}: {count} rows, expected {REFERENCE_M}",
            path.display()
        )));
    }
    Ok(field)
}

/// Relative deviation of the nonlinear weight of the central (CWENO-type)
/// or left-most (WENO) polynomial from its linear value, per interior cell
/// of the problem's initial data.
pub fn weight_trace(
    problem: &ProblemSpec,
    scheme: &SchemeConfig,
    m: usize,
) -> Result<Vec<(f64, f64)>> {
    if problem.components != 1 {
        return Err(Error::Config(format!(
            "weight traces are defined for scalar problems, `{}` has {} components",
            problem.name, problem.components
        )));
    }
    let recon = scheme.build()?;
    let field = problem.initial_field(m, recon.r() - 1, init_quad_order(scheme.order))?;
    let grid = *field.grid();
    let comp = field.component(0);
    let w = recon.window_len();
    let mut rows = Vec::with_capacity(m);
    for j in 0..m {
        let start = grid.raw(j as isize - (recon.r() as isize - 1));
        let rec = recon.reconstruct(&comp[start..start + w], grid.h());
        let relerr = match scheme.family {
            Family::Cweno | Family::CwenoZ => {
                let d0 = recon.linear_weights()[0];
                (rec.weights.omega[0] - d0) / d0
            }
            Family::Weno => {
                let d1 = recon.weno_edge_weights(Edge::Right).unwrap()[0];
                (rec.weights.omega[0] - d1) / d1
            }
        };
        rows.push((grid.center(j as isize), relerr));
    }
    Ok(rows)
}

/// One row of the discrete-spectrum comparison.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DftRow {
    pub k: usize,
    pub re_num: f64,
    pub im_num: f64,
    pub re_exact: f64,
    pub im_exact: f64,
}

/// Complex DFT coefficients `(1/M) sum_j u_j e^{-2 pi i j k / M}` of a real
/// sequence, for `k = 0..=M/2`.
pub fn half_spectrum(values: &[f64]) -> Vec<(f64, f64)> {
    let m = values.len();
    let mut out = Vec::with_capacity(m / 2 + 1);
    for k in 0..=m / 2 {
        let mut re = KahanSum::default();
        let mut im = KahanSum::default();
        for (j, v) in values.iter().enumerate() {
            let phase = -2.0 * std::f64::consts::PI * (j * k % m) as f64 / m as f64;
            re.add(v * phase.cos());
            im.add(v * phase.sin());
        }
        out.push((re.value() / m as f64, im.value() / m as f64));
    }
    out
}

/// Runs the problem and compares the DFT of the final numerical solution
/// against the DFT of the exact solution's cell averages.
pub fn dft_comparison(
    problem: &ProblemSpec,
    scheme: &SchemeConfig,
    m: usize,
    cfl: f64,
) -> Result<Vec<DftRow>> {
    if !problem.has_exact_solution() {
        return Err(Error::Config(format!(
            "spectrum comparison needs an exact solution; `{}` has none",
            problem.name
        )));
    }
    let (solution, _) = solve_problem(problem, scheme, m, cfl, None)?;
    let exact = exact_average_field(problem, m)?;
    let num = half_spectrum(solution.interior(0));
    let exa = half_spectrum(exact.interior(0));
    Ok(num
        .iter()
        .zip(&exa)
        .enumerate()
        .map(|(k, (n, e))| DftRow {
            k,
            re_num: n.0,
            im_num: n.1,
            re_exact: e.0,
            im_exact: e.1,
        })
        .collect())
}

/// Spectral signature of a configured reconstruction operator (or of the
/// linear reference operator when `scheme` is `None`), in the analyzer's
/// wavenumber convention.
pub fn spectra(scheme: Option<&SchemeConfig>, n_modes: usize) -> Result<SpectralSignature> {
    let op: Box<dyn DiscreteDerivative> = match scheme {
        Some(cfg) => Box::new(UpwindFv::new(cfg.build()?)),
        None => Box::new(CentralDifference),
    };
    Ok(signature_with_length(op.as_ref(), n_modes, SPECTRAL_DOMAIN))
}

/// Looks a problem up by its registry key.
pub fn problem(name: &str) -> Result<&'static ProblemSpec> {
    lookup(name)
}
