//! Essentially non-oscillatory reconstructions from cell averages.
//!
//! For a substencil width `r > 1` the reconstruction in a cell uses the
//! `2r-1` cell window centered on it. The `r` substencil polynomials `P_k`
//! of degree `r-1` match the averages on `S_k = {-r+k, ..., k-1}`; the
//! optimal polynomial `P_opt` of degree `2r-2` matches all of them.
//!
//! * `WENO` blends the `P_k` pointwise at the two cell edges with
//!   edge-dependent linear weights.
//! * `CWENO` adds the central polynomial
//!   `P_0 = (P_opt - sum_k d_k P_k) / d_0` and returns a single polynomial
//!   valid uniformly inside the cell.
//! * `CWENOZ` keeps the CWENO construction but computes the nonlinear
//!   weights from the global indicator `tau`, which drives them towards the
//!   linear weights much faster on smooth data.

pub mod coeffs;
pub mod indicator;
pub mod poly;
pub mod tau;

use arrayvec::ArrayVec;

use crate::error::{Error, Result};
pub use indicator::{jiang_shu_indicator, IndicatorPath, SmoothnessMatrix};
pub use poly::LocalPoly;
pub use tau::{tau_coefficients, tau_truncation_order, TauVariant};

/// Widest supported substencil (order 11); the tau table caps CWENOZ at 6.
pub const MAX_R: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Weno,
    Cweno,
    CwenoZ,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Weno => "weno",
            Family::Cweno => "cweno",
            Family::CwenoZ => "cwenoz",
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "weno" => Ok(Family::Weno),
            "cweno" => Ok(Family::Cweno),
            "cwenoz" => Ok(Family::CwenoZ),
            other => Err(Error::Config(format!("unknown scheme family `{other}`"))),
        }
    }
}

/// The regularization parameter as a function of the mesh width:
/// `eps(h) = c * h^p`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EpsRule {
    pub c: f64,
    pub p: f64,
}

impl EpsRule {
    pub fn new(c: f64, p: f64) -> Self {
        Self { c, p }
    }

    pub fn eval(&self, h: f64) -> f64 {
        self.c * h.powf(self.p)
    }

    /// Parses `c*h^p` (the `c*` part may be omitted).
    pub fn parse(s: &str) -> Result<Self> {
        let err = || Error::Config(format!("cannot parse eps rule `{s}`, expected c*h^p"));
        let (c, rest) = match s.split_once('*') {
            Some((c, rest)) => (c.trim().parse::<f64>().map_err(|_| err())?, rest.trim()),
            None => (1.0, s.trim()),
        };
        let p = rest.strip_prefix("h^").ok_or_else(err)?.parse::<f64>().map_err(|_| err())?;
        if !(c > 0.0) || !p.is_finite() {
            return Err(err());
        }
        Ok(Self { c, p })
    }
}

impl Default for EpsRule {
    fn default() -> Self {
        Self { c: 1.0, p: 2.0 }
    }
}

impl std::fmt::Display for EpsRule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}*h^{}", self.c, self.p)
    }
}

/// Tunable parameters shared by all families.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReconParams {
    /// Central linear weight for CWENO/CWENOZ; the remaining `1 - d0` is
    /// split equally over the substencil weights.
    pub d0: f64,
    pub eps: EpsRule,
    /// Exponent in the nonlinear weight formulas.
    pub t: f64,
    pub tau_variant: TauVariant,
}

impl Default for ReconParams {
    fn default() -> Self {
        Self {
            d0: 0.5,
            eps: EpsRule::default(),
            t: 2.0,
            tau_variant: TauVariant::Optimal,
        }
    }
}

/// Which cell edge a pointwise (WENO) reconstruction targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Edge {
    Left,
    Right,
}

impl Edge {
    fn xi(&self) -> f64 {
        match self {
            Edge::Left => -0.5,
            Edge::Right => 0.5,
        }
    }
}

/// Nonlinear weights and the ingredients they were computed from.
///
/// For CWENO/CWENOZ `omega[0]` belongs to the central polynomial `P_0` and
/// `indicators[0]` is `I[P_0]`; for WENO both arrays cover `P_1..P_r` (the
/// set used at the requested edge).
#[derive(Debug, Clone, PartialEq)]
pub struct WeightSet {
    pub omega: ArrayVec<f64, 7>,
    pub indicators: ArrayVec<f64, 7>,
    pub tau: Option<f64>,
}

/// Result of reconstructing one cell.
#[derive(Debug, Clone)]
pub struct Reconstruction {
    /// Value at the left cell edge.
    pub left: f64,
    /// Value at the right cell edge.
    pub right: f64,
    /// The uniformly accurate polynomial (CWENO/CWENOZ only).
    pub poly: Option<LocalPoly>,
    /// For WENO this is the right-edge weight set.
    pub weights: WeightSet,
}

/// The substencil, optimal and central polynomials of one window.
#[derive(Debug, Clone)]
pub struct Polynomials {
    pub sub: ArrayVec<LocalPoly, MAX_R>,
    pub opt: LocalPoly,
    /// Present for CWENO/CWENOZ.
    pub central: Option<LocalPoly>,
}

/// A fully configured reconstruction operator.
#[derive(Debug, Clone)]
pub struct ReconScheme {
    family: Family,
    r: usize,
    params: ReconParams,
    /// `d_0..d_r` for CWENO/CWENOZ, empty for WENO.
    d: Vec<f64>,
    /// Per-edge linear weights for WENO: (left, right).
    weno_d: Option<(Vec<f64>, Vec<f64>)>,
    sub_matrices: Vec<Vec<f64>>,
    opt_matrix: Vec<f64>,
    c_small: SmoothnessMatrix,
    c_big: SmoothnessMatrix,
}

impl ReconScheme {
    pub fn new(family: Family, order: usize, params: ReconParams) -> Result<Self> {
        if order < 3 || order % 2 == 0 {
            return Err(Error::UnsupportedOrder(format!(
                "reconstruction order must be odd and >= 3, got {order}"
            )));
        }
        let r = (order + 1) / 2;
        if r > MAX_R {
            return Err(Error::UnsupportedOrder(format!(
                "order {order} exceeds the widest supported stencil (r = {MAX_R})"
            )));
        }
        if !(params.d0 > 0.0 && params.d0 < 1.0) {
            return Err(Error::Config(format!(
                "central weight d0 = {} must lie in (0, 1)",
                params.d0
            )));
        }
        if !(params.t >= 1.0) {
            return Err(Error::Config(format!("exponent t = {} must be >= 1", params.t)));
        }
        if !(params.eps.c > 0.0) {
            return Err(Error::Config("eps rule must be positive".into()));
        }
        if family == Family::CwenoZ {
            // Validates the (r, variant) pair against the tau table.
            tau_coefficients(r, params.tau_variant)?;
        }

        let d = match family {
            Family::Weno => Vec::new(),
            _ => {
                let side = (1.0 - params.d0) / r as f64;
                let mut d = vec![side; r + 1];
                d[0] = params.d0;
                d
            }
        };
        let weno_d = match family {
            Family::Weno => Some((
                coeffs::weno_linear_weights(r, false)?,
                coeffs::weno_linear_weights(r, true)?,
            )),
            _ => None,
        };
        let sub_matrices = (1..=r)
            .map(|k| coeffs::coeff_matrix(&coeffs::substencil_cells(r, k)))
            .collect();
        let opt_matrix = coeffs::coeff_matrix(&coeffs::full_stencil_cells(r));
        Ok(Self {
            family,
            r,
            params,
            d,
            weno_d,
            sub_matrices,
            opt_matrix,
            c_small: SmoothnessMatrix::new(r - 1),
            c_big: SmoothnessMatrix::new(2 * r - 2),
        })
    }

    pub fn with_defaults(family: Family, order: usize) -> Result<Self> {
        Self::new(family, order, ReconParams::default())
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Substencil width.
    pub fn r(&self) -> usize {
        self.r
    }

    /// Nominal accuracy `2r - 1`.
    pub fn order(&self) -> usize {
        2 * self.r - 1
    }

    /// Window length `2r - 1`.
    pub fn window_len(&self) -> usize {
        2 * self.r - 1
    }

    pub fn params(&self) -> &ReconParams {
        &self.params
    }

    /// Linear weights `d_0..d_r` (CWENO/CWENOZ).
    pub fn linear_weights(&self) -> &[f64] {
        &self.d
    }

    /// Edge linear weights `d_1..d_r` (WENO).
    pub fn weno_edge_weights(&self, edge: Edge) -> Option<&[f64]> {
        self.weno_d.as_ref().map(|(l, r)| match edge {
            Edge::Left => l.as_slice(),
            Edge::Right => r.as_slice(),
        })
    }

    pub fn epsilon(&self, h: f64) -> f64 {
        self.params.eps.eval(h)
    }

    /// Substencil, optimal and (for CWENO-type) central polynomials of one
    /// window of `2r - 1` averages.
    pub fn polynomials(&self, window: &[f64]) -> Polynomials {
        assert_eq!(window.len(), self.window_len());
        let r = self.r;
        let mut sub: ArrayVec<LocalPoly, MAX_R> = ArrayVec::new();
        for k in 1..=r {
            sub.push(poly_from_matrix(
                &self.sub_matrices[k - 1],
                &window[k - 1..k - 1 + r],
            ));
        }
        let opt = poly_from_matrix(&self.opt_matrix, window);
        let central = if self.family == Family::Weno {
            None
        } else {
            let mut p0 = opt;
            for (k, pk) in sub.iter().enumerate() {
                p0.axpy(-self.d[k + 1], pk);
            }
            p0.scale(1.0 / self.d[0]);
            Some(p0)
        };
        Polynomials { sub, opt, central }
    }

    /// Nonlinear weights from precomputed indicators.
    ///
    /// CWENO/CWENOZ expect `indicators = [I_0, I_1, ..., I_r]`; WENO expects
    /// `[I_1, ..., I_r]` plus the target `edge`.
    pub fn nonlinear_weights(
        &self,
        indicators: &[f64],
        h: f64,
        edge: Option<Edge>,
    ) -> Result<WeightSet> {
        self.nonlinear_weights_with_eps(indicators, self.epsilon(h), edge)
    }

    /// Same as [`ReconScheme::nonlinear_weights`] with an explicit epsilon.
    pub fn nonlinear_weights_with_eps(
        &self,
        indicators: &[f64],
        eps: f64,
        edge: Option<Edge>,
    ) -> Result<WeightSet> {
        let t = self.params.t;
        let mut omega: ArrayVec<f64, 7> = ArrayVec::new();
        let mut stored: ArrayVec<f64, 7> = ArrayVec::new();
        for i in indicators {
            stored.push(*i);
        }
        let tau_value = match self.family {
            Family::Weno => {
                if indicators.len() != self.r {
                    return Err(Error::Config(format!(
                        "weno expects {} indicators, got {}",
                        self.r,
                        indicators.len()
                    )));
                }
                let edge = edge.ok_or_else(|| {
                    Error::Config("weno weights need a reconstruction edge".into())
                })?;
                let d = self.weno_edge_weights(edge).unwrap();
                for (dk, ik) in d.iter().zip(indicators) {
                    omega.push(dk / pow_t(ik + eps, t));
                }
                None
            }
            Family::Cweno => {
                self.check_central_indicators(indicators)?;
                for (dk, ik) in self.d.iter().zip(indicators) {
                    omega.push(dk / pow_t(ik + eps, t));
                }
                None
            }
            Family::CwenoZ => {
                self.check_central_indicators(indicators)?;
                let tau_value = tau::tau(&indicators[1..], self.params.tau_variant)?;
                for (dk, ik) in self.d.iter().zip(indicators) {
                    omega.push(dk * (1.0 + pow_t(tau_value / (ik + eps), t)));
                }
                Some(tau_value)
            }
        };
        let total: f64 = omega.iter().sum();
        for w in omega.iter_mut() {
            *w /= total;
        }
        Ok(WeightSet {
            omega,
            indicators: stored,
            tau: tau_value,
        })
    }

    fn check_central_indicators(&self, indicators: &[f64]) -> Result<()> {
        if indicators.len() != self.r + 1 {
            return Err(Error::Config(format!(
                "{} expects {} indicators (central first), got {}",
                self.family.name(),
                self.r + 1,
                indicators.len()
            )));
        }
        Ok(())
    }

    /// Reconstructs one cell from its window of `2r - 1` averages on a mesh
    /// of width `h`.
    pub fn reconstruct(&self, window: &[f64], h: f64) -> Reconstruction {
        self.reconstruct_with_eps(window, self.epsilon(h))
    }

    /// [`ReconScheme::reconstruct`] with an explicit epsilon.
    pub fn reconstruct_with_eps(&self, window: &[f64], eps: f64) -> Reconstruction {
        let polys = self.polynomials(window);
        match self.family {
            Family::Weno => {
                let mut indicators: ArrayVec<f64, 7> = ArrayVec::new();
                for pk in &polys.sub {
                    indicators.push(self.c_small.quadratic_form(pk));
                }
                let edge_value = |edge: Edge| -> (f64, WeightSet) {
                    let ws = self
                        .nonlinear_weights_with_eps(&indicators, eps, Some(edge))
                        .expect("indicator count matches by construction");
                    let xi = edge.xi();
                    let v = ws
                        .omega
                        .iter()
                        .zip(&polys.sub)
                        .map(|(w, p)| w * p.eval(xi))
                        .sum();
                    (v, ws)
                };
                let (left, _) = edge_value(Edge::Left);
                let (right, weights) = edge_value(Edge::Right);
                Reconstruction {
                    left,
                    right,
                    poly: None,
                    weights,
                }
            }
            Family::Cweno | Family::CwenoZ => {
                let central = polys.central.as_ref().unwrap();
                let mut indicators: ArrayVec<f64, 7> = ArrayVec::new();
                indicators.push(self.c_big.quadratic_form(central));
                for pk in &polys.sub {
                    indicators.push(self.c_small.quadratic_form(pk));
                }
                let weights = self
                    .nonlinear_weights_with_eps(&indicators, eps, None)
                    .expect("indicator count matches by construction");
                let mut prec = LocalPoly::zero(2 * self.r - 2);
                prec.axpy(weights.omega[0], central);
                for (w, pk) in weights.omega[1..].iter().zip(&polys.sub) {
                    prec.axpy(*w, pk);
                }
                Reconstruction {
                    left: prec.eval(-0.5),
                    right: prec.eval(0.5),
                    poly: Some(prec),
                    weights,
                }
            }
        }
    }
}

#[inline]
fn pow_t(x: f64, t: f64) -> f64 {
    if t == 2.0 {
        x * x
    } else if t == 1.0 {
        x
    } else {
        x.powf(t)
    }
}

/// Polynomial of degree `r - 1` matching the `r` averages of substencil
/// `S_k` (`averages[0]` belongs to cell `-r+k`).
pub fn substencil_poly(averages: &[f64], k: usize, r: usize) -> LocalPoly {
    assert_eq!(averages.len(), r);
    let matrix = coeffs::coeff_matrix(&coeffs::substencil_cells(r, k));
    poly_from_matrix(&matrix, averages)
}

/// Polynomial of degree `2r - 2` matching all `2r - 1` averages of the full
/// stencil.
pub fn optimal_poly(averages: &[f64], r: usize) -> LocalPoly {
    assert_eq!(averages.len(), 2 * r - 1);
    let matrix = coeffs::coeff_matrix(&coeffs::full_stencil_cells(r));
    poly_from_matrix(&matrix, averages)
}

/// Optimal pointwise linear weights of WENO at a cell edge.
pub fn weno_optimal_weights(r: usize, edge: Edge) -> Result<Vec<f64>> {
    coeffs::weno_linear_weights(r, edge == Edge::Right)
}

fn poly_from_matrix(matrix: &[f64], data: &[f64]) -> LocalPoly {
    let n = data.len();
    let mut buf = [0.0; poly::MAX_COEFFS];
    for l in 0..n {
        let row = &matrix[l * n..(l + 1) * n];
        buf[l] = row.iter().zip(data).map(|(m, d)| m * d).sum();
    }
    LocalPoly::new(&buf[..n])
}
