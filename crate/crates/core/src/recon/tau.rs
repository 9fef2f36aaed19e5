//! Global smoothness indicators for the Z-type weights.
//!
//! `tau` is a signed linear combination of the substencil indicators
//! `I_1..I_r`, taken in absolute value. Two variants exist: the `standard`
//! one depending only on the parity of `r`, and the `optimal` one tailored
//! per `r` to maximise the leading truncation order.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TauVariant {
    Standard,
    Optimal,
}

impl TauVariant {
    pub fn name(&self) -> &'static str {
        match self {
            TauVariant::Standard => "standard",
            TauVariant::Optimal => "optimal",
        }
    }
}

impl std::str::FromStr for TauVariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "standard" => Ok(TauVariant::Standard),
            "optimal" => Ok(TauVariant::Optimal),
            other => Err(Error::Config(format!("unknown tau variant `{other}`"))),
        }
    }
}

/// Combination coefficients applied to `(I_1, ..., I_r)`.
pub fn tau_coefficients(r: usize, variant: TauVariant) -> Result<&'static [f64]> {
    use TauVariant::*;
    let c: &'static [f64] = match (variant, r) {
        (Standard, 3) => &[1.0, 0.0, -1.0],
        (Standard, 4) => &[1.0, -1.0, -1.0, 1.0],
        (Standard, 5) => &[1.0, 0.0, 0.0, 0.0, -1.0],
        (Standard, 6) => &[1.0, -1.0, 0.0, 0.0, -1.0, 1.0],
        (Optimal, 2) => &[1.0, -1.0],
        (Optimal, 3) => &[1.0, 0.0, -1.0],
        (Optimal, 4) => &[1.0, 3.0, -3.0, -1.0],
        (Optimal, 5) => &[1.0, 2.0, -6.0, 2.0, 1.0],
        (Optimal, 6) => &[1.0, 1.0, -8.0, 8.0, -1.0, -1.0],
        (Standard, 2) => {
            return Err(Error::UnsupportedOrder(
                "no standard tau exists for r = 2; use the optimal variant".into(),
            ))
        }
        (v, r) => {
            return Err(Error::UnsupportedOrder(format!(
                "{} tau is tabulated only for r in 2..=6, got r = {r}",
                v.name()
            )))
        }
    };
    Ok(c)
}

/// Leading truncation order `theta(tau)` on smooth data.
pub fn tau_truncation_order(r: usize, variant: TauVariant) -> Result<u32> {
    use TauVariant::*;
    Ok(match (variant, r) {
        (Standard, 3) => 5,
        (Standard, 4) => 6,
        (Standard, 5) => 7,
        (Standard, 6) => 8,
        (Optimal, 2) => 3,
        (Optimal, 3) => 5,
        (Optimal, 4) => 7,
        (Optimal, 5) => 8,
        (Optimal, 6) => 9,
        _ => {
            tau_coefficients(r, variant)?;
            unreachable!()
        }
    })
}

/// `tau` from the substencil indicators `I_1..I_r`; the absolute value is
/// taken after forming the signed combination.
pub fn tau(indicators: &[f64], variant: TauVariant) -> Result<f64> {
    let c = tau_coefficients(indicators.len(), variant)?;
    let signed: f64 = c.iter().zip(indicators).map(|(c, i)| c * i).sum();
    Ok(signed.abs())
}
