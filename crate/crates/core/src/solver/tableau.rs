//! Explicit Runge-Kutta tableaus.

use crate::error::{Error, Result};

/// Butcher tableau of an explicit Runge-Kutta method.
#[derive(Debug, Clone, PartialEq)]
pub struct RkTableau {
    stages: usize,
    /// Row-major `stages x stages`, strictly lower triangular.
    a: Vec<f64>,
    b: Vec<f64>,
    c: Vec<f64>,
    order: usize,
}

impl RkTableau {
    pub fn new(a: Vec<f64>, b: Vec<f64>, order: usize) -> Result<Self> {
        let s = b.len();
        if s == 0 || a.len() != s * s {
            return Err(Error::Config(format!(
                "tableau shape mismatch: {} stages, {} A entries",
                s,
                a.len()
            )));
        }
        for i in 0..s {
            for j in i..s {
                if a[i * s + j] != 0.0 {
                    return Err(Error::Config(format!(
                        "tableau is not explicit: a[{i}][{j}] != 0"
                    )));
                }
            }
        }
        let bsum: f64 = b.iter().sum();
        if (bsum - 1.0).abs() > 1e-14 {
            return Err(Error::Config(format!(
                "tableau weights sum to {bsum}, expected 1"
            )));
        }
        let c: Vec<f64> = (0..s).map(|i| a[i * s..i * s + s].iter().sum()).collect();
        Ok(Self {
            stages: s,
            a,
            b,
            c,
            order,
        })
    }

    pub fn stages(&self) -> usize {
        self.stages
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn a(&self, i: usize, j: usize) -> f64 {
        self.a[i * self.stages + j]
    }

    pub fn b(&self) -> &[f64] {
        &self.b
    }

    pub fn c(&self) -> &[f64] {
        &self.c
    }

    /// Third order strong-stability-preserving method with three stages.
    pub fn ssp_rk3() -> Self {
        Self::new(
            vec![
                0.0, 0.0, 0.0, //
                1.0, 0.0, 0.0, //
                0.25, 0.25, 0.0,
            ],
            vec![1.0 / 6.0, 1.0 / 6.0, 2.0 / 3.0],
            3,
        )
        .expect("valid built-in tableau")
    }

    /// Classical fifth order method with six stages.
    pub fn rk5() -> Self {
        Self::new(
            vec![
                0.0, 0.0, 0.0, 0.0, 0.0, 0.0, //
                0.25, 0.0, 0.0, 0.0, 0.0, 0.0, //
                0.125, 0.125, 0.0, 0.0, 0.0, 0.0, //
                0.0, 0.0, 0.5, 0.0, 0.0, 0.0, //
                3.0 / 16.0, -3.0 / 8.0, 3.0 / 8.0, 9.0 / 16.0, 0.0, 0.0, //
                -3.0 / 7.0, 8.0 / 7.0, 6.0 / 7.0, -12.0 / 7.0, 8.0 / 7.0, 0.0,
            ],
            vec![
                7.0 / 90.0,
                0.0,
                32.0 / 90.0,
                12.0 / 90.0,
                32.0 / 90.0,
                7.0 / 90.0,
            ],
            5,
        )
        .expect("valid built-in tableau")
    }

    /// Default integrator whose order matches the spatial order, where one
    /// is shipped (orders 3 and 5).
    pub fn for_order(order: usize) -> Option<Self> {
        match order {
            3 => Some(Self::ssp_rk3()),
            5 => Some(Self::rk5()),
            _ => None,
        }
    }

    /// Parses a tableau from plain text, so higher-order methods can be
    /// supplied externally. Format (`#` starts a comment):
    ///
    /// ```text
    /// stages 3 order 3
    /// 0 0 0
    /// 1 0 0
    /// 0.25 0.25 0
    /// 0.16666666666666666 0.16666666666666666 0.6666666666666666
    /// ```
    ///
    /// The `stages` lines are the rows of `A`, the final line is `b`.
    pub fn from_text(src: &str) -> Result<Self> {
        let mut lines = src
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::Config("empty tableau file".into()))?;
        let tokens: Vec<&str> = header.split_whitespace().collect();
        let (stages, order) = match tokens.as_slice() {
            ["stages", s, "order", p] => (
                s.parse::<usize>()
                    .map_err(|_| Error::Config(format!("bad stage count `{s}`")))?,
                p.parse::<usize>()
                    .map_err(|_| Error::Config(format!("bad order `{p}`")))?,
            ),
            _ => {
                return Err(Error::Config(
                    "tableau header must read `stages <s> order <p>`".into(),
                ))
            }
        };
        let mut parse_row = |what: &str| -> Result<Vec<f64>> {
            let line = lines
                .next()
                .ok_or_else(|| Error::Config(format!("missing {what} row")))?;
            let row: std::result::Result<Vec<f64>, _> =
                line.split_whitespace().map(str::parse::<f64>).collect();
            let row = row.map_err(|_| Error::Config(format!("bad number in {what} row")))?;
            if row.len() != stages {
                return Err(Error::Config(format!(
                    "{what} row has {} entries, expected {stages}",
                    row.len()
                )));
            }
            Ok(row)
        };
        let mut a = Vec::with_capacity(stages * stages);
        for i in 0..stages {
            a.extend(parse_row(&format!("A[{i}]"))?);
        }
        let b = parse_row("b")?;
        Self::new(a, b, order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn one_step_linear(tab: &RkTableau, lambda: f64, dt: f64) -> f64 {
        // One RK step for u' = lambda u, u(0) = 1.
        let s = tab.stages();
        let mut k = vec![0.0; s];
        for i in 0..s {
            let mut u = 1.0;
            for j in 0..i {
                u += dt * tab.a(i, j) * k[j];
            }
            k[i] = lambda * u;
        }
        1.0 + dt * tab.b().iter().zip(&k).map(|(b, k)| b * k).sum::<f64>()
    }

    #[test]
    fn tableau_invariants() {
        for tab in [RkTableau::ssp_rk3(), RkTableau::rk5()] {
            assert!((tab.b().iter().sum::<f64>() - 1.0).abs() <= 1e-14);
            for i in 0..tab.stages() {
                let row: f64 = (0..tab.stages()).map(|j| tab.a(i, j)).sum();
                assert_relative_eq!(tab.c()[i], row, epsilon = 1e-14);
            }
        }
    }

    #[test]
    fn ssp_rk3_has_third_order_step_error() {
        // One step of u' = -u matches exp(-dt) to O(dt^4).
        for dt in [0.1, 0.05, 0.025] {
            let got = one_step_linear(&RkTableau::ssp_rk3(), -1.0, dt);
            let err = (got - (-dt).exp()).abs();
            assert!(err < 0.05 * dt.powi(4), "dt={dt}: err {err}");
            assert!(err > 1e-3 * dt.powi(4), "dt={dt}: suspiciously small");
        }
    }

    #[test]
    fn rk5_has_fifth_order_step_error() {
        for dt in [0.2, 0.1, 0.05] {
            let got = one_step_linear(&RkTableau::rk5(), -1.0, dt);
            let err = (got - (-dt).exp()).abs();
            assert!(err < 0.01 * dt.powi(6), "dt={dt}: err {err}");
        }
    }

    #[test]
    fn text_round_trip() {
        let src = "# third order, three stages\n\
                   stages 3 order 3\n\
                   0 0 0\n\
                   1 0 0\n\
                   0.25 0.25 0\n\
                   0.16666666666666666 0.16666666666666666 0.6666666666666666\n";
        let tab = RkTableau::from_text(src).unwrap();
        assert_eq!(tab.stages(), 3);
        assert_eq!(tab.order(), 3);
        assert_relative_eq!(tab.c()[1], 1.0);
        // Behaves like the built-in SSP-RK3.
        let a = one_step_linear(&tab, -2.0, 0.03);
        let b = one_step_linear(&RkTableau::ssp_rk3(), -2.0, 0.03);
        assert_relative_eq!(a, b, epsilon = 1e-15);
    }

    #[test]
    fn loader_rejects_malformed_input() {
        assert!(RkTableau::from_text("").is_err());
        assert!(RkTableau::from_text("stages 2 order 2\n0 0\n1 0\n0.4 0.4\n").is_err());
        assert!(RkTableau::from_text("stages 2 order 2\n0 1\n1 0\n0.5 0.5\n").is_err());
        assert!(RkTableau::from_text("stages 2 order 2\n0 0\n1 0\n").is_err());
    }
}
