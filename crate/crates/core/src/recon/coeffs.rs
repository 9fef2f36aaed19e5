//! Exact precomputation of reconstruction coefficients.
//!
//! The linear systems tying polynomial coefficients to cell averages are
//! Vandermonde-like and become noticeably ill-conditioned for the widest
//! stencils, so all matrices here are assembled and inverted in exact
//! rational arithmetic and only then rounded to `f64`. The cost is paid once
//! per scheme construction.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rational(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

#[cfg(test)]
fn int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

fn factorial(n: usize) -> BigInt {
    (1..=n as u64).map(BigInt::from).product::<BigInt>().max(BigInt::one())
}

/// Cells of substencil `S_k = {-r+k, ..., k-1}` for `k = 1..=r`.
pub fn substencil_cells(r: usize, k: usize) -> Vec<i64> {
    assert!(k >= 1 && k <= r);
    let lo = -(r as i64) + k as i64;
    (lo..lo + r as i64).collect()
}

/// Cells of the full stencil `{-r+1, ..., r-1}`.
pub fn full_stencil_cells(r: usize) -> Vec<i64> {
    let lo = 1 - r as i64;
    (lo..r as i64).collect()
}

/// Average of `xi^l` over stencil cell `j`:
/// `((2j+1)^{l+1} - (2j-1)^{l+1}) / (2^{l+1} (l+1))`.
fn basis_cell_average(j: i64, l: usize) -> Rational {
    let hi = BigInt::from(2 * j + 1).pow(l as u32 + 1);
    let lo = BigInt::from(2 * j - 1).pow(l as u32 + 1);
    let den = BigInt::from(2).pow(l as u32 + 1) * BigInt::from(l as i64 + 1);
    BigRational::new(hi - lo, den)
}

/// Gauss-Jordan inverse of a square rational matrix. The average-matching
/// matrices are provably invertible, so a singular input is a logic error.
fn invert(mut a: Vec<Vec<Rational>>) -> Vec<Vec<Rational>> {
    let n = a.len();
    let mut inv: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot_row = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("average-matching matrix must be invertible");
        a.swap(col, pivot_row);
        inv.swap(col, pivot_row);
        let pivot = a[col][col].clone();
        for v in a[col].iter_mut() {
            *v /= pivot.clone();
        }
        for v in inv[col].iter_mut() {
            *v /= pivot.clone();
        }
        for row in 0..n {
            if row == col || a[row][col].is_zero() {
                continue;
            }
            let factor = a[row][col].clone();
            for j in 0..n {
                let t = factor.clone() * a[col][j].clone();
                a[row][j] -= t;
                let t = factor.clone() * inv[col][j].clone();
                inv[row][j] -= t;
            }
        }
    }
    inv
}

fn to_f64(x: &Rational) -> f64 {
    x.to_f64().expect("rational representable as f64")
}

/// Exact matrix mapping cell averages on `cells` to the coefficients of the
/// polynomial whose average over each listed cell matches the data.
fn coeff_matrix_exact(cells: &[i64]) -> Vec<Vec<Rational>> {
    let n = cells.len();
    let a: Vec<Vec<Rational>> = cells
        .iter()
        .map(|&j| (0..n).map(|l| basis_cell_average(j, l)).collect())
        .collect();
    invert(a)
}

/// Row-major `n x n` matrix `M` with `coeffs = M * averages`.
pub fn coeff_matrix(cells: &[i64]) -> Vec<f64> {
    coeff_matrix_exact(cells)
        .iter()
        .flat_map(|row| row.iter().map(to_f64))
        .collect()
}

/// Optimal linear WENO weights `d_1..d_r` at a cell edge (`xi = +-1/2`),
/// computed so that `sum_k d_k P_k(xi) = P_opt(xi)` holds for all data.
///
/// Returns exact rationals; fails with [`Error::NoPositiveWeights`] if any
/// weight leaves `(0, 1)`, which signals a reconstruction point this library
/// does not support.
pub fn weno_linear_weights_exact(r: usize, xi: Rational) -> Result<Vec<Rational>> {
    assert!(r >= 2);
    let n = 2 * r - 1;
    let full = full_stencil_cells(r);
    let inv_opt = coeff_matrix_exact(&full);
    let xi_pows: Vec<Rational> = (0..n).scan(Rational::one(), |p, _| {
        let c = p.clone();
        *p *= xi.clone();
        Some(c)
    })
    .collect();

    // Value of the polynomial through `cells` at xi, for delta data on the
    // full-stencil position `i_full`.
    let delta_value = |inv: &Vec<Vec<Rational>>, cells: &[i64], i_full: usize| -> Rational {
        let cj = full[i_full];
        match cells.iter().position(|&c| c == cj) {
            None => Rational::zero(),
            Some(pos) => (0..cells.len())
                .map(|l| inv[l][pos].clone() * xi_pows[l].clone())
                .sum(),
        }
    };

    let subinvs: Vec<(Vec<i64>, Vec<Vec<Rational>>)> = (1..=r)
        .map(|k| {
            let cells = substencil_cells(r, k);
            let inv = coeff_matrix_exact(&cells);
            (cells, inv)
        })
        .collect();

    // One equation per full-stencil cell; r unknowns. The system is
    // consistent at cell edges, which we verify exactly below.
    let mut rows: Vec<(Vec<Rational>, Rational)> = Vec::with_capacity(n);
    for i_full in 0..n {
        let lhs: Vec<Rational> = subinvs
            .iter()
            .map(|(cells, inv)| delta_value(inv, cells, i_full))
            .collect();
        let rhs: Rational = (0..n)
            .map(|l| inv_opt[l][i_full].clone() * xi_pows[l].clone())
            .sum();
        rows.push((lhs, rhs));
    }
    let d = solve_consistent(rows, r).ok_or(Error::NoPositiveWeights {
        xi: to_f64(&xi),
    })?;
    for w in &d {
        if !w.is_positive() || *w >= Rational::one() {
            return Err(Error::NoPositiveWeights { xi: to_f64(&xi) });
        }
    }
    Ok(d)
}

pub fn weno_linear_weights(r: usize, right_edge: bool) -> Result<Vec<f64>> {
    let xi = if right_edge {
        rational(1, 2)
    } else {
        rational(-1, 2)
    };
    Ok(weno_linear_weights_exact(r, xi)?
        .iter()
        .map(to_f64)
        .collect())
}

/// Solves an overdetermined but consistent rational system; `None` when the
/// rows are inconsistent or rank-deficient.
fn solve_consistent(
    mut rows: Vec<(Vec<Rational>, Rational)>,
    unknowns: usize,
) -> Option<Vec<Rational>> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..unknowns {
        let pr = (row..rows.len()).find(|&r| !rows[r].0[col].is_zero())?;
        rows.swap(row, pr);
        let pivot = rows[row].0[col].clone();
        for v in rows[row].0.iter_mut() {
            *v /= pivot.clone();
        }
        rows[row].1 /= pivot.clone();
        for r in 0..rows.len() {
            if r == row || rows[r].0[col].is_zero() {
                continue;
            }
            let f = rows[r].0[col].clone();
            for c in 0..unknowns {
                let t = f.clone() * rows[row].0[c].clone();
                rows[r].0[c] -= t;
            }
            let t = f * rows[row].1.clone();
            rows[r].1 -= t;
        }
        pivots.push((row, col));
        row += 1;
    }
    // Remaining rows must have collapsed to 0 = 0.
    for r in row..rows.len() {
        if rows[r].0.iter().any(|v| !v.is_zero()) || !rows[r].1.is_zero() {
            return None;
        }
    }
    let mut solution = vec![Rational::zero(); unknowns];
    for (r, c) in pivots {
        solution[c] = rows[r].1.clone();
    }
    Some(solution)
}

/// Exact entries of the `q x q` smoothness bilinear-form matrix:
/// `C_{ij} = sum_{m=1}^{min(i,j)} 2^{2m-i-j} / ((i-m)! (j-m)! (i+j-2m+1))`
/// when `i + j` is even, zero otherwise (`i, j` are 1-based).
pub fn smoothness_entries(q: usize) -> Vec<Vec<Rational>> {
    let mut c = vec![vec![Rational::zero(); q]; q];
    for i in 1..=q {
        for j in i..=q {
            if (i + j) % 2 != 0 {
                continue;
            }
            let mut acc = Rational::zero();
            for m in 1..=i.min(j) {
                let e = 2 * m as i64 - i as i64 - j as i64;
                let two_pow = if e >= 0 {
                    BigRational::from_integer(BigInt::from(2).pow(e as u32))
                } else {
                    BigRational::new(BigInt::one(), BigInt::from(2).pow((-e) as u32))
                };
                let den = factorial(i - m) * factorial(j - m) * BigInt::from((i + j - 2 * m + 1) as i64);
                acc += two_pow / BigRational::from_integer(den);
            }
            c[i - 1][j - 1] = acc.clone();
            c[j - 1][i - 1] = acc;
        }
    }
    c
}

pub fn smoothness_entries_f64(q: usize) -> Vec<f64> {
    smoothness_entries(q)
        .iter()
        .flat_map(|row| row.iter().map(to_f64))
        .collect()
}
