//! Reference computations used to cross-check the closed forms.
//!
//! Nothing here calls into the geometric modules: the oracles work on plain
//! `f64` arrays so a bug in an implementation cannot leak into its check.

use crate::error::{Error, Result};

/// Tuning knobs for the oracles.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleConfig {
    pub series_terms: usize,
    pub quad_tol: f64,
    pub fd_step: f64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            series_terms: 40,
            quad_tol: 1e-9,
            fd_step: 1e-5,
        }
    }
}

pub type Matrix<const N: usize> = [[f64; N]; N];

pub fn identity<const N: usize>() -> Matrix<N> {
    let mut m = [[0.0; N]; N];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    m
}

pub fn matmul<const N: usize>(a: &Matrix<N>, b: &Matrix<N>) -> Matrix<N> {
    let mut c = [[0.0; N]; N];
    for i in 0..N {
        for k in 0..N {
            let aik = a[i][k];
            if aik == 0.0 {
                continue;
            }
            for j in 0..N {
                c[i][j] += aik * b[k][j];
            }
        }
    }
    c
}

/// Largest absolute entry of `a - b`.
pub fn max_abs_diff<const N: usize>(a: &Matrix<N>, b: &Matrix<N>) -> f64 {
    let mut d: f64 = 0.0;
    for i in 0..N {
        for j in 0..N {
            d = d.max((a[i][j] - b[i][j]).abs());
        }
    }
    d
}

fn inf_norm<const N: usize>(m: &Matrix<N>) -> f64 {
    m.iter()
        .map(|row| row.iter().map(|x| x.abs()).sum::<f64>())
        .fold(0.0, f64::max)
}

/// Matrix exponential by scaling and squaring with a truncated Taylor series.
pub fn expm<const N: usize>(m: &Matrix<N>) -> Matrix<N> {
    expm_with(&OracleConfig::default(), m)
}

pub fn expm_with<const N: usize>(cfg: &OracleConfig, m: &Matrix<N>) -> Matrix<N> {
    let norm = inf_norm(m);
    let mut squarings = 0u32;
    let mut scale = 1.0;
    while norm * scale > 0.5 {
        scale *= 0.5;
        squarings += 1;
    }
    let mut a = *m;
    for row in a.iter_mut() {
        for x in row.iter_mut() {
            *x *= scale;
        }
    }
    let mut sum = identity::<N>();
    let mut term = identity::<N>();
    for k in 1..=cfg.series_terms {
        term = matmul(&term, &a);
        let inv = 1.0 / k as f64;
        for row in term.iter_mut() {
            for x in row.iter_mut() {
                *x *= inv;
            }
        }
        for i in 0..N {
            for j in 0..N {
                sum[i][j] += term[i][j];
            }
        }
    }
    for _ in 0..squarings {
        sum = matmul(&sum, &sum);
    }
    sum
}

const MAX_DEPTH: u32 = 40;

/// Adaptive Simpson quadrature of `f` over `[a, b]`.
pub fn quad_adaptive<F: Fn(f64) -> f64>(f: F, a: f64, b: f64) -> Result<f64> {
    quad_adaptive_with(&OracleConfig::default(), f, a, b)
}

pub fn quad_adaptive_with<F: Fn(f64) -> f64>(
    cfg: &OracleConfig,
    f: F,
    a: f64,
    b: f64,
) -> Result<f64> {
    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    simpson_step(&f, a, b, fa, fm, fb, whole, cfg.quad_tol, MAX_DEPTH)
}

#[allow(clippy::too_many_arguments)]
fn simpson_step<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> Result<f64> {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if !delta.is_finite() {
        return Err(Error::NonConvergence { depth: MAX_DEPTH });
    }
    if delta.abs() <= 15.0 * tol {
        return Ok(left + right + delta / 15.0);
    }
    if depth == 0 {
        return Err(Error::NonConvergence { depth: MAX_DEPTH });
    }
    let l = simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)?;
    let r = simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)?;
    Ok(l + r)
}

/// Gaussian curvature of `lambda(u, v) (du^2 + kappa2 dv^2)` at `(u, v)`.
///
/// Uses `K = -(1 / 2 lambda) ((ln lambda)_uu + (ln lambda)_vv / kappa2)` with
/// central second differences, which reduces to the Liouville formula for
/// `kappa2 = 1` and stays valid for the Lorentzian signature `kappa2 < 0`.
pub fn gaussian_curvature_fd<F: Fn(f64, f64) -> f64>(
    lambda: F,
    u: f64,
    v: f64,
    kappa2: f64,
) -> Result<f64> {
    gaussian_curvature_fd_with(&OracleConfig::default(), lambda, u, v, kappa2)
}

pub fn gaussian_curvature_fd_with<F: Fn(f64, f64) -> f64>(
    cfg: &OracleConfig,
    lambda: F,
    u: f64,
    v: f64,
    kappa2: f64,
) -> Result<f64> {
    if kappa2 == 0.0 {
        return Err(Error::SingularMetric);
    }
    let h = cfg.fd_step;
    let ln = |a: f64, b: f64| -> Result<f64> {
        let l = lambda(a, b);
        if l.is_finite() && l > 0.0 {
            Ok(l.ln())
        } else {
            Err(Error::SingularMetric)
        }
    };
    let c = ln(u, v)?;
    let uu = (ln(u + h, v)? - 2.0 * c + ln(u - h, v)?) / (h * h);
    let vv = (ln(u, v + h)? - 2.0 * c + ln(u, v - h)?) / (h * h);
    Ok(-(uu + vv / kappa2) / (2.0 * c.exp()))
}

/// Element of a generalized complex plane stored as `[re, im]`.
pub type CPair = [f64; 2];
/// 2x2 matrix over a generalized complex plane.
pub type CMat2 = [[CPair; 2]; 2];

pub fn cpair_mul(kappa: f64, a: CPair, b: CPair) -> CPair {
    [a[0] * b[0] - kappa * a[1] * b[1], a[0] * b[1] + a[1] * b[0]]
}

pub fn cmat2_mul(kappa: f64, a: &CMat2, b: &CMat2) -> CMat2 {
    let mut c = [[[0.0; 2]; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                let p = cpair_mul(kappa, a[i][k], b[k][j]);
                c[i][j][0] += p[0];
                c[i][j][1] += p[1];
            }
        }
    }
    c
}

pub fn cmat2_max_abs_diff(a: &CMat2, b: &CMat2) -> f64 {
    let mut d: f64 = 0.0;
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                d = d.max((a[i][j][k] - b[i][j][k]).abs());
            }
        }
    }
    d
}

/// Numerical rank by Gaussian elimination with partial pivoting.
pub fn rank(mut rows: Vec<Vec<f64>>, tol: f64) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let pivot = (r..rows.len())
            .max_by(|&a, &b| rows[a][c].abs().total_cmp(&rows[b][c].abs()))
            .unwrap();
        if rows[pivot][c].abs() <= tol {
            continue;
        }
        rows.swap(r, pivot);
        for i in r + 1..rows.len() {
            let f = rows[i][c] / rows[r][c];
            for j in c..ncols {
                rows[i][j] -= f * rows[r][j];
            }
        }
        r += 1;
    }
    r
}
