//! Cayley-Klein geometries in the 3x3 model and their conformal picture.
//!
//! The group `SO(3)_{kappa1, kappa2}` acts on `(z, t, x)` preserving
//! `dz^2 + kappa1 dt^2 + kappa1 kappa2 dx^2`; the quadric `Sigma` is its unit
//! sphere. Central projection from `(-1, 0, 0)` sends `Sigma` to the plane of
//! generalized complex numbers with `i^2 = -kappa2`.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gencomplex::{gc_inv, moebius_apply, GenComplex};
use crate::gentrig::{atank, cosk, sink};
use crate::numerics;
use crate::scalar::{Real, Sign};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KappaPair<T> {
    pub kappa1: T,
    pub kappa2: T,
}

impl<T: Real> KappaPair<T> {
    pub fn new(kappa1: T, kappa2: T) -> Self {
        KappaPair { kappa1, kappa2 }
    }

    /// Diagonal of the invariant form `G = diag(1, kappa1, kappa1 kappa2)`.
    pub fn form(&self) -> [T; 3] {
        [T::one(), self.kappa1, self.kappa1 * self.kappa2]
    }

    /// Non-compact boosts need `kappa2 <= 0`.
    pub fn is_spacetime(&self) -> bool {
        self.kappa2 <= T::zero()
    }

    pub fn signs(&self) -> (Sign, Sign) {
        (Sign::of(self.kappa1), Sign::of(self.kappa2))
    }

    pub fn zero_one(&self) -> GenComplex<T> {
        GenComplex::one(self.kappa2)
    }
}

/// Unit representatives of the nine sign patterns, `kappa1` major.
pub fn sign_patterns() -> [KappaPair<f64>; 9] {
    let mut out = [KappaPair::new(0.0, 0.0); 9];
    let mut n = 0;
    for k1 in [1.0, 0.0, -1.0] {
        for k2 in [1.0, 0.0, -1.0] {
            out[n] = KappaPair::new(k1, k2);
            n += 1;
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct So3Matrix<T>(pub [[T; 3]; 3]);

impl<T: Real> So3Matrix<T> {
    pub fn identity() -> Self {
        let mut m = [[T::zero(); 3]; 3];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = T::one();
        }
        So3Matrix(m)
    }

    pub fn zero() -> Self {
        So3Matrix([[T::zero(); 3]; 3])
    }

    pub fn transpose(&self) -> Self {
        let mut m = [[T::zero(); 3]; 3];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                *x = self.0[j][i];
            }
        }
        So3Matrix(m)
    }

    pub fn det(&self) -> T {
        let m = &self.0;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut m = self.0;
        for (i, row) in m.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                *x = *x - o.0[i][j];
            }
        }
        So3Matrix(m)
    }

    pub fn commutator(&self, o: &Self) -> Self {
        (*self * *o).sub(&(*o * *self))
    }

    pub fn scale(&self, s: T) -> Self {
        let mut m = self.0;
        for x in m.iter_mut().flatten() {
            *x = *x * s;
        }
        So3Matrix(m)
    }

    pub fn max_abs(&self) -> T {
        self.0
            .iter()
            .flatten()
            .fold(T::zero(), |a, &x| a.max(x.abs()))
    }

    pub fn max_abs_diff(&self, o: &Self) -> T {
        self.sub(o).max_abs()
    }

    /// Largest entry of `M^T G M - G`.
    pub fn form_residual(&self, kp: &KappaPair<T>) -> T {
        let g = kp.form();
        let m = &self.0;
        let mut r = T::zero();
        for i in 0..3 {
            for j in 0..3 {
                let mut s = T::zero();
                for (k, gk) in g.iter().enumerate() {
                    s = s + m[k][i] * *gk * m[k][j];
                }
                if i == j {
                    s = s - g[i];
                }
                r = r.max(s.abs());
            }
        }
        r
    }

    pub fn apply(&self, s: &SigmaPoint<T>) -> SigmaPoint<T> {
        let v = [s.z, s.t, s.x];
        let m = &self.0;
        let row = |i: usize| m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2];
        SigmaPoint {
            z: row(0),
            t: row(1),
            x: row(2),
        }
    }

    pub fn to_f64(&self) -> [[f64; 3]; 3] {
        let mut m = [[0.0; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                m[i][j] = self.0[i][j].to_f64_lossy();
            }
        }
        m
    }
}

impl<T: Real> Mul for So3Matrix<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let mut m = [[T::zero(); 3]; 3];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                for k in 0..3 {
                    *x = *x + self.0[i][k] * o.0[k][j];
                }
            }
        }
        So3Matrix(m)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SigmaPoint<T> {
    pub z: T,
    pub t: T,
    pub x: T,
}

impl<T: Real> SigmaPoint<T> {
    pub fn new(z: T, t: T, x: T) -> Self {
        SigmaPoint { z, t, x }
    }

    pub fn origin() -> Self {
        SigmaPoint::new(T::one(), T::zero(), T::zero())
    }

    /// `z^2 + kappa1 t^2 + kappa1 kappa2 x^2 - 1`.
    pub fn residual(&self, kp: &KappaPair<T>) -> T {
        let g = kp.form();
        g[0] * self.z * self.z + g[1] * self.t * self.t + g[2] * self.x * self.x - T::one()
    }

    pub fn antipode(&self) -> Self {
        SigmaPoint::new(-self.z, -self.t, -self.x)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Generator {
    H,
    P,
    K,
}

impl Generator {
    pub const ALL: [Generator; 3] = [Generator::H, Generator::P, Generator::K];

    /// Curvature label of the one-parameter subgroup.
    pub fn label<T: Real>(self, kp: &KappaPair<T>) -> T {
        match self {
            Generator::H => kp.kappa1,
            Generator::P => kp.kappa1 * kp.kappa2,
            Generator::K => kp.kappa2,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Generator::H => "H",
            Generator::P => "P",
            Generator::K => "K",
        })
    }
}

impl FromStr for Generator {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "H" => Ok(Generator::H),
            "P" => Ok(Generator::P),
            "K" => Ok(Generator::K),
            _ => Err(Error::UnknownName(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct So3Generators<T> {
    pub h: So3Matrix<T>,
    pub p: So3Matrix<T>,
    pub k: So3Matrix<T>,
}

impl<T: Real> So3Generators<T> {
    pub fn get(&self, g: Generator) -> So3Matrix<T> {
        match g {
            Generator::H => self.h,
            Generator::P => self.p,
            Generator::K => self.k,
        }
    }
}

pub fn so3_generators<T: Real>(kp: &KappaPair<T>) -> So3Generators<T> {
    let (o, l) = (T::zero(), T::one());
    let (k1, k2) = (kp.kappa1, kp.kappa2);
    So3Generators {
        h: So3Matrix([[o, -k1, o], [l, o, o], [o, o, o]]),
        p: So3Matrix([[o, o, -k1 * k2], [o, o, o], [l, o, o]]),
        k: So3Matrix([[o, o, o], [o, o, -k2], [o, l, o]]),
    }
}

// Rotation by `phi` in the coordinate plane (a, b) with label `kappa`.
fn plane_rotation<T: Real>(a: usize, b: usize, kappa: T, phi: T) -> So3Matrix<T> {
    let mut m = So3Matrix::identity();
    let (c, s) = (cosk(kappa, phi), sink(kappa, phi));
    m.0[a][a] = c;
    m.0[a][b] = -kappa * s;
    m.0[b][a] = s;
    m.0[b][b] = c;
    m
}

pub fn exp_h<T: Real>(kp: &KappaPair<T>, alpha: T) -> So3Matrix<T> {
    plane_rotation(0, 1, kp.kappa1, alpha)
}

pub fn exp_p<T: Real>(kp: &KappaPair<T>, beta: T) -> So3Matrix<T> {
    plane_rotation(0, 2, kp.kappa1 * kp.kappa2, beta)
}

pub fn exp_k<T: Real>(kp: &KappaPair<T>, theta: T) -> So3Matrix<T> {
    plane_rotation(1, 2, kp.kappa2, theta)
}

pub fn exp_gen<T: Real>(kp: &KappaPair<T>, g: Generator, param: T) -> So3Matrix<T> {
    match g {
        Generator::H => exp_h(kp, param),
        Generator::P => exp_p(kp, param),
        Generator::K => exp_k(kp, param),
    }
}

/// Numerical exponential of `param * g`, used as a cross-check.
pub fn exp_oracle(kp: &KappaPair<f64>, g: Generator, param: f64) -> [[f64; 3]; 3] {
    let m = so3_generators(kp).get(g).scale(param);
    numerics::expm(&m.0)
}

/// Product `exp(p1 g1) exp(p2 g2) ...` of one-parameter subgroup elements.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct GroupWord<T> {
    pub letters: Vec<(Generator, T)>,
}

impl<T: Real> GroupWord<T> {
    pub fn new(letters: Vec<(Generator, T)>) -> Self {
        GroupWord { letters }
    }

    pub fn to_matrix(&self, kp: &KappaPair<T>) -> So3Matrix<T> {
        self.letters
            .iter()
            .fold(So3Matrix::identity(), |acc, &(g, a)| {
                acc * exp_gen(kp, g, a)
            })
    }
}

const POLE_TOL: f64 = 1e-12;

/// `w = (t + i x) / (z + 1)` in the plane with `i^2 = -kappa2`.
pub fn project<T: Real>(kp: &KappaPair<T>, s: &SigmaPoint<T>) -> Result<GenComplex<T>> {
    let den = s.z + T::one();
    if den.abs() <= T::lit(POLE_TOL) {
        return Err(Error::ProjectionPole);
    }
    Ok(GenComplex::new(s.t / den, s.x / den, kp.kappa2))
}

/// Projection of the representative with `z >= 0` of a point of the projective quadric.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModelPoint<T> {
    pub w: GenComplex<T>,
    /// The point lies on `z = 0`, where antipodal representatives are identified.
    pub boundary: bool,
}

pub fn project_to_model<T: Real>(kp: &KappaPair<T>, s: &SigmaPoint<T>) -> Result<ModelPoint<T>> {
    let s = if s.z < T::zero() { s.antipode() } else { *s };
    Ok(ModelPoint {
        w: project(kp, &s)?,
        boundary: s.z.abs() <= T::lit(POLE_TOL),
    })
}

/// `1 + kappa1 |w|^2`, the conformal denominator.
fn model_denominator<T: Real>(kp: &KappaPair<T>, w: GenComplex<T>) -> T {
    T::one() + kp.kappa1 * w.sqmod()
}

/// Whether `w` lies in the model region `{1 + kappa1 |w|^2 > 0, kappa1 |w|^2 <= 1}`.
pub fn in_model<T: Real>(kp: &KappaPair<T>, w: GenComplex<T>) -> bool {
    let a = kp.kappa1 * w.sqmod();
    T::one() + a > T::zero() && a <= T::one()
}

/// Inverse of [`project`] on the hemisphere `z >= 0`.
pub fn unproject<T: Real>(kp: &KappaPair<T>, w: GenComplex<T>) -> Result<SigmaPoint<T>> {
    if w.kappa != kp.kappa2 {
        return Err(Error::KappaMismatch {
            left: w.kappa.to_f64_lossy(),
            right: kp.kappa2.to_f64_lossy(),
        });
    }
    if !in_model(kp, w) {
        return Err(Error::OutsideModel);
    }
    let a = kp.kappa1 * w.sqmod();
    let den = T::one() + a;
    Ok(SigmaPoint::new(
        (T::one() - a) / den,
        T::two() * w.re / den,
        T::two() * w.im / den,
    ))
}

/// `|dw|^2 / (1 + kappa1 |w|^2)^2`.
pub fn metric_g1<T: Real>(kp: &KappaPair<T>, w: GenComplex<T>, dw: GenComplex<T>) -> Result<T> {
    let den = model_denominator(kp, w);
    if den.abs() <= T::lit(POLE_TOL) {
        return Err(Error::BoundarySingularity);
    }
    Ok(dw.sqmod() / (den * den))
}

/// Pullback of `(1 / kappa1) ds^2` from the quadric: four times [`metric_g1`].
pub fn main_metric<T: Real>(kp: &KappaPair<T>, w: GenComplex<T>, dw: GenComplex<T>) -> Result<T> {
    Ok(T::lit(4.0) * metric_g1(kp, w, dw)?)
}

/// Spatial metric `dx^2 / (1 + kappa1 t0^2)^2` on a line of simultaneity.
pub fn metric_g2<T: Real>(kp: &KappaPair<T>, t0: T, dx: T) -> Result<T> {
    if kp.kappa2 != T::zero() {
        return Err(Error::WrongGeometry {
            kappa2: kp.kappa2.to_f64_lossy(),
        });
    }
    let den = T::one() + kp.kappa1 * t0 * t0;
    if den.abs() <= T::lit(POLE_TOL) {
        return Err(Error::BoundarySingularity);
    }
    Ok(dx * dx / (den * den))
}

/// `T^{-1}_{kappa1} |(w2 - w1) / (kappa1 conj(w1) w2 + 1)|`.
pub fn distance<T: Real>(kp: &KappaPair<T>, w1: GenComplex<T>, w2: GenComplex<T>) -> Result<T> {
    for w in [w1, w2] {
        if w.kappa != kp.kappa2 {
            return Err(Error::KappaMismatch {
                left: w.kappa.to_f64_lossy(),
                right: kp.kappa2.to_f64_lossy(),
            });
        }
        if model_denominator(kp, w) <= T::zero() {
            return Err(Error::OutsideModel);
        }
    }
    let num = w2 - w1;
    let den = w1.conj() * w2 * GenComplex::real(kp.kappa1, kp.kappa2) + kp.zero_one();
    if den.is_null() {
        return Err(Error::DenominatorNotInvertible);
    }
    let q = num * gc_inv(den)?;
    if q.is_zero() {
        return Ok(T::zero());
    }
    let s = q.sqmod();
    if q.is_null() || s < T::zero() {
        return Err(Error::NullOrImaginarySeparation {
            sqmod: s.to_f64_lossy(),
        });
    }
    atank(kp.kappa1, s.sqrt())
}

/// Length of the ray from the origin to `w` under [`metric_g1`], by quadrature.
pub fn ray_length(kp: &KappaPair<f64>, w: GenComplex<f64>) -> Result<f64> {
    let s = w.sqmod();
    if s < 0.0 {
        return Err(Error::NullOrImaginarySeparation { sqmod: s });
    }
    numerics::quad_adaptive(|t| s.sqrt() / (1.0 + kp.kappa1 * t * t * s), 0.0, 1.0)
}

/// `(project(g s), Moebius(g)(project(s)))`; the two agree for every group word.
pub fn act_and_project_equivariance<T: Real>(
    kp: &KappaPair<T>,
    g: &GroupWord<T>,
    s: &SigmaPoint<T>,
) -> Result<(GenComplex<T>, GenComplex<T>)> {
    let moved = project(kp, &g.to_matrix(kp).apply(s))?;
    let m = crate::spin::word_moebius(kp, g);
    let acted = moebius_apply(&m, project(kp, s)?)?;
    Ok((moved, acted))
}

fn fmt_num(x: f64) -> String {
    let s = format!("{x:.4}");
    if s == "-0.0000" {
        "0.0000".to_string()
    } else {
        s
    }
}

const VIEW: f64 = 2.0;
const CLIP: f64 = 2.5;

// Points of u^2 + kappa2 v^2 = c inside the clip box, one polyline per branch.
fn conic_branches(kappa2: f64, c: f64) -> Vec<Vec<(f64, f64)>> {
    const N: usize = 256;
    let inside = |(u, v): &(f64, f64)| u.abs() <= CLIP && v.abs() <= CLIP;
    let keep =
        |pts: Vec<(f64, f64)>| -> Vec<(f64, f64)> { pts.into_iter().filter(inside).collect() };
    let param = |f: &dyn Fn(f64) -> (f64, f64), lo: f64, hi: f64| -> Vec<(f64, f64)> {
        (0..=N)
            .map(|i| f(lo + (hi - lo) * i as f64 / N as f64))
            .collect()
    };
    let mut out = Vec::new();
    if c == 0.0 {
        return out;
    }
    if kappa2 > 0.0 {
        if c > 0.0 {
            let (a, b) = (c.sqrt(), (c / kappa2).sqrt());
            let pts = param(
                &|t: f64| (a * t.cos(), b * t.sin()),
                0.0,
                2.0 * std::f64::consts::PI,
            );
            out.push(keep(pts));
        }
    } else if kappa2 == 0.0 {
        if c > 0.0 {
            for u in [c.sqrt(), -c.sqrt()] {
                out.push(keep(vec![(u, -CLIP), (u, CLIP)]));
            }
        }
    } else {
        let r = (-kappa2).sqrt();
        let a = c.abs().sqrt();
        let span = 6.0;
        for sgn in [1.0, -1.0] {
            let pts = if c > 0.0 {
                param(
                    &|t: f64| (sgn * a * t.cosh(), a / r * t.sinh()),
                    -span,
                    span,
                )
            } else {
                param(
                    &|t: f64| (a * t.sinh(), sgn * a / r * t.cosh()),
                    -span,
                    span,
                )
            };
            out.push(keep(pts));
        }
    }
    out.retain(|b| b.len() >= 2);
    out
}

fn polyline_path(pts: &[(f64, f64)], closed: bool) -> String {
    let mut d = String::new();
    for (i, (u, v)) in pts.iter().enumerate() {
        d.push_str(if i == 0 { "M" } else { " L" });
        d.push_str(&format!("{} {}", fmt_num(*u), fmt_num(-*v)));
    }
    if closed {
        d.push_str(" Z");
    }
    d
}

/// SVG drawing of the model region: its boundary conics and the null cone at the origin.
pub fn region_svg(kp: &KappaPair<f64>) -> String {
    let mut s = String::new();
    s.push_str(&format!(
        "<svg height=\"400\" viewBox=\"{} {} {} {}\" width=\"400\" xmlns=\"http://www.w3.org/2000/svg\">\n",
        -VIEW,
        -VIEW,
        2.0 * VIEW,
        2.0 * VIEW
    ));
    s.push_str(&format!(
        "<title>kappa1={} kappa2={}</title>\n",
        kp.kappa1, kp.kappa2
    ));
    s.push_str("<rect fill=\"#ffffff\" height=\"4\" width=\"4\" x=\"-2\" y=\"-2\"/>\n");
    s.push_str("<g fill=\"none\" stroke=\"#999999\" stroke-width=\"0.005\">\n");
    s.push_str("<line x1=\"-2\" x2=\"2\" y1=\"0\" y2=\"0\"/>\n");
    s.push_str("<line x1=\"0\" x2=\"0\" y1=\"-2\" y2=\"2\"/>\n");
    s.push_str("</g>\n");
    if kp.kappa1 != 0.0 {
        // kappa1 |w|^2 = -1 is the absolute, kappa1 |w|^2 = 1 the image of z = 0
        let mut curves = Vec::new();
        for (c, class) in [(-1.0 / kp.kappa1, "absolute"), (1.0 / kp.kappa1, "equator")] {
            for branch in conic_branches(kp.kappa2, c) {
                let closed = kp.kappa2 > 0.0;
                curves.push((class, polyline_path(&branch, closed)));
            }
        }
        for (class, d) in curves {
            s.push_str(&format!(
                "<path class=\"{class}\" d=\"{d}\" fill=\"none\" stroke=\"#1f4e79\" stroke-width=\"0.02\"/>\n"
            ));
        }
    }
    if kp.kappa2 <= 0.0 {
        let r = (-kp.kappa2).sqrt();
        let l = CLIP / r.max(1.0);
        let dirs: Vec<(f64, f64)> = if r == 0.0 {
            vec![(0.0, CLIP)]
        } else {
            vec![(r * l, l), (-r * l, l)]
        };
        for (u, v) in dirs {
            s.push_str(&format!(
                "<line class=\"null-cone\" stroke=\"#b03a2e\" stroke-dasharray=\"0.08 0.05\" stroke-width=\"0.015\" x1=\"{}\" x2=\"{}\" y1=\"{}\" y2=\"{}\"/>\n",
                fmt_num(-u),
                fmt_num(u),
                fmt_num(v),
                fmt_num(-v)
            ));
        }
    }
    s.push_str("<circle cx=\"0\" cy=\"0\" fill=\"#000000\" r=\"0.03\"/>\n");
    s.push_str("</svg>\n");
    s
}
