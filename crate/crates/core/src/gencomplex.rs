//! Generalized complex numbers `u + i v` with `i^2 = -kappa`.
//!
//! `kappa > 0` gives (rescaled) ordinary complex numbers, `kappa = 0` dual
//! numbers and `kappa < 0` double (split-complex) numbers. For `kappa <= 0`
//! the non-invertible elements form the null cone `u^2 + kappa v^2 = 0`.
//!
//! The std operator impls panic on mixed labels; the `gc_*` functions return
//! [`Error::KappaMismatch`] instead.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gentrig::{cosk, sink};
use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GenComplex<T> {
    pub re: T,
    pub im: T,
    pub kappa: T,
}

impl<T: Real> GenComplex<T> {
    pub fn new(re: T, im: T, kappa: T) -> Self {
        GenComplex { re, im, kappa }
    }

    pub fn real(re: T, kappa: T) -> Self {
        Self::new(re, T::zero(), kappa)
    }

    pub fn zero(kappa: T) -> Self {
        Self::new(T::zero(), T::zero(), kappa)
    }

    pub fn one(kappa: T) -> Self {
        Self::new(T::one(), T::zero(), kappa)
    }

    /// The imaginary unit of the plane.
    pub fn i(kappa: T) -> Self {
        Self::new(T::zero(), T::one(), kappa)
    }

    pub fn conj(self) -> Self {
        Self::new(self.re, -self.im, self.kappa)
    }

    /// `w conj(w) = re^2 + kappa im^2`; negative values occur for `kappa < 0`.
    pub fn sqmod(self) -> T {
        self.re * self.re + self.kappa * self.im * self.im
    }

    pub fn is_zero(self) -> bool {
        self.re == T::zero() && self.im == T::zero()
    }

    /// True when `sqmod` vanishes up to rounding, relative to the size of `w`.
    pub fn is_null(self) -> bool {
        let scale = self.re * self.re + self.kappa.abs() * self.im * self.im;
        self.sqmod().abs() <= T::lit(64.0) * T::epsilon() * scale
    }

    /// Nonzero element of the null cone.
    pub fn is_zero_divisor(self) -> bool {
        !self.is_zero() && self.is_null()
    }

    pub fn scale(self, s: T) -> Self {
        Self::new(self.re * s, self.im * s, self.kappa)
    }

    pub fn approx_eq(self, other: Self, tol: T) -> bool {
        self.kappa == other.kappa
            && (self.re - other.re).abs() <= tol
            && (self.im - other.im).abs() <= tol
    }

    /// Largest component difference; labels are assumed equal.
    pub fn dist_max(self, other: Self) -> T {
        (self.re - other.re).abs().max((self.im - other.im).abs())
    }

    fn check(self, other: Self) -> Result<()> {
        if self.kappa == other.kappa {
            Ok(())
        } else {
            Err(Error::KappaMismatch {
                left: self.kappa.to_f64_lossy(),
                right: other.kappa.to_f64_lossy(),
            })
        }
    }

    fn mul_unchecked(self, o: Self) -> Self {
        Self::new(
            self.re * o.re - self.kappa * self.im * o.im,
            self.re * o.im + self.im * o.re,
            self.kappa,
        )
    }

    pub fn inv(self) -> Result<Self> {
        gc_inv(self)
    }
}

impl<T: Real> fmt::Display for GenComplex<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im < T::zero() {
            write!(f, "{} - {}i", self.re, -self.im)
        } else {
            write!(f, "{} + {}i", self.re, self.im)
        }
    }
}

fn assert_same<T: Real>(a: GenComplex<T>, b: GenComplex<T>) {
    assert!(
        a.kappa == b.kappa,
        "mixed kappa labels {} and {}",
        a.kappa,
        b.kappa
    );
}

impl<T: Real> Add for GenComplex<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        assert_same(self, o);
        Self::new(self.re + o.re, self.im + o.im, self.kappa)
    }
}

impl<T: Real> Sub for GenComplex<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        assert_same(self, o);
        Self::new(self.re - o.re, self.im - o.im, self.kappa)
    }
}

impl<T: Real> Mul for GenComplex<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        assert_same(self, o);
        self.mul_unchecked(o)
    }
}

impl<T: Real> Neg for GenComplex<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.re, -self.im, self.kappa)
    }
}

pub fn gc_add<T: Real>(a: GenComplex<T>, b: GenComplex<T>) -> Result<GenComplex<T>> {
    a.check(b)?;
    Ok(a + b)
}

pub fn gc_mul<T: Real>(a: GenComplex<T>, b: GenComplex<T>) -> Result<GenComplex<T>> {
    a.check(b)?;
    Ok(a.mul_unchecked(b))
}

pub fn gc_inv<T: Real>(w: GenComplex<T>) -> Result<GenComplex<T>> {
    if w.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if w.is_null() {
        return Err(Error::ZeroDivisor(w.to_string()));
    }
    let s = w.sqmod();
    Ok(GenComplex::new(w.re / s, -w.im / s, w.kappa))
}

pub fn gc_div<T: Real>(a: GenComplex<T>, b: GenComplex<T>) -> Result<GenComplex<T>> {
    a.check(b)?;
    Ok(a.mul_unchecked(gc_inv(b)?))
}

/// `e^{i phi} = C_kappa(phi) + i S_kappa(phi)`.
pub fn gc_exp_unit<T: Real>(kappa: T, phi: T) -> GenComplex<T> {
    GenComplex::new(cosk(kappa, phi), sink(kappa, phi), kappa)
}

/// `w -> (a w + b) / (c w + d)` over a single plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MoebiusMap<T> {
    pub a: GenComplex<T>,
    pub b: GenComplex<T>,
    pub c: GenComplex<T>,
    pub d: GenComplex<T>,
}

impl<T: Real> MoebiusMap<T> {
    pub fn new(
        a: GenComplex<T>,
        b: GenComplex<T>,
        c: GenComplex<T>,
        d: GenComplex<T>,
    ) -> Result<Self> {
        a.check(b)?;
        a.check(c)?;
        a.check(d)?;
        let m = MoebiusMap { a, b, c, d };
        let det = m.det();
        if det.is_zero() || det.is_null() {
            return Err(Error::SingularMoebius);
        }
        Ok(m)
    }

    pub fn identity(kappa: T) -> Self {
        let (o, l) = (GenComplex::zero(kappa), GenComplex::one(kappa));
        MoebiusMap {
            a: l,
            b: o,
            c: o,
            d: l,
        }
    }

    pub fn kappa(&self) -> T {
        self.a.kappa
    }

    pub fn det(&self) -> GenComplex<T> {
        self.a * self.d - self.b * self.c
    }

    /// `self` after `other`, i.e. the matrix product `self * other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.a.check(other.a)?;
        Ok(MoebiusMap {
            a: self.a * other.a + self.b * other.c,
            b: self.a * other.b + self.b * other.d,
            c: self.c * other.a + self.d * other.c,
            d: self.c * other.b + self.d * other.d,
        })
    }

    /// Adjugate matrix; equal to the inverse up to the scalar `det`.
    pub fn inverse(&self) -> Self {
        MoebiusMap {
            a: self.d,
            b: -self.b,
            c: -self.c,
            d: self.a,
        }
    }

    pub fn apply(&self, w: GenComplex<T>) -> Result<GenComplex<T>> {
        moebius_apply(self, w)
    }
}

pub fn moebius_apply<T: Real>(m: &MoebiusMap<T>, w: GenComplex<T>) -> Result<GenComplex<T>> {
    m.a.check(w)?;
    let num = m.a * w + m.b;
    let den = m.c * w + m.d;
    if den.is_null() {
        return Err(Error::AtInfinity);
    }
    Ok(num * gc_inv(den)?)
}

/// Homogeneous point `[u : v]` of the completed plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GammaPoint<T> {
    pub u: GenComplex<T>,
    pub v: GenComplex<T>,
}

// Multiplication by w as a real 2x2 matrix acting on (re, im).
fn mult_matrix<T: Real>(w: GenComplex<T>) -> [[T; 2]; 2] {
    [[w.re, -w.kappa * w.im], [w.im, w.re]]
}

impl<T: Real> GammaPoint<T> {
    pub fn new(u: GenComplex<T>, v: GenComplex<T>) -> Result<Self> {
        u.check(v)?;
        let p = GammaPoint { u, v };
        if !p.is_admissible() {
            return Err(Error::InadmissiblePoint);
        }
        Ok(p)
    }

    /// No nonzero scalar annihilates both coordinates: the stacked
    /// multiplication matrices of `u` and `v` have full column rank.
    pub fn is_admissible(&self) -> bool {
        let (mu, mv) = (mult_matrix(self.u), mult_matrix(self.v));
        let mut g = [[T::zero(); 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    g[i][j] = g[i][j] + mu[k][i] * mu[k][j] + mv[k][i] * mv[k][j];
                }
            }
        }
        let tr = g[0][0] + g[1][1];
        let det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
        tr > T::zero() && det > T::lit(1e-12) * tr * tr
    }

    /// `u / v` when `v` is invertible.
    pub fn to_affine(&self) -> Result<GenComplex<T>> {
        if self.v.is_null() {
            return Err(Error::AtInfinity);
        }
        Ok(self.u * gc_inv(self.v)?)
    }

    /// Projective equality: `u1 v2 - u2 v1 = 0` up to `tol` relative to the sizes.
    pub fn same_point(&self, other: &Self, tol: T) -> bool {
        let cross = self.u * other.v - other.u * self.v;
        let size = |p: &Self| p.u.re.abs() + p.u.im.abs() + p.v.re.abs() + p.v.im.abs();
        let s = size(self) * size(other);
        cross.re.abs() <= tol * s && cross.im.abs() <= tol * s
    }
}

pub fn gamma_lift<T: Real>(w: GenComplex<T>) -> GammaPoint<T> {
    GammaPoint {
        u: w,
        v: GenComplex::one(w.kappa),
    }
}

pub fn gamma_apply<T: Real>(m: &MoebiusMap<T>, p: &GammaPoint<T>) -> Result<GammaPoint<T>> {
    m.a.check(p.u)?;
    if !p.is_admissible() {
        return Err(Error::InadmissiblePoint);
    }
    let q = GammaPoint {
        u: m.a * p.u + m.b * p.v,
        v: m.c * p.u + m.d * p.v,
    };
    if !q.is_admissible() {
        return Err(Error::InadmissiblePoint);
    }
    Ok(q)
}
