//! The spin group `[[alpha, beta], [-kappa1 conj(beta), conj(alpha)]]` inside
//! `SL(2)` over the plane with `i^2 = -kappa2`, and its double cover of
//! `SO(3)_{kappa1, kappa2}`.

use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::ckgeom::{Generator, GroupWord, KappaPair, So3Matrix};
use crate::error::{Error, Result};
use crate::gencomplex::{gc_exp_unit, GenComplex, MoebiusMap};
use crate::gentrig::{cosk, sink};
use crate::scalar::Real;

/// 2x2 matrix over a generalized complex plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Mat2C<T>(pub [[GenComplex<T>; 2]; 2]);

impl<T: Real> Mat2C<T> {
    pub fn new(a: GenComplex<T>, b: GenComplex<T>, c: GenComplex<T>, d: GenComplex<T>) -> Self {
        Mat2C([[a, b], [c, d]])
    }

    pub fn zero(kappa2: T) -> Self {
        let o = GenComplex::zero(kappa2);
        Mat2C::new(o, o, o, o)
    }

    pub fn identity(kappa2: T) -> Self {
        let (o, l) = (GenComplex::zero(kappa2), GenComplex::one(kappa2));
        Mat2C::new(l, o, o, l)
    }

    /// Matrix with real entries.
    pub fn from_real(kappa2: T, m: [[T; 2]; 2]) -> Self {
        let r = |x| GenComplex::real(x, kappa2);
        Mat2C::new(r(m[0][0]), r(m[0][1]), r(m[1][0]), r(m[1][1]))
    }

    pub fn kappa2(&self) -> T {
        self.0[0][0].kappa
    }

    pub fn scale(&self, s: T) -> Self {
        self.map(|z| z.scale(s))
    }

    pub fn scale_c(&self, s: GenComplex<T>) -> Self {
        self.map(|z| z * s)
    }

    fn map(&self, f: impl Fn(GenComplex<T>) -> GenComplex<T>) -> Self {
        let m = &self.0;
        Mat2C::new(f(m[0][0]), f(m[0][1]), f(m[1][0]), f(m[1][1]))
    }

    pub fn det(&self) -> GenComplex<T> {
        let m = &self.0;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    pub fn trace(&self) -> GenComplex<T> {
        self.0[0][0] + self.0[1][1]
    }

    /// Conjugate transpose.
    pub fn star(&self) -> Self {
        let m = &self.0;
        Mat2C::new(
            m[0][0].conj(),
            m[1][0].conj(),
            m[0][1].conj(),
            m[1][1].conj(),
        )
    }

    pub fn commutator(&self, o: &Self) -> Self {
        *self * *o - *o * *self
    }

    pub fn max_abs(&self) -> T {
        self.0
            .iter()
            .flatten()
            .fold(T::zero(), |a, z| a.max(z.re.abs()).max(z.im.abs()))
    }

    pub fn max_abs_diff(&self, o: &Self) -> T {
        (*self - *o).max_abs()
    }
}

impl<T: Real> Add for Mat2C<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let (a, b) = (&self.0, &o.0);
        Mat2C::new(
            a[0][0] + b[0][0],
            a[0][1] + b[0][1],
            a[1][0] + b[1][0],
            a[1][1] + b[1][1],
        )
    }
}

impl<T: Real> Sub for Mat2C<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<T: Real> Neg for Mat2C<T> {
    type Output = Self;
    fn neg(self) -> Self {
        self.map(|z| -z)
    }
}

impl<T: Real> Mul for Mat2C<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let (a, b) = (&self.0, &o.0);
        let e = |i: usize, j: usize| a[i][0] * b[0][j] + a[i][1] * b[1][j];
        Mat2C::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }
}

/// `A = diag(kappa1, 1)`, the form preserved by the spin group.
pub fn a_matrix<T: Real>(kp: &KappaPair<T>) -> Mat2C<T> {
    Mat2C::from_real(kp.kappa2, [[kp.kappa1, T::zero()], [T::zero(), T::one()]])
}

/// `sigma1 = diag(1, -1)`, `sigma2 = [[0, 1], [kappa1, 0]]`, `sigma3 = [[0, i], [-kappa1 i, 0]]`.
pub fn pauli_generators<T: Real>(kp: &KappaPair<T>) -> [Mat2C<T>; 3] {
    let k2 = kp.kappa2;
    let (o, l) = (GenComplex::zero(k2), GenComplex::one(k2));
    let i = GenComplex::i(k2);
    let k1 = GenComplex::real(kp.kappa1, k2);
    [
        Mat2C::new(l, o, o, -l),
        Mat2C::new(o, l, k1, o),
        Mat2C::new(o, i, -(k1 * i), o),
    ]
}

/// Lie algebra generators `H = sigma3 / 2i`, `P = (i/2) sigma2`, `K = (i/2) sigma1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sl2Generators<T> {
    pub h: Mat2C<T>,
    pub p: Mat2C<T>,
    pub k: Mat2C<T>,
}

impl<T: Real> Sl2Generators<T> {
    pub fn get(&self, g: Generator) -> Mat2C<T> {
        match g {
            Generator::H => self.h,
            Generator::P => self.p,
            Generator::K => self.k,
        }
    }
}

pub fn sl2_generators<T: Real>(kp: &KappaPair<T>) -> Sl2Generators<T> {
    let k2 = kp.kappa2;
    let [s1, s2, _] = pauli_generators(kp);
    let half_i = GenComplex::new(T::zero(), T::half(), k2);
    let h = Mat2C::from_real(
        k2,
        [[T::zero(), T::half()], [-kp.kappa1 * T::half(), T::zero()]],
    );
    Sl2Generators {
        h,
        p: s2.scale_c(half_i),
        k: s1.scale_c(half_i),
    }
}

/// Element `[[alpha, beta], [-kappa1 conj(beta), conj(alpha)]]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpinElement<T> {
    pub alpha: GenComplex<T>,
    pub beta: GenComplex<T>,
    pub kappa1: T,
}

impl<T: Real> SpinElement<T> {
    pub fn identity(kp: &KappaPair<T>) -> Self {
        SpinElement {
            alpha: GenComplex::one(kp.kappa2),
            beta: GenComplex::zero(kp.kappa2),
            kappa1: kp.kappa1,
        }
    }

    pub fn kappa_pair(&self) -> KappaPair<T> {
        KappaPair::new(self.kappa1, self.alpha.kappa)
    }

    pub fn to_matrix(&self) -> Mat2C<T> {
        let k1 = GenComplex::real(self.kappa1, self.alpha.kappa);
        Mat2C::new(
            self.alpha,
            self.beta,
            -(k1 * self.beta.conj()),
            self.alpha.conj(),
        )
    }

    /// Read off `alpha, beta` after checking the shape and unit condition.
    pub fn from_matrix(kp: &KappaPair<T>, m: &Mat2C<T>) -> Result<Self> {
        if !is_spin(kp, m) {
            return Err(Error::NotSpin);
        }
        Ok(SpinElement {
            alpha: m.0[0][0],
            beta: m.0[0][1],
            kappa1: kp.kappa1,
        })
    }

    /// `alpha conj(alpha) + kappa1 beta conj(beta)`.
    pub fn norm(&self) -> T {
        self.alpha.sqmod() + self.kappa1 * self.beta.sqmod()
    }

    pub fn inverse(&self) -> Self {
        SpinElement {
            alpha: self.alpha.conj(),
            beta: -self.beta,
            kappa1: self.kappa1,
        }
    }

    /// Representative of `{s, -s}` with `Re alpha >= 0`, ties broken by `Im alpha >= 0`, then by `beta`.
    pub fn canonical(self) -> Self {
        let z = T::zero();
        let key = |w: GenComplex<T>| (w.re, w.im);
        let flip = {
            let (ar, ai) = key(self.alpha);
            let (br, bi) = key(self.beta);
            if ar != z {
                ar < z
            } else if ai != z {
                ai < z
            } else if br != z {
                br < z
            } else {
                bi < z
            }
        };
        if flip {
            -self
        } else {
            self
        }
    }

    pub fn max_abs_diff(&self, o: &Self) -> T {
        self.alpha.dist_max(o.alpha).max(self.beta.dist_max(o.beta))
    }
}

impl<T: Real> Neg for SpinElement<T> {
    type Output = Self;
    fn neg(self) -> Self {
        SpinElement {
            alpha: -self.alpha,
            beta: -self.beta,
            kappa1: self.kappa1,
        }
    }
}

impl<T: Real> Mul for SpinElement<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let k1 = GenComplex::real(self.kappa1, self.alpha.kappa);
        SpinElement {
            alpha: self.alpha * o.alpha - k1 * self.beta * o.beta.conj(),
            beta: self.alpha * o.beta + self.beta * o.alpha.conj(),
            kappa1: self.kappa1,
        }
    }
}

/// `exp(param g)` in the spin group, following the one-parameter subgroup.
pub fn spin_exp<T: Real>(kp: &KappaPair<T>, g: Generator, param: T) -> SpinElement<T> {
    let k2 = kp.kappa2;
    let half = param * T::half();
    let (alpha, beta) = match g {
        Generator::K => (gc_exp_unit(k2, half), GenComplex::zero(k2)),
        Generator::H => {
            let l = kp.kappa1;
            (
                GenComplex::real(cosk(l, half), k2),
                GenComplex::real(sink(l, half), k2),
            )
        }
        Generator::P => {
            let l = kp.kappa1 * k2;
            (
                GenComplex::real(cosk(l, half), k2),
                GenComplex::new(T::zero(), sink(l, half), k2),
            )
        }
    };
    SpinElement {
        alpha,
        beta,
        kappa1: kp.kappa1,
    }
}

pub fn sl2_of_exp_k<T: Real>(kp: &KappaPair<T>, theta: T) -> SpinElement<T> {
    spin_exp(kp, Generator::K, theta).canonical()
}

pub fn sl2_of_exp_h<T: Real>(kp: &KappaPair<T>, alpha: T) -> SpinElement<T> {
    spin_exp(kp, Generator::H, alpha).canonical()
}

pub fn sl2_of_exp_p<T: Real>(kp: &KappaPair<T>, beta: T) -> SpinElement<T> {
    spin_exp(kp, Generator::P, beta).canonical()
}

/// `exp((phi/2) n.sigma) = C(phi/2) + n.sigma S(phi/2)` with `n.sigma = n1 i sigma1 + n2 i sigma2 + n3 (1/i) sigma3`.
pub fn spin_exp_axis<T: Real>(kp: &KappaPair<T>, n: [T; 3], phi: T) -> SpinElement<T> {
    let (k1, k2) = (kp.kappa1, kp.kappa2);
    let kappa = n[0] * n[0] * k2 + n[1] * n[1] * k1 * k2 + n[2] * n[2] * k1;
    let half = phi * T::half();
    let (c, s) = (cosk(kappa, half), sink(kappa, half));
    SpinElement {
        alpha: GenComplex::new(c, n[0] * s, k2),
        beta: GenComplex::new(n[2] * s, n[1] * s, k2),
        kappa1: k1,
    }
}

pub fn word_spin<T: Real>(kp: &KappaPair<T>, word: &GroupWord<T>) -> SpinElement<T> {
    word.letters
        .iter()
        .fold(SpinElement::identity(kp), |acc, &(g, a)| {
            acc * spin_exp(kp, g, a)
        })
}

pub fn spin_moebius<T: Real>(s: &SpinElement<T>) -> MoebiusMap<T> {
    let m = s.to_matrix().0;
    MoebiusMap {
        a: m[0][0],
        b: m[0][1],
        c: m[1][0],
        d: m[1][1],
    }
}

/// Moebius transformation of the model induced by a group word.
pub fn word_moebius<T: Real>(kp: &KappaPair<T>, word: &GroupWord<T>) -> MoebiusMap<T> {
    spin_moebius(&word_spin(kp, word))
}

const SPIN_TOL: f64 = 1e-10;
const ALGEBRA_TOL: f64 = 1e-12;

/// Spin shape with unit pseudo-norm, to `1e-10`.
pub fn is_spin<T: Real>(kp: &KappaPair<T>, m: &Mat2C<T>) -> bool {
    if m.kappa2() != kp.kappa2 {
        return false;
    }
    let tol = T::lit(SPIN_TOL);
    let k1 = GenComplex::real(kp.kappa1, kp.kappa2);
    let [[a, b], [c, d]] = m.0;
    if !d.approx_eq(a.conj(), tol) || !c.approx_eq(-(k1 * b.conj()), tol) {
        return false;
    }
    let n = a.sqmod() + kp.kappa1 * b.sqmod();
    (n - T::one()).abs() <= tol
}

/// `B* A + A B = 0` and `tr B = 0`, to `1e-12`.
pub fn is_su2_algebra<T: Real>(kp: &KappaPair<T>, b: &Mat2C<T>) -> bool {
    let a = a_matrix(kp);
    let tol = T::lit(ALGEBRA_TOL);
    let lhs = b.star() * a + a * *b;
    let tr = b.trace();
    lhs.max_abs() <= tol && tr.re.abs() <= tol && tr.im.abs() <= tol
}

// Coordinates of x1 sigma1 + x2 sigma2 + x3 sigma3 from its first row.
fn vector_coords<T: Real>(m: &Mat2C<T>) -> [T; 3] {
    [m.0[0][0].re, m.0[0][1].re, m.0[0][1].im]
}

/// Rotation of `(z, t, x)` induced by `s`.
///
/// The point `(z, t, x)` is identified with `z sigma1 - t sigma2 - x sigma3`
/// and moved by `a -> s a s^{-1}`.
pub fn cover_to_so3<T: Real>(s: &SpinElement<T>) -> Result<So3Matrix<T>> {
    let kp = s.kappa_pair();
    let m = s.to_matrix();
    if !is_spin(&kp, &m) {
        return Err(Error::NotSpin);
    }
    let inv = s.inverse().to_matrix();
    let sigma = pauli_generators(&kp);
    let sign = [T::one(), -T::one(), -T::one()];
    let mut r = So3Matrix::zero();
    for j in 0..3 {
        let image = vector_coords(&(m * sigma[j] * inv));
        for i in 0..3 {
            r.0[i][j] = sign[i] * sign[j] * image[i];
        }
    }
    Ok(r)
}
