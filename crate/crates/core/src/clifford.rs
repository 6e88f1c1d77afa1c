//! The eight-dimensional Clifford algebra with
//! `sigma1^2 = 1`, `sigma2^2 = kappa1`, `sigma3^2 = kappa1 kappa2`.
//!
//! Basis order: `1, sigma1, sigma2, sigma3, i sigma1, i sigma2, (1/i) sigma3, i`.
//! The element written `(1/i) sigma3` is a primitive basis element here
//! (`sigma1 sigma2`); no division by `i` ever takes place.
//!
//! Every basis element is `i^a e_S` with `i` central, `i^2 = -kappa2`, and
//! `e_S` a blade in the algebra generated by `e1 = sigma1`, `e2 = sigma2`.
//! Products of basis elements are therefore signed monomials in the two labels
//! times a single basis element.

use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::ckgeom::KappaPair;
use crate::error::{Error, Result};
use crate::gentrig::{cosk, sink};
use crate::scalar::Real;

pub const BASIS_NAMES: [&str; 8] = ["1", "σ1", "σ2", "σ3", "iσ1", "iσ2", "σ̌3", "i"];

// (power of i, blade bitmask over e1 = bit 0, e2 = bit 1)
const BASIS: [(u8, u8); 8] = [
    (0, 0b00),
    (0, 0b01),
    (0, 0b10),
    (1, 0b11),
    (1, 0b01),
    (1, 0b10),
    (0, 0b11),
    (1, 0b00),
];

const GRADE: [u8; 8] = [0, 1, 1, 1, 2, 2, 2, 3];

/// `sign * kappa1^k1 * kappa2^k2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Monomial {
    pub sign: i8,
    pub k1: u8,
    pub k2: u8,
}

impl Monomial {
    pub fn eval<T: Real>(&self, kp: &KappaPair<T>) -> T {
        let s = if self.sign < 0 { -T::one() } else { T::one() };
        s * kp.kappa1.powi(self.k1 as i32) * kp.kappa2.powi(self.k2 as i32)
    }
}

/// `e_a e_b = coeff * e_target`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TableEntry {
    pub coeff: Monomial,
    pub target: usize,
}

fn basis_product(a: usize, b: usize) -> TableEntry {
    let (ia, ba) = BASIS[a];
    let (ib, bb) = BASIS[b];
    let mut sign: i8 = 1;
    let mut k1 = 0u8;
    let mut k2 = 0u8;
    if ia + ib == 2 {
        sign = -sign;
        k2 += 1;
    }
    // move e1 of the right blade past e2 of the left blade
    if ba & 0b10 != 0 && bb & 0b01 != 0 {
        sign = -sign;
    }
    if ba & bb & 0b10 != 0 {
        k1 += 1;
    }
    let blade = ba ^ bb;
    let ipow = (ia + ib) % 2;
    let target = BASIS
        .iter()
        .position(|&e| e == (ipow, blade))
        .expect("basis is closed under the product");
    TableEntry {
        coeff: Monomial { sign, k1, k2 },
        target,
    }
}

/// Multiplication table of the basis as monomials in the two labels.
pub fn symbolic_table() -> &'static [[TableEntry; 8]; 8] {
    static TABLE: OnceLock<[[TableEntry; 8]; 8]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = [[basis_product(0, 0); 8]; 8];
        for (a, row) in t.iter_mut().enumerate() {
            for (b, e) in row.iter_mut().enumerate() {
                *e = basis_product(a, b);
            }
        }
        t
    })
}

/// Structure constants `c[a][b][k]`: coefficient of `e_k` in `e_a e_b`.
pub fn build_product_table<T: Real>(kp: &KappaPair<T>) -> [[[T; 8]; 8]; 8] {
    let mut c = [[[T::zero(); 8]; 8]; 8];
    for (a, row) in symbolic_table().iter().enumerate() {
        for (b, e) in row.iter().enumerate() {
            c[a][b][e.target] = e.coeff.eval(kp);
        }
    }
    c
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Multivector<T> {
    pub kappa1: T,
    pub kappa2: T,
    pub coeffs: [T; 8],
}

impl<T: Real> Multivector<T> {
    pub fn new(kp: &KappaPair<T>, coeffs: [T; 8]) -> Self {
        Multivector {
            kappa1: kp.kappa1,
            kappa2: kp.kappa2,
            coeffs,
        }
    }

    pub fn zero(kp: &KappaPair<T>) -> Self {
        Self::new(kp, [T::zero(); 8])
    }

    pub fn scalar(kp: &KappaPair<T>, s: T) -> Self {
        Self::basis(kp, 0).scale(s)
    }

    pub fn basis(kp: &KappaPair<T>, k: usize) -> Self {
        let mut c = [T::zero(); 8];
        c[k] = T::one();
        Self::new(kp, c)
    }

    /// `a1 sigma1 + a2 sigma2 + a3 sigma3`.
    pub fn vector(kp: &KappaPair<T>, a: [T; 3]) -> Self {
        let z = T::zero();
        Self::new(kp, [z, a[0], a[1], a[2], z, z, z, z])
    }

    /// `n1 i sigma1 + n2 i sigma2 + n3 (1/i) sigma3`.
    pub fn bivector(kp: &KappaPair<T>, n: [T; 3]) -> Self {
        let z = T::zero();
        Self::new(kp, [z, z, z, z, n[0], n[1], n[2], z])
    }

    pub fn kp(&self) -> KappaPair<T> {
        KappaPair::new(self.kappa1, self.kappa2)
    }

    pub fn scale(&self, s: T) -> Self {
        let mut c = self.coeffs;
        for x in c.iter_mut() {
            *x = *x * s;
        }
        Multivector { coeffs: c, ..*self }
    }

    pub fn grade(&self, g: u8) -> Self {
        let mut c = self.coeffs;
        for (k, x) in c.iter_mut().enumerate() {
            if GRADE[k] != g {
                *x = T::zero();
            }
        }
        Multivector { coeffs: c, ..*self }
    }

    pub fn scalar_part(&self) -> T {
        self.coeffs[0]
    }

    pub fn vector_part(&self) -> [T; 3] {
        [self.coeffs[1], self.coeffs[2], self.coeffs[3]]
    }

    pub fn bivector_part(&self) -> [T; 3] {
        [self.coeffs[4], self.coeffs[5], self.coeffs[6]]
    }

    fn only_grades(&self, grades: &[u8]) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(k, x)| *x == T::zero() || grades.contains(&GRADE[k]))
    }

    pub fn is_vector(&self) -> bool {
        self.only_grades(&[1])
    }

    pub fn is_bivector(&self) -> bool {
        self.only_grades(&[2])
    }

    pub fn is_even(&self) -> bool {
        self.only_grades(&[0, 2])
    }

    /// Reversion: negates grades 2 and 3.
    pub fn reverse(&self) -> Self {
        let mut c = self.coeffs;
        for (k, x) in c.iter_mut().enumerate() {
            if GRADE[k] >= 2 {
                *x = -*x;
            }
        }
        Multivector { coeffs: c, ..*self }
    }

    pub fn max_abs(&self) -> T {
        self.coeffs.iter().fold(T::zero(), |a, x| a.max(x.abs()))
    }

    pub fn max_abs_diff(&self, o: &Self) -> T {
        (*self - *o).max_abs()
    }

    fn check(&self, o: &Self) -> Result<()> {
        if self.kappa1 == o.kappa1 && self.kappa2 == o.kappa2 {
            Ok(())
        } else {
            Err(Error::KappaMismatch {
                left: self.kappa1.to_f64_lossy(),
                right: o.kappa1.to_f64_lossy(),
            })
        }
    }

    fn mul_unchecked(&self, o: &Self) -> Self {
        let kp = self.kp();
        let table = symbolic_table();
        let mut c = [T::zero(); 8];
        for (a, &x) in self.coeffs.iter().enumerate() {
            if x == T::zero() {
                continue;
            }
            for (b, &y) in o.coeffs.iter().enumerate() {
                if y == T::zero() {
                    continue;
                }
                let e = table[a][b];
                c[e.target] = c[e.target] + e.coeff.eval(&kp) * x * y;
            }
        }
        Multivector { coeffs: c, ..*self }
    }
}

fn assert_same<T: Real>(a: &Multivector<T>, b: &Multivector<T>) {
    assert!(
        a.kappa1 == b.kappa1 && a.kappa2 == b.kappa2,
        "mixed kappa labels"
    );
}

impl<T: Real> Add for Multivector<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        assert_same(&self, &o);
        let mut c = self.coeffs;
        for (x, y) in c.iter_mut().zip(o.coeffs) {
            *x = *x + y;
        }
        Multivector { coeffs: c, ..self }
    }
}

impl<T: Real> Sub for Multivector<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<T: Real> Neg for Multivector<T> {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(-T::one())
    }
}

impl<T: Real> Mul for Multivector<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        assert_same(&self, &o);
        self.mul_unchecked(&o)
    }
}

pub fn mv_mul<T: Real>(a: &Multivector<T>, b: &Multivector<T>) -> Result<Multivector<T>> {
    a.check(b)?;
    Ok(a.mul_unchecked(b))
}

fn require_vector<T: Real>(a: &Multivector<T>) -> Result<()> {
    if a.is_vector() {
        Ok(())
    } else {
        Err(Error::NotAVector)
    }
}

/// `(ab - ba) / 2` for vectors.
pub fn wedge<T: Real>(a: &Multivector<T>, b: &Multivector<T>) -> Result<Multivector<T>> {
    a.check(b)?;
    require_vector(a)?;
    require_vector(b)?;
    Ok((*a * *b - *b * *a).scale(T::half()))
}

/// `(ab + ba) / 2 = a1 b1 + kappa1 a2 b2 + kappa1 kappa2 a3 b3`.
pub fn ck_dot<T: Real>(a: &Multivector<T>, b: &Multivector<T>) -> Result<T> {
    a.check(b)?;
    require_vector(a)?;
    require_vector(b)?;
    Ok((*a * *b + *b * *a).scale(T::half()).scalar_part())
}

/// `(aB - Ba) / 2` for a vector `a` and bivector `B`.
pub fn left_contract<T: Real>(a: &Multivector<T>, b: &Multivector<T>) -> Result<Multivector<T>> {
    a.check(b)?;
    if !a.is_vector() {
        return Err(Error::Grade { expected: "vector" });
    }
    if !b.is_bivector() {
        return Err(Error::Grade {
            expected: "bivector",
        });
    }
    Ok((*a * *b - *b * *a).scale(T::half()).grade(1))
}

/// `-B^2 = n1^2 kappa2 + n2^2 kappa1 kappa2 + n3^2 kappa1`.
pub fn bivector_kappa<T: Real>(b: &Multivector<T>) -> Result<T> {
    if !b.is_bivector() {
        return Err(Error::Grade {
            expected: "bivector",
        });
    }
    Ok(-(*b * *b).scalar_part())
}

/// Axis direction normalized with the Euclidean norm of its components.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UnitAxis<T> {
    pub n: [T; 3],
}

impl<T: Real> UnitAxis<T> {
    pub fn new(n: [T; 3]) -> Result<Self> {
        let r = (n[0] * n[0] + n[1] * n[1] + n[2] * n[2]).sqrt();
        if r == T::zero() || !r.is_finite() {
            return Err(Error::ZeroAxis);
        }
        Ok(UnitAxis {
            n: [n[0] / r, n[1] / r, n[2] / r],
        })
    }

    pub fn bivector(&self, kp: &KappaPair<T>) -> Multivector<T> {
        Multivector::bivector(kp, self.n)
    }
}

/// Even multivector used as a rotation operator.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Rotor<T>(pub Multivector<T>);

impl<T: Real> Rotor<T> {
    pub fn from_multivector(m: Multivector<T>) -> Result<Self> {
        if !m.is_even() {
            return Err(Error::Grade { expected: "even" });
        }
        Ok(Rotor(m))
    }

    /// Scalar part of `r reverse(r)`.
    pub fn norm(&self) -> T {
        (self.0 * self.0.reverse()).scalar_part()
    }

    pub fn reverse(&self) -> Self {
        Rotor(self.0.reverse())
    }
}

/// `exp(phi B / 2) = C(phi/2) + B S(phi/2)` with label `-B^2`.
pub fn rotor_from_bivector<T: Real>(b: &Multivector<T>, phi: T) -> Result<Rotor<T>> {
    let kappa = bivector_kappa(b)?;
    let half = phi * T::half();
    let kp = b.kp();
    Ok(Rotor(
        Multivector::scalar(&kp, cosk(kappa, half)) + b.scale(sink(kappa, half)),
    ))
}

pub fn rotor<T: Real>(kp: &KappaPair<T>, n: &UnitAxis<T>, phi: T) -> Rotor<T> {
    rotor_from_bivector(&n.bivector(kp), phi).expect("axis bivector has grade 2")
}

const ROTOR_TOL: f64 = 1e-10;

/// `reverse(r) a r`, projected onto the vectors.
pub fn sandwich<T: Real>(r: &Rotor<T>, a: &Multivector<T>) -> Result<Multivector<T>> {
    r.0.check(a)?;
    if !a.is_vector() {
        return Err(Error::Grade { expected: "vector" });
    }
    if !r.0.is_even() {
        return Err(Error::Grade { expected: "even" });
    }
    let n = r.norm();
    if (n - T::one()).abs() > T::lit(ROTOR_TOL) {
        return Err(Error::NotUnitRotor {
            norm: n.to_f64_lossy(),
        });
    }
    Ok((r.0.reverse() * *a * r.0).grade(1))
}

/// Sandwich rotation of `a` in the plane `a ^ b` and the closed form
/// `[C(phi) - (a ^ b) S(phi)] a`, with label `-(a ^ b)^2`.
pub fn in_plane_rotation_check<T: Real>(
    a: &Multivector<T>,
    b: &Multivector<T>,
    phi: T,
) -> Result<(Multivector<T>, Multivector<T>)> {
    let plane = wedge(a, b)?;
    if plane.max_abs() == T::zero() {
        return Err(Error::DegeneratePlane);
    }
    let kappa = bivector_kappa(&plane)?;
    let lhs = sandwich(&rotor_from_bivector(&plane, phi)?, a)?;
    let kp = a.kp();
    let unit = Multivector::scalar(&kp, cosk(kappa, phi)) - plane.scale(sink(kappa, phi));
    let rhs = (unit * *a).grade(1);
    Ok((lhs, rhs))
}

/// Vectors spanning a plane element for the bivector of `n`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PlaneElement<T> {
    pub e: Multivector<T>,
    pub f: Multivector<T>,
    /// `kappa1 = 0` and `n1 != 0`: the bivector is not a wedge product and
    /// the plane `sigma3 ^ sigma2` stands in for it.
    pub substituted: bool,
}

pub fn plane_element<T: Real>(kp: &KappaPair<T>, n: &UnitAxis<T>) -> PlaneElement<T> {
    let [n1, n2, n3] = n.n;
    let k1 = kp.kappa1;
    let v = |a: T, b: T, c: T| Multivector::vector(kp, [a, b, c]);
    let z = T::zero();
    if k1 == z {
        if n1 == z {
            return PlaneElement {
                e: v(T::one(), z, z),
                f: v(z, n3, n2),
                substituted: false,
            };
        }
        return PlaneElement {
            e: v(z, z, T::one()),
            f: v(z, T::one(), z),
            substituted: true,
        };
    }
    let a = v(k1 * n3, z, n1);
    let b = v(k1 * n2, -n1, z);
    let c = v(z, n3, n2);
    // a ^ c = k1 n3 B, b ^ a = k1 n1 B, b ^ c = k1 n2 B
    let choices = [(n3, a, c), (n1, b, a), (n2, b, c)];
    let (m, e, f) = choices
        .into_iter()
        .max_by(|x, y| {
            x.0.abs()
                .partial_cmp(&y.0.abs())
                .unwrap_or(std::cmp::Ordering::Equal)
        })
        .expect("three candidates");
    PlaneElement {
        e: e.scale(T::one() / (k1 * m)),
        f,
        substituted: false,
    }
}

/// Normal vector `i B`, or `n1 sigma1 + n2 sigma2` when that vanishes.
pub fn axis_vector<T: Real>(kp: &KappaPair<T>, n: &UnitAxis<T>) -> Multivector<T> {
    let b = n.bivector(kp);
    let ib = (Multivector::basis(kp, 7) * b).grade(1);
    if ib.max_abs() != T::zero() {
        ib
    } else {
        Multivector::vector(kp, [n.n[0], n.n[1], T::zero()])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ckgeom::sign_patterns;
    use crate::numerics::{expm, Matrix};
    use proptest::prelude::*;
    use std::f64::consts::PI;

    type Kp = KappaPair<f64>;
    type Mv = Multivector<f64>;

    fn e(kp: &Kp, k: usize) -> Mv {
        Mv::basis(kp, k)
    }

    #[test]
    fn generator_relations() {
        for kp in sign_patterns().into_iter().chain([Kp::new(0.3, -1.7)]) {
            let (k1, k2) = (kp.kappa1, kp.kappa2);
            let s = |k| e(&kp, k);
            assert_eq!(s(1) * s(1), Mv::scalar(&kp, 1.0));
            assert_eq!(s(2) * s(2), Mv::scalar(&kp, k1));
            assert_eq!(s(3) * s(3), Mv::scalar(&kp, k1 * k2));
            assert_eq!(s(1) * s(2), s(6));
            assert_eq!(s(2) * s(1), -s(6));
            assert_eq!(s(1) * s(2) * s(3), s(7).scale(-k1));
            assert_eq!(s(4) * s(4), Mv::scalar(&kp, -k2));
            assert_eq!(s(6) * s(6), Mv::scalar(&kp, -k1));
            assert_eq!(s(7) * s(7), Mv::scalar(&kp, -k2));
            // sigma3 sigma2 = -sigma2 sigma3 = kappa1 i sigma1
            assert_eq!(s(3) * s(2), s(4).scale(k1));
            assert_eq!(s(2) * s(3), s(4).scale(-k1));
            for k in 0..8 {
                assert_eq!(s(7) * s(k), s(k) * s(7));
            }
        }
    }

    #[test]
    fn symbolic_entries_are_monomials() {
        for row in symbolic_table() {
            for entry in row {
                assert!(entry.coeff.k1 <= 2 && entry.coeff.k2 <= 2);
                assert!(entry.coeff.sign == 1 || entry.coeff.sign == -1);
            }
        }
    }

    // 2x2 matrices over C_{kappa2} as [re, im] pairs
    type Cm = [[[f64; 2]; 2]; 2];

    fn embed(kp: &Kp, k: usize) -> Cm {
        let k1 = kp.kappa1;
        let z = [0.0, 0.0];
        let one = [1.0, 0.0];
        let i = [0.0, 1.0];
        match k {
            0 => [[one, z], [z, one]],
            1 => [[one, z], [z, [-1.0, 0.0]]],
            2 => [[z, one], [[k1, 0.0], z]],
            3 => [[z, i], [[0.0, -k1], z]],
            4 => [[i, z], [z, [0.0, -1.0]]],
            5 => [[z, i], [[0.0, k1], z]],
            6 => [[z, one], [[-k1, 0.0], z]],
            _ => [[i, z], [z, i]],
        }
    }

    fn flatten(m: &Cm) -> Vec<f64> {
        m.iter().flatten().flatten().copied().collect()
    }

    fn solve(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Vec<f64> {
        let n = b.len();
        for c in 0..n {
            let p = (c..n)
                .max_by(|&x, &y| a[x][c].abs().total_cmp(&a[y][c].abs()))
                .unwrap();
            a.swap(c, p);
            b.swap(c, p);
            for r in 0..n {
                if r != c {
                    let f = a[r][c] / a[c][c];
                    for k in c..n {
                        a[r][k] -= f * a[c][k];
                    }
                    b[r] -= f * b[c];
                }
            }
        }
        (0..n).map(|i| b[i] / a[i][i]).collect()
    }

    fn matrix_table(kp: &Kp) -> [[[f64; 8]; 8]; 8] {
        let cols: Vec<Vec<f64>> = (0..8).map(|k| flatten(&embed(kp, k))).collect();
        let a: Vec<Vec<f64>> = (0..8)
            .map(|r| (0..8).map(|c| cols[c][r]).collect())
            .collect();
        let mut t = [[[0.0; 8]; 8]; 8];
        for x in 0..8 {
            for y in 0..8 {
                let p = crate::numerics::cmat2_mul(kp.kappa2, &embed(kp, x), &embed(kp, y));
                let coeffs = solve(a.clone(), flatten(&p));
                t[x][y].copy_from_slice(&coeffs);
            }
        }
        t
    }

    #[test]
    fn table_matches_matrix_model() {
        for kp in [
            Kp::new(1.0, 1.0),
            Kp::new(-1.0, 0.0),
            Kp::new(0.7, -2.2),
            Kp::new(-1.3, 0.4),
        ] {
            let t = build_product_table(&kp);
            let m = matrix_table(&kp);
            for x in 0..8 {
                for y in 0..8 {
                    for z in 0..8 {
                        assert!(
                            (t[x][y][z] - m[x][y][z]).abs() < 1e-12,
                            "{x} {y} {z} {kp:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn degenerate_limit_is_polynomial() {
        // at kappa1 = 0 the table equals the limit of the nearby tables
        for k2 in [1.0, 0.0, -1.0] {
            let t0 = build_product_table(&Kp::new(0.0, k2));
            let t = build_product_table(&Kp::new(1e-9, k2));
            for x in 0..8 {
                for y in 0..8 {
                    for z in 0..8 {
                        assert!((t0[x][y][z] - t[x][y][z]).abs() < 1e-8);
                    }
                }
            }
        }
    }

    #[test]
    fn wedge_examples() {
        let kp = Kp::new(0.6, -1.1);
        assert_eq!(wedge(&e(&kp, 1), &e(&kp, 2)).unwrap(), e(&kp, 6));
        let a = Mv::vector(&kp, [0.3, -1.0, 2.0]);
        assert_eq!(wedge(&a, &a).unwrap().max_abs(), 0.0);
        let g = Kp::new(0.0, 0.0);
        let w = wedge(&(e(&g, 1) + e(&g, 2)), &e(&g, 3)).unwrap();
        assert_eq!(w, e(&g, 5));
        assert_eq!(
            wedge(&e(&kp, 4), &e(&kp, 1)).unwrap_err().code(),
            "NotAVector"
        );
    }

    #[test]
    fn wedge_determinant_form() {
        let kp = Kp::new(0.8, -0.3);
        let (a, b) = ([0.3, -1.0, 2.0], [1.5, 0.2, -0.7]);
        let w = wedge(&Mv::vector(&kp, a), &Mv::vector(&kp, b)).unwrap();
        // first row (-kappa1 i sigma1, -i sigma2, (1/i) sigma3)
        let want = Mv::bivector(
            &kp,
            [
                -kp.kappa1 * (a[1] * b[2] - a[2] * b[1]),
                -(a[2] * b[0] - a[0] * b[2]),
                a[0] * b[1] - a[1] * b[0],
            ],
        );
        assert!(w.max_abs_diff(&want) < 1e-15);
    }

    #[test]
    fn dot_examples() {
        let kp = Kp::new(0.6, -1.1);
        assert_eq!(ck_dot(&e(&kp, 2), &e(&kp, 2)).unwrap(), 0.6);
        assert_eq!(ck_dot(&e(&kp, 1), &e(&kp, 3)).unwrap(), 0.0);
        let kp = Kp::new(1.0, -1.0);
        assert_eq!(ck_dot(&e(&kp, 3), &e(&kp, 3)).unwrap(), -1.0);
    }

    #[test]
    fn contraction_examples() {
        let kp = Kp::new(0.6, -1.1);
        let (s1, s2) = (e(&kp, 1), e(&kp, 2));
        assert_eq!(left_contract(&s1, &wedge(&s1, &s2).unwrap()).unwrap(), s2);
        let g = Kp::new(0.0, 1.0);
        let (a, c) = (e(&g, 2), Mv::vector(&g, [1.0, 0.5, -2.0]));
        let r = left_contract(&a, &wedge(&a, &c).unwrap()).unwrap();
        assert_eq!(r.max_abs(), 0.0);
        assert_eq!(left_contract(&s1, &s2).unwrap_err().code(), "GradeError");
    }

    #[test]
    fn bivector_kappa_examples() {
        assert_eq!(bivector_kappa(&e(&Kp::new(1.0, 1.0), 4)).unwrap(), 1.0);
        assert_eq!(bivector_kappa(&e(&Kp::new(0.0, 0.0), 6)).unwrap(), 0.0);
        assert_eq!(bivector_kappa(&e(&Kp::new(1.0, -1.0), 5)).unwrap(), -1.0);
        let kp = Kp::new(0.7, -0.4);
        let n = [0.2, -0.5, 1.3];
        let want =
            n[0] * n[0] * kp.kappa2 + n[1] * n[1] * kp.kappa1 * kp.kappa2 + n[2] * n[2] * kp.kappa1;
        assert!((bivector_kappa(&Mv::bivector(&kp, n)).unwrap() - want).abs() < 1e-15);
        assert_eq!(bivector_kappa(&e(&kp, 1)).unwrap_err().code(), "GradeError");
    }

    // exp(phi B / 2) from the 8x8 left-multiplication matrix.
    fn rotor_oracle(b: &Mv, phi: f64) -> Mv {
        let mut l: Matrix<8> = [[0.0; 8]; 8];
        let kp = b.kp();
        for col in 0..8 {
            let image = *b * e(&kp, col);
            for row in 0..8 {
                l[row][col] = 0.5 * phi * image.coeffs[row];
            }
        }
        let x = expm(&l);
        let mut c = [0.0; 8];
        for (row, v) in c.iter_mut().enumerate() {
            *v = x[row][0];
        }
        Mv::new(&kp, c)
    }

    #[test]
    fn rotor_examples() {
        let kp = Kp::new(1.0, 1.0);
        let n = UnitAxis::new([1.0, 0.0, 0.0]).unwrap();
        assert_eq!(rotor(&kp, &n, 0.0).0, Mv::scalar(&kp, 1.0));
        assert!(rotor(&kp, &n, PI).0.max_abs_diff(&e(&kp, 4)) < 1e-15);
        let g = Kp::new(0.0, 0.0);
        let n = UnitAxis::new([0.3, -0.4, 1.2]).unwrap();
        let phi = 0.9;
        let want = Mv::scalar(&g, 1.0) + n.bivector(&g).scale(phi / 2.0);
        assert_eq!(rotor(&g, &n, phi).0, want);
    }

    #[test]
    fn rotor_matches_series() {
        for kp in sign_patterns() {
            for n in [
                [1.0, 0.0, 0.0],
                [0.0, 1.0, 0.0],
                [0.0, 0.0, 1.0],
                [0.3, -0.5, 0.8],
            ] {
                let n = UnitAxis::new(n).unwrap();
                for phi in [-2.0, 0.4, 1.9] {
                    let r = rotor(&kp, &n, phi);
                    assert!(r.0.max_abs_diff(&rotor_oracle(&n.bivector(&kp), phi)) < 1e-10);
                    assert!((r.norm() - 1.0).abs() < 1e-10);
                }
            }
        }
    }

    #[test]
    fn sandwich_examples() {
        let theta: f64 = 0.7;
        for kp in sign_patterns() {
            let r = rotor(&kp, &UnitAxis::new([1.0, 0.0, 0.0]).unwrap(), theta);
            let got = sandwich(&r, &e(&kp, 2)).unwrap();
            let want =
                e(&kp, 2).scale(cosk(kp.kappa2, theta)) - e(&kp, 3).scale(sink(kp.kappa2, theta));
            assert!(got.max_abs_diff(&want) < 1e-15);

            let r = rotor(&kp, &UnitAxis::new([0.0, 0.0, 1.0]).unwrap(), theta);
            let got = sandwich(&r, &e(&kp, 1)).unwrap();
            let want =
                e(&kp, 1).scale(cosk(kp.kappa1, theta)) + e(&kp, 2).scale(sink(kp.kappa1, theta));
            assert!(got.max_abs_diff(&want) < 1e-15);

            let a = Mv::vector(&kp, [0.2, 1.0, -0.5]);
            let r0 = rotor(&kp, &UnitAxis::new([0.3, 0.1, 0.2]).unwrap(), 0.0);
            assert_eq!(sandwich(&r0, &a).unwrap(), a);
        }
    }

    #[test]
    fn sandwich_errors() {
        let kp = Kp::new(1.0, 1.0);
        let r = Rotor(Mv::scalar(&kp, 2.0));
        assert_eq!(sandwich(&r, &e(&kp, 1)).unwrap_err().code(), "NotUnitRotor");
        let r = Rotor(Mv::scalar(&kp, 1.0));
        assert_eq!(sandwich(&r, &e(&kp, 4)).unwrap_err().code(), "GradeError");
        assert_eq!(
            Rotor::from_multivector(e(&kp, 1)).unwrap_err().code(),
            "GradeError"
        );
    }

    #[test]
    fn in_plane_examples() {
        let g = Kp::new(0.0, 0.0);
        let beta = 0.35;
        let (lhs, rhs) = in_plane_rotation_check(&e(&g, 1), &e(&g, 3), beta).unwrap();
        let want = e(&g, 1) + e(&g, 3).scale(beta);
        assert!(lhs.max_abs_diff(&want) < 1e-15);
        assert!(rhs.max_abs_diff(&want) < 1e-15);

        let kp = Kp::new(1.0, -1.0);
        let (a, b) = (
            Mv::vector(&kp, [0.2, 1.0, -0.5]),
            Mv::vector(&kp, [1.0, 0.1, 0.3]),
        );
        let (lhs, rhs) = in_plane_rotation_check(&a, &b, 0.0).unwrap();
        assert_eq!((lhs, rhs), (a, a));
        let (lhs, rhs) = in_plane_rotation_check(&e(&kp, 2), &e(&kp, 3), 1.234).unwrap();
        assert!(lhs.max_abs_diff(&rhs) < 1e-12);
        let err = in_plane_rotation_check(&a, &a.scale(2.0), 0.5).unwrap_err();
        assert_eq!(err.code(), "DegeneratePlane");
    }

    #[test]
    fn plane_elements() {
        for kp in sign_patterns().into_iter().chain([Kp::new(0.4, 2.0)]) {
            for n in [
                [1.0, 0.0, 0.0],
                [0.0, 1.0, 0.0],
                [0.0, 0.0, 1.0],
                [0.3, -0.5, 0.8],
                [0.0, 0.6, -0.8],
            ] {
                let n = UnitAxis::new(n).unwrap();
                let p = plane_element(&kp, &n);
                let w = wedge(&p.e, &p.f).unwrap();
                if p.substituted {
                    assert!(kp.kappa1 == 0.0 && n.n[0] != 0.0);
                } else {
                    assert!(w.max_abs_diff(&n.bivector(&kp)) < 1e-14, "{kp:?} {n:?}");
                }
            }
        }
    }

    #[test]
    fn axis_is_fixed_and_normal() {
        for kp in sign_patterns() {
            for n in [
                [1.0, 0.0, 0.0],
                [0.0, 1.0, 0.0],
                [0.0, 0.0, 1.0],
                [0.3, -0.5, 0.8],
            ] {
                let n = UnitAxis::new(n).unwrap();
                let axis = axis_vector(&kp, &n);
                assert!(axis.max_abs() > 0.0);
                let r = rotor(&kp, &n, 1.1);
                assert!(sandwich(&r, &axis).unwrap().max_abs_diff(&axis) < 1e-14);
                let p = plane_element(&kp, &n);
                if !p.substituted {
                    assert!(ck_dot(&axis, &p.e).unwrap().abs() < 1e-14);
                    assert!(ck_dot(&axis, &p.f).unwrap().abs() < 1e-14);
                }
            }
        }
        // i B = -kappa2 n1 sigma1 - kappa2 n2 sigma2 + n3 sigma3
        let kp = Kp::new(0.5, 2.0);
        let n = UnitAxis::new([0.48, 0.6, 0.64]).unwrap();
        let want = Mv::vector(&kp, [-2.0 * n.n[0], -2.0 * n.n[1], n.n[2]]);
        assert!(axis_vector(&kp, &n).max_abs_diff(&want) < 1e-15);
        let g = Kp::new(1.0, 0.0);
        let n = UnitAxis::new([0.6, 0.8, 0.0]).unwrap();
        assert_eq!(axis_vector(&g, &n), Mv::vector(&g, [0.6, 0.8, 0.0]));
    }

    #[test]
    fn bivectors_realize_the_rotation_algebra() {
        for kp in sign_patterns().into_iter().chain([Kp::new(0.3, -2.0)]) {
            let h = e(&kp, 6).scale(0.5);
            let p = e(&kp, 5).scale(0.5);
            let k = e(&kp, 4).scale(0.5);
            let br = |a: Mv, b: Mv| a * b - b * a;
            assert_eq!(br(h, p), k.scale(kp.kappa1));
            assert_eq!(br(k, h), p);
            assert_eq!(br(k, p), h.scale(-kp.kappa2));
        }
    }

    #[test]
    fn rescaled_bivector_gives_same_rotation() {
        let kp = Kp::new(-0.7, 0.4);
        let (a, b) = (
            Mv::vector(&kp, [0.2, 1.0, -0.5]),
            Mv::vector(&kp, [1.0, 0.1, 0.3]),
        );
        let plane = wedge(&a, &b).unwrap();
        let v = Mv::vector(&kp, [0.5, -0.4, 0.9]);
        let theta = 0.37;
        for n in [2.0, -3.0, 0.5] {
            let r1 = rotor_from_bivector(&plane.scale(n), theta).unwrap();
            let r2 = rotor_from_bivector(&plane, n * theta).unwrap();
            assert!(
                sandwich(&r1, &v)
                    .unwrap()
                    .max_abs_diff(&sandwich(&r2, &v).unwrap())
                    < 1e-12
            );
        }
    }

    #[test]
    fn mixed_labels() {
        let a = e(&Kp::new(1.0, 1.0), 1);
        let b = e(&Kp::new(1.0, 0.0), 1);
        assert_eq!(mv_mul(&a, &b).unwrap_err().code(), "KappaMismatch");
    }

    #[test]
    fn single_precision_product() {
        let kp = KappaPair::new(0.5f32, -1.0);
        let s = Multivector::basis(&kp, 3);
        assert_eq!((s * s).scalar_part(), -0.5);
    }

    fn mv_strategy(kp: Kp) -> impl Strategy<Value = Mv> {
        proptest::array::uniform8(-1.0..1.0f64).prop_map(move |c| Mv::new(&kp, c))
    }

    fn vec_strategy(kp: Kp) -> impl Strategy<Value = Mv> {
        proptest::array::uniform3(-1.0..1.0f64).prop_map(move |c| Mv::vector(&kp, c))
    }

    fn pattern() -> impl Strategy<Value = Kp> {
        (0usize..9).prop_map(|i| sign_patterns()[i])
    }

    proptest! {
        #[test]
        fn associativity(kp in pattern(), s in proptest::array::uniform3(proptest::array::uniform8(-1.0..1.0f64))) {
            let [a, b, c] = s.map(|x| Mv::new(&kp, x));
            prop_assert!(((a * b) * c).max_abs_diff(&(a * (b * c))) < 1e-10);
        }

        #[test]
        fn geometric_product_splits(kp in pattern(), a in vec_strategy(Kp::new(1.0, 1.0)), b in vec_strategy(Kp::new(1.0, 1.0))) {
            let a = Mv::new(&kp, a.coeffs);
            let b = Mv::new(&kp, b.coeffs);
            let split = Mv::scalar(&kp, ck_dot(&a, &b).unwrap()) + wedge(&a, &b).unwrap();
            prop_assert!((a * b).max_abs_diff(&split) < 1e-15);
        }

        #[test]
        fn contraction_expands(kp in pattern(), v in proptest::array::uniform3(proptest::array::uniform3(-1.0..1.0f64))) {
            let [a, b, c] = v.map(|x| Mv::vector(&kp, x));
            let lhs = left_contract(&a, &wedge(&b, &c).unwrap()).unwrap();
            let rhs = c.scale(ck_dot(&a, &b).unwrap()) - b.scale(ck_dot(&a, &c).unwrap());
            prop_assert!(lhs.max_abs_diff(&rhs) < 1e-12);
            let jacobi = left_contract(&c, &wedge(&b, &a).unwrap()).unwrap()
                + left_contract(&b, &wedge(&a, &c).unwrap()).unwrap()
                + left_contract(&a, &wedge(&c, &b).unwrap()).unwrap();
            prop_assert!(jacobi.max_abs() < 1e-12);
        }

        #[test]
        fn sandwich_preserves_length(kp in pattern(), n in proptest::array::uniform3(-1.0..1.0f64), phi in -3.0..3.0f64, a in proptest::array::uniform3(-1.0..1.0f64)) {
            let n = UnitAxis::new(n);
            prop_assume!(n.is_ok());
            let n = n.unwrap();
            let a = Mv::vector(&kp, a);
            let r = rotor(&kp, &n, phi);
            let b = sandwich(&r, &a).unwrap();
            let scale = 1.0 + r.0.max_abs().powi(4);
            prop_assert!((ck_dot(&b, &b).unwrap() - ck_dot(&a, &a).unwrap()).abs() < 1e-10 * scale);
        }

        #[test]
        fn reverse_is_an_anti_automorphism(kp in pattern(), a in mv_strategy(Kp::new(1.0, 1.0)), b in mv_strategy(Kp::new(1.0, 1.0))) {
            let a = Mv::new(&kp, a.coeffs);
            let b = Mv::new(&kp, b.coeffs);
            prop_assert!((a * b).reverse().max_abs_diff(&(b.reverse() * a.reverse())) < 1e-12);
        }
    }
}
