//! The conformal algebra `sl(2, C_kappa2)`: the rotation generators `H, P, K`
//! together with the dilation `D` and the inversions `G1`, `G2`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::ckgeom::{Generator, KappaPair};
use crate::error::{Error, Result};
use crate::gencomplex::{gc_div, gc_mul, GenComplex, MoebiusMap};
use crate::scalar::Real;
use crate::spin::{sl2_generators, spin_exp, spin_moebius, Mat2C};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ConformalTag {
    H,
    P,
    K,
    G1,
    G2,
    D,
}

impl ConformalTag {
    pub const ALL: [ConformalTag; 6] = [
        ConformalTag::H,
        ConformalTag::P,
        ConformalTag::K,
        ConformalTag::G1,
        ConformalTag::G2,
        ConformalTag::D,
    ];

    pub fn label(self) -> &'static str {
        match self {
            ConformalTag::H => "H",
            ConformalTag::P => "P",
            ConformalTag::K => "K",
            ConformalTag::G1 => "G1",
            ConformalTag::G2 => "G2",
            ConformalTag::D => "D",
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }

    fn rotation(self) -> Option<Generator> {
        match self {
            ConformalTag::H => Some(Generator::H),
            ConformalTag::P => Some(Generator::P),
            ConformalTag::K => Some(Generator::K),
            _ => None,
        }
    }
}

impl fmt::Display for ConformalTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for ConformalTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ConformalTag::ALL
            .into_iter()
            .find(|t| t.label().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConformalGenerator<T> {
    pub tag: ConformalTag,
    pub matrix: Mat2C<T>,
}

pub fn conformal_generator<T: Real>(kp: &KappaPair<T>, tag: ConformalTag) -> ConformalGenerator<T> {
    let k2 = kp.kappa2;
    let z = GenComplex::zero(k2);
    let matrix = match tag.rotation() {
        Some(g) => sl2_generators(kp).get(g),
        None => match tag {
            ConformalTag::G1 => Mat2C::new(z, z, GenComplex::one(k2), z),
            ConformalTag::G2 => Mat2C::new(z, z, GenComplex::i(k2), z),
            _ => Mat2C::from_real(k2, [[T::half(), T::zero()], [T::zero(), -T::half()]]),
        },
    };
    ConformalGenerator { tag, matrix }
}

/// `H, P, K, G1, G2, D` in that order.
pub fn conformal_basis<T: Real>(kp: &KappaPair<T>) -> [ConformalGenerator<T>; 6] {
    ConformalTag::ALL.map(|t| conformal_generator(kp, t))
}

const DECOMP_TOL: f64 = 1e-12;

/// Coordinates of a traceless matrix in the basis `H, P, K, G1, G2, D`.
pub fn decompose<T: Real>(kp: &KappaPair<T>, m: &Mat2C<T>) -> Result<[T; 6]> {
    let [[m00, m01], [m10, m11]] = m.0;
    let two = T::two();
    let d = two * m00.re;
    let k = two * m00.im;
    let h = two * m01.re;
    let p = two * m01.im;
    let g1 = m10.re + kp.kappa1 * h * T::half();
    let g2 = m10.im - kp.kappa1 * p * T::half();
    let coeffs = [h, p, k, g1, g2, d];
    let rebuilt = recompose(kp, &coeffs);
    let residual = rebuilt.max_abs_diff(m) + (m00 + m11).re.abs().max((m00 + m11).im.abs());
    if residual.is_nan() || residual > T::lit(DECOMP_TOL) * (T::one() + m.max_abs()) {
        return Err(Error::DecompositionFailure {
            residual: residual.to_f64_lossy(),
        });
    }
    Ok(coeffs)
}

pub fn recompose<T: Real>(kp: &KappaPair<T>, coeffs: &[T; 6]) -> Mat2C<T> {
    conformal_basis(kp)
        .iter()
        .zip(coeffs)
        .fold(Mat2C::zero(kp.kappa2), |acc, (g, &c)| {
            acc + g.matrix.scale(c)
        })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Bracket<T> {
    pub matrix: Mat2C<T>,
    pub coeffs: [T; 6],
}

pub fn conformal_bracket<T: Real>(
    kp: &KappaPair<T>,
    x: ConformalTag,
    y: ConformalTag,
) -> Result<Bracket<T>> {
    let a = conformal_generator(kp, x).matrix;
    let b = conformal_generator(kp, y).matrix;
    let matrix = a.commutator(&b);
    let coeffs = decompose(kp, &matrix)?;
    Ok(Bracket { matrix, coeffs })
}

/// `c[x][y][z]`: coefficient of generator `z` in `[x, y]`.
pub type StructureConstants<T> = [[[T; 6]; 6]; 6];

pub fn structure_constants<T: Real>(kp: &KappaPair<T>) -> Result<StructureConstants<T>> {
    let mut c = [[[T::zero(); 6]; 6]; 6];
    for x in ConformalTag::ALL {
        for y in ConformalTag::ALL {
            c[x.index()][y.index()] = conformal_bracket(kp, x, y)?.coeffs;
        }
    }
    Ok(c)
}

/// Largest coefficient of `[x,[y,z]] + [y,[z,x]] + [z,[x,y]]` over all triples.
pub fn jacobi_residual<T: Real>(c: &StructureConstants<T>) -> T {
    let bracket = |u: &[T; 6], v: &[T; 6]| {
        let mut out = [T::zero(); 6];
        for i in 0..6 {
            for j in 0..6 {
                for (k, o) in out.iter_mut().enumerate() {
                    *o = *o + u[i] * v[j] * c[i][j][k];
                }
            }
        }
        out
    };
    let unit = |i: usize| {
        let mut e = [T::zero(); 6];
        e[i] = T::one();
        e
    };
    let mut worst = T::zero();
    for x in 0..6 {
        for y in 0..6 {
            for z in 0..6 {
                let (ex, ey, ez) = (unit(x), unit(y), unit(z));
                let a = bracket(&ex, &bracket(&ey, &ez));
                let b = bracket(&ey, &bracket(&ez, &ex));
                let d = bracket(&ez, &bracket(&ex, &ey));
                for k in 0..6 {
                    worst = worst.max((a[k] + b[k] + d[k]).abs());
                }
            }
        }
    }
    worst
}

/// `sign * kappa1^k1 * kappa2^k2 * gen`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Term {
    pub sign: i8,
    pub k1: u8,
    pub k2: u8,
    pub gen: ConformalTag,
}

/// An entry of the printed bracket table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClaimedEntry {
    Combination(&'static [Term]),
    Undefined(&'static str),
}

const fn t(sign: i8, k1: u8, k2: u8, gen: ConformalTag) -> Term {
    Term { sign, k1, k2, gen }
}

use ConformalTag as C;

const ZERO: ClaimedEntry = ClaimedEntry::Combination(&[]);

/// The structure-constant table as printed, row `[row, col]`.
pub const CLAIMED_TABLE: [[ClaimedEntry; 6]; 6] = {
    use ClaimedEntry::{Combination as L, Undefined as U};
    [
        [
            ZERO,
            L(&[t(1, 1, 0, C::K)]),
            L(&[t(-1, 0, 0, C::P)]),
            L(&[t(1, 0, 0, C::D)]),
            L(&[t(1, 0, 0, C::K)]),
            L(&[t(-1, 0, 0, C::H), t(-1, 1, 0, C::G1)]),
        ],
        [
            L(&[t(-1, 1, 0, C::K)]),
            ZERO,
            L(&[t(1, 0, 1, C::H)]),
            L(&[t(1, 0, 0, C::K)]),
            L(&[t(-1, 0, 1, C::D)]),
            L(&[t(-1, 0, 0, C::P), t(1, 1, 0, C::G2)]),
        ],
        [
            L(&[t(1, 0, 0, C::P)]),
            L(&[t(-1, 0, 1, C::H)]),
            ZERO,
            U("-S2"),
            L(&[t(1, 0, 1, C::G2)]),
            ZERO,
        ],
        [
            L(&[t(-1, 0, 0, C::D)]),
            L(&[t(-1, 0, 0, C::K)]),
            U("S2"),
            ZERO,
            ZERO,
            L(&[t(1, 0, 0, C::G1)]),
        ],
        [
            L(&[t(-1, 0, 0, C::K)]),
            L(&[t(1, 0, 1, C::D)]),
            L(&[t(-1, 0, 1, C::G2)]),
            ZERO,
            ZERO,
            L(&[t(1, 0, 0, C::G2)]),
        ],
        [
            L(&[t(1, 0, 0, C::H), t(1, 1, 0, C::G1)]),
            L(&[t(1, 0, 0, C::P), t(-1, 1, 0, C::G2)]),
            ZERO,
            L(&[t(-1, 0, 0, C::G1)]),
            L(&[t(-1, 0, 0, C::G2)]),
            ZERO,
        ],
    ]
};

impl ClaimedEntry {
    pub fn eval<T: Real>(&self, kp: &KappaPair<T>) -> Option<[T; 6]> {
        match self {
            ClaimedEntry::Undefined(_) => None,
            ClaimedEntry::Combination(terms) => {
                let mut c = [T::zero(); 6];
                for term in terms.iter() {
                    let s = if term.sign < 0 { -T::one() } else { T::one() };
                    c[term.gen.index()] = c[term.gen.index()]
                        + s * kp.kappa1.powi(term.k1 as i32) * kp.kappa2.powi(term.k2 as i32);
                }
                Some(c)
            }
        }
    }

    pub fn render(&self) -> String {
        match self {
            ClaimedEntry::Undefined(s) => (*s).to_string(),
            ClaimedEntry::Combination(terms) => {
                if terms.is_empty() {
                    return "0".into();
                }
                let mut out = String::new();
                for (n, term) in terms.iter().enumerate() {
                    let neg = term.sign < 0;
                    match (n, neg) {
                        (0, true) => out.push('-'),
                        (0, false) => {}
                        (_, true) => out.push_str(" - "),
                        (_, false) => out.push_str(" + "),
                    }
                    for (name, p) in [("k1", term.k1), ("k2", term.k2)] {
                        for _ in 0..p {
                            out.push_str(name);
                            out.push(' ');
                        }
                    }
                    out.push_str(term.gen.label());
                }
                out
            }
        }
    }
}

/// Linear combination with numeric coefficients, e.g. `-H - 2 G1`.
pub fn render_combination<T: Real>(c: &[T; 6]) -> String {
    let mut out = String::new();
    for (tag, &x) in ConformalTag::ALL.iter().zip(c) {
        if x == T::zero() {
            continue;
        }
        let neg = x < T::zero();
        let mag = x.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mag != T::one() {
            out.push_str(&format!("{} ", mag));
        }
        out.push_str(tag.label());
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DiffStatus {
    Match,
    Mismatch,
    UndefinedSymbol,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiffEntry<T> {
    pub row: ConformalTag,
    pub col: ConformalTag,
    pub claimed: String,
    pub computed: String,
    pub computed_coeffs: [T; 6],
    pub status: DiffStatus,
}

const DIFF_TOL: f64 = 1e-12;

/// Entry-by-entry comparison of the printed table with the computed brackets.
pub fn claimed_table_diff<T: Real>(kp: &KappaPair<T>) -> Result<Vec<DiffEntry<T>>> {
    let c = structure_constants(kp)?;
    let mut out = Vec::with_capacity(36);
    for x in ConformalTag::ALL {
        for y in ConformalTag::ALL {
            let claimed = CLAIMED_TABLE[x.index()][y.index()];
            let computed = c[x.index()][y.index()];
            let status = match claimed.eval(kp) {
                None => DiffStatus::UndefinedSymbol,
                Some(v) => {
                    let d = v
                        .iter()
                        .zip(&computed)
                        .fold(T::zero(), |m, (a, b)| m.max((*a - *b).abs()));
                    if d <= T::lit(DIFF_TOL) {
                        DiffStatus::Match
                    } else {
                        DiffStatus::Mismatch
                    }
                }
            };
            out.push(DiffEntry {
                row: x,
                col: y,
                claimed: claimed.render(),
                computed: render_combination(&computed),
                computed_coeffs: computed,
                status,
            });
        }
    }
    Ok(out)
}

/// `exp(t X)` for a conformal generator.
pub fn conformal_exp<T: Real>(kp: &KappaPair<T>, tag: ConformalTag, t: T) -> Mat2C<T> {
    let k2 = kp.kappa2;
    let (z, one) = (GenComplex::zero(k2), GenComplex::one(k2));
    match tag.rotation() {
        Some(g) => spin_exp(kp, g, t).to_matrix(),
        None => match tag {
            ConformalTag::G1 => Mat2C::new(one, z, GenComplex::real(t, k2), one),
            ConformalTag::G2 => Mat2C::new(one, z, GenComplex::new(T::zero(), t, k2), one),
            _ => {
                let h = t * T::half();
                Mat2C::from_real(k2, [[h.exp(), T::zero()], [T::zero(), (-h).exp()]])
            }
        },
    }
}

pub fn matrix_moebius<T: Real>(m: &Mat2C<T>) -> MoebiusMap<T> {
    let [[a, b], [c, d]] = m.0;
    MoebiusMap { a, b, c, d }
}

pub fn conformal_moebius<T: Real>(kp: &KappaPair<T>, tag: ConformalTag, t: T) -> MoebiusMap<T> {
    match tag.rotation() {
        Some(g) => spin_moebius(&spin_exp(kp, g, t)),
        None => matrix_moebius(&conformal_exp(kp, tag, t)),
    }
}

/// Closed forms `w/(tw+1)`, `w/(tiw+1)` and `e^t w` for `G1`, `G2`, `D`.
pub fn moebius_closed_form<T: Real>(
    tag: ConformalTag,
    t: T,
    w: GenComplex<T>,
) -> Result<GenComplex<T>> {
    let k = w.kappa;
    let one = GenComplex::one(k);
    match tag {
        ConformalTag::G1 => gc_div(w, w.scale(t) + one),
        ConformalTag::G2 => gc_div(w, gc_mul(GenComplex::new(T::zero(), t, k), w)? + one),
        ConformalTag::D => Ok(w.scale(t.exp())),
        other => Err(Error::UnknownName(other.label().to_string())),
    }
}

/// Whether `m` moves the sample points by a common offset.
pub fn acts_as_translation<T: Real>(
    m: &MoebiusMap<T>,
    samples: &[GenComplex<T>],
    tol: T,
) -> Result<bool> {
    let mut offset: Option<GenComplex<T>> = None;
    for &w in samples {
        let d = m.apply(w)? - w;
        match offset {
            None => offset = Some(d),
            Some(o) => {
                if o.dist_max(d) > tol {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
