//! Kinematical Lie algebras of two-dimensional spacetimes.
//!
//! A three-dimensional algebra on the boost `K`, time translation `H` and
//! space translation `P` is fixed by
//! `[K, H] = p P`, `[K, P] = h H`, `[H, P] = k K`,
//! and after rescaling the generators each constant is one of `-1, 0, 1`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{Real, Sign};

/// Normalized structure constants `(k, h, p)`, ordered lexicographically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BracketTriple {
    pub k: i8,
    pub h: i8,
    pub p: i8,
}

impl BracketTriple {
    pub const fn new(k: i8, h: i8, p: i8) -> Self {
        BracketTriple { k, h, p }
    }

    /// Image under the parity/time-reversal pairing `K, H, P -> -K, -H, -P`.
    pub fn image(self) -> Self {
        BracketTriple::new(-self.k, -self.h, -self.p)
    }

    /// Matrix of `ad K` on `span{H, P}`, columns are the images of `H` and `P`.
    pub fn ad_k(self) -> [[i8; 2]; 2] {
        [[0, self.h], [self.p, 0]]
    }

    /// `ad X` for `X` in the basis `(K, H, P)`, as 3x3 matrices.
    pub fn adjoint(self) -> [[[i64; 3]; 3]; 3] {
        let (k, h, p) = (self.k as i64, self.h as i64, self.p as i64);
        // c[a][b] = coordinates of [e_a, e_b]
        let mut c = [[[0i64; 3]; 3]; 3];
        c[0][1] = [0, 0, p];
        c[1][0] = [0, 0, -p];
        c[0][2] = [0, h, 0];
        c[2][0] = [0, -h, 0];
        c[1][2] = [k, 0, 0];
        c[2][1] = [-k, 0, 0];
        let mut ad = [[[0i64; 3]; 3]; 3];
        for a in 0..3 {
            for b in 0..3 {
                for r in 0..3 {
                    ad[a][r][b] = c[a][b][r];
                }
            }
        }
        ad
    }

    /// Killing form `B(X, Y) = tr(ad X ad Y)`.
    pub fn killing_form(self) -> [[i64; 3]; 3] {
        let ad = self.adjoint();
        let mut b = [[0i64; 3]; 3];
        for x in 0..3 {
            for y in 0..3 {
                let mut tr = 0;
                for i in 0..3 {
                    for j in 0..3 {
                        tr += ad[x][i][j] * ad[y][j][i];
                    }
                }
                b[x][y] = tr;
            }
        }
        b
    }
}

impl fmt::Display for BracketTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.k, self.h, self.p)
    }
}

/// All 27 triples in lexicographic order.
pub fn enumerate_all() -> Vec<BracketTriple> {
    let mut out = Vec::with_capacity(27);
    for k in -1..=1 {
        for h in -1..=1 {
            for p in -1..=1 {
                out.push(BracketTriple::new(k, h, p));
            }
        }
    }
    out
}

/// Boosts generate a non-compact group unless `p h = -1`.
pub fn is_kinematical(t: BracketTriple) -> bool {
    t.p * t.h != -1
}

/// Lexicographically largest member of `{t, t.image()}`.
pub fn canonicalize(t: BracketTriple) -> BracketTriple {
    t.max(t.image())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum KinematicsName {
    AdS,
    DS,
    M,
    MPrime,
    MPlus,
    NMinus,
    NPlus,
    G,
    C,
    SdS,
    St,
    El,
    H,
    Eu,
}

impl KinematicsName {
    pub const KINEMATICAL: [KinematicsName; 11] = [
        KinematicsName::AdS,
        KinematicsName::DS,
        KinematicsName::M,
        KinematicsName::MPrime,
        KinematicsName::MPlus,
        KinematicsName::NMinus,
        KinematicsName::NPlus,
        KinematicsName::G,
        KinematicsName::C,
        KinematicsName::SdS,
        KinematicsName::St,
    ];

    pub const NON_KINEMATICAL: [KinematicsName; 3] =
        [KinematicsName::El, KinematicsName::H, KinematicsName::Eu];

    /// Printed notation.
    pub fn symbol(self) -> &'static str {
        use KinematicsName::*;
        match self {
            AdS => "adS",
            DS => "dS",
            M => "M",
            MPrime => "M′",
            MPlus => "M₊",
            NMinus => "N₋",
            NPlus => "N₊",
            G => "G",
            C => "C",
            SdS => "SdS",
            St => "St",
            El => "El",
            H => "H",
            Eu => "Eu",
        }
    }

    /// Shell-safe tag.
    pub fn ascii(self) -> &'static str {
        use KinematicsName::*;
        match self {
            MPrime => "M'",
            MPlus => "M+",
            NMinus => "N-",
            NPlus => "N+",
            other => other.symbol(),
        }
    }

    /// Representative triple as listed with the name.
    pub fn representative(self) -> BracketTriple {
        use KinematicsName::*;
        let (k, h, p) = match self {
            AdS => (1, 1, 1),
            DS => (-1, 1, 1),
            M => (0, 1, 1),
            MPrime => (1, 1, 0),
            MPlus => (-1, 1, 0),
            NMinus => (1, 0, 1),
            NPlus => (-1, 0, 1),
            G => (0, 0, 1),
            C => (0, 1, 0),
            SdS => (1, 0, 0),
            St => (0, 0, 0),
            El => (1, -1, 1),
            H => (-1, -1, 1),
            Eu => (0, -1, 1),
        };
        BracketTriple::new(k, h, p)
    }

    pub fn is_kinematical(self) -> bool {
        !Self::NON_KINEMATICAL.contains(&self)
    }
}

impl fmt::Display for KinematicsName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for KinematicsName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        use KinematicsName::*;
        let all = Self::KINEMATICAL.iter().chain(Self::NON_KINEMATICAL.iter());
        for &n in all {
            if s == n.symbol() || s == n.ascii() {
                return Ok(n);
            }
        }
        match s {
            "Mp" | "Mprime" => Ok(MPrime),
            "Mplus" => Ok(MPlus),
            "Nminus" => Ok(NMinus),
            "Nplus" => Ok(NPlus),
            _ => Err(Error::UnknownName(s.to_string())),
        }
    }
}

/// Signature class of the Killing form of a non-kinematical algebra.
fn non_kinematical_name(t: BracketTriple) -> KinematicsName {
    let b = t.killing_form();
    let det = b[0][0] * (b[1][1] * b[2][2] - b[1][2] * b[2][1])
        - b[0][1] * (b[1][0] * b[2][2] - b[1][2] * b[2][0])
        + b[0][2] * (b[1][0] * b[2][1] - b[1][1] * b[2][0]);
    if det == 0 {
        return KinematicsName::Eu;
    }
    // Sylvester's criterion on -B
    let m1 = -b[0][0];
    let m2 = b[0][0] * b[1][1] - b[0][1] * b[1][0];
    if m1 > 0 && m2 > 0 && -det > 0 {
        KinematicsName::El
    } else {
        KinematicsName::H
    }
}

pub fn name_of(t: BracketTriple) -> KinematicsName {
    if !is_kinematical(t) {
        return non_kinematical_name(t);
    }
    let c = canonicalize(t);
    KinematicsName::KINEMATICAL
        .into_iter()
        .find(|n| canonicalize(n.representative()) == c)
        .expect("every kinematical triple belongs to a named class")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Symmetry {
    SH,
    SP,
    SK,
}

impl Symmetry {
    pub const ALL: [Symmetry; 3] = [Symmetry::SH, Symmetry::SP, Symmetry::SK];

    pub fn label(self) -> &'static str {
        match self {
            Symmetry::SH => "S_H",
            Symmetry::SP => "S_P",
            Symmetry::SK => "S_K",
        }
    }
}

/// Swap two generators, negating the third, and relabel the constants.
///
/// `S_P: K <-> H, P -> -P`, `S_H: K <-> P, H -> -H`, `S_K: H <-> P, K -> -K`.
pub fn apply_symmetry(s: Symmetry, t: BracketTriple) -> BracketTriple {
    let BracketTriple { k, h, p } = t;
    match s {
        Symmetry::SP => BracketTriple::new(h, k, -p),
        Symmetry::SH => BracketTriple::new(-p, -h, -k),
        Symmetry::SK => BracketTriple::new(-k, p, h),
    }
}

/// Un-normalized structure constants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GeneralAlgebra<T> {
    pub ck: T,
    pub ch: T,
    pub cp: T,
}

pub type RationalAlgebra = GeneralAlgebra<Rational64>;

/// Rescaling exponents `(eK, eH, eP)` of `K -> eps^eK K` and so on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Exponents {
    pub e_k: u32,
    pub e_h: u32,
    pub e_p: u32,
}

impl Exponents {
    pub const fn new(e_k: u32, e_h: u32, e_p: u32) -> Self {
        Exponents { e_k, e_h, e_p }
    }
}

impl<T: Clone + Zero + PartialEq> GeneralAlgebra<T> {
    pub fn new(ck: T, ch: T, cp: T) -> Self {
        GeneralAlgebra { ck, ch, cp }
    }

    /// Limit `eps -> 0` after the rescaling given by `e`.
    pub fn contract(&self, e: Exponents) -> Result<Self> {
        let (ek, eh, ep) = (e.e_k as i64, e.e_h as i64, e.e_p as i64);
        let limit = |c: &T, power: i64, name: &'static str| -> Result<T> {
            if c.is_zero() || power == 0 {
                Ok(c.clone())
            } else if power > 0 {
                Ok(T::zero())
            } else {
                Err(Error::DivergentContraction {
                    constant: name,
                    power,
                })
            }
        };
        Ok(GeneralAlgebra {
            ck: limit(&self.ck, eh + ep - ek, "k")?,
            ch: limit(&self.ch, ek + ep - eh, "h")?,
            cp: limit(&self.cp, ek + eh - ep, "p")?,
        })
    }
}

impl<T: Clone + Zero + Signed> GeneralAlgebra<T> {
    /// Rescale each constant to its sign.
    pub fn normalized(&self) -> BracketTriple {
        let s = |x: &T| -> i8 {
            if x.is_positive() {
                1
            } else if x.is_negative() {
                -1
            } else {
                0
            }
        };
        BracketTriple::new(s(&self.ck), s(&self.ch), s(&self.cp))
    }
}

impl<T: One + Zero + std::ops::Neg<Output = T>> From<BracketTriple> for GeneralAlgebra<T> {
    fn from(t: BracketTriple) -> Self {
        let f = |x: i8| match x {
            1 => T::one(),
            -1 => -T::one(),
            _ => T::zero(),
        };
        GeneralAlgebra {
            ck: f(t.k),
            ch: f(t.h),
            cp: f(t.p),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ContractionType {
    SpeedSpace,
    SpeedTime,
    SpaceTime,
}

impl ContractionType {
    pub const ALL: [ContractionType; 3] = [
        ContractionType::SpeedSpace,
        ContractionType::SpeedTime,
        ContractionType::SpaceTime,
    ];

    pub fn exponents(self) -> Exponents {
        match self {
            ContractionType::SpeedSpace => Exponents::new(1, 0, 1),
            ContractionType::SpeedTime => Exponents::new(1, 1, 0),
            ContractionType::SpaceTime => Exponents::new(0, 1, 1),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            ContractionType::SpeedSpace => "speed-space",
            ContractionType::SpeedTime => "speed-time",
            ContractionType::SpaceTime => "space-time",
        }
    }
}

impl FromStr for ContractionType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ContractionType::ALL
            .into_iter()
            .find(|c| c.label() == s)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

/// Contract a normalized triple with exact rational arithmetic.
pub fn contract_triple(t: BracketTriple, e: Exponents) -> Result<BracketTriple> {
    let a: RationalAlgebra = t.into();
    Ok(a.contract(e)?.normalized())
}

pub fn contract_named(from: KinematicsName, kind: ContractionType) -> Result<KinematicsName> {
    Ok(name_of(contract_triple(
        from.representative(),
        kind.exponents(),
    )?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge {
    pub from: KinematicsName,
    pub to: KinematicsName,
    pub kind: ContractionType,
}

/// One edge per kinematical class and contraction type, self-loops dropped.
pub fn contraction_graph() -> Vec<Edge> {
    let mut seen = BTreeSet::new();
    let mut edges = Vec::new();
    for from in KinematicsName::KINEMATICAL {
        for kind in ContractionType::ALL {
            let to = contract_named(from, kind).expect("fundamental contractions converge");
            let e = Edge { from, to, kind };
            if to != from && seen.insert(e) {
                edges.push(e);
            }
        }
    }
    edges
}

/// Names reachable from `start` along graph edges, including `start`.
pub fn reachable(edges: &[Edge], start: KinematicsName) -> BTreeSet<KinematicsName> {
    let mut out = BTreeSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(n) = queue.pop_front() {
        for e in edges.iter().filter(|e| e.from == n) {
            if out.insert(e.to) {
                queue.push_back(e.to);
            }
        }
    }
    out
}

pub fn graph_to_dot(edges: &[Edge]) -> String {
    let mut s = String::from("digraph contractions {\n");
    for n in KinematicsName::KINEMATICAL {
        s.push_str(&format!("  \"{}\";\n", n.ascii()));
    }
    for e in edges {
        s.push_str(&format!(
            "  \"{}\" -> \"{}\" [label=\"{}\"];\n",
            e.from.ascii(),
            e.to.ascii(),
            e.kind.label()
        ));
    }
    s.push_str("}\n");
    s
}

/// Row of the classification table.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassRow {
    pub triple: BracketTriple,
    pub kinematical: bool,
    pub canonical: BracketTriple,
    pub name: KinematicsName,
}

pub fn classify_all() -> Vec<ClassRow> {
    enumerate_all()
        .into_iter()
        .map(|t| ClassRow {
            triple: t,
            kinematical: is_kinematical(t),
            canonical: canonicalize(t),
            name: name_of(t),
        })
        .collect()
}

/// Triple of the rotation algebra with `[K,H] = P`, `[K,P] = -kappa2 H`, `[H,P] = kappa1 K`.
pub fn cayley_klein_triple<T: Real>(kappa1: T, kappa2: T) -> BracketTriple {
    BracketTriple::new(Sign::of(kappa1).as_i8(), Sign::of(-kappa2).as_i8(), 1)
}
