use thiserror::Error;

/// Every recoverable failure raised by the library.
///
/// [`Error::code`] gives the stable identifier printed by the command-line tool.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("tangent pole: cosine vanishes at phi = {phi} (kappa = {kappa})")]
    Pole { kappa: f64, phi: f64 },
    #[error("inverse tangent outside its domain: |x| = {x} must be below 1/sqrt(-kappa) for kappa = {kappa}")]
    Domain { kappa: f64, x: f64 },
    #[error("operands carry different kappa labels ({left} vs {right})")]
    KappaMismatch { left: f64, right: f64 },
    #[error("{0} is a zero divisor and has no inverse")]
    ZeroDivisor(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator of the Moebius map vanishes in the null cone; lift the point to the completion")]
    AtInfinity,
    #[error("Moebius coefficients have a non-invertible determinant")]
    SingularMoebius,
    #[error("homogeneous pair is not admissible (a nonzero scalar annihilates both coordinates)")]
    InadmissiblePoint,
    #[error("contraction diverges: {constant} carries epsilon power {power}")]
    DivergentContraction { constant: &'static str, power: i64 },
    #[error("central projection pole at z = -1")]
    ProjectionPole,
    #[error("point lies outside the conformal model region")]
    OutsideModel,
    #[error("metric is singular on the boundary 1 + kappa1 |w|^2 = 0")]
    BoundarySingularity,
    #[error("subsidiary metric requires kappa2 = 0, got {kappa2}")]
    WrongGeometry { kappa2: f64 },
    #[error("points are null or imaginarily separated (squared modulus {sqmod})")]
    NullOrImaginarySeparation { sqmod: f64 },
    #[error("distance denominator is not invertible")]
    DenominatorNotInvertible,
    #[error("expected a pure vector")]
    NotAVector,
    #[error("expected grade {expected}")]
    Grade { expected: &'static str },
    #[error("rotor does not have unit pseudo-norm (r * reverse(r) = {norm})")]
    NotUnitRotor { norm: f64 },
    #[error("vectors span a degenerate plane (a ^ b = 0)")]
    DegeneratePlane,
    #[error("axis vector must be nonzero")]
    ZeroAxis,
    #[error("matrix is not an element of the spin group")]
    NotSpin,
    #[error("matrix does not decompose in the sl(2) basis (residual {residual})")]
    DecompositionFailure { residual: f64 },
    #[error("adaptive quadrature did not converge within depth {depth}")]
    NonConvergence { depth: u32 },
    #[error("metric conformal factor is singular or non-positive near the sample point")]
    SingularMetric,
    #[error("unknown name: {0}")]
    UnknownName(String),
}

impl Error {
    /// Stable error identifier used in machine-readable output.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Pole { .. } => "PoleError",
            Error::Domain { .. } => "DomainError",
            Error::KappaMismatch { .. } => "KappaMismatch",
            Error::ZeroDivisor(_) => "ZeroDivisorError",
            Error::DivisionByZero => "DivisionByZero",
            Error::AtInfinity => "AtInfinity",
            Error::SingularMoebius => "SingularMoebius",
            Error::InadmissiblePoint => "InadmissiblePoint",
            Error::DivergentContraction { .. } => "DivergentContraction",
            Error::ProjectionPole => "ProjectionPole",
            Error::OutsideModel => "OutsideModel",
            Error::BoundarySingularity => "BoundarySingularity",
            Error::WrongGeometry { .. } => "WrongGeometry",
            Error::NullOrImaginarySeparation { .. } => "NullOrImaginarySeparation",
            Error::DenominatorNotInvertible => "DenominatorNotInvertible",
            Error::NotAVector => "NotAVector",
            Error::Grade { .. } => "GradeError",
            Error::NotUnitRotor { .. } => "NotUnitRotor",
            Error::DegeneratePlane => "DegeneratePlane",
            Error::ZeroAxis => "ZeroAxis",
            Error::NotSpin => "NotSpin",
            Error::DecompositionFailure { .. } => "DecompositionFailure",
            Error::NonConvergence { .. } => "NonConvergence",
            Error::SingularMetric => "SingularMetric",
            Error::UnknownName(_) => "UnknownName",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
