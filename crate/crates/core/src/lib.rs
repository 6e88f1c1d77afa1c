#![allow(clippy::needless_range_loop)]

pub mod ckgeom;
pub mod clifford;
pub mod conformal;
pub mod error;
pub mod gencomplex;
pub mod gentrig;
pub mod kinclass;
pub mod numerics;
pub mod scalar;
pub mod spin;

pub use error::{Error, Result};
pub use scalar::{Real, Sign};

pub type GenComplex64 = gencomplex::GenComplex<f64>;
pub type GenComplex32 = gencomplex::GenComplex<f32>;
pub type MoebiusMap64 = gencomplex::MoebiusMap<f64>;
pub type GammaPoint64 = gencomplex::GammaPoint<f64>;
pub type KappaPair64 = ckgeom::KappaPair<f64>;
pub type KappaPair32 = ckgeom::KappaPair<f32>;
pub type So3Matrix64 = ckgeom::So3Matrix<f64>;
pub type SigmaPoint64 = ckgeom::SigmaPoint<f64>;
pub type Mat2C64 = spin::Mat2C<f64>;
pub type SpinElement64 = spin::SpinElement<f64>;
pub type SpinElement32 = spin::SpinElement<f32>;
pub type Multivector64 = clifford::Multivector<f64>;
pub type Multivector32 = clifford::Multivector<f32>;
pub type Rotor64 = clifford::Rotor<f64>;
pub type ConformalGenerator64 = conformal::ConformalGenerator<f64>;
pub type ExactAlgebra = kinclass::RationalAlgebra;
