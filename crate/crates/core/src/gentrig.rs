//! Curvature-labelled trigonometry.
//!
//! For a real label `kappa` the cosine `C` and sine `S` parametrize the unit
//! circle `a^2 + kappa b^2 = 1`: circular for `kappa > 0`, parabolic
//! (`C = 1`, `S = phi`) for `kappa = 0` and hyperbolic for `kappa < 0`.
//! Every function is continuous in `kappa` across zero.

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Labels with magnitude below this are dispatched to the parabolic branch.
pub const ZERO_BRANCH: f64 = 1e-300;
/// Below this value of `|kappa| phi^2` the truncated power series is used.
pub const SERIES_CUTOFF: f64 = 1e-8;
const SERIES_TERMS: usize = 6;
/// Absolute cutoff on the cosine below which the tangent reports a pole.
pub const POLE_TOL: f64 = 1e-12;

fn near_parabolic<T: Real>(kappa: T, phi: T) -> bool {
    kappa == T::zero()
        || kappa.abs() < T::lit(ZERO_BRANCH)
        || (kappa * phi * phi).abs() < T::lit(SERIES_CUTOFF)
}

// sum_{n<6} x^n / (2n + offset)!  evaluated by Horner's rule
fn even_odd_series<T: Real>(x: T, offset: usize) -> T {
    let mut acc = T::one();
    for n in (1..SERIES_TERMS).rev() {
        let a = (2 * n + offset - 1) as f64;
        let b = (2 * n + offset) as f64;
        acc = T::one() + x * acc / T::lit(a * b);
    }
    acc
}

/// Generalized cosine `C_kappa(phi)`.
pub fn cosk<T: Real>(kappa: T, phi: T) -> T {
    if near_parabolic(kappa, phi) {
        return even_odd_series(-kappa * phi * phi, 0);
    }
    if kappa > T::zero() {
        (kappa.sqrt() * phi).cos()
    } else {
        ((-kappa).sqrt() * phi).cosh()
    }
}

/// Generalized sine `S_kappa(phi)`.
pub fn sink<T: Real>(kappa: T, phi: T) -> T {
    if near_parabolic(kappa, phi) {
        return phi * even_odd_series(-kappa * phi * phi, 1);
    }
    if kappa > T::zero() {
        let r = kappa.sqrt();
        (r * phi).sin() / r
    } else {
        let r = (-kappa).sqrt();
        (r * phi).sinh() / r
    }
}

/// Generalized tangent `S_kappa / C_kappa`.
pub fn tank<T: Real>(kappa: T, phi: T) -> Result<T> {
    let c = cosk(kappa, phi);
    if c.abs() <= T::lit(POLE_TOL) {
        return Err(Error::Pole {
            kappa: kappa.to_f64_lossy(),
            phi: phi.to_f64_lossy(),
        });
    }
    Ok(sink(kappa, phi) / c)
}

/// Inverse generalized tangent.
///
/// For `kappa > 0` the principal value in `(-pi/(2 sqrt kappa), pi/(2 sqrt kappa))`
/// is returned. For `kappa < 0` the argument must satisfy `|x| < 1/sqrt(-kappa)`.
pub fn atank<T: Real>(kappa: T, x: T) -> Result<T> {
    if kappa < T::zero() && (-kappa).sqrt() * x.abs() >= T::one() {
        return Err(Error::Domain {
            kappa: kappa.to_f64_lossy(),
            x: x.to_f64_lossy(),
        });
    }
    if near_parabolic(kappa, x) {
        // x - kappa x^3/3 + kappa^2 x^5/5 - ...
        let y = -kappa * x * x;
        let mut acc = T::zero();
        for n in (0..SERIES_TERMS).rev() {
            acc = T::one() / T::lit((2 * n + 1) as f64) + y * acc;
        }
        return Ok(x * acc);
    }
    if kappa > T::zero() {
        let r = kappa.sqrt();
        Ok((r * x).atan() / r)
    } else {
        let r = (-kappa).sqrt();
        Ok((r * x).atanh() / r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

    // Independent oracle: plain power series with 40 terms.
    fn series_cos(kappa: f64, phi: f64) -> f64 {
        let mut term = 1.0;
        let mut sum = 1.0;
        for n in 1..40 {
            term *= -kappa * phi * phi / ((2 * n - 1) as f64 * (2 * n) as f64);
            sum += term;
        }
        sum
    }

    fn series_sin(kappa: f64, phi: f64) -> f64 {
        let mut term = phi;
        let mut sum = phi;
        for n in 1..40 {
            term *= -kappa * phi * phi / ((2 * n) as f64 * (2 * n + 1) as f64);
            sum += term;
        }
        sum
    }

    #[test]
    fn cosine_examples() {
        assert_eq!(cosk(1.0, 0.0), 1.0);
        assert_eq!(cosk(0.0, 5.0), 1.0);
        let oracle = series_cos(4.0, FRAC_PI_2);
        assert!((oracle + 1.0).abs() < 1e-12);
        assert!((cosk(4.0, FRAC_PI_2) - oracle).abs() < 1e-12);
    }

    #[test]
    fn sine_examples() {
        assert_eq!(sink(0.0, 3.7), 3.7);
        assert!((sink(1.0, FRAC_PI_2) - 1.0).abs() < 1e-15);
        let oracle = series_sin(-1.0, 1.0);
        assert!((oracle - 1.1752012).abs() < 1e-7);
        assert!((sink(-1.0, 1.0) - oracle).abs() < 1e-13);
    }

    #[test]
    fn tangent_examples() {
        assert!((tank(1.0, FRAC_PI_4).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(tank(0.0, 0.8).unwrap(), 0.8);
        let oracle = series_sin(-1.0, 0.5) / series_cos(-1.0, 0.5);
        assert!((oracle - 0.4621172).abs() < 1e-7);
        assert!((tank(-1.0, 0.5).unwrap() - oracle).abs() < 1e-13);
    }

    #[test]
    fn tangent_pole() {
        let err = tank(1.0, FRAC_PI_2).unwrap_err();
        assert_eq!(err.code(), "PoleError");
        assert!(tank(4.0, FRAC_PI_4).is_err());
    }

    #[test]
    fn inverse_tangent_examples() {
        assert!((atank(1.0, 1.0).unwrap() - FRAC_PI_4).abs() < 1e-15);
        assert_eq!(atank(0.0, 2.5).unwrap(), 2.5);
        assert_eq!(atank(-3.0, 0.0).unwrap(), 0.0);

        // bisection on the tangent itself as the oracle
        let (mut lo, mut hi) = (0.0_f64, 3.0_f64);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if series_sin(-1.0, mid) / series_cos(-1.0, mid) < 0.5 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        assert!((lo - 0.5493061).abs() < 1e-7);
        assert!((atank(-1.0, 0.5).unwrap() - lo).abs() < 1e-12);
    }

    #[test]
    fn inverse_tangent_domain() {
        assert_eq!(atank(-1.0, 1.0).unwrap_err().code(), "DomainError");
        assert_eq!(atank(-4.0, -0.5).unwrap_err().code(), "DomainError");
        assert!(atank(-4.0, 0.49).is_ok());
    }

    #[test]
    fn principal_branch_for_positive_kappa() {
        let k = 2.0_f64;
        let bound = PI / (2.0 * k.sqrt());
        for x in [-1e6, -3.0, 0.3, 7.0, 1e9] {
            let a = atank(k, x).unwrap();
            assert!(a.abs() < bound);
        }
    }

    #[test]
    fn tiny_kappa_uses_series_and_stays_continuous() {
        for phi in [-3.0, -1.0, 0.5, 2.9] {
            for k in [1e-7, -1e-7, 1e-12, -1e-12, 1e-301] {
                assert!((cosk(k, phi) - series_cos(k, phi)).abs() < 1e-15);
                assert!((sink(k, phi) - series_sin(k, phi)).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn single_precision_agrees() {
        let c32 = cosk(-1.0_f32, 0.7);
        assert!((c32 as f64 - 0.7_f64.cosh()).abs() < 1e-6);
        let a32 = atank(1.0_f32, 1.0).unwrap();
        assert!((a32 as f64 - FRAC_PI_4).abs() < 1e-6);
    }

    const KAPPAS: [f64; 7] = [-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0];

    proptest! {
        #[test]
        fn pythagorean_identity(ki in 0usize..7, phi in -3.0..3.0f64) {
            let k = KAPPAS[ki];
            let c = cosk(k, phi);
            let s = sink(k, phi);
            let scale = 1.0 + c * c;
            prop_assert!((c * c + k * s * s - 1.0).abs() <= 1e-12 * scale);
        }

        #[test]
        fn double_angle(ki in 0usize..7, phi in -1.5..1.5f64) {
            let k = KAPPAS[ki];
            let (c, s) = (cosk(k, phi), sink(k, phi));
            let scale = 1.0 + c * c;
            prop_assert!((cosk(k, 2.0 * phi) - (c * c - k * s * s)).abs() <= 1e-12 * scale);
            prop_assert!((sink(k, 2.0 * phi) - 2.0 * c * s).abs() <= 1e-12 * scale);
        }

        #[test]
        fn half_angle(ki in 0usize..7, phi in -3.0..3.0f64) {
            let k = KAPPAS[ki];
            let c = cosk(k, phi);
            prop_assume!((c + 1.0).abs() > 1e-3);
            if let Ok(t) = tank(k, phi / 2.0) {
                prop_assert!((t - sink(k, phi) / (c + 1.0)).abs() <= 1e-12 * (1.0 + t.abs()));
            }
        }

        #[test]
        fn addition(ki in 0usize..7, a in -1.0..1.0f64, b in -1.0..1.0f64) {
            let k = KAPPAS[ki];
            let (ta, tb) = (tank(k, a), tank(k, b));
            prop_assume!(ta.is_ok() && tb.is_ok());
            let (ta, tb) = (ta.unwrap(), tb.unwrap());
            for sgn in [1.0, -1.0] {
                let denom = 1.0 - sgn * k * ta * tb;
                prop_assume!(denom.abs() > 1e-3);
                if let Ok(lhs) = tank(k, a + sgn * b) {
                    let rhs = (ta + sgn * tb) / denom;
                    prop_assert!((lhs - rhs).abs() <= 1e-10 * (1.0 + lhs.abs()));
                }
            }
        }

        #[test]
        fn derivatives(ki in 0usize..7, phi in -3.0..3.0f64) {
            let k = KAPPAS[ki];
            let h = 1e-5;
            let dc = (cosk(k, phi + h) - cosk(k, phi - h)) / (2.0 * h);
            let ds = (sink(k, phi + h) - sink(k, phi - h)) / (2.0 * h);
            let scale = 1.0 + cosk(k, phi).abs();
            prop_assert!((dc + k * sink(k, phi)).abs() <= 1e-8 * scale);
            prop_assert!((ds - cosk(k, phi)).abs() <= 1e-8 * scale);
        }

        #[test]
        fn kappa_continuity(k in -1e-6..1e-6f64, phi in -3.0..3.0f64) {
            // |C_k - C_0| <= |k| phi^2 / 2 + O(k^2)
            prop_assert!((cosk(k, phi) - cosk(0.0, phi)).abs() <= 5.0 * k.abs());
        }

        #[test]
        fn inverse_round_trip(ki in 0usize..7, x in -0.6..0.6f64) {
            let k = KAPPAS[ki];
            let a = atank(k, x).unwrap();
            prop_assert!((tank(k, a).unwrap() - x).abs() <= 1e-12);
        }

        #[test]
        fn inverse_derivative(ki in 0usize..7, x in -0.6..0.6f64) {
            let k = KAPPAS[ki];
            let h = 1e-5;
            let d = (atank(k, x + h).unwrap() - atank(k, x - h).unwrap()) / (2.0 * h);
            prop_assert!((d - 1.0 / (1.0 + k * x * x)).abs() <= 1e-8);
        }
    }
}
