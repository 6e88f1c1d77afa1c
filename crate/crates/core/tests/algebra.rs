use kinematica::ckgeom::{sign_patterns, KappaPair};
use kinematica::clifford::{rotor, sandwich, Multivector, UnitAxis};
use kinematica::gencomplex::GenComplex;
use kinematica::kinclass::{
    contract_named, ContractionType, Exponents, KinematicsName, RationalAlgebra,
};
use kinematica::spin::{spin_exp_axis, SpinElement};
use kinematica::{KappaPair32, Multivector64, SpinElement64};
use num_rational::Rational64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Kp = KappaPair<f64>;

fn even_part(s: &SpinElement64) -> Multivector64 {
    let kp = s.kappa_pair();
    let z = 0.0;
    Multivector::new(
        &kp,
        [s.alpha.re, z, z, z, s.alpha.im, s.beta.im, s.beta.re, z],
    )
}

fn random_axis(rng: &mut ChaCha8Rng) -> UnitAxis<f64> {
    loop {
        let n = [
            rng.random_range(-1.0..1.0),
            rng.random_range(-1.0..1.0),
            rng.random_range(-1.0..1.0),
        ];
        if let Ok(a) = UnitAxis::new(n) {
            return a;
        }
    }
}

#[test]
fn rotors_and_spin_elements_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for kp in sign_patterns() {
        for _ in 0..30 {
            let n = random_axis(&mut rng);
            let phi = rng.random_range(-2.0..2.0);
            let r = rotor(&kp, &n, phi);
            let s = spin_exp_axis(&kp, n.n, phi);
            assert!(r.0.max_abs_diff(&even_part(&s)) < 1e-14);
        }
    }
}

#[test]
fn spin_product_is_the_even_clifford_product() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for kp in sign_patterns() {
        for _ in 0..30 {
            let mut pick = || {
                let n = random_axis(&mut rng);
                spin_exp_axis(&kp, n.n, rng.random_range(-2.0..2.0))
            };
            let (a, b) = (pick(), pick());
            let lhs = even_part(&(a * b));
            let rhs = even_part(&a) * even_part(&b);
            assert!(lhs.max_abs_diff(&rhs) < 1e-13, "{kp:?}");
        }
    }
}

#[test]
fn sandwich_fixes_rotation_axis_in_every_pattern() {
    let mut rng = ChaCha8Rng::seed_from_u64(29);
    for kp in sign_patterns() {
        for _ in 0..30 {
            let n = random_axis(&mut rng);
            let axis = kinematica::clifford::axis_vector(&kp, &n);
            let r = rotor(&kp, &n, rng.random_range(-2.0..2.0));
            let moved = sandwich(&r, &axis).unwrap();
            assert!(moved.max_abs_diff(&axis) < 1e-12 * (1.0 + r.0.max_abs().powi(2)));
        }
    }
}

#[test]
fn exact_contractions_over_the_rationals() {
    let one = Rational64::from_integer(1);
    let ds = RationalAlgebra::new(-one, one, one);
    let limit = ds
        .contract(ContractionType::SpeedSpace.exponents())
        .unwrap();
    assert_eq!(
        limit,
        RationalAlgebra::new(-one, Rational64::from_integer(0), one)
    );
    let sds = ds
        .contract(Exponents {
            e_k: 2,
            e_h: 1,
            e_p: 1,
        })
        .unwrap();
    assert_eq!(
        sds,
        RationalAlgebra::new(
            -one,
            Rational64::from_integer(0),
            Rational64::from_integer(0)
        )
    );
    assert_eq!(
        contract_named(KinematicsName::AdS, ContractionType::SpeedSpace).unwrap(),
        KinematicsName::NMinus
    );
}

#[test]
fn single_precision_smoke() {
    let kp = KappaPair32::new(-1.0, 1.0);
    let s = spin_exp_axis(&kp, [0.0, 0.0, 1.0], 0.5f32);
    assert!((s.norm() - 1.0).abs() < 1e-6);
    let n = UnitAxis::new([0.0f32, 0.0, 1.0]).unwrap();
    let v = sandwich(&rotor(&kp, &n, 0.5), &Multivector::basis(&kp, 1)).unwrap();
    assert!((v.coeffs[1] - 0.5f32.cosh()).abs() < 1e-6);
    let w = GenComplex::new(0.3f32, 0.4, 1.0);
    let d = kinematica::ckgeom::distance(&kp, GenComplex::zero(1.0), w).unwrap();
    assert!((d - 0.5f32.atanh()).abs() < 1e-6);
    let k = Kp::new(1.0, 1.0);
    assert_eq!(SpinElement::identity(&k).norm(), 1.0);
}
