//! Property tests for the Fock-space primitives and the limit machinery.

use num_complex::Complex64;
use proptest::prelude::*;

use esl_core::builder::build_empty_state;
use esl_core::families::{coherent_family, ec_state, ECParams};
use esl_core::fock::{
    adequate_dim, apply_annihilation, apply_creation, expectation_number, inner_product,
    quadrature_moments, FockVector, Tolerances, DEFAULT_TAIL_TOL,
};

fn amplitude() -> impl Strategy<Value = Complex64> {
    (-1.0..1.0f64, -1.0..1.0f64).prop_map(|(re, im)| Complex64::new(re, im))
}

fn raw_vector(dim: std::ops::Range<usize>) -> impl Strategy<Value = Vec<Complex64>> {
    dim.prop_flat_map(|d| proptest::collection::vec(amplitude(), d))
        .prop_filter("nonzero", |amps| {
            amps.iter().map(|c| c.norm_sqr()).sum::<f64>() > 1e-6
        })
}

proptest! {
    #[test]
    fn normalization_roundtrip(amps in raw_vector(1..24)) {
        let v = FockVector::from_amplitudes(amps).unwrap().normalized().unwrap();
        let ip = inner_product(&v, &v).unwrap();
        prop_assert!((ip.re - 1.0).abs() < 1e-10);
        prop_assert!(ip.im.abs() < 1e-12);
    }

    #[test]
    fn inner_product_conjugate_symmetry(
        a in raw_vector(6..7),
        b in raw_vector(6..7),
    ) {
        let va = FockVector::from_amplitudes(a).unwrap();
        let vb = FockVector::from_amplitudes(b).unwrap();
        let left = inner_product(&va, &vb).unwrap();
        let right = inner_product(&vb, &va).unwrap().conj();
        prop_assert!((left - right).norm() < 1e-12);
    }

    #[test]
    fn ladder_roundtrip_counts_photons(n in 0usize..10) {
        let dim = 12;
        let v = FockVector::basis(dim, n);
        let round = apply_annihilation(&apply_creation(&v, DEFAULT_TAIL_TOL).unwrap());
        let expected = (n + 1) as f64;
        prop_assert!((round.amp(n).re - expected).abs() < 1e-12);
        prop_assert!((round.norm_sqr() - expected * expected).abs() < 1e-9);
    }

    #[test]
    fn observables_are_real_on_random_states(amps in raw_vector(4..16)) {
        let mut padded = amps;
        // Leave the top level empty so the creation spill check passes.
        padded.push(Complex64::ZERO);
        let v = FockVector::from_amplitudes(padded).unwrap().normalized().unwrap();
        let n = expectation_number(&v);
        prop_assert!(n.is_finite() && n >= 0.0);
        // The imaginary-residue assertion inside quadrature_moments is the
        // hermiticity check; reaching here means it held.
        let m = quadrature_moments(&v, 1.0).unwrap();
        prop_assert!(m.x1_sq >= 0.0 && m.x2_sq >= 0.0);
        prop_assert!(m.var_x1() >= -1e-12 && m.var_x2() >= -1e-12);
    }

    #[test]
    fn ec_state_is_normalized_across_parameters(
        mag in 0.2..2.5f64,
        theta in -3.0..3.0f64,
        dtheta in -3.0..3.0f64,
    ) {
        let p = ECParams::new(mag, theta, dtheta).unwrap();
        let v = ec_state(&p, adequate_dim(mag)).unwrap();
        prop_assert!((v.norm_sqr() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn empty_build_direction_phase_is_periodic(phase in -3.0..3.0f64) {
        let tol = Tolerances::default();
        let fam = coherent_family(adequate_dim(1.0));
        let a = build_empty_state(&fam, &[1.0, 0.3], phase, &tol).unwrap();
        let b = build_empty_state(&fam, &[1.0, 0.3], phase + std::f64::consts::TAU, &tol).unwrap();
        prop_assert!(a.condition_met && b.condition_met);
        prop_assert!(a.state.max_abs_diff(&b.state).unwrap() < 1e-12);
    }
}
