use proptest::prelude::*;

use stellar::classify::{classify_state, DEFAULT_TOL};
use stellar::depressed::{compress_state, monic_coefficients, taylor_shift, DepressedForm};
use stellar::majorana::{constellation_of, from_constellation, rotate_state, to_polynomial, DEFAULT_CLUSTER_TOL};
use stellar::oracle::brute_symmetrize;
use stellar::sphere::SphereRotation;
use stellar::state::{state_fidelity, symmetrize_spinors, Spinor, SymmetricState};
use stellar::Complex64;

fn state_strategy(n: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = SymmetricState> {
    n.prop_flat_map(|n| {
        prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), n + 1)
            .prop_filter("nonzero", |v| v.iter().map(|(a, b)| a * a + b * b).sum::<f64>() > 1e-3)
            .prop_map(move |v| {
                SymmetricState::normalized(n, v.into_iter().map(|(a, b)| Complex64::new(a, b)).collect()).unwrap()
            })
    })
}

fn rotation() -> impl Strategy<Value = SphereRotation> {
    (0.0f64..6.28, 0.0f64..3.14, 0.0f64..6.28).prop_map(|(a, b, g)| SphereRotation::from_euler(a, b, g))
}

fn spinors() -> impl Strategy<Value = Vec<Spinor>> {
    prop::collection::vec((0.0f64..6.28, 0.0f64..3.14).prop_map(|(a, b)| Spinor::new(a, b)), 2..=6)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn label_is_rotation_invariant(s in state_strategy(3..=4), rot in rotation()) {
        let a = classify_state(&s, DEFAULT_TOL).unwrap();
        let b = classify_state(&rotate_state(&s, &rot).unwrap(), DEFAULT_TOL).unwrap();
        prop_assert_eq!(a.class, b.class);
        prop_assert_eq!(a.partition, b.partition);
    }

    #[test]
    fn label_is_compression_invariant(s in state_strategy(3..=4)) {
        let a = classify_state(&s, DEFAULT_TOL).unwrap();
        let c = compress_state(&s).unwrap();
        let b = classify_state(&c.state, DEFAULT_TOL).unwrap();
        prop_assert_eq!(a.class, b.class);
    }

    #[test]
    fn depressed_form_is_the_shifted_monic(s in state_strategy(3..=4)) {
        let poly = to_polynomial(&s);
        let form = DepressedForm::of(&poly).unwrap();
        let mut monic = monic_coefficients(&poly).unwrap();
        monic.push(Complex64::new(1.0, 0.0));
        let shifted = taylor_shift(&monic, form.shift());
        let n = s.n();
        let scale = monic.iter().map(|c| c.norm()).fold(1.0, f64::max).powi(2);
        prop_assert!(shifted[n - 1].norm() <= 1e-12 * scale);
        prop_assert!((shifted[n - 2] - form.p()).norm() <= 1e-9 * scale);
        prop_assert!((shifted[n - 3] - form.q()).norm() <= 1e-9 * scale);
    }

    #[test]
    fn brute_force_matches_product_expansion(sp in spinors()) {
        let brute = SymmetricState::from_full(&brute_symmetrize(&sp).unwrap()).unwrap();
        let fast = symmetrize_spinors(&sp).unwrap();
        prop_assert!(state_fidelity(&brute, &fast).unwrap() > 1.0 - 1e-12);
    }

    #[test]
    fn state_roundtrip(s in state_strategy(2..=7)) {
        let c = constellation_of(&s, DEFAULT_CLUSTER_TOL).unwrap();
        let back = from_constellation(&c).unwrap();
        prop_assert!(state_fidelity(&s, &back).unwrap() >= 1.0 - 1e-8);
    }
}
