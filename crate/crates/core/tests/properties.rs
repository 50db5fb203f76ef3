use std::f64::consts::TAU;

use proptest::prelude::*;
use raycensus::cycles::{classify, newton_periodic, CycleClass};
use raycensus::rays::{potential_map, ray_point, RayError};
use raycensus::{Complex64, DomainLabel, InfiniteAddress, MapModel};

fn parameter() -> impl Strategy<Value = Complex64> {
    prop_oneof![
        Just(Complex64::new(-2.0, 0.0)),
        (-3.0..1.0f64, -3.0..3.0f64).prop_map(|(a, b)| Complex64::new(a, b)),
    ]
}

fn address() -> impl Strategy<Value = InfiniteAddress> {
    (
        prop::collection::vec(-3i64..=3, 0..4),
        prop::collection::vec(-3i64..=3, 1..5),
    )
        .prop_map(|(pre, per)| InfiniteAddress::new(pre, per).unwrap())
}

fn periodic_address() -> impl Strategy<Value = InfiniteAddress> {
    prop::collection::vec(-2i64..=2, 1..4).prop_map(|w| InfiniteAddress::periodic(w).unwrap())
}

proptest! {
    #[test]
    fn address_text_round_trip(s in address()) {
        let back: InfiniteAddress = s.to_string().parse().unwrap();
        prop_assert_eq!(back, s);
    }

    #[test]
    fn shift_moves_entries(s in address(), k in 0usize..8, i in 0usize..12) {
        prop_assert_eq!(s.shift_by(k).raw_entry(i), s.raw_entry(i + k));
        prop_assert_eq!(s.shift_by(k + 1), s.shift_by(k).shift());
    }

    #[test]
    fn projection_is_a_prefix(s in address(), n in 1usize..6, m in 1usize..4) {
        let p = s.project(n, m);
        prop_assert_eq!(p.len(), m * (n - 1) + 1);
        for (i, &e) in p.entries().iter().enumerate() {
            prop_assert_eq!(e, s.raw_entry(i));
        }
    }

    #[test]
    fn inverse_branch_is_a_right_inverse(
        c in parameter(),
        re in -50.0..50.0f64,
        im in -50.0..50.0f64,
        k in -5i64..=5,
    ) {
        let map = MapModel::exponential(c).unwrap();
        let w = Complex64::new(re, im);
        prop_assume!((w - c).norm() > 1e-6);
        let z = map.inverse_branch(w, DomainLabel(k)).unwrap();
        prop_assert_eq!(map.strip_label(z), DomainLabel(k));
        let back = map.evaluate(z).unwrap();
        prop_assert!((back - w).norm() <= 1e-12 * w.norm().max(1.0));
    }

    #[test]
    fn ray_points_satisfy_the_functional_equation(
        c in parameter(),
        s in periodic_address(),
        t in 0.05..30.0f64,
    ) {
        let map = MapModel::exponential(c).unwrap();
        let here = ray_point(&map, &s, t, 40);
        let there = ray_point(&map, &s.shift(), potential_map(t), 40);
        match (here, there) {
            (Ok((z, _)), Ok((w, _))) => {
                let fz = map.evaluate(z).unwrap();
                prop_assert!((fz - w).norm() <= 1e-9 * w.norm().max(1.0), "{} vs {}", fz, w);
            }
            (Err(RayError::CutHit { .. }), _) | (_, Err(RayError::CutHit { .. })) => {}
            (a, b) => prop_assert!(false, "{:?} {:?}", a, b),
        }
    }

    #[test]
    fn rays_are_asymptotic_to_horizontal_lines(s in periodic_address(), t in 20.0..35.0f64) {
        let map = MapModel::exponential(Complex64::new(-2.0, 0.0)).unwrap();
        let (z, _) = ray_point(&map, &s, t, 40).unwrap();
        prop_assert!((z.re - t).abs() < 1e-6);
        prop_assert!((z.im - TAU * s.raw_entry(0) as f64).abs() < 1e-6);
    }

    #[test]
    fn classification_follows_the_multiplier_modulus(
        modulus in 0.0..3.0f64,
        angle in 0.0..TAU,
    ) {
        let lambda = Complex64::from_polar(modulus, angle);
        let class = classify(lambda, 1e-6);
        if modulus < 1.0 - 1e-6 {
            prop_assert!(class.is_attracting());
        } else if modulus > 1.0 + 1e-6 {
            prop_assert_eq!(class, CycleClass::Repelling);
        } else {
            prop_assert!(class.is_neutral());
        }
    }

    #[test]
    fn newton_returns_periodic_points(
        c in parameter(),
        re in -3.0..3.0f64,
        im in -7.0..7.0f64,
        p in 1usize..3,
    ) {
        let map = MapModel::exponential(c).unwrap();
        if let Some((z, lambda)) = newton_periodic(&map, Complex64::new(re, im), p) {
            let (w, d) = map.iterate_with_derivative(z, p).unwrap();
            prop_assert!((w - z).norm() <= 1e-9 * z.norm().max(1.0));
            prop_assert!((d - lambda).norm() <= 1e-6 * lambda.norm().max(1.0));
        }
    }
}
