use momentangle_core::cluster::{
    containing_split, default_tolerance, delta, enumerate_o, eval_h, eval_phi_prime, in_a, in_a_ij, in_sigma_q_prime,
    max_norm, nu, retract, retraction_times, sample_cube_point, sample_rng, sample_suspension_point, Gauge, Rational,
};
use momentangle_core::complex::{random_complex, SimplicialComplex, VertexSet};
use momentangle_core::golod::{iota_pair, null_certificate, theorem_verdict, Outcome};
use momentangle_core::hochster::{koszul_degree_bound, koszul_oracle, poincare_series, wedge_model};
use momentangle_core::linalg::Coeffs;
use num_traits::One;
use proptest::prelude::*;

fn complex_strategy(min_n: usize, max_n: usize) -> impl Strategy<Value = SimplicialComplex> {
    (min_n..=max_n, 0usize..4, 0u32..=100, any::<u64>()).prop_map(|(n, k, d, seed)| {
        random_complex(n, k.min(n), d as f64 / 100.0, seed).unwrap()
    })
}

fn neighbourly_strategy(min_n: usize, max_n: usize) -> impl Strategy<Value = SimplicialComplex> {
    (min_n..=max_n, 0u32..=100, any::<u64>())
        .prop_map(|(n, d, seed)| random_complex(n, n / 3, d as f64 / 100.0, seed).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn neighbourliness_is_attained(k in complex_strategy(1, 8)) {
        let m = k.neighbourliness();
        prop_assert!(k.check_invariants());
        for s in k.ground().subsets().filter(|s| s.len() <= m) {
            prop_assert!(k.is_face(s));
        }
        for f in k.minimal_non_faces() {
            prop_assert!(f.len() > m);
            prop_assert!(f.iter().all(|v| k.is_face(f.without(v))));
        }
    }

    #[test]
    fn hochster_agrees_with_koszul(k in complex_strategy(1, 5), p in prop_oneof![Just(2u64), Just(3)]) {
        let field = Coeffs::Prime(p);
        let oracle = koszul_oracle(&k, field, koszul_degree_bound(&k)).unwrap();
        prop_assert_eq!(poincare_series(&k, field).unwrap(), oracle);
    }

    #[test]
    fn join_multiplies_series(k in complex_strategy(1, 5), l in complex_strategy(1, 5)) {
        let j = k.join_shifted(&l).unwrap();
        let lhs = poincare_series(&j, Coeffs::Rationals).unwrap();
        let rhs = poincare_series(&k, Coeffs::Rationals).unwrap().mul(&poincare_series(&l, Coeffs::Rationals).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn wedge_model_has_the_same_ranks(k in complex_strategy(1, 7)) {
        let w = wedge_model(&k, Coeffs::Rationals).unwrap();
        prop_assert_eq!(w.series(), poincare_series(&k, Coeffs::Rationals).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn null_certificates_are_sound(k in complex_strategy(2, 6), seed in any::<u64>()) {
        let ground = k.ground().to_vec();
        let mut s = seed | 1;
        let mut next = || { s ^= s << 13; s ^= s >> 7; s ^= s << 17; s };
        let (mut i, mut j) = (VertexSet::EMPTY, VertexSet::EMPTY);
        for v in ground {
            match next() % 3 {
                0 => i = i.with(v),
                1 => j = j.with(v),
                _ => {}
            }
        }
        prop_assume!(!i.is_empty() && !j.is_empty());
        let cert = null_certificate(&k, i, j).unwrap();
        let report = iota_pair(&k, i, j, &Coeffs::DEFAULT_BATTERY).unwrap();
        if cert.is_null() {
            prop_assert!(report.induced.iter().all(|m| m.is_zero()));
        }
        if report.certificate.is_not_null() {
            prop_assert!(report.induced.iter().any(|m| !m.is_zero()));
        }
    }

    #[test]
    fn verdicts_are_consistent(k in complex_strategy(2, 7)) {
        let v = theorem_verdict(&k).unwrap();
        match &v.outcome {
            Outcome::CoH(w) => {
                prop_assert!(v.hypothesis_holds);
                prop_assert_eq!(v.count(|c| c.is_not_null()), 0);
                prop_assert_eq!(w.series(), poincare_series(&k, Coeffs::Rationals).unwrap());
            }
            Outcome::NotCoH(p) => prop_assert!(p.certificate.is_not_null()),
            Outcome::Inconclusive(pairs) => prop_assert!(!v.hypothesis_holds || !pairs.is_empty()),
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn splits_cover_a_exactly_once(n in 2usize..=9, seed in any::<u64>()) {
        let y = sample_cube_point(n, &mut sample_rng(seed, 0));
        let covering: Vec<_> = enumerate_o(n)
            .into_iter()
            .filter(|&(i, j)| in_a_ij(&y, i, j).unwrap())
            .collect();
        let inside = in_a(&y).unwrap();
        prop_assert_eq!(covering.len(), usize::from(inside));
        prop_assert_eq!(containing_split(&y).unwrap(), covering.first().copied());
    }

    #[test]
    fn retraction_identities(n in 2usize..=9, seed in any::<u64>()) {
        let y = sample_cube_point(n, &mut sample_rng(seed, 0));
        let Some((i, j)) = containing_split(&y).unwrap() else { return Ok(()) };
        let z = momentangle_core::cluster::extend(&y);
        for t in retraction_times() {
            let yt = retract(&y, i, j, &t).unwrap();
            prop_assert!(in_a_ij(&yt, i, j).unwrap());
            let zt = momentangle_core::cluster::extend(&yt);
            let s = Rational::one() - &t;
            let expected = &s * delta(&z) + &t / Rational::from_integer((2 * n).into());
            prop_assert_eq!(delta(&zt), expected);
            for v in i.iter() {
                prop_assert_eq!(nu(&zt, i, v).unwrap(), &s * nu(&z, i, v).unwrap());
            }
        }
    }

    #[test]
    fn gauge_round_trip(n in 2usize..=7, seed in any::<u64>()) {
        let y = sample_cube_point(n, &mut sample_rng(seed, 0));
        let Some((i, j)) = containing_split(&y).unwrap() else { return Ok(()) };
        let gauge = Gauge::new(i, j, n, &default_tolerance()).unwrap();
        let w = gauge.forward(&y).unwrap();
        prop_assert!(max_norm(&w) < Rational::one());
        let back = gauge.inverse(&w).unwrap();
        prop_assert!(in_a_ij(&back, i, j).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn homotopy_stays_in_sigma_q(k in neighbourly_strategy(4, 6), seed in any::<u64>()) {
        for index in 0..5 {
            let w = sample_suspension_point(&k, &mut sample_rng(seed, index));
            prop_assert_eq!(eval_h(&k, &w, &Rational::from_integer(0.into())).unwrap(), eval_phi_prime(&k, &w).unwrap());
            for t in [1i64, 2, 3] {
                let p = eval_h(&k, &w, &Rational::new(t.into(), 4.into())).unwrap();
                prop_assert!(in_sigma_q_prime(&k, &p));
            }
        }
    }
}
