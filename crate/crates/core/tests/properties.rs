mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{random_algebra, random_hl_algebra, random_invertible, small, small_nonzero};
use sasakian_core::formality::{evaluate_f_m, Obstruction};
use sasakian_core::gysin::{b3_of_total_space, total_space_cohomology};
use sasakian_core::lefschetz::{hard_lefschetz, kernel_basis};
use sasakian_core::linalg::Matrix;
use sasakian_core::minimal_model::{
    build_partial_minimal_model, build_sullivan_model, model_cohomology, splitting_invariance_check,
    verify_three_equivalence,
};
use sasakian_core::{parse_algebra, projective_space_named, serialize_algebra, tensor_product, CohomologyClass, GradedAlgebra};

fn config() -> ProptestConfig {
    ProptestConfig {
        cases: 40,
        ..ProptestConfig::default()
    }
}

fn random_primitive(rng: &mut ChaCha8Rng, ob: &Obstruction<'_>) -> CohomologyClass {
    let p = ob.primitive_basis();
    let mut acc = CohomologyClass::zero(ob.algebra(), 2);
    for b in p {
        acc = acc.add(&b.scale(&small(rng, 3)));
    }
    acc
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn random_algebras_satisfy_the_axioms(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, _) = random_algebra(&mut rng);
        let report = a.validate();
        prop_assert!(report.is_valid(), "{:?}", report);
    }

    #[test]
    fn serialization_round_trips(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, _) = random_algebra(&mut rng);
        let text = serialize_algebra(&a);
        prop_assert_eq!(parse_algebra(&text).unwrap(), a);
    }

    #[test]
    fn model_cohomology_matches_gysin(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, w) = random_algebra(&mut rng);
        let s = build_sullivan_model(&a, &w).unwrap();
        prop_assert!(s.derivation_failures().unwrap().is_empty());
        let dims = model_cohomology(&s).unwrap().dims;
        let e = total_space_cohomology(&a, &w).unwrap();
        prop_assert_eq!(&dims, &e.betti);
        for i in 0..=7 {
            prop_assert_eq!(e.betti[i], e.betti[7 - i]);
        }
        let k2 = kernel_basis(&a, &w, 2).unwrap().len();
        prop_assert_eq!(b3_of_total_space(&a, &w).unwrap(), a.dim(3) + k2);
    }

    #[test]
    fn f_symmetries(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, w) = random_hl_algebra(&mut rng);
        let ob = Obstruction::new(&a, &w).unwrap();
        let [p, q, r, s] = [0; 4].map(|_| random_primitive(&mut rng, &ob));
        let f = ob.f(&p, &q, &r, &s).unwrap();
        prop_assert_eq!(&f, &ob.f(&q, &p, &r, &s).unwrap());
        prop_assert_eq!(&f, &ob.f(&p, &q, &s, &r).unwrap());
        prop_assert_eq!(&f, &ob.f(&r, &s, &p, &q).unwrap());
    }

    #[test]
    fn massey_antisymmetry(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, w) = random_hl_algebra(&mut rng);
        let ob = Obstruction::new(&a, &w).unwrap();
        for e in ob.massey_table().unwrap() {
            let [i, j, k, l] = e.indices;
            prop_assert_eq!(&e.value, &-ob.massey([k, j, i, l]).unwrap());
        }
    }

    #[test]
    fn verdict_invariant_under_rescaling(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, w) = random_hl_algebra(&mut rng);
        let base = evaluate_f_m(&a, &w).unwrap();
        let c = small_nonzero(&mut rng, 5);

        let w2 = w.scale(&c);
        let scaled_omega = evaluate_f_m(&a, &w2).unwrap();
        prop_assert_eq!(scaled_omega.verdict, base.verdict);
        let expected: Vec<_> = base.values.iter().map(|v| v / &c).collect();
        prop_assert_eq!(&scaled_omega.values, &expected);

        let b = a.with_scaled_integration(&c);
        let scaled_int = evaluate_f_m(&b, &w).unwrap();
        prop_assert_eq!(scaled_int.verdict, base.verdict);
        let expected: Vec<_> = base.values.iter().map(|v| v * &c).collect();
        prop_assert_eq!(&scaled_int.values, &expected);
    }

    #[test]
    fn verdict_invariant_under_basis_change(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, w) = random_hl_algebra(&mut rng);
        let ob = Obstruction::new(&a, &w).unwrap();
        let m = ob.primitive_basis().len();
        let r = random_invertible(&mut rng, m);
        let moved: Vec<CohomologyClass> = (0..m)
            .map(|i| {
                (0..m).fold(CohomologyClass::zero(&a, 2), |acc, j| {
                    acc.add(&ob.primitive_basis()[j].scale(&r[(i, j)]))
                })
            })
            .collect();
        let other = Obstruction::with_primitive_basis(&a, &w, moved).unwrap();
        prop_assert_eq!(other.report().verdict, ob.report().verdict);
    }

    #[test]
    fn partial_model_is_a_three_equivalence(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, w) = random_hl_algebra(&mut rng);
        let pm = build_partial_minimal_model(&a, &w).unwrap();
        prop_assert!(pm.is_chain_map());
        prop_assert!(verify_three_equivalence(&pm).unwrap().holds);
        let mut s = Matrix::zeros(pm.b3, pm.s());
        for i in 0..pm.b3 {
            for j in 0..pm.s() {
                s[(i, j)] = small_nonzero(&mut rng, 4);
            }
        }
        prop_assert!(splitting_invariance_check(&a, &w, &s).unwrap());
    }
}

fn product(factors: &[usize]) -> GradedAlgebra {
    let mut acc: Option<GradedAlgebra> = None;
    for (k, &n) in factors.iter().enumerate() {
        let gen = ((b'a' + k as u8) as char).to_string();
        let f = projective_space_named(n, &gen).unwrap();
        acc = Some(match acc {
            None => f,
            Some(a) => tensor_product(&a, &f).unwrap(),
        });
    }
    acc.unwrap()
}

#[test]
fn products_of_projective_spaces_are_hard_lefschetz() {
    let cases: &[&[usize]] = &[&[1], &[2], &[3], &[4], &[1, 1], &[1, 2], &[2, 1], &[1, 1, 1], &[2, 2], &[1, 3], &[1, 1, 2]];
    for f in cases {
        let a = product(f);
        assert!(a.validate().is_valid(), "{f:?}");
        let w = a.omega().unwrap();
        assert!(hard_lefschetz(&a, &w).unwrap().holds, "{f:?}");
    }
}

#[test]
fn random_omega_scaling_keeps_lefschetz_data() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..20 {
        let (a, w) = random_algebra(&mut rng);
        let c = small_nonzero(&mut rng, 4);
        let h1 = hard_lefschetz(&a, &w).unwrap();
        let h2 = hard_lefschetz(&a, &w.scale(&c)).unwrap();
        assert_eq!(h1, h2);
    }
}
