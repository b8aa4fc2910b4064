//! Randomized invariants: linear algebra laws, catalog literal round
//! trips, and stability of the structural computations under change of
//! basis.

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use formations::module::section_module;
use formations::sampling::{random_character_module, random_invertible, random_soluble_algebra};
use formations::series::{chief_series, nilradical};
use formations::subspace::rref;
use formations::{
    formation_membership, AlgebraKind, FieldTag, FormationSpec, MatrixExact, Scalar,
    SubspaceBasis,
};

fn field_strategy() -> impl Strategy<Value = FieldTag> {
    prop_oneof![
        Just(FieldTag::Q),
        Just(FieldTag::GF(2)),
        Just(FieldTag::GF(3)),
        Just(FieldTag::GF(5)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rref_is_a_fixpoint(
        (field, ambient) in field_strategy().prop_flat_map(|f| (Just(f), 1usize..=6)),
        seed in any::<u64>(),
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_invertible(&mut rng, field, ambient);
        let first = rref(&m);
        let again = SubspaceBasis::span(field, ambient, &first.basis_rows()).unwrap();
        prop_assert_eq!(first, again);
    }

    #[test]
    fn modular_law_for_subspace_dimensions(
        (field, ambient) in field_strategy().prop_flat_map(|f| (Just(f), 1usize..=6)),
        seeds in (0usize..1).prop_flat_map(|_| (any::<u64>(), any::<u64>())),
    ) {
        let (s1, s2) = seeds;
        let mut rng1 = ChaCha8Rng::seed_from_u64(s1);
        let mut rng2 = ChaCha8Rng::seed_from_u64(s2);
        let rows_a: Vec<Vec<Scalar>> = (0..2)
            .map(|_| formations::sampling::random_vector(&mut rng1, field, ambient))
            .collect();
        let rows_b: Vec<Vec<Scalar>> = (0..2)
            .map(|_| formations::sampling::random_vector(&mut rng2, field, ambient))
            .collect();
        let a = SubspaceBasis::span(field, ambient, &rows_a).unwrap();
        let b = SubspaceBasis::span(field, ambient, &rows_b).unwrap();
        let sum = a.sum(&b).unwrap();
        let meet = a.intersect(&b).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), a.dim() + b.dim());
    }

    #[test]
    fn rational_literals_round_trip(num in -40i64..=40, den in 1i64..=24) {
        let s = Scalar::rational(num, den);
        let text = s.to_string();
        let back = Scalar::parse_canonical(FieldTag::Q, &text).unwrap();
        prop_assert_eq!(s, back);
    }

    #[test]
    fn modular_literals_round_trip(p in prop_oneof![Just(2u64), Just(3), Just(5), Just(7)], n in 0i64..=6) {
        let field = FieldTag::GF(p);
        let s = Scalar::from_integer(field, n);
        let back = Scalar::parse_canonical(field, &s.to_string()).unwrap();
        prop_assert_eq!(s, back);
    }

    #[test]
    fn random_subspace_vectors_span_consistently(
        (field, ambient) in field_strategy().prop_flat_map(|f| (Just(f), 1usize..=5)),
        raw in prop::collection::vec(prop::collection::vec(-3i64..=3, 5), 1..=3),
    ) {
        let vectors: Vec<Vec<Scalar>> = raw
            .iter()
            .map(|row| row.iter().take(ambient).map(|&n| Scalar::from_integer(field, n)).collect())
            .collect();
        let space = SubspaceBasis::span(field, ambient, &vectors).unwrap();
        for v in &vectors {
            prop_assert!(space.contains(v).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn lie_product_of_subspaces_is_symmetric(seed in any::<u64>(), dim in 2usize..=5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let l = random_soluble_algebra(&mut rng, FieldTag::Q, dim, false).unwrap();
        let a = SubspaceBasis::span(
            FieldTag::Q,
            dim,
            &[formations::sampling::random_vector(&mut rng, FieldTag::Q, dim)],
        )
        .unwrap();
        let b = SubspaceBasis::span(
            FieldTag::Q,
            dim,
            &[formations::sampling::random_vector(&mut rng, FieldTag::Q, dim)],
        )
        .unwrap();
        let ab = l.product_subspaces(&a, &b).unwrap();
        let ba = l.product_subspaces(&b, &a).unwrap();
        prop_assert_eq!(ab, ba);
    }

    #[test]
    fn spun_submodules_are_action_closed(seed in any::<u64>(), dim in 2usize..=4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let l = random_soluble_algebra(&mut rng, FieldTag::GF(3), dim, true).unwrap();
        let regular = section_module(&l, &l.full_space(), &l.zero_space()).unwrap();
        let v = formations::sampling::random_vector(&mut rng, FieldTag::GF(3), dim);
        let spun = regular.module.spin(&v).unwrap();
        // independent closure check against the raw action matrices
        for row in spun.space().basis_rows() {
            for i in 0..l.dim() {
                let left = regular.module.left(i).apply(&row).unwrap();
                prop_assert!(spun.space().contains(&left).unwrap());
                if let Some(right) = regular.module.right(i) {
                    let moved = right.apply(&row).unwrap();
                    prop_assert!(spun.space().contains(&moved).unwrap());
                }
            }
        }
    }

    #[test]
    fn split_extension_quotient_recovers_the_base(
        seed in any::<u64>(),
        dim in 1usize..=4,
        symmetric in any::<bool>(),
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let base = random_soluble_algebra(&mut rng, FieldTag::Q, dim, false).unwrap();
        let module = random_character_module(&mut rng, &base, symmetric).unwrap();
        let extension = module.split_extension().unwrap();
        let (q, pi) = extension.algebra.quotient(&extension.module_ideal).unwrap();
        let expected = if extension.algebra.kind() == AlgebraKind::Leibniz {
            base.clone().into_leibniz_kind()
        } else {
            base.clone()
        };
        prop_assert!(q.same_structure(&expected));
        prop_assert!(pi.is_surjective());
    }

    #[test]
    fn nilradical_is_invariant_under_change_of_basis(seed in any::<u64>(), dim in 2usize..=4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let field = FieldTag::GF(3);
        let l = random_soluble_algebra(&mut rng, field, dim, true).unwrap();
        let t = random_invertible(&mut rng, field, dim);
        let moved = l.change_basis(&t).unwrap();
        let n = nilradical(&l).unwrap();
        let n_moved = nilradical(&moved).unwrap();
        // new coordinates relate to old by v_old = T v_new
        let back: Vec<Vec<Scalar>> = n_moved
            .space()
            .basis_rows()
            .iter()
            .map(|v| t.apply(v).unwrap())
            .collect();
        let transformed = SubspaceBasis::span(field, dim, &back).unwrap();
        prop_assert_eq!(&transformed, n.space());
    }

    #[test]
    fn loc_membership_is_invariant_under_change_of_basis(seed in any::<u64>(), dim in 2usize..=4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let field = FieldTag::GF(2);
        let l = random_soluble_algebra(&mut rng, field, dim, true).unwrap();
        let t = random_invertible(&mut rng, field, dim);
        let moved = l.change_basis(&t).unwrap();
        for spec_text in ["loc(zero)", "loc(abelian)", "supersoluble"] {
            let spec: FormationSpec = spec_text.parse().unwrap();
            prop_assert_eq!(
                formation_membership(&l, &spec).unwrap(),
                formation_membership(&moved, &spec).unwrap(),
                "spec {}", spec_text
            );
        }
    }

    #[test]
    fn chief_factor_count_matches_dimension(seed in any::<u64>(), dim in 1usize..=5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let l = random_soluble_algebra(&mut rng, FieldTag::Q, dim, true).unwrap();
        let series = chief_series(&l).unwrap();
        let total: usize = series.factor_dims().iter().sum();
        prop_assert_eq!(total, dim);
        for factor in &series.factors {
            prop_assert!(factor.is_irreducible().unwrap());
        }
    }

    #[test]
    fn invertible_matrices_compose_with_inverses(seed in any::<u64>(), n in 1usize..=5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_invertible(&mut rng, FieldTag::Q, n);
        let inv = formations::subspace::invert(&m).unwrap();
        let product = m.mul(&inv).unwrap();
        prop_assert_eq!(product, MatrixExact::identity(FieldTag::Q, n));
    }
}
