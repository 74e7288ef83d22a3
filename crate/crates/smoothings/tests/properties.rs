mod common;

use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use smoothings::classifier::{classify, lens_inertia, ClassifyError};
use smoothings::exact_algebra::{hom_kernel, AbelianGroup, IntMatrix};
use smoothings::oracle::{brute_subgroup, group_order_profile, order_profile};
use smoothings::profile::{profile_connected_sum, profile_lens9, profile_rp, profile_sphere, CohomProfile};

fn matrix(max_dim: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(move |(r, c)| {
        prop::collection::vec(-bound..=bound, r * c)
            .prop_map(move |v| IntMatrix::from_fn(r, c, |i, j| BigInt::from(v[i * c + j])))
    })
}

fn builder_profile() -> impl Strategy<Value = CohomProfile> {
    prop_oneof![
        (7usize..=10).prop_map(|n| profile_sphere(n).unwrap()),
        (7usize..=10).prop_map(|n| profile_rp(n).unwrap()),
        (2u64..=16).prop_map(|m| profile_lens9(m).unwrap()),
    ]
}

fn nine_profile() -> impl Strategy<Value = CohomProfile> {
    prop_oneof![
        Just(profile_sphere(9).unwrap()),
        Just(profile_rp(9).unwrap()),
        (2u64..=16).prop_map(|m| profile_lens9(m).unwrap()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn smith_form_is_sound(a in matrix(6, 9)) {
        common::check_smith(&a).map_err(TestCaseError::fail)?;
    }

    #[test]
    fn cokernel_order_matches_enumeration(a in matrix(4, 6)) {
        common::check_cokernel(&a).map_err(TestCaseError::fail)?;
    }

    #[test]
    fn subgroups_match_enumeration(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        common::check_random_subgroup(&mut rng).map_err(TestCaseError::fail)?;
    }

    #[test]
    fn hom_kernel_matches_enumeration(
        src in prop::collection::vec(prop::sample::select(vec![2u64, 3, 4, 6, 8]), 1..=3),
        tgt in prop::collection::vec(prop::sample::select(vec![2u64, 4]), 1..=2),
        seed in any::<u64>(),
    ) {
        use rand::Rng;
        let source = common::orders(&src);
        let s_orders: Vec<u64> = source.torsion.iter().map(|d| d.try_into().unwrap()).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        // a well-defined map Z/s -> Z/t sends the generator to a multiple of t/gcd(s, t)
        let m = IntMatrix::from_fn(tgt.len(), s_orders.len(), |i, j| {
            let step = tgt[i] / num_integer::gcd(tgt[i], s_orders[j]);
            BigInt::from(step * rng.gen_range(0..tgt[i]))
        });
        let t_orders: Vec<_> = tgt.iter().map(|&t| t.into()).collect();
        let k = hom_kernel(&source, &t_orders, &m).unwrap();
        // enumerate the kernel by brute force
        let all = brute_subgroup(&source, &(0..s_orders.len()).map(|j| {
            (0..s_orders.len()).map(|i| BigInt::from((i == j) as i64)).collect()
        }).collect::<Vec<_>>()).unwrap();
        let kernel: std::collections::HashSet<Vec<u64>> = all.into_iter().filter(|x| {
            (0..tgt.len()).all(|i| {
                let v: BigInt = (0..x.len()).map(|j| m.get(i, j) * x[j]).sum();
                (v % tgt[i]) == BigInt::from(0)
            })
        }).collect();
        let exponent = s_orders.iter().fold(1u64, |a, &b| num_integer::lcm(a, b));
        prop_assert_eq!(group_order_profile(&k.structure, exponent), order_profile(&kernel, &s_orders));
    }

    #[test]
    fn canonical_form_is_order_independent(mut v in prop::collection::vec(1u64..=30, 0..6)) {
        let a = common::orders(&v);
        v.reverse();
        prop_assert_eq!(&a, &common::orders(&v));
        let product: u64 = v.iter().product();
        prop_assert_eq!(a.order_u64(), Some(product));
    }

    #[test]
    fn sums_with_spheres_are_neutral(p in builder_profile()) {
        let s = profile_connected_sum(&p, &profile_sphere(p.n).unwrap()).unwrap();
        prop_assert_eq!(&s.groups, &p.groups);
        prop_assert_eq!(s.flags, p.flags);
        prop_assert_eq!(&s.operations, &p.operations);
    }

    #[test]
    fn sums_commute_on_groups(p in nine_profile(), q in nine_profile()) {
        let a = profile_connected_sum(&p, &q).unwrap();
        let b = profile_connected_sum(&q, &p).unwrap();
        prop_assert_eq!(&a.groups, &b.groups);
        prop_assert_eq!(a.flags, b.flags);
        a.validate().unwrap();
    }

    #[test]
    fn classification_respects_bounds(p in nine_profile(), q in nine_profile()) {
        let s = profile_connected_sum(&p, &q).unwrap();
        for prof in [p, s] {
            match classify(&prof) {
                Ok(r) => r.check_discipline().map_err(TestCaseError::fail)?,
                Err(ClassifyError::Alternatives(alts)) => {
                    for (_, r) in alts {
                        r.check_discipline().map_err(TestCaseError::fail)?;
                    }
                }
                Err(ClassifyError::Hypothesis(_)) => {}
                Err(e) => return Err(TestCaseError::fail(e.to_string())),
            }
        }
    }

    #[test]
    fn profiles_round_trip_through_json(p in builder_profile()) {
        prop_assert_eq!(CohomProfile::from_json(&p.to_json()).unwrap(), p);
    }

    #[test]
    fn lens_inertia_depends_on_m_mod_four(m in 1u64..10_000) {
        let expected = [4u64, 1, 2, 1][(m % 4) as usize];
        prop_assert_eq!(lens_inertia(m).unwrap().structure.order_u64(), Some(expected));
        prop_assert_eq!(lens_inertia(m).unwrap(), lens_inertia(m % 4 + 4).unwrap());
    }

    #[test]
    fn cyclic_uct_matches_hand_formula(m in 2u64..=40) {
        // L^9(m) integral cohomology: Z, 0, Z/m, 0, ..., Z/m, Z
        let integral: Vec<AbelianGroup> = (0..=9).map(|k| match k {
            0 | 9 => AbelianGroup::free(1),
            k if k % 2 == 0 => AbelianGroup::cyclic(m),
            _ => AbelianGroup::trivial(),
        }).collect();
        let p = profile_lens9(m).unwrap();
        for g in p.groups.iter().filter(|g| g.coefficients != 0) {
            prop_assert_eq!(&g.group, &common::hand_uct(&integral, g.degree, g.coefficients), "H^{}(Z/{})", g.degree, g.coefficients);
        }
    }
}
