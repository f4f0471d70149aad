//! Randomized invariants across the whole crate: mask algebra, the
//! recovering predicate under symmetry, product laws, statistics
//! identities, and the analytic machinery.

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use sandglass::bounds::{
    binary_entropy, entropy_inv_decreasing, entropy_inv_increasing, first_bound, m_s_lower,
    staircase::binomial_tail_check, UnitReal,
};
use sandglass::constructions::{canonical_pair, power, product, random_recovering_pair};
use sandglass::sets::{is_recovering, GroundSet, SetSystem, SubsetMask};
use sandglass::stats::{
    aharoni_sum, check_cupcap, count_full_union_solutions, full_union_matching,
    solutions_per_union, union_histogram,
};

fn system(ground: GroundSet, masks: &[u64]) -> SetSystem {
    let mut distinct: Vec<u64> = masks.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    let members = distinct
        .iter()
        .map(|&m| SubsetMask::from_bits(ground, m).unwrap())
        .collect();
    SetSystem::new(ground, members).unwrap()
}

fn ground_and_masks(
    max_len: usize,
) -> impl Strategy<Value = (usize, Vec<u64>, Vec<u64>)> {
    (1usize..=6).prop_flat_map(move |n| {
        let mask = 0..(1u64 << n);
        (
            Just(n),
            proptest::collection::vec(mask.clone(), 1..=max_len),
            proptest::collection::vec(mask, 1..=max_len),
        )
    })
}

proptest! {
    #[test]
    fn mask_algebra_identities(n in 1usize..=6, bits in proptest::collection::vec(0u64..64, 2)) {
        let ground = GroundSet::new(n).unwrap();
        let cap = (1u64 << n) - 1;
        let a = SubsetMask::from_bits(ground, bits[0] & cap).unwrap();
        let b = SubsetMask::from_bits(ground, bits[1] & cap).unwrap();
        prop_assert_eq!(a.difference(&b).union(&a.intersection(&b)), a.clone());
        prop_assert_eq!(
            a.union(&b).cardinality() + a.intersection(&b).cardinality(),
            a.cardinality() + b.cardinality()
        );
        prop_assert!(a.intersection(&b).is_subset_of(&a));
        prop_assert_eq!(a.complement_in(ground).complement_in(ground), a);
    }

    #[test]
    fn hex_form_round_trips(n in 1usize..=200, picks in proptest::collection::vec(1usize..=200, 0..20)) {
        let ground = GroundSet::new(n).unwrap();
        let elements: Vec<usize> = picks.into_iter().filter(|&e| e <= n).collect();
        let mask = SubsetMask::from_elements(ground, &elements).unwrap();
        let hex = mask.to_hex();
        prop_assert_eq!(SubsetMask::from_hex(ground, &hex).unwrap(), mask);
    }

    #[test]
    fn recovering_is_mirror_symmetric((n, am, bm) in ground_and_masks(4)) {
        let ground = GroundSet::new(n).unwrap();
        let a = system(ground, &am);
        let b = system(ground, &bm);
        let forward = is_recovering(&a, &b).unwrap().holds();
        let backward = is_recovering(&b, &a).unwrap().holds();
        prop_assert_eq!(forward, backward);
    }

    #[test]
    fn statistics_identities_on_random_recovering_pairs(seed in any::<u64>(), n in 1usize..=5) {
        let ground = GroundSet::new(n).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pair = random_recovering_pair(ground, 4, &mut rng);

        let hist = union_histogram(&pair);
        prop_assert_eq!(u128::from(hist.total()), pair.pair_size());

        let by_union: u64 = (0..1u64 << n)
            .map(|c| solutions_per_union(&pair, &SubsetMask::from_bits(ground, c).unwrap()))
            .sum();
        prop_assert_eq!(u128::from(by_union), pair.pair_size());

        prop_assert_eq!(
            count_full_union_solutions(&pair),
            solutions_per_union(&pair, &ground.full_mask())
        );
        prop_assert_eq!(
            count_full_union_solutions(&pair) as usize,
            full_union_matching(&pair).unwrap().len()
        );
        prop_assert!(check_cupcap(&pair).is_ok());
        prop_assert!(aharoni_sum(&pair) >= pair.pair_size().into());
    }

    #[test]
    fn sampler_is_seed_deterministic(seed in any::<u64>()) {
        let ground = GroundSet::new(4).unwrap();
        let mut r1 = ChaCha8Rng::seed_from_u64(seed);
        let mut r2 = ChaCha8Rng::seed_from_u64(seed);
        let p1 = random_recovering_pair(ground, 3, &mut r1);
        let p2 = random_recovering_pair(ground, 3, &mut r2);
        prop_assert_eq!(p1.a_family().members(), p2.a_family().members());
        prop_assert_eq!(p1.b_family().members(), p2.b_family().members());
        prop_assert!(p1.is_verified_recovering());
    }

    #[test]
    fn products_multiply_every_statistic(s1 in any::<u64>(), s2 in any::<u64>(), n1 in 1usize..=3, n2 in 1usize..=3) {
        let g1 = GroundSet::new(n1).unwrap();
        let g2 = GroundSet::new(n2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(s1 ^ s2.rotate_left(32));
        let p1 = random_recovering_pair(g1, 3, &mut rng);
        let p2 = random_recovering_pair(g2, 3, &mut rng);
        let prod = product(&p1, &p2).unwrap();

        prop_assert!(prod.is_verified_recovering());
        prop_assert_eq!(prod.ground().size(), n1 + n2);
        prop_assert_eq!(prod.pair_size(), p1.pair_size() * p2.pair_size());
        prop_assert_eq!(
            count_full_union_solutions(&prod),
            count_full_union_solutions(&p1) * count_full_union_solutions(&p2)
        );
        prop_assert_eq!(aharoni_sum(&prod), aharoni_sum(&p1) * aharoni_sum(&p2));
    }

    #[test]
    fn squaring_matches_the_explicit_product(seed in any::<u64>()) {
        let ground = GroundSet::new(2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pair = random_recovering_pair(ground, 3, &mut rng);
        let squared = power(&pair, 2).unwrap();
        let explicit = product(&pair, &pair).unwrap();
        prop_assert_eq!(squared.a_family().members(), explicit.a_family().members());
        prop_assert_eq!(squared.b_family().members(), explicit.b_family().members());
    }

    #[test]
    fn canonical_pairs_attain_the_conjectured_size(n in 1usize..=8, core_bits in any::<u64>()) {
        let ground = GroundSet::new(n).unwrap();
        let core = SubsetMask::from_bits(ground, core_bits & ((1u64 << n) - 1)).unwrap();
        let mut pair = canonical_pair(ground, &core).unwrap();
        pair.verify();
        prop_assert!(pair.is_verified_recovering());
        prop_assert_eq!(pair.pair_size(), 1u128 << n);
        prop_assert_eq!(count_full_union_solutions(&pair), 1);
    }

    #[test]
    fn entropy_inverses_round_trip(y in 0.0f64..=1.0) {
        let inc = entropy_inv_increasing(y).unwrap();
        prop_assert!((binary_entropy(inc) - y).abs() < 1e-11);
        let dec = entropy_inv_decreasing(y).unwrap();
        prop_assert!((binary_entropy(dec) - y).abs() < 1e-11);
        prop_assert!(inc.value() <= 0.5 && dec.value() >= 0.5);
    }

    #[test]
    fn first_bound_never_beats_its_peak(u in 0.0f64..=1.0, t in 0.0f64..=1.0) {
        let value = first_bound(UnitReal::new(u).unwrap(), t);
        prop_assert!(value <= (1.0 + t.exp2()).log2() + 1e-12);
    }

    #[test]
    fn symmetric_intersection_bound_stays_inside(u in 0.01f64..=1.0, t in 0.0f64..=1.0) {
        let ms = m_s_lower(UnitReal::new(u).unwrap(), t).unwrap();
        prop_assert!(ms >= 0.0);
        prop_assert!(ms <= 0.5 * u + 1e-12);
    }

    #[test]
    fn binomial_sandwich_holds_wherever_defined(n in 1usize..=80, k in 0.01f64..=0.5) {
        if (k * n as f64).floor() >= 1.0 {
            let check = binomial_tail_check(n, k).unwrap();
            prop_assert!(check.holds);
            prop_assert!(check.lower_log2 <= check.sum_log2);
            prop_assert!(check.sum_log2 <= check.entropy_exponent);
        }
    }
}
