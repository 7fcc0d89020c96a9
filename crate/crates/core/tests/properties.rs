use adframe_core::adframe::{build_ado, validate_adframe, Variant};
use adframe_core::duality::{enumerate_points, is_ad_sober, PointAlgorithm};
use adframe_core::finord::{FinLattice, FinPreTopSpace, FinTopSpace};
use adframe_core::json::{adframe_to_json, parse_adframe, parse_space, space_to_json};
use adframe_core::theorems::generate::{random_distributive_lattice, random_preorder};
use adframe_core::theorems::{generate_frame, random_space, rng, FrameFamily};
use adframe_core::Subset;
use proptest::prelude::*;

fn variant() -> impl Strategy<Value = Variant> {
    prop_oneof![Just(Variant::Up), Just(Variant::Down), Just(Variant::Both)]
}

fn space(max: usize) -> impl Strategy<Value = FinPreTopSpace> {
    (0..=max, any::<u64>()).prop_map(|(n, seed)| random_space(n, &mut rng(seed)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn closure_is_complement_of_interior_of_complement(x in space(6), bits in any::<u64>()) {
        let t = x.topology();
        let a = Subset(bits) & Subset::full(t.n());
        let c = t.closure(a);
        prop_assert!(a.is_subset(c));
        prop_assert!(t.is_closed(c));
        prop_assert_eq!(c, t.interior(a.complement(t.n())).complement(t.n()));
        prop_assert!(t.interior(a).is_subset(a));
        prop_assert!(t.is_open(t.interior(a)));
    }

    #[test]
    fn alexandroff_topology_recovers_its_preorder(n in 0usize..6, seed in any::<u64>()) {
        let p = random_preorder(n, &mut rng(seed));
        let t = FinTopSpace::alexandroff(&p).unwrap();
        prop_assert_eq!(t.specialization(), p);
    }

    #[test]
    fn primes_of_distributive_lattices_have_unique_pitchfork_partners(points in 1usize..6, seed in any::<u64>()) {
        let l = random_distributive_lattice(points, &mut rng(seed)).unwrap();
        prop_assert!(l.is_distributive());
        for q in l.primes() {
            let partners: Vec<usize> = (0..l.len()).filter(|&b| l.is_pitchfork(q, b)).collect();
            prop_assert_eq!(partners.len(), 1);
            prop_assert!(l.is_coprime(partners[0]));
        }
        prop_assert_eq!(l.primes().len(), l.coprimes().len());
    }

    #[test]
    fn prime_and_brute_force_points_agree(x in space(3), v in variant()) {
        let f = build_ado(&x, v).unwrap();
        let a = enumerate_points(&f, PointAlgorithm::Prime).unwrap();
        let b = enumerate_points(&f, PointAlgorithm::BruteForce).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn spaces_round_trip_through_json(x in space(5)) {
        let text = serde_json::to_string(&space_to_json(&x)).unwrap();
        prop_assert_eq!(parse_space(&text).unwrap(), x);
    }

    #[test]
    fn ad_frames_round_trip_through_json(seed in any::<u64>(), v in variant(), ind in any::<bool>()) {
        let fam = if ind { FrameFamily::Ind } else { FrameFamily::AdO };
        let f = generate_frame(fam, 3, v, seed).unwrap().frame;
        let text = serde_json::to_string(&adframe_to_json(&f)).unwrap();
        prop_assert_eq!(parse_adframe(&text).unwrap(), f);
    }

    #[test]
    fn generated_frames_are_valid_and_mutations_break_their_axiom(seed in any::<u64>(), v in variant()) {
        for fam in [FrameFamily::AdO, FrameFamily::Ind] {
            let g = generate_frame(fam, 3, v, seed).unwrap();
            prop_assert!(validate_adframe(&g.frame).unwrap().passed());
        }
        let g = generate_frame(FrameFamily::Mutated, 3, v, seed).unwrap();
        let r = validate_adframe(&g.frame).unwrap();
        let target = g.mutation.unwrap();
        prop_assert!(r.failures().any(|c| c.name == target));
    }

    #[test]
    fn ad_sobriety_routes_agree(x in space(4), v in variant()) {
        // disagreement surfaces as an error
        prop_assert!(is_ad_sober(&x, v).is_ok());
    }

    #[test]
    fn lattice_order_round_trip(points in 1usize..5, seed in any::<u64>()) {
        let l = random_distributive_lattice(points, &mut rng(seed)).unwrap();
        let again = FinLattice::from_order(l.len(), &l.order_pairs()).unwrap();
        for a in 0..l.len() {
            for b in 0..l.len() {
                prop_assert_eq!(l.join(a, b), again.join(a, b));
                prop_assert_eq!(l.meet(a, b), again.meet(a, b));
            }
        }
    }
}
