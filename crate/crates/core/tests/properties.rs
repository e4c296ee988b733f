use akblocks::{
    abacus_to_partition, beta_set, e_core_and_weight, equivalent, eta, eta_inverse, fuse,
    generate_block, move1_neighbors, move2_neighbors, residue_multiset, split, stretch,
    upsilon_shift, upsilon_swap, AbacusConfig, EtaDecomposition, MultiAbacus, Partition,
};
use proptest::prelude::*;

fn partition(max_len: usize, max_part: u32) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=max_part, 0..=max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

fn config() -> impl Strategy<Value = AbacusConfig> {
    (partition(8, 9), -15i64..15).prop_map(|(p, s)| AbacusConfig::new(p, s))
}

fn multi(max_r: usize, side: u32) -> impl Strategy<Value = MultiAbacus> {
    prop::collection::vec(
        (partition(side as usize, side), -6i64..6).prop_map(|(p, s)| AbacusConfig::new(p, s)),
        1..=max_r,
    )
    .prop_map(|cs| MultiAbacus::new(cs).unwrap())
}

proptest! {
    #[test]
    fn beta_set_round_trip(c in config()) {
        let (p, s) = abacus_to_partition(&beta_set(&c.partition, c.charge));
        prop_assert_eq!(p, c.partition);
        prop_assert_eq!(s, c.charge);
    }

    #[test]
    fn eta_round_trip(c in config(), e in 2usize..=6) {
        let d = eta(&c, e);
        prop_assert_eq!(d.total_charge(), c.charge);
        prop_assert_eq!(c.partition.size(), e_core_and_weight(&c.partition, e).0.size() + e * d.weight());
        prop_assert_eq!(eta_inverse(&d, e).unwrap(), c);
    }

    #[test]
    fn eta_inverse_round_trip(
        quotient in prop::collection::vec(partition(3, 3), 3),
        charges in prop::collection::vec(-4i64..4, 3),
    ) {
        let d = EtaDecomposition::new(quotient, charges).unwrap();
        prop_assert_eq!(eta(&eta_inverse(&d, 3).unwrap(), 3), d);
    }

    #[test]
    fn moves_are_symmetric_and_stay_in_block(m in multi(2, 4), e in 2usize..=4) {
        let res = residue_multiset(&m, e);
        for y in move1_neighbors(&m, e) {
            prop_assert_eq!(residue_multiset(&y, e), res.clone());
            prop_assert!(move1_neighbors(&y, e).contains(&m));
        }
        for y in move2_neighbors(&m, e) {
            prop_assert_eq!(residue_multiset(&y, e), res.clone());
            prop_assert!(move2_neighbors(&y, e).contains(&m));
        }
    }

    #[test]
    fn split_inverts_fuse(m in multi(3, 4), e in 2usize..=4) {
        let c = fuse(&m, e);
        prop_assert_eq!(c.charge, m.charges().iter().sum::<i64>());
        prop_assert_eq!(split(&c, m.r(), e), m);
    }

    #[test]
    fn fuse_inverts_split(c in config(), r in 1usize..=3, e in 2usize..=4) {
        prop_assert_eq!(fuse(&split(&c, r, e), e), c);
    }

    #[test]
    fn fuse_respects_blocks(m in multi(2, 3), e in 2usize..=3) {
        let b = generate_block(&m, e);
        let image = fuse(&m, e).into();
        for y in b.members().iter().take(12) {
            prop_assert!(equivalent(&image, &fuse(y, e).into(), e));
        }
    }

    #[test]
    fn stretch_keeps_quotient_and_inverts(
        c in config(),
        v in prop::collection::vec(-3i64..4, 3),
    ) {
        let s = stretch(&c, &v, 3).unwrap();
        prop_assert_eq!(eta(&s, 3).quotient, eta(&c, 3).quotient);
        let back: Vec<i64> = v.iter().map(|x| -x).collect();
        prop_assert_eq!(stretch(&s, &back, 3).unwrap(), c);
    }

    #[test]
    fn swaps_are_involutions(m in multi(2, 4), e in 2usize..=5, i in 0usize..5) {
        let i = i % e;
        let once = upsilon_swap(&m, i, e).unwrap();
        prop_assert_eq!(upsilon_swap(&once, i, e).unwrap(), m.clone());
    }

    #[test]
    fn shifts_map_blocks_to_blocks(m in multi(2, 3), e in 2usize..=3) {
        let b = generate_block(&m, e);
        let shifted = upsilon_shift(&m);
        let image = generate_block(&shifted, e);
        prop_assert_eq!(image.len(), b.len());
        for y in b.members() {
            prop_assert!(image.contains(&upsilon_shift(y)));
        }
    }
}
