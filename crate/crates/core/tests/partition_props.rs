use std::collections::BTreeSet;

use proptest::prelude::*;

use bellhopf::partition::{
    all_bicolored_set_partitions, count_f, count_g, f_table, g_table, generate_s, is_member_s, r_stirling,
    BicoloredSetPartition, Color,
};
use bellhopf::Error;

fn color(first: bool) -> Color {
    if first {
        Color::One
    } else {
        Color::Two
    }
}

/// A random colored set partition of `{1..n}` from a block assignment.
fn raw_partition() -> impl Strategy<Value = Vec<(Vec<u32>, Color)>> {
    (1usize..8)
        .prop_flat_map(|n| (prop::collection::vec(0usize..4, n), prop::collection::vec(any::<bool>(), 4)))
        .prop_map(|(assign, colors)| {
            let mut blocks: Vec<Vec<u32>> = vec![Vec::new(); 4];
            for (i, b) in assign.iter().enumerate() {
                blocks[*b].push(i as u32 + 1);
            }
            blocks
                .into_iter()
                .zip(colors)
                .filter(|(b, _)| !b.is_empty())
                .map(|(mut b, c)| {
                    b.reverse();
                    (b, color(c))
                })
                .collect()
        })
}

proptest! {
    #[test]
    fn canonical_form_ignores_presentation(raw in raw_partition(), rot in 0usize..4) {
        let p = BicoloredSetPartition::canonicalize(raw.clone()).unwrap();
        let mut shuffled = raw.clone();
        let len = shuffled.len();
        shuffled.rotate_left(rot % len);
        prop_assert_eq!(&BicoloredSetPartition::canonicalize(shuffled).unwrap(), &p);
        let minima: Vec<u32> = p.blocks().iter().map(|b| b.least()).collect();
        prop_assert!(minima.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(p.blocks().iter().all(|b| b.elems.windows(2).all(|w| w[0] < w[1])));
        prop_assert_eq!(p.shape_c().weight(), p.weight());
        prop_assert_eq!(p.shape_lambda(), p.shape_c().to_partition());
    }

    #[test]
    fn standardize_is_order_isomorphic(raw in raw_partition(), shift in 1u32..20) {
        let p = BicoloredSetPartition::canonicalize(raw.clone()).unwrap();
        let spread = raw.into_iter().map(|(b, c)| (b.into_iter().map(|e| 3 * e + shift).collect(), c));
        prop_assert_eq!(BicoloredSetPartition::standardize(spread).unwrap(), p);
    }

    #[test]
    fn shifted_union_splits_back(a in raw_partition(), b in raw_partition()) {
        let p = BicoloredSetPartition::canonicalize(a).unwrap();
        let q = BicoloredSetPartition::canonicalize(b).unwrap();
        let u = p.shifted_union(&q);
        prop_assert_eq!(u.weight(), p.weight() + q.weight());
        let low = (1u64 << p.length()) - 1;
        let high = ((1u64 << u.length()) - 1) & !low;
        prop_assert_eq!(u.standardized_subset(low), p);
        prop_assert_eq!(u.standardized_subset(high), q);
    }

    #[test]
    fn json_round_trip(raw in raw_partition()) {
        let p = BicoloredSetPartition::canonicalize(raw).unwrap();
        let json = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<BicoloredSetPartition>(&json).unwrap(), p);
    }

    #[test]
    fn family_members_and_size(r in 0u32..4, n in 0u32..6, k in 0u32..6) {
        let family = generate_s(r, n, k);
        let distinct: BTreeSet<_> = family.iter().cloned().collect();
        prop_assert_eq!(distinct.len(), family.len());
        prop_assert!(family.iter().all(|p| is_member_s(p, r, n, k)));
        prop_assert_eq!(num_bigint::BigUint::from(family.len()), r_stirling(n + r, k + r, r));
    }

    #[test]
    fn shape_tables_sum_to_size(r in 0u32..3, n in 0u32..5, k in 0u32..5) {
        let total = generate_s(r, n, k).len();
        let f = f_table(r, n, k);
        let g = g_table(r, n, k);
        prop_assert_eq!(f.values().sum::<usize>(), total);
        prop_assert_eq!(g.values().sum::<usize>(), total);
        for (shape, m) in &f {
            prop_assert_eq!(count_f(r, n, k, shape), *m);
        }
        for (shape, m) in &g {
            prop_assert_eq!(count_g(r, n, k, shape), *m);
        }
    }
}

#[test]
fn all_partitions_counted_by_two_colored_bell_numbers() {
    // Σ_j S(n, j) 2^j
    let expected = [1usize, 2, 6, 22, 94, 454];
    for (n, e) in expected.iter().enumerate() {
        assert_eq!(all_bicolored_set_partitions(n as u32).len(), *e);
    }
}

#[test]
fn invalid_blocks_are_rejected() {
    let c = Color::One;
    assert_eq!(BicoloredSetPartition::canonicalize(vec![(vec![1, 2], c), (vec![2], c)]), Err(Error::OverlappingBlocks(2)));
    assert!(matches!(
        BicoloredSetPartition::canonicalize(vec![(vec![1], c), (vec![3], c)]),
        Err(Error::GapInGroundSet { n: 2, missing: 2 })
    ));
    assert_eq!(BicoloredSetPartition::canonicalize(vec![(vec![], c)]), Err(Error::EmptyBlock));
    assert_eq!(BicoloredSetPartition::canonicalize(vec![(vec![0], c)]), Err(Error::ZeroElement));
    assert!(serde_json::from_str::<BicoloredSetPartition>(r#"{"n":2,"blocks":[{"elems":[1,2],"color":3}]}"#).is_err());
}

#[test]
fn worked_family_in_stream_order() {
    let got: Vec<String> = generate_s(2, 2, 1).iter().map(ToString::to_string).collect();
    assert_eq!(
        got,
        [
            "{({1,3},1),({2},1),({4},2)}",
            "{({1},1),({2,3},1),({4},2)}",
            "{({1,4},1),({2},1),({3},2)}",
            "{({1},1),({2,4},1),({3},2)}",
            "{({1},1),({2},1),({3,4},2)}",
        ]
    );
}
