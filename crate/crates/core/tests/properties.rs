//! Randomized invariants over the public API: canonical ordering,
//! closure laws, formula/definition agreement, serialization roundtrips,
//! and sampling determinism.

use nestlab::foundation::{family_from_json, family_to_json};
use nestlab::lab::sample::sample_nests;
use nestlab::nests::t1_separation;
use nestlab::topology::{interval_topology, lower_topology, upper_topology};
use nestlab::{Instance, Nest, Relation, SetFamily, Subset, Topology, Universe};
use proptest::prelude::*;
use std::cmp::Ordering;
use std::sync::Arc;

fn arb_family() -> impl Strategy<Value = SetFamily> {
    (0usize..=5).prop_flat_map(|n| {
        let full = if n == 0 { 0u64 } else { (1u64 << n) - 1 };
        proptest::collection::vec(0..=full, 0..=6).prop_map(move |masks| {
            let u = Universe::alphabetic(n);
            SetFamily::new(u.clone(), masks.iter().map(|&m| Subset::from_mask(&u, m)))
        })
    })
}

/// Chains are exactly the prefix families of some ordering of the
/// universe, so a shuffled prefix selection reaches every nest.
fn arb_nest() -> impl Strategy<Value = Nest> {
    (0usize..=5)
        .prop_flat_map(|n| {
            let order: Vec<usize> = (0..n).collect();
            (
                Just(order).prop_shuffle(),
                proptest::collection::vec(any::<bool>(), n + 1),
            )
        })
        .prop_map(|(order, picks)| {
            let n = order.len();
            let u = Universe::alphabetic(n);
            let mut prefix = 0u64;
            let mut members = Vec::new();
            for (p, &take) in picks.iter().enumerate() {
                if take {
                    members.push(Subset::from_mask(&u, prefix));
                }
                if p < n {
                    prefix |= 1 << order[p];
                }
            }
            Nest::try_from(SetFamily::new(u, members)).expect("prefix chains are nests")
        })
}

fn arb_relation_pair() -> impl Strategy<Value = (Relation, Relation)> {
    (0usize..=4).prop_flat_map(|n| {
        let cap = if n == 0 { 0u64 } else { (1u64 << (n * n)) - 1 };
        (Just(n), 0..=cap, 0..=cap).prop_map(|(n, first, second)| {
            let u: Arc<Universe> = Universe::alphabetic(n);
            (
                Relation::from_matrix_mask(u.clone(), first),
                Relation::from_matrix_mask(u, second),
            )
        })
    })
}

proptest! {
    #[test]
    fn families_keep_canonical_member_order(family in arb_family()) {
        for pair in family.members().windows(2) {
            prop_assert_eq!(pair[0].canonical_cmp(&pair[1]), Ordering::Less);
        }
    }

    #[test]
    fn family_json_roundtrips(family in arb_family()) {
        let text = family_to_json(&family);
        let back = family_from_json(&text).unwrap();
        prop_assert_eq!(back, family);
    }

    #[test]
    fn induced_orders_are_strict_partial_orders(nest in arb_nest()) {
        let order = nest.induced_order();
        prop_assert!(order.is_irreflexive());
        prop_assert!(order.is_antisymmetric());
        prop_assert!(order.is_transitive());
        prop_assert_eq!(nest.order_via_products(), order);
    }

    #[test]
    fn ray_formulas_agree_with_the_induced_order(nest in arb_nest()) {
        let strict = nest.induced_order();
        for x in 0..nest.universe().size() {
            prop_assert_eq!(nest.left_ray_via_members(x), strict.left_ray(x));
            prop_assert_eq!(nest.right_ray_via_members(x), strict.right_ray(x));
        }
    }

    #[test]
    fn t1_separation_implies_t0(family in arb_family()) {
        let report = t1_separation(&family);
        if report.t1 {
            prop_assert!(report.t0);
        }
    }

    #[test]
    fn generated_topologies_are_closed_and_contain_the_subbase(family in arb_family()) {
        let topology = Topology::from_subbase(&family).unwrap();
        for s in family.members() {
            prop_assert!(topology.contains_open(s));
        }
        let u = family.universe();
        prop_assert!(topology.contains_open(&Subset::empty(u)));
        prop_assert!(topology.contains_open(&Subset::full(u)));
        for a in topology.opens().members() {
            for b in topology.opens().members() {
                prop_assert!(topology.contains_open(&a.union(b)));
                prop_assert!(topology.contains_open(&a.intersection(b)));
            }
        }
        // Idempotence: the opens already form a topology.
        let rewrapped = Topology::from_opens(topology.opens().clone()).unwrap();
        prop_assert_eq!(rewrapped, topology);
    }

    #[test]
    fn join_is_an_upper_bound_and_idempotent((r, s) in arb_relation_pair()) {
        let a = upper_topology(&r).unwrap();
        let b = lower_topology(&s).unwrap();
        let join = a.join(&b).unwrap();
        prop_assert!(a.is_coarser_or_equal(&join).unwrap());
        prop_assert!(b.is_coarser_or_equal(&join).unwrap());
        prop_assert_eq!(a.join(&a).unwrap(), a.clone());
        prop_assert_eq!(b.join(&a).unwrap(), join);
    }

    #[test]
    fn comparison_tags_match_both_inclusions((r, s) in arb_relation_pair()) {
        let a = interval_topology(&r).unwrap();
        let b = interval_topology(&s).unwrap();
        let comparison = a.compare(&b).unwrap();
        let forward = a.is_coarser_or_equal(&b).unwrap();
        let backward = b.is_coarser_or_equal(&a).unwrap();
        let expected = match (forward, backward) {
            (true, true) => "equal",
            (false, true) => "strictly-finer",
            (true, false) => "strictly-coarser",
            (false, false) => "incomparable",
        };
        prop_assert_eq!(comparison.tag(), expected);
        if let Some(w) = comparison.witness() {
            prop_assert!(a.contains_open(&w) != b.contains_open(&w));
        }
    }

    #[test]
    fn nest_instances_roundtrip_as_json(nest in arb_nest()) {
        let instance = Instance::Nest {
            universe: nest.universe().labels().to_vec(),
            sets: nest.family().member_label_lists(),
        };
        let text = serde_json::to_string(&instance).unwrap();
        let back: Instance = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(&back, &instance);
    }

    #[test]
    fn nest_sampling_is_seed_deterministic(
        n in 0usize..=5,
        count in 0u64..40,
        seed in any::<u64>(),
    ) {
        let u = Universe::alphabetic(n);
        let first = sample_nests(&u, count, seed);
        let second = sample_nests(&u, count, seed);
        prop_assert_eq!(first.len() as u64, count);
        for (a, b) in first.iter().zip(&second) {
            prop_assert_eq!(a.family(), b.family());
        }
    }
}
