//! Law checks on randomized words and tableaux: the raising and lowering
//! operators invert each other, the bracket counts satisfy the tensor
//! recursion, the reflection operators are involutions with the expected
//! action on weights, the rotation has full order, the two enumeration
//! routes agree on every small shape, and the parallel scans match their
//! single-threaded references.

use std::sync::OnceLock;

use proptest::prelude::*;

use kncrystal::crystal::{sigma, sigma_i};
use kncrystal::csp::{
    action_permutation, action_permutation_sequential, fixed_point_counts,
    fixed_point_counts_sequential,
};
use kncrystal::enumerate::{
    enumerate_by_crystal, enumerate_by_crystal_sequential, enumerate_by_filter,
    enumerate_by_filter_sequential, DEFAULT_CAP,
};
use kncrystal::qpoly::{pwr_tab, pwr_wt};
use kncrystal::word::Word;
use kncrystal::{KNTableau, Letter, Partition};

fn word_strategy() -> impl Strategy<Value = Word> {
    (1usize..=3).prop_flat_map(|m| {
        prop::collection::vec(1..=2 * m, 0..=8).prop_map(move |ranks| {
            let letters = ranks
                .into_iter()
                .map(|r| Letter::from_rank(r, m).unwrap())
                .collect();
            Word::new(m, letters).unwrap()
        })
    })
}

/// Counts the surviving signs of a word one letter at a time: a single
/// letter carries one minus when the lowering operator moves it and one
/// plus when the raising operator does, and a concatenation combines the
/// counts of its factors after cancelling pluses of the head against
/// minuses of the tail.
fn phi_eps_by_recursion(letters: &[Letter], i: usize, m: usize) -> (usize, usize) {
    match letters.split_first() {
        None => (0, 0),
        Some((&head, tail)) => {
            let r = head.rank();
            let phi_head = usize::from(r == i || r == 2 * m - i);
            let eps_head = usize::from(r == i + 1 || r == 2 * m + 1 - i);
            let (phi_tail, eps_tail) = phi_eps_by_recursion(tail, i, m);
            (
                phi_head + phi_tail.saturating_sub(eps_head),
                eps_tail + eps_head.saturating_sub(phi_tail),
            )
        }
    }
}

/// Members of several full crystals at ranks two and three, pooled so the
/// randomized suites can sample individual tableaux.
fn pool() -> &'static [KNTableau] {
    static POOL: OnceLock<Vec<KNTableau>> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut out = Vec::new();
        for (parts, m) in [
            (vec![1], 2),
            (vec![2], 2),
            (vec![1, 1], 2),
            (vec![2, 1], 2),
            (vec![2, 2], 2),
            (vec![1], 3),
            (vec![2, 1], 3),
            (vec![1, 1, 1], 3),
        ] {
            let shape = Partition::new(parts).unwrap();
            let set = enumerate_by_filter(&shape, m, DEFAULT_CAP).unwrap();
            out.extend_from_slice(set.members());
        }
        out
    })
}

/// Every partition with at most `total` boxes, the empty one included.
fn partitions_up_to(total: usize) -> Vec<Vec<usize>> {
    fn extend(rest: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(prefix.clone());
        for part in 1..=rest.min(max_part) {
            prefix.push(part);
            extend(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(total, total, &mut Vec::new(), &mut out);
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn lowering_and_raising_invert_each_other(w in word_strategy()) {
        for i in 1..=w.m() {
            if let Some(lowered) = w.apply_f(i) {
                prop_assert_eq!(lowered.apply_e(i), Some(w.clone()));
            }
            if let Some(raised) = w.apply_e(i) {
                prop_assert_eq!(raised.apply_f(i), Some(w.clone()));
            }
        }
    }

    #[test]
    fn bracket_counts_satisfy_the_tensor_recursion(w in word_strategy()) {
        for i in 1..=w.m() {
            let (phi, eps) = phi_eps_by_recursion(w.letters(), i, w.m());
            prop_assert_eq!(w.phi(i), phi);
            prop_assert_eq!(w.epsilon(i), eps);
            prop_assert_eq!(phi as i64 - eps as i64, w.weight().pairing(i));
        }
    }

    #[test]
    fn reflections_are_involutive_and_reflect_the_weight(idx in any::<prop::sample::Index>()) {
        let t = &pool()[idx.index(pool().len())];
        for i in 1..=t.m() {
            let reflected = sigma_i(t, i);
            prop_assert_eq!(reflected.weight(), t.weight().simple_reflection(i));
            prop_assert_eq!(sigma_i(&reflected, i), t.clone());
        }
    }

    #[test]
    fn rotation_rotates_the_weight_and_has_full_order(idx in any::<prop::sample::Index>()) {
        let t = &pool()[idx.index(pool().len())];
        let rotated = sigma(t);
        prop_assert_eq!(rotated.weight(), t.weight().signed_rotation());
        let mut around = rotated;
        for _ in 1..2 * t.m() {
            around = sigma(&around);
        }
        prop_assert_eq!(around, t.clone());
    }

    #[test]
    fn pwr_from_entries_equals_pwr_from_the_weight(idx in any::<prop::sample::Index>()) {
        let t = &pool()[idx.index(pool().len())];
        prop_assert_eq!(pwr_tab(t) as i64, pwr_wt(&t.weight(), t.size()).unwrap());
    }
}

#[test]
fn both_enumeration_routes_agree_on_every_small_shape() {
    for parts in partitions_up_to(5) {
        let lambda = Partition::new(parts.clone()).unwrap();
        for m in 1..=3 {
            if parts.len() > m {
                assert!(enumerate_by_filter(&lambda, m, DEFAULT_CAP).is_err());
                assert!(enumerate_by_crystal(&lambda, m, DEFAULT_CAP).is_err());
                continue;
            }
            let by_crystal = enumerate_by_crystal(&lambda, m, DEFAULT_CAP).unwrap();
            let by_filter = enumerate_by_filter(&lambda, m, DEFAULT_CAP).unwrap();
            assert_eq!(
                by_crystal.members(),
                by_filter.members(),
                "members of ({lambda}, {m})"
            );
        }
    }
    let hook = Partition::new(vec![2, 1]).unwrap();
    assert_eq!(
        enumerate_by_crystal(&hook, 4, DEFAULT_CAP)
            .unwrap()
            .members(),
        enumerate_by_filter(&hook, 4, DEFAULT_CAP)
            .unwrap()
            .members()
    );
}

#[test]
fn weight_multiset_is_symmetric_under_negation() {
    for (parts, m) in [
        (vec![2, 1], 2),
        (vec![2, 2], 2),
        (vec![2, 1], 3),
        (vec![3, 1, 1], 3),
    ] {
        let set = enumerate_by_filter(&Partition::new(parts).unwrap(), m, DEFAULT_CAP).unwrap();
        for (chi, &count) in set.weight_multiset() {
            assert_eq!(set.count_at(&chi.negate()), count, "weight {chi}");
        }
    }
}

#[test]
fn parallel_scans_match_their_sequential_references() {
    let lambda = Partition::new(vec![2, 1]).unwrap();
    for m in [2, 3] {
        assert_eq!(
            enumerate_by_crystal(&lambda, m, DEFAULT_CAP)
                .unwrap()
                .members(),
            enumerate_by_crystal_sequential(&lambda, m, DEFAULT_CAP)
                .unwrap()
                .members()
        );
        assert_eq!(
            enumerate_by_filter(&lambda, m, DEFAULT_CAP)
                .unwrap()
                .members(),
            enumerate_by_filter_sequential(&lambda, m, DEFAULT_CAP)
                .unwrap()
                .members()
        );
        let set = enumerate_by_filter(&lambda, m, DEFAULT_CAP).unwrap();
        let perm = action_permutation(&set, sigma).unwrap();
        assert_eq!(perm, action_permutation_sequential(&set, sigma).unwrap());
        assert_eq!(
            fixed_point_counts(&perm, 2 * m),
            fixed_point_counts_sequential(&perm, 2 * m)
        );
    }
}
