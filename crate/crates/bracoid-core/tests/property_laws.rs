//! Randomized law checks: group axioms across every constructor, family
//! instances at arbitrary valid parameters, and enumeration invariants
//! under relabeling.

use bracoid_core::enumerate::{dedupe_left_bracoids, left_bracoids, Caps};
use bracoid_core::family::{brace_two_sided_bracoid, dihedral_family, trivial_brace, FamilyParams};
use bracoid_core::group::FiniteGroup;
use bracoid_core::report::VerdictFlag;
use bracoid_core::two_sided::{
    check_abelian_beta_inverse, check_action_beta_expansion, check_two_sided_from_commutation,
};
use bracoid_core::{LeftActionTable, SkewLeftBracoid};
use proptest::prelude::*;
use std::sync::Arc;

fn small_group() -> impl Strategy<Value = Arc<FiniteGroup>> {
    prop_oneof![
        (1usize..=12).prop_map(|n| FiniteGroup::cyclic(n).unwrap()),
        (1usize..=6).prop_map(|d| FiniteGroup::dihedral(d).unwrap()),
        (1usize..=3).prop_map(|t| FiniteGroup::cyclic_semidirect_c4(t).unwrap()),
        (1usize..=3).prop_map(|w| FiniteGroup::dicyclic(w).unwrap()),
        ((1usize..=4), (1usize..=3)).prop_map(|(a, b)| {
            FiniteGroup::direct_product(
                &FiniteGroup::cyclic(a).unwrap(),
                &FiniteGroup::cyclic(b).unwrap(),
            )
        }),
    ]
}

/// Groups small enough for full enumeration sweeps inside a property.
fn tiny_group() -> impl Strategy<Value = Arc<FiniteGroup>> {
    prop_oneof![
        (1usize..=6).prop_map(|n| FiniteGroup::cyclic(n).unwrap()),
        (1usize..=3).prop_map(|d| FiniteGroup::dihedral(d).unwrap()),
    ]
}

/// Valid family parameters: pick the divisor first, then scale it up.
fn family_params() -> impl Strategy<Value = FamilyParams> {
    (1usize..=3).prop_flat_map(|d| {
        let max_multiple = 6 / d;
        ((1..=max_multiple), (1..=max_multiple))
            .prop_map(move |(a, b)| FamilyParams { t: d * a, w: d * b, d })
    })
}

proptest! {
    #[test]
    fn element_orders_divide_group_order(group in small_group()) {
        for a in 0..group.order() {
            prop_assert_eq!(group.order() % group.element_order(a), 0);
            prop_assert_eq!(group.mul(a, group.inv(a)), group.identity());
            prop_assert_eq!(group.mul(group.inv(a), a), group.identity());
        }
    }

    #[test]
    fn opposite_is_an_involution(group in small_group()) {
        let opposite = group.opposite();
        prop_assert_eq!(opposite.opposite().rows(), group.rows());
        prop_assert_eq!(opposite.is_abelian(), group.is_abelian());
    }

    #[test]
    fn automorphisms_close_under_composition(
        group in tiny_group(),
        i in any::<prop::sample::Index>(),
        j in any::<prop::sample::Index>(),
    ) {
        let automorphisms = group.automorphisms(24).unwrap();
        let first = &automorphisms[i.index(automorphisms.len())];
        let second = &automorphisms[j.index(automorphisms.len())];
        let composed: Vec<usize> =
            (0..group.order()).map(|x| first.apply(second.apply(x))).collect();
        prop_assert!(automorphisms.iter().any(|m| m.images == composed));
    }

    #[test]
    fn family_members_satisfy_all_identities(params in family_params()) {
        let fam = dihedral_family(&params).unwrap();
        prop_assert!(fam.identity_suite().all_passed());
        prop_assert_ne!(
            fam.check_structure_maps().flag,
            VerdictFlag::CounterexampleToTheorem
        );
        let expansion = check_action_beta_expansion(fam.left(), fam.right().action());
        prop_assert_eq!(expansion.flag, VerdictFlag::Ok);
        let converse = check_two_sided_from_commutation(fam.left(), fam.right().action());
        prop_assert_eq!(converse.flag, VerdictFlag::Ok);
        prop_assert_ne!(
            check_abelian_beta_inverse(fam.left(), fam.right().action()).flag,
            VerdictFlag::CounterexampleToTheorem
        );
    }

    #[test]
    fn trivial_braces_pass_brace_theorems(group in small_group()) {
        let brace = trivial_brace(&group);
        prop_assert_ne!(
            brace.check_radical_ring().flag,
            VerdictFlag::CounterexampleToTheorem
        );
        prop_assert_ne!(
            brace.check_associative_implies_two_sided().flag,
            VerdictFlag::CounterexampleToTheorem
        );
        let ts = brace_two_sided_bracoid(&brace).unwrap();
        prop_assert!(ts.identity_suite().all_passed());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn enumeration_is_deterministic_and_validated(
        actor in tiny_group(),
        space in tiny_group(),
    ) {
        let caps = Caps::default();
        let first = left_bracoids(&actor, &space, &caps).unwrap();
        let second = left_bracoids(&actor, &space, &caps).unwrap();
        let tables = |list: &[SkewLeftBracoid]| -> Vec<Vec<Vec<usize>>> {
            list.iter().map(|b| b.action().rows()).collect()
        };
        prop_assert_eq!(tables(&first), tables(&second));
        for b in &first {
            prop_assert!(b.identity_suite().all_passed());
        }
    }

    #[test]
    fn dedupe_absorbs_relabelings(
        actor in tiny_group(),
        space in tiny_group(),
        i in any::<prop::sample::Index>(),
        j in any::<prop::sample::Index>(),
        k in any::<prop::sample::Index>(),
    ) {
        let caps = Caps::default();
        let raw = left_bracoids(&actor, &space, &caps).unwrap();
        prop_assume!(!raw.is_empty());
        let deduped = dedupe_left_bracoids(&raw, &caps).unwrap();

        // Relabel one structure through a random automorphism pair and
        // append it; the isomorphism classes must not change.
        let b = &raw[k.index(raw.len())];
        let aut_actor = actor.automorphisms(24).unwrap();
        let aut_space = space.automorphisms(24).unwrap();
        let phi = &aut_actor[i.index(aut_actor.len())];
        let psi = &aut_space[j.index(aut_space.len())];
        let mut rows = vec![vec![0usize; space.order()]; actor.order()];
        for g in 0..actor.order() {
            for eta in 0..space.order() {
                rows[phi.apply(g)][psi.apply(eta)] = psi.apply(b.act(g, eta));
            }
        }
        let transformed = SkewLeftBracoid::new(
            LeftActionTable::new(Arc::clone(&actor), Arc::clone(&space), rows).unwrap(),
        )
        .unwrap();
        let mut extended = raw.clone();
        extended.push(transformed);
        let deduped_extended = dedupe_left_bracoids(&extended, &caps).unwrap();
        prop_assert_eq!(deduped.len(), deduped_extended.len());
    }
}
