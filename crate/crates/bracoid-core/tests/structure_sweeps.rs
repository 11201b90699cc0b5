//! Deterministic exhaustive sweeps: every structure the enumerators can
//! reach at small orders is pushed through the identity checkers and the
//! theorem verdicts.

use bracoid_core::enumerate::{
    braces, group_representatives, left_bracoids, right_bracoids, transitive_right_actions,
    two_sided_bracoids, Caps,
};
use bracoid_core::family::{brace_two_sided_bracoid, dihedral_family, FamilyParams};
use bracoid_core::group::FiniteGroup;
use bracoid_core::report::VerdictFlag;
use bracoid_core::two_sided::{
    check_abelian_beta_inverse, check_action_beta_expansion, check_two_sided_from_commutation,
};

#[test]
fn family_grid_passes_identities_and_theorems() {
    for t in 1..=4usize {
        for w in 1..=4usize {
            for d in 1..=w.min(t) {
                if t % d != 0 || w % d != 0 {
                    continue;
                }
                let fam = dihedral_family(&FamilyParams { t, w, d }).unwrap();
                let suite = fam.identity_suite();
                assert!(suite.all_passed(), "({t},{w},{d}): {:?}", suite.failures().collect::<Vec<_>>());
                let verdicts = [
                    fam.check_structure_maps(),
                    check_action_beta_expansion(fam.left(), fam.right().action()),
                    check_two_sided_from_commutation(fam.left(), fam.right().action()),
                    check_abelian_beta_inverse(fam.left(), fam.right().action()),
                ];
                for v in verdicts {
                    assert_ne!(
                        v.flag,
                        VerdictFlag::CounterexampleToTheorem,
                        "({t},{w},{d}): {} with witness {:?}",
                        v.theorem,
                        v.witness
                    );
                }
            }
        }
    }
}

#[test]
fn enumerated_left_bracoids_pass_identity_suites() {
    let caps = Caps::default();
    for actor_order in 1..=6usize {
        for actor in group_representatives(actor_order).unwrap() {
            for space_order in 1..=4usize {
                for space in group_representatives(space_order).unwrap() {
                    for b in left_bracoids(&actor, &space, &caps).unwrap() {
                        let suite = b.identity_suite();
                        assert!(
                            suite.all_passed(),
                            "{} on {}: {:?}",
                            actor.name(),
                            space.name(),
                            suite.failures().collect::<Vec<_>>()
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn enumerated_right_bracoids_pass_identity_suites() {
    let caps = Caps::default();
    for actor_order in 1..=6usize {
        for actor in group_representatives(actor_order).unwrap() {
            for space_order in 1..=4usize {
                for space in group_representatives(space_order).unwrap() {
                    for b in right_bracoids(&actor, &space, &caps).unwrap() {
                        let suite = b.identity_suite();
                        assert!(
                            suite.all_passed(),
                            "{} on {}: {:?}",
                            actor.name(),
                            space.name(),
                            suite.failures().collect::<Vec<_>>()
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn enumerated_braces_pass_brace_theorems() {
    let caps = Caps::default();
    for order in 1..=6usize {
        for star in group_representatives(order).unwrap() {
            for brace in braces(&star, &caps).unwrap() {
                let suite = brace.as_left_bracoid().identity_suite();
                assert!(suite.all_passed(), "{}: {:?}", star.name(), suite.failures().collect::<Vec<_>>());
                for v in [brace.check_radical_ring(), brace.check_associative_implies_two_sided()]
                {
                    assert_ne!(
                        v.flag,
                        VerdictFlag::CounterexampleToTheorem,
                        "{} on {} with witness {:?}",
                        v.theorem,
                        star.name(),
                        v.witness
                    );
                }
                if brace.is_two_sided() {
                    let ts = brace_two_sided_bracoid(&brace).unwrap();
                    assert!(ts.identity_suite().all_passed());
                    assert_ne!(
                        ts.check_structure_maps().flag,
                        VerdictFlag::CounterexampleToTheorem
                    );
                }
            }
        }
    }
}

#[test]
fn commuting_right_actions_never_refute_the_converse_theorems() {
    // Every (left bracoid, transitive right action) pair on C4 with
    // order-4 actors, whether or not the actions commute: the converse
    // and expansion verdicts must never flag a counterexample.
    let caps = Caps::default();
    let space = FiniteGroup::cyclic(4).unwrap();
    for left_actor in group_representatives(4).unwrap() {
        for right_actor in group_representatives(4).unwrap() {
            for left in left_bracoids(&left_actor, &space, &caps).unwrap() {
                for right in transitive_right_actions(&right_actor, &space, &caps).unwrap() {
                    for v in [
                        check_two_sided_from_commutation(&left, &right),
                        check_action_beta_expansion(&left, &right),
                        check_abelian_beta_inverse(&left, &right),
                    ] {
                        assert_ne!(
                            v.flag,
                            VerdictFlag::CounterexampleToTheorem,
                            "{} for {} / {} with witness {:?}",
                            v.theorem,
                            left_actor.name(),
                            right_actor.name(),
                            v.witness
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn two_sided_enumeration_on_abelian_space_satisfies_structure_maps() {
    // On an abelian space the structure-map hypotheses hold, so the
    // verdict must come back affirmative on every enumerated structure.
    let caps = Caps::default();
    let space = FiniteGroup::dihedral(2).unwrap(); // Klein four-group
    for left_actor in group_representatives(4).unwrap() {
        for right_actor in group_representatives(4).unwrap() {
            for ts in two_sided_bracoids(&left_actor, &right_actor, &space, &caps).unwrap() {
                assert!(ts.identity_suite().all_passed());
                let v = ts.check_structure_maps();
                assert_eq!(v.flag, VerdictFlag::Ok, "witness {:?}", v.witness);
                assert_eq!(v.conclusion, Some(true));
            }
        }
    }
}
