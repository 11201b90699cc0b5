//! Exhaustive enumeration of bracoid and brace structures on small groups,
//! with deduplication up to isomorphism.
//!
//! Everything here is brute force made viable by parameterization:
//!
//! * [`left_bracoids`] factors a skew left bracoid into a homomorphism
//!   `γ: G → Aut(N, ⋆)` plus a surjective twisted-translation map
//!   `o(g) = g ⊙ e_N` obeying `o(g·h) = o(g) ⋆ γ(g)(o(h))`, and searches
//!   generator images for both. Each reconstructed table is re-validated,
//!   so the parameterization is checked, not trusted.
//! * [`left_bracoids_reference`] ignores all of that and scans raw
//!   permutation images of the generators. Exponentially slower but with
//!   no theory baked in — the two enumerators are compared in tests.
//! * Right-sided searches run the left search on the opposite actor group
//!   and transpose the result.
//! * [`braces`] transports each classified group of the carrier's order
//!   onto the carrier through identity-fixing bijections and keeps the
//!   tables satisfying the brace rule.
//!
//! Deduplication computes an exact canonical form: the lexicographically
//! smallest action table over the whole automorphism orbit (pairs `(φ, ψ)`
//! for one-sided structures, triples for two-sided ones, a single `⋆`-
//! automorphism for braces). Every canonical form of a complete raw
//! enumeration is itself a member, so representatives are genuine
//! structures. All output orders are deterministic: candidate scans are
//! ordered and results are sorted by table.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::action::{LeftActionTable, RightActionTable};
use crate::bracoid::{SkewBrace, SkewLeftBracoid, SkewRightBracoid};
use crate::group::{for_each_homomorphism, FiniteGroup, GroupError, GroupMap};
use crate::two_sided::TwoSidedSkewBracoid;

/// Hard ceiling on the space order for the permutation-scanning reference
/// enumerators: candidate sets grow as `|N|!`.
pub const REFERENCE_SPACE_CAP: usize = 6;

/// Largest order with a hardcoded list of group isomorphism classes, which
/// bounds brace enumeration.
pub const MAX_CLASSIFIED_ORDER: usize = 8;

/// Size limits for the enumeration routines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest actor or space order admitted to a bracoid search.
    pub group_order: usize,
    /// Largest group whose automorphism group will be computed (dedupe
    /// needs automorphisms of every group involved).
    pub automorphism_order: usize,
    /// Largest carrier order admitted to a brace search.
    pub brace_order: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { group_order: 12, automorphism_order: 24, brace_order: 8 }
    }
}

/// Why an enumeration was refused.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EnumerateError {
    /// A group involved exceeds the relevant cap.
    OrderCapExceeded { order: usize, cap: usize },
    /// Brace enumeration needs the classified group list, which stops at
    /// `max_supported`.
    UnsupportedOrder { order: usize, max_supported: usize },
}

impl core::fmt::Display for EnumerateError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            EnumerateError::OrderCapExceeded { order, cap } => {
                write!(f, "group order {order} exceeds the enumeration cap {cap}")
            }
            EnumerateError::UnsupportedOrder { order, max_supported } => {
                write!(
                    f,
                    "no classified group list for order {order} (supported up to {max_supported})"
                )
            }
        }
    }
}

impl core::error::Error for EnumerateError {}

/// An enumeration result: the structures found, how many raw structures
/// existed before isomorphism-deduplication, and — when deduplication ran —
/// how many classes remain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration<T> {
    pub structures: Vec<T>,
    pub raw_count: usize,
    pub iso_class_count: Option<usize>,
}

fn check_group_cap(group: &FiniteGroup, cap: usize) -> Result<(), EnumerateError> {
    if group.order() > cap {
        return Err(EnumerateError::OrderCapExceeded { order: group.order(), cap });
    }
    Ok(())
}

fn automorphism_error(e: GroupError) -> EnumerateError {
    match e {
        GroupError::OrderCapExceeded { order, cap } => {
            EnumerateError::OrderCapExceeded { order, cap }
        }
        other => unreachable!("automorphism search only fails on its cap: {other}"),
    }
}

/// All permutations of `values` in lexicographic order.
fn permutations_of(values: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(values.len());
    let mut used = alloc::vec![false; values.len()];
    fn descend(
        values: &[usize],
        used: &mut [bool],
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if current.len() == values.len() {
            out.push(current.clone());
            return;
        }
        for i in 0..values.len() {
            if !used[i] {
                used[i] = true;
                current.push(values[i]);
                descend(values, used, current, out);
                current.pop();
                used[i] = false;
            }
        }
    }
    descend(values, &mut used, &mut current, &mut out);
    out
}

fn perm_power_is_identity(perm: &[usize], exponent: usize) -> bool {
    (0..perm.len()).all(|start| {
        let mut x = start;
        for _ in 0..exponent {
            x = perm[x];
        }
        x == start
    })
}

fn flat_left_table(b: &SkewLeftBracoid) -> Vec<usize> {
    let (gn, n) = (b.actor().order(), b.space().order());
    (0..gn).flat_map(|g| (0..n).map(move |eta| b.act(g, eta))).collect()
}

fn flat_right_table(b: &SkewRightBracoid) -> Vec<usize> {
    let (n, hn) = (b.space().order(), b.actor().order());
    (0..n).flat_map(|eta| (0..hn).map(move |h| b.act(eta, h))).collect()
}

// ============================================================================
// Transitive action enumeration (permutation scan)
// ============================================================================

/// All transitive left actions of `actor` on the carrier of `space`, by
/// brute force over permutation images of the generators. The space order
/// is capped at [`REFERENCE_SPACE_CAP`].
pub fn transitive_left_actions(
    actor: &Arc<FiniteGroup>,
    space: &Arc<FiniteGroup>,
    caps: &Caps,
) -> Result<Vec<LeftActionTable>, EnumerateError> {
    check_group_cap(actor, caps.group_order)?;
    check_group_cap(space, caps.group_order)?;
    check_group_cap(space, REFERENCE_SPACE_CAP)?;

    let n = space.order();
    let gens = actor.generating_sequence();
    let all_perms = permutations_of(&(0..n).collect::<Vec<_>>());
    let candidates: Vec<Vec<Vec<usize>>> = gens
        .iter()
        .map(|&s| {
            let ord = actor.element_order(s);
            all_perms.iter().filter(|p| perm_power_is_identity(p, ord)).cloned().collect()
        })
        .collect();

    let identity_perm: Vec<usize> = (0..n).collect();
    let mut compose =
        |a: &Vec<usize>, b: &Vec<usize>| -> Vec<usize> { b.iter().map(|&x| a[x]).collect() };
    let mut found: Vec<LeftActionTable> = Vec::new();
    for_each_homomorphism(actor, &gens, &candidates, identity_perm, &mut compose, &mut |images| {
        let rows: Vec<Vec<usize>> = images.to_vec();
        let table = LeftActionTable::new(Arc::clone(actor), Arc::clone(space), rows)
            .expect("a homomorphism into permutations is an action");
        if table.is_transitive() {
            found.push(table);
        }
    });
    found.sort_by_key(|t| t.rows());
    Ok(found)
}

/// All transitive right actions of `actor` on the carrier of `space`:
/// the left enumeration on the opposite group, transposed.
pub fn transitive_right_actions(
    actor: &Arc<FiniteGroup>,
    space: &Arc<FiniteGroup>,
    caps: &Caps,
) -> Result<Vec<RightActionTable>, EnumerateError> {
    let opposite = actor.opposite();
    let lefts = transitive_left_actions(&opposite, space, caps)?;
    let mut found: Vec<RightActionTable> = lefts
        .iter()
        .map(|t| {
            let rows: Vec<Vec<usize>> = (0..space.order())
                .map(|eta| (0..actor.order()).map(|h| t.act(h, eta)).collect())
                .collect();
            RightActionTable::new(Arc::clone(actor), Arc::clone(space), rows)
                .expect("transpose of an opposite-group action is a right action")
        })
        .collect();
    found.sort_by_key(|t| t.rows());
    Ok(found)
}

// ============================================================================
// Left bracoid enumeration
// ============================================================================

/// Reference enumerator: every skew left bracoid of `actor` on `space`,
/// found by filtering [`transitive_left_actions`] through the product
/// rule. No structure theory involved; space order capped at
/// [`REFERENCE_SPACE_CAP`].
pub fn left_bracoids_reference(
    actor: &Arc<FiniteGroup>,
    space: &Arc<FiniteGroup>,
    caps: &Caps,
) -> Result<Vec<SkewLeftBracoid>, EnumerateError> {
    let actions = transitive_left_actions(actor, space, caps)?;
    Ok(actions.into_iter().filter_map(|t| SkewLeftBracoid::new(t).ok()).collect())
}

/// Walks every orbit-map assignment for a fixed `γ` homomorphism. `gamma`
/// holds the automorphism image of every actor element; a candidate value
/// `o(s)` is tried for each generator and closed through
/// `o(x·s) = o(x) ⋆ γ(x)(o(s))`, which pins `o` on all of `G` because every
/// element is a positive word in the generators. Surjective (= transitive)
/// completions are passed to `visit`.
fn for_each_orbit_map(
    actor: &FiniteGroup,
    space: &FiniteGroup,
    gens: &[usize],
    gamma: &[Vec<usize>],
    visit: &mut impl FnMut(&[usize]),
) {
    fn close_orbit(
        actor: &FiniteGroup,
        space: &FiniteGroup,
        gens: &[usize],
        chosen: &[usize],
        gamma: &[Vec<usize>],
    ) -> Option<Vec<Option<usize>>> {
        let mut orbit: Vec<Option<usize>> = alloc::vec![None; actor.order()];
        orbit[actor.identity()] = Some(space.identity());
        let mut stack = alloc::vec![actor.identity()];
        while let Some(x) = stack.pop() {
            let at_x = orbit[x].expect("stack holds defined elements");
            for (k, &s) in gens.iter().enumerate() {
                let y = actor.mul(x, s);
                let want = space.mul(at_x, gamma[x][chosen[k]]);
                match orbit[y] {
                    None => {
                        orbit[y] = Some(want);
                        stack.push(y);
                    }
                    Some(v) => {
                        if v != want {
                            return None;
                        }
                    }
                }
            }
        }
        Some(orbit)
    }

    fn descend(
        actor: &FiniteGroup,
        space: &FiniteGroup,
        gens: &[usize],
        gamma: &[Vec<usize>],
        visit: &mut impl FnMut(&[usize]),
        chosen: &mut Vec<usize>,
    ) {
        match close_orbit(actor, space, &gens[..chosen.len()], chosen, gamma) {
            None => return,
            Some(orbit) => {
                if chosen.len() == gens.len() {
                    let total: Vec<usize> = orbit
                        .into_iter()
                        .map(|v| v.expect("generators span the group"))
                        .collect();
                    let mut hit = alloc::vec![false; space.order()];
                    for &v in &total {
                        hit[v] = true;
                    }
                    if hit.iter().all(|&h| h) {
                        visit(&total);
                    }
                    return;
                }
            }
        }
        for candidate in 0..space.order() {
            chosen.push(candidate);
            descend(actor, space, gens, gamma, visit, chosen);
            chosen.pop();
        }
    }

    let mut chosen: Vec<usize> = Vec::with_capacity(gens.len());
    descend(actor, space, gens, gamma, visit, &mut chosen);
}

/// Every skew left bracoid of `actor` on `space`, via the `(γ, orbit map)`
/// parameterization. Handles all orders within `caps.group_order`; output
/// is sorted by action table.
pub fn left_bracoids(
    actor: &Arc<FiniteGroup>,
    space: &Arc<FiniteGroup>,
    caps: &Caps,
) -> Result<Vec<SkewLeftBracoid>, EnumerateError> {
    check_group_cap(actor, caps.group_order)?;
    check_group_cap(space, caps.group_order)?;

    let automorphisms =
        space.automorphisms(caps.automorphism_order).map_err(automorphism_error)?;
    let aut_images: Vec<Vec<usize>> = automorphisms.into_iter().map(|m| m.images).collect();

    let n = space.order();
    let gens = actor.generating_sequence();
    let candidates: Vec<Vec<Vec<usize>>> = gens
        .iter()
        .map(|&s| {
            let ord = actor.element_order(s);
            aut_images.iter().filter(|p| perm_power_is_identity(p, ord)).cloned().collect()
        })
        .collect();

    let identity_map: Vec<usize> = (0..n).collect();
    let mut compose =
        |a: &Vec<usize>, b: &Vec<usize>| -> Vec<usize> { b.iter().map(|&x| a[x]).collect() };
    let mut found: Vec<SkewLeftBracoid> = Vec::new();
    for_each_homomorphism(actor, &gens, &candidates, identity_map, &mut compose, &mut |gamma| {
        for_each_orbit_map(actor, space, &gens, gamma, &mut |orbit| {
            let rows: Vec<Vec<usize>> = (0..actor.order())
                .map(|g| (0..n).map(|eta| space.mul(orbit[g], gamma[g][eta])).collect())
                .collect();
            let table = LeftActionTable::new(Arc::clone(actor), Arc::clone(space), rows)
                .expect("reconstructed table satisfies the action laws");
            found.push(
                SkewLeftBracoid::new(table)
                    .expect("reconstructed table satisfies the bracoid laws"),
            );
        });
    });
    found.sort_by_key(flat_left_table);
    Ok(found)
}

/// Every skew right bracoid of `actor` on `space`: the left enumeration on
/// the opposite group, transposed. The right product rule is the left one
/// read in the opposite actor, so the transposed tables are re-validated
/// as right bracoids directly.
pub fn right_bracoids(
    actor: &Arc<FiniteGroup>,
    space: &Arc<FiniteGroup>,
    caps: &Caps,
) -> Result<Vec<SkewRightBracoid>, EnumerateError> {
    let opposite = actor.opposite();
    let lefts = left_bracoids(&opposite, space, caps)?;
    let mut found: Vec<SkewRightBracoid> = lefts
        .iter()
        .map(|b| {
            let rows: Vec<Vec<usize>> = (0..space.order())
                .map(|eta| (0..actor.order()).map(|h| b.act(h, eta)).collect())
                .collect();
            let table = RightActionTable::new(Arc::clone(actor), Arc::clone(space), rows)
                .expect("transpose of an opposite-group action is a right action");
            SkewRightBracoid::new(table)
                .expect("transpose of an opposite left bracoid is a right bracoid")
        })
        .collect();
    found.sort_by_key(flat_right_table);
    Ok(found)
}

/// Every two-sided skew bracoid with the given actors on `space`: all
/// compatible pairs from the one-sided enumerations.
pub fn two_sided_bracoids(
    left_actor: &Arc<FiniteGroup>,
    right_actor: &Arc<FiniteGroup>,
    space: &Arc<FiniteGroup>,
    caps: &Caps,
) -> Result<Vec<TwoSidedSkewBracoid>, EnumerateError> {
    let lefts = left_bracoids(left_actor, space, caps)?;
    let rights = right_bracoids(right_actor, space, caps)?;
    let mut found = Vec::new();
    for left in &lefts {
        for right in &rights {
            if let Ok(ts) = TwoSidedSkewBracoid::new(left.clone(), right.clone()) {
                found.push(ts);
            }
        }
    }
    Ok(found)
}

// ============================================================================
// Brace enumeration
// ============================================================================

/// One representative per isomorphism class of groups of the given order,
/// for the classically known orders `1..=8`.
pub fn group_representatives(order: usize) -> Result<Vec<Arc<FiniteGroup>>, EnumerateError> {
    let cyclic = |n| FiniteGroup::cyclic(n).expect("small cyclic group builds");
    let reps = match order {
        1 => alloc::vec![cyclic(1)],
        2 => alloc::vec![cyclic(2)],
        3 => alloc::vec![cyclic(3)],
        4 => alloc::vec![cyclic(4), FiniteGroup::dihedral(2).expect("D2 builds")],
        5 => alloc::vec![cyclic(5)],
        6 => alloc::vec![cyclic(6), FiniteGroup::dihedral(3).expect("D3 builds")],
        7 => alloc::vec![cyclic(7)],
        8 => {
            let c2 = cyclic(2);
            alloc::vec![
                cyclic(8),
                FiniteGroup::direct_product(&cyclic(4), &c2),
                FiniteGroup::direct_product(&FiniteGroup::direct_product(&c2, &c2), &c2),
                FiniteGroup::dihedral(4).expect("D4 builds"),
                FiniteGroup::dicyclic(2).expect("Q8 builds"),
            ]
        }
        _ => {
            return Err(EnumerateError::UnsupportedOrder {
                order,
                max_supported: MAX_CLASSIFIED_ORDER,
            })
        }
    };
    Ok(reps)
}

/// Every skew brace on the carrier of `space` (with `⋆` the given group):
/// transport each classified group of that order onto the carrier through
/// every identity-fixing bijection, dedupe exact tables (transports along
/// bijections differing by an automorphism coincide), and keep those
/// satisfying the brace rule. Sorted by dot table.
pub fn braces(space: &Arc<FiniteGroup>, caps: &Caps) -> Result<Vec<SkewBrace>, EnumerateError> {
    let n = space.order();
    if n > caps.brace_order {
        return Err(EnumerateError::OrderCapExceeded { order: n, cap: caps.brace_order });
    }
    let reps = group_representatives(n)?;

    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut found: Vec<SkewBrace> = Vec::new();
    for rep in &reps {
        let others: Vec<usize> = (0..n).filter(|&i| i != rep.identity()).collect();
        for arrangement in permutations_of(&others) {
            // σ maps carrier indices to rep indices, identity to identity.
            let mut sigma = alloc::vec![0usize; n];
            sigma[space.identity()] = rep.identity();
            let mut values = arrangement.iter();
            for (i, slot) in sigma.iter_mut().enumerate() {
                if i != space.identity() {
                    *slot = *values.next().expect("arrangement covers non-identity slots");
                }
            }
            let mut sigma_inv = alloc::vec![0usize; n];
            for (i, &v) in sigma.iter().enumerate() {
                sigma_inv[v] = i;
            }
            let rows: Vec<Vec<usize>> = (0..n)
                .map(|a| (0..n).map(|b| sigma_inv[rep.mul(sigma[a], sigma[b])]).collect())
                .collect();
            let flat: Vec<usize> = rows.iter().flatten().copied().collect();
            if !seen.insert(flat) {
                continue;
            }
            let dot = FiniteGroup::from_table(
                rep.name(),
                space.element_names().to_vec(),
                rows,
            )
            .expect("transport of a group table is a group");
            if let Ok(brace) = SkewBrace::new(Arc::clone(space), Arc::new(dot)) {
                found.push(brace);
            }
        }
    }
    found.sort_by_key(|b| b.dot().rows());
    Ok(found)
}

// ============================================================================
// Deduplication up to isomorphism
// ============================================================================

/// Smallest transformed flat table over `(φ, ψ) ∈ Aut(G) × Aut(N)`, where
/// the transform relabels `t'[φg][ψη] = ψ(t[g][η])`.
fn left_canonical_form(
    b: &SkewLeftBracoid,
    aut_actor: &[GroupMap],
    aut_space: &[GroupMap],
) -> Vec<usize> {
    let (gn, n) = (b.actor().order(), b.space().order());
    let mut best: Option<Vec<usize>> = None;
    for phi in aut_actor {
        for psi in aut_space {
            let mut flat = alloc::vec![0usize; gn * n];
            for g in 0..gn {
                for eta in 0..n {
                    flat[phi.apply(g) * n + psi.apply(eta)] = psi.apply(b.act(g, eta));
                }
            }
            if best.as_ref().is_none_or(|current| flat < *current) {
                best = Some(flat);
            }
        }
    }
    best.expect("automorphism lists contain the identity")
}

fn right_canonical_form(
    b: &SkewRightBracoid,
    aut_actor: &[GroupMap],
    aut_space: &[GroupMap],
) -> Vec<usize> {
    let (n, hn) = (b.space().order(), b.actor().order());
    let mut best: Option<Vec<usize>> = None;
    for chi in aut_actor {
        for psi in aut_space {
            let mut flat = alloc::vec![0usize; n * hn];
            for eta in 0..n {
                for h in 0..hn {
                    flat[psi.apply(eta) * hn + chi.apply(h)] = psi.apply(b.act(eta, h));
                }
            }
            if best.as_ref().is_none_or(|current| flat < *current) {
                best = Some(flat);
            }
        }
    }
    best.expect("automorphism lists contain the identity")
}

fn shared_left_groups(list: &[SkewLeftBracoid]) -> (&Arc<FiniteGroup>, &Arc<FiniteGroup>) {
    let (actor, space) = (list[0].actor(), list[0].space());
    for b in list {
        assert_eq!(b.actor(), actor, "dedupe input must share one actor group");
        assert_eq!(b.space(), space, "dedupe input must share one space group");
    }
    (actor, space)
}

/// Collapse a complete enumeration to one representative per isomorphism
/// class (same actor and space throughout). Representatives are the
/// canonical forms themselves, in ascending table order.
pub fn dedupe_left_bracoids(
    list: &[SkewLeftBracoid],
    caps: &Caps,
) -> Result<Vec<SkewLeftBracoid>, EnumerateError> {
    if list.is_empty() {
        return Ok(Vec::new());
    }
    let (actor, space) = shared_left_groups(list);
    let aut_actor = actor.automorphisms(caps.automorphism_order).map_err(automorphism_error)?;
    let aut_space = space.automorphisms(caps.automorphism_order).map_err(automorphism_error)?;
    let canonical: BTreeSet<Vec<usize>> =
        list.iter().map(|b| left_canonical_form(b, &aut_actor, &aut_space)).collect();
    let n = space.order();
    Ok(canonical
        .into_iter()
        .map(|flat| {
            let rows: Vec<Vec<usize>> = flat.chunks(n).map(|row| row.to_vec()).collect();
            let table = LeftActionTable::new(Arc::clone(actor), Arc::clone(space), rows)
                .expect("canonical transform preserves the action laws");
            SkewLeftBracoid::new(table).expect("canonical transform preserves the bracoid laws")
        })
        .collect())
}

/// Right-sided counterpart of [`dedupe_left_bracoids`].
pub fn dedupe_right_bracoids(
    list: &[SkewRightBracoid],
    caps: &Caps,
) -> Result<Vec<SkewRightBracoid>, EnumerateError> {
    if list.is_empty() {
        return Ok(Vec::new());
    }
    let (actor, space) = (list[0].actor(), list[0].space());
    for b in list {
        assert_eq!(b.actor(), actor, "dedupe input must share one actor group");
        assert_eq!(b.space(), space, "dedupe input must share one space group");
    }
    let aut_actor = actor.automorphisms(caps.automorphism_order).map_err(automorphism_error)?;
    let aut_space = space.automorphisms(caps.automorphism_order).map_err(automorphism_error)?;
    let canonical: BTreeSet<Vec<usize>> =
        list.iter().map(|b| right_canonical_form(b, &aut_actor, &aut_space)).collect();
    let hn = actor.order();
    Ok(canonical
        .into_iter()
        .map(|flat| {
            let rows: Vec<Vec<usize>> = flat.chunks(hn).map(|row| row.to_vec()).collect();
            let table = RightActionTable::new(Arc::clone(actor), Arc::clone(space), rows)
                .expect("canonical transform preserves the action laws");
            SkewRightBracoid::new(table).expect("canonical transform preserves the bracoid laws")
        })
        .collect())
}

/// Two-sided deduplication over triples `(φ, χ, ψ)`. For a fixed space
/// automorphism ψ the left transform depends only on φ and the right only
/// on χ, so the minimum of the concatenated pair factors into independent
/// minima; the overall canonical form takes the best ψ.
pub fn dedupe_two_sided_bracoids(
    list: &[TwoSidedSkewBracoid],
    caps: &Caps,
) -> Result<Vec<TwoSidedSkewBracoid>, EnumerateError> {
    if list.is_empty() {
        return Ok(Vec::new());
    }
    let left_actor = list[0].left_actor();
    let right_actor = list[0].right_actor();
    let space = list[0].space();
    for b in list {
        assert_eq!(b.left_actor(), left_actor, "dedupe input must share one left actor");
        assert_eq!(b.right_actor(), right_actor, "dedupe input must share one right actor");
        assert_eq!(b.space(), space, "dedupe input must share one space group");
    }
    let aut_left =
        left_actor.automorphisms(caps.automorphism_order).map_err(automorphism_error)?;
    let aut_right =
        right_actor.automorphisms(caps.automorphism_order).map_err(automorphism_error)?;
    let aut_space = space.automorphisms(caps.automorphism_order).map_err(automorphism_error)?;

    let (gn, hn, n) = (left_actor.order(), right_actor.order(), space.order());
    let mut canonical: BTreeSet<(Vec<usize>, Vec<usize>)> = BTreeSet::new();
    for b in list {
        let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
        for psi in &aut_space {
            let mut left_min: Option<Vec<usize>> = None;
            for phi in &aut_left {
                let mut flat = alloc::vec![0usize; gn * n];
                for g in 0..gn {
                    for eta in 0..n {
                        flat[phi.apply(g) * n + psi.apply(eta)] =
                            psi.apply(b.left().act(g, eta));
                    }
                }
                if left_min.as_ref().is_none_or(|current| flat < *current) {
                    left_min = Some(flat);
                }
            }
            let mut right_min: Option<Vec<usize>> = None;
            for chi in &aut_right {
                let mut flat = alloc::vec![0usize; n * hn];
                for eta in 0..n {
                    for h in 0..hn {
                        flat[psi.apply(eta) * hn + chi.apply(h)] =
                            psi.apply(b.right().act(eta, h));
                    }
                }
                if right_min.as_ref().is_none_or(|current| flat < *current) {
                    right_min = Some(flat);
                }
            }
            let candidate =
                (left_min.expect("nonempty"), right_min.expect("nonempty"));
            if best.as_ref().is_none_or(|current| candidate < *current) {
                best = Some(candidate);
            }
        }
        canonical.insert(best.expect("automorphism lists contain the identity"));
    }

    Ok(canonical
        .into_iter()
        .map(|(left_flat, right_flat)| {
            let left_rows: Vec<Vec<usize>> =
                left_flat.chunks(n).map(|row| row.to_vec()).collect();
            let right_rows: Vec<Vec<usize>> =
                right_flat.chunks(hn).map(|row| row.to_vec()).collect();
            let left = SkewLeftBracoid::new(
                LeftActionTable::new(Arc::clone(left_actor), Arc::clone(space), left_rows)
                    .expect("canonical transform preserves the action laws"),
            )
            .expect("canonical transform preserves the bracoid laws");
            let right = SkewRightBracoid::new(
                RightActionTable::new(Arc::clone(right_actor), Arc::clone(space), right_rows)
                    .expect("canonical transform preserves the action laws"),
            )
            .expect("canonical transform preserves the bracoid laws");
            TwoSidedSkewBracoid::new(left, right)
                .expect("canonical transform preserves compatibility")
        })
        .collect())
}

/// Brace deduplication: a brace isomorphism fixing the `⋆` table is a
/// single `⋆`-automorphism ψ relabeling the dot table, so the canonical
/// form is the smallest `dot'[ψa][ψb] = ψ(dot(a,b))`.
pub fn dedupe_braces(list: &[SkewBrace], caps: &Caps) -> Result<Vec<SkewBrace>, EnumerateError> {
    if list.is_empty() {
        return Ok(Vec::new());
    }
    let star = list[0].star();
    for b in list {
        assert_eq!(b.star(), star, "dedupe input must share one ⋆ group");
    }
    let aut_star = star.automorphisms(caps.automorphism_order).map_err(automorphism_error)?;
    let n = star.order();

    let mut canonical: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    for (index, b) in list.iter().enumerate() {
        let mut best: Option<Vec<usize>> = None;
        for psi in &aut_star {
            let mut flat = alloc::vec![0usize; n * n];
            for a in 0..n {
                for c in 0..n {
                    flat[psi.apply(a) * n + psi.apply(c)] = psi.apply(b.dot().mul(a, c));
                }
            }
            if best.as_ref().is_none_or(|current| flat < *current) {
                best = Some(flat);
            }
        }
        canonical
            .entry(best.expect("automorphism lists contain the identity"))
            .or_insert(index);
    }

    Ok(canonical
        .into_iter()
        .map(|(flat, producer)| {
            let rows: Vec<Vec<usize>> = flat.chunks(n).map(|row| row.to_vec()).collect();
            let source_dot = list[producer].dot();
            let dot = FiniteGroup::from_table(
                source_dot.name(),
                source_dot.element_names().to_vec(),
                rows,
            )
            .expect("canonical transform preserves the group laws");
            SkewBrace::new(Arc::clone(star), Arc::new(dot))
                .expect("canonical transform preserves the brace rule")
        })
        .collect())
}

// ============================================================================
// High-level wrappers
// ============================================================================

pub fn enumerate_left_bracoids(
    actor: &Arc<FiniteGroup>,
    space: &Arc<FiniteGroup>,
    caps: &Caps,
    up_to_iso: bool,
) -> Result<Enumeration<SkewLeftBracoid>, EnumerateError> {
    let raw = left_bracoids(actor, space, caps)?;
    let raw_count = raw.len();
    if up_to_iso {
        let structures = dedupe_left_bracoids(&raw, caps)?;
        Ok(Enumeration { raw_count, iso_class_count: Some(structures.len()), structures })
    } else {
        Ok(Enumeration { structures: raw, raw_count, iso_class_count: None })
    }
}

pub fn enumerate_right_bracoids(
    actor: &Arc<FiniteGroup>,
    space: &Arc<FiniteGroup>,
    caps: &Caps,
    up_to_iso: bool,
) -> Result<Enumeration<SkewRightBracoid>, EnumerateError> {
    let raw = right_bracoids(actor, space, caps)?;
    let raw_count = raw.len();
    if up_to_iso {
        let structures = dedupe_right_bracoids(&raw, caps)?;
        Ok(Enumeration { raw_count, iso_class_count: Some(structures.len()), structures })
    } else {
        Ok(Enumeration { structures: raw, raw_count, iso_class_count: None })
    }
}

pub fn enumerate_two_sided_bracoids(
    left_actor: &Arc<FiniteGroup>,
    right_actor: &Arc<FiniteGroup>,
    space: &Arc<FiniteGroup>,
    caps: &Caps,
    up_to_iso: bool,
) -> Result<Enumeration<TwoSidedSkewBracoid>, EnumerateError> {
    let raw = two_sided_bracoids(left_actor, right_actor, space, caps)?;
    let raw_count = raw.len();
    if up_to_iso {
        let structures = dedupe_two_sided_bracoids(&raw, caps)?;
        Ok(Enumeration { raw_count, iso_class_count: Some(structures.len()), structures })
    } else {
        Ok(Enumeration { structures: raw, raw_count, iso_class_count: None })
    }
}

pub fn enumerate_braces(
    space: &Arc<FiniteGroup>,
    caps: &Caps,
    up_to_iso: bool,
) -> Result<Enumeration<SkewBrace>, EnumerateError> {
    let raw = braces(space, caps)?;
    let raw_count = raw.len();
    if up_to_iso {
        let structures = dedupe_braces(&raw, caps)?;
        Ok(Enumeration { raw_count, iso_class_count: Some(structures.len()), structures })
    } else {
        Ok(Enumeration { structures: raw, raw_count, iso_class_count: None })
    }
}
