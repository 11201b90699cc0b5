//! The four subcommands. Each returns the process exit code:
//! 0 = everything passed, 1 = a mathematical check failed, and input
//! errors propagate as [`InputError`] which the caller maps to exit 2.

use std::path::Path;
use std::sync::Arc;

use bracoid_core::enumerate::{
    braces, dedupe_braces, dedupe_left_bracoids, dedupe_right_bracoids,
    dedupe_two_sided_bracoids, left_bracoids, right_bracoids, two_sided_bracoids, Caps,
};
use bracoid_core::family::dihedral_family;
use bracoid_core::report::{CheckReport, TheoremVerdict};
use bracoid_core::two_sided::{
    check_abelian_beta_inverse, check_action_beta_expansion, check_two_sided_from_commutation,
};
use bracoid_core::{
    ActionError, BracoidError, FamilyParams, FiniteGroup, LeftActionTable, RightActionTable,
    SkewBrace, SkewLeftBracoid, SkewRightBracoid, TwoSidedError, TwoSidedSkewBracoid, VerdictFlag,
};
use serde::Serialize;
use serde_json::{json, Value};

use crate::descriptor::{family_params_from_specs, parse_group};
use crate::json::{
    brace_json, canonical_json, check_table_shape, left_json, load_structure, realize_group,
    right_json, shape_check_group, store_structure, two_sided_json, BraceJson, GroupJson,
    GroupRealization, InputError, LeftBracoidJson, RightBracoidJson, StructureJson, TwoSidedJson,
};
use crate::render::{
    print_report_human, print_verdict_human, report_json, report_outcome, verdicts_json,
};

fn input_error(msg: impl Into<String>) -> InputError {
    InputError(msg.into())
}

fn named(group: &FiniteGroup, label: &str, index: usize) -> String {
    format!("{label}={}", group.element_name(index))
}

// ============================================================================
// Verification pipelines: staged checks that stop at the first violated
// axiom, so every reported failure names the axiom and a concrete witness.
// ============================================================================

fn realize_into(
    report: &mut CheckReport,
    role: &str,
    gj: &GroupJson,
) -> Result<Option<Arc<FiniteGroup>>, InputError> {
    match realize_group(role, gj)? {
        GroupRealization::Group(group) => {
            report.pass(&format!("group_axioms({role})"));
            Ok(Some(group))
        }
        GroupRealization::Failed(check) => {
            report.checks.push(check);
            Ok(None)
        }
    }
}

fn build_left_action(
    report: &mut CheckReport,
    actor: &Arc<FiniteGroup>,
    space: &Arc<FiniteGroup>,
    rows: Vec<Vec<usize>>,
) -> Option<LeftActionTable> {
    match LeftActionTable::new(Arc::clone(actor), Arc::clone(space), rows) {
        Ok(action) => {
            report.pass("action_identity(left)");
            report.pass("action_compatibility(left)");
            Some(action)
        }
        Err(ActionError::IdentityLawViolated { point }) => {
            report.fail("action_identity(left)", vec![named(space, "point", point)]);
            None
        }
        Err(ActionError::CompatibilityViolated { g, h, point }) => {
            report.fail(
                "action_compatibility(left)",
                vec![named(actor, "g", g), named(actor, "h", h), named(space, "point", point)],
            );
            None
        }
        Err(shape) => unreachable!("action shape was pre-validated: {shape}"),
    }
}

fn build_right_action(
    report: &mut CheckReport,
    actor: &Arc<FiniteGroup>,
    space: &Arc<FiniteGroup>,
    rows: Vec<Vec<usize>>,
) -> Option<RightActionTable> {
    match RightActionTable::new(Arc::clone(actor), Arc::clone(space), rows) {
        Ok(action) => {
            report.pass("action_identity(right)");
            report.pass("action_compatibility(right)");
            Some(action)
        }
        Err(ActionError::IdentityLawViolated { point }) => {
            report.fail("action_identity(right)", vec![named(space, "point", point)]);
            None
        }
        Err(ActionError::CompatibilityViolated { g, h, point }) => {
            report.fail(
                "action_compatibility(right)",
                vec![named(actor, "g", g), named(actor, "h", h), named(space, "point", point)],
            );
            None
        }
        Err(shape) => unreachable!("action shape was pre-validated: {shape}"),
    }
}

fn build_left_bracoid(report: &mut CheckReport, action: LeftActionTable) -> Option<SkewLeftBracoid> {
    let actor = Arc::clone(action.actor());
    let space = Arc::clone(action.space());
    match SkewLeftBracoid::new(action) {
        Ok(b) => {
            report.pass("action_transitive(left)");
            report.pass("left_bracoid_product_rule");
            Some(b)
        }
        Err(BracoidError::NotTransitive { unreached }) => {
            report.fail("action_transitive(left)", vec![named(&space, "unreached", unreached)]);
            None
        }
        Err(BracoidError::LeftProductRuleViolated { g, mu, eta }) => {
            report.fail(
                "left_bracoid_product_rule",
                vec![named(&actor, "g", g), named(&space, "mu", mu), named(&space, "eta", eta)],
            );
            None
        }
        Err(other) => unreachable!("not a left-bracoid validation error: {other}"),
    }
}

fn build_right_bracoid(
    report: &mut CheckReport,
    action: RightActionTable,
) -> Option<SkewRightBracoid> {
    let actor = Arc::clone(action.actor());
    let space = Arc::clone(action.space());
    match SkewRightBracoid::new(action) {
        Ok(b) => {
            report.pass("action_transitive(right)");
            report.pass("right_bracoid_product_rule");
            Some(b)
        }
        Err(BracoidError::NotTransitive { unreached }) => {
            report.fail("action_transitive(right)", vec![named(&space, "unreached", unreached)]);
            None
        }
        Err(BracoidError::RightProductRuleViolated { eta, mu, h }) => {
            report.fail(
                "right_bracoid_product_rule",
                vec![named(&space, "eta", eta), named(&space, "mu", mu), named(&actor, "h", h)],
            );
            None
        }
        Err(other) => unreachable!("not a right-bracoid validation error: {other}"),
    }
}

fn verify_left(lj: &LeftBracoidJson) -> Result<(CheckReport, Option<SkewLeftBracoid>), InputError> {
    shape_check_group("G", &lj.g)?;
    shape_check_group("N", &lj.n)?;
    check_table_shape("left_action", &lj.left_action, lj.g.order, lj.n.order, lj.n.order)?;

    let mut report = CheckReport::new();
    let g = realize_into(&mut report, "G", &lj.g)?;
    let n = realize_into(&mut report, "N", &lj.n)?;
    let (Some(g), Some(n)) = (g, n) else {
        return Ok((report, None));
    };
    let Some(action) = build_left_action(&mut report, &g, &n, lj.left_action.clone()) else {
        return Ok((report, None));
    };
    let Some(bracoid) = build_left_bracoid(&mut report, action) else {
        return Ok((report, None));
    };
    report.merge(bracoid.identity_suite());
    Ok((report, Some(bracoid)))
}

fn verify_right(
    rj: &RightBracoidJson,
) -> Result<(CheckReport, Option<SkewRightBracoid>), InputError> {
    shape_check_group("H", &rj.h)?;
    shape_check_group("N", &rj.n)?;
    check_table_shape("right_action", &rj.right_action, rj.n.order, rj.h.order, rj.n.order)?;

    let mut report = CheckReport::new();
    let h = realize_into(&mut report, "H", &rj.h)?;
    let n = realize_into(&mut report, "N", &rj.n)?;
    let (Some(h), Some(n)) = (h, n) else {
        return Ok((report, None));
    };
    let Some(action) = build_right_action(&mut report, &h, &n, rj.right_action.clone()) else {
        return Ok((report, None));
    };
    let Some(bracoid) = build_right_bracoid(&mut report, action) else {
        return Ok((report, None));
    };
    report.merge(bracoid.identity_suite());
    Ok((report, Some(bracoid)))
}

fn verify_two_sided(
    tj: &TwoSidedJson,
) -> Result<(CheckReport, Option<TwoSidedSkewBracoid>), InputError> {
    shape_check_group("G", &tj.g)?;
    shape_check_group("H", &tj.h)?;
    shape_check_group("N", &tj.n)?;
    check_table_shape("left_action", &tj.left_action, tj.g.order, tj.n.order, tj.n.order)?;
    check_table_shape("right_action", &tj.right_action, tj.n.order, tj.h.order, tj.n.order)?;

    let mut report = CheckReport::new();
    let g = realize_into(&mut report, "G", &tj.g)?;
    let h = realize_into(&mut report, "H", &tj.h)?;
    let n = realize_into(&mut report, "N", &tj.n)?;
    let (Some(g), Some(h), Some(n)) = (g, h, n) else {
        return Ok((report, None));
    };
    // Build both sides before deciding, so one broken side does not hide
    // diagnostics for the other.
    let left_action = build_left_action(&mut report, &g, &n, tj.left_action.clone());
    let right_action = build_right_action(&mut report, &h, &n, tj.right_action.clone());
    let left = left_action.and_then(|a| build_left_bracoid(&mut report, a));
    let right = right_action.and_then(|a| build_right_bracoid(&mut report, a));
    let (Some(left), Some(right)) = (left, right) else {
        return Ok((report, None));
    };
    match TwoSidedSkewBracoid::new(left.clone(), right.clone()) {
        Ok(ts) => {
            report.pass("two_sided_compatibility");
            report.merge(ts.identity_suite());
            Ok((report, Some(ts)))
        }
        Err(TwoSidedError::CompatibilityViolated { g: gi, eta, h: hi }) => {
            report.fail(
                "two_sided_compatibility",
                vec![named(&g, "g", gi), named(&n, "eta", eta), named(&h, "h", hi)],
            );
            // The sides are individually valid; show their (passing) suites.
            report.merge(left.identity_suite());
            report.merge(right.identity_suite());
            Ok((report, None))
        }
        Err(TwoSidedError::SharedSpaceMismatch) => {
            unreachable!("both sides were built on one space group")
        }
    }
}

fn verify_brace(bj: &BraceJson) -> Result<(CheckReport, Option<SkewBrace>), InputError> {
    shape_check_group("star", &bj.star)?;
    shape_check_group("dot", &bj.dot)?;
    if bj.star.order != bj.dot.order {
        return Err(input_error(format!(
            "star has order {} but dot has order {}: a brace is two operations on one carrier",
            bj.star.order, bj.dot.order
        )));
    }
    if bj.star.elements != bj.dot.elements {
        return Err(input_error(
            "star and dot must list the same element names in the same order",
        ));
    }

    let mut report = CheckReport::new();
    let star = realize_into(&mut report, "star", &bj.star)?;
    let dot = realize_into(&mut report, "dot", &bj.dot)?;
    let (Some(star), Some(dot)) = (star, dot) else {
        return Ok((report, None));
    };
    match SkewBrace::new(star.clone(), dot) {
        Ok(brace) => {
            report.pass("brace_product_rule");
            report.merge(brace.as_left_bracoid().identity_suite());
            Ok((report, Some(brace)))
        }
        Err(BracoidError::BraceProductRuleViolated { a, b, c }) => {
            report.fail(
                "brace_product_rule",
                vec![named(&star, "a", a), named(&star, "b", b), named(&star, "c", c)],
            );
            Ok((report, None))
        }
        Err(other) => unreachable!("not a brace validation error: {other}"),
    }
}

/// Run the verification pipeline for any structure kind.
fn verify_structure(structure: &StructureJson) -> Result<CheckReport, InputError> {
    Ok(match structure {
        StructureJson::Left(lj) => verify_left(lj)?.0,
        StructureJson::Right(rj) => verify_right(rj)?.0,
        StructureJson::TwoSided(tj) => verify_two_sided(tj)?.0,
        StructureJson::Brace(bj) => verify_brace(bj)?.0,
    })
}

// ============================================================================
// verify
// ============================================================================

pub fn cmd_verify(path: &Path, json_out: bool) -> Result<u8, InputError> {
    let structure = load_structure(path)?;
    let report = verify_structure(&structure)?;
    let (outcome, code) = report_outcome(&report);
    if json_out {
        print!("{}", canonical_json(&report_json(&report)));
    } else {
        println!("verifying {} ({})", path.display(), structure.kind());
        print_report_human(&report);
        println!("{outcome}");
    }
    Ok(code)
}

// ============================================================================
// example
// ============================================================================

pub fn cmd_example(
    t: usize,
    w: usize,
    d: usize,
    out: Option<&Path>,
    json_out: bool,
) -> Result<u8, InputError> {
    let fam =
        dihedral_family(&FamilyParams { t, w, d }).map_err(|e| input_error(e.to_string()))?;
    let report = fam.identity_suite();
    let verdicts = vec![
        fam.check_structure_maps(),
        check_action_beta_expansion(fam.left(), fam.right().action()),
        check_abelian_beta_inverse(fam.left(), fam.right().action()),
        check_two_sided_from_commutation(fam.left(), fam.right().action()),
    ];
    if let Some(out_path) = out {
        store_structure(&two_sided_json(&fam), out_path)?;
    }
    let (outcome, report_code) = report_outcome(&report);
    let counterexamples =
        verdicts.iter().any(|v| v.flag == VerdictFlag::CounterexampleToTheorem);
    let code = if counterexamples { 1 } else { report_code };

    if json_out {
        let output = json!({
            "orders": {
                "G": fam.left_actor().order(),
                "H": fam.right_actor().order(),
                "N": fam.space().order(),
            },
            "checks": report_json(&report),
            "theorems": verdicts_json(&verdicts),
        });
        print!("{}", canonical_json(&output));
    } else {
        println!("dihedral family example (t={t}, w={w}, d={d})");
        println!(
            "|G| = {}, |H| = {}, |N| = {}",
            fam.left_actor().order(),
            fam.right_actor().order(),
            fam.space().order()
        );
        print_report_human(&report);
        for v in &verdicts {
            print_verdict_human(v);
        }
        if let Some(out_path) = out {
            println!("wrote {}", out_path.display());
        }
        println!("{outcome}");
    }
    Ok(code)
}

// ============================================================================
// enumerate
// ============================================================================

pub struct EnumerateArgs {
    pub g: Option<String>,
    pub n: String,
    pub h: Option<String>,
    pub two_sided: bool,
    pub braces: bool,
    pub up_to_iso: bool,
    pub count_only: bool,
    pub contains_example: bool,
}

#[derive(Serialize)]
struct EnumerationOut {
    raw_count: usize,
    iso_class_count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    contains_example: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    structures: Option<Vec<Value>>,
}

/// The `(label, table)` lines printed for one enumerated structure.
type TableLines = Vec<(&'static str, Vec<Vec<usize>>)>;

struct EnumerationView {
    header: String,
    raw_count: usize,
    iso_class_count: Option<usize>,
    contains_example: Option<bool>,
    tables: Vec<TableLines>,
    structures: Vec<Value>,
}

fn group_blurb(role: &str, group: &FiniteGroup) -> String {
    format!("{role} = {} (order {})", group.name(), group.order())
}

fn enum_error(e: bracoid_core::EnumerateError) -> InputError {
    input_error(e.to_string())
}

fn enumerate_view(args: &EnumerateArgs, caps: &Caps) -> Result<EnumerationView, InputError> {
    if args.braces {
        if args.g.is_some() || args.h.is_some() || args.two_sided || args.contains_example {
            return Err(input_error(
                "--braces enumerates braces on --N and cannot be combined with --G, --H, \
                 --two-sided, or --contains-example",
            ));
        }
        let star = parse_group(&args.n, caps.group_order)?;
        let raw = braces(&star, caps).map_err(enum_error)?;
        let raw_count = raw.len();
        let (list, iso) = if args.up_to_iso {
            let deduped = dedupe_braces(&raw, caps).map_err(enum_error)?;
            let k = deduped.len();
            (deduped, Some(k))
        } else {
            (raw, None)
        };
        return Ok(EnumerationView {
            header: format!("skew braces: {}", group_blurb("N", &star)),
            raw_count,
            iso_class_count: iso,
            contains_example: None,
            tables: list.iter().map(|b| vec![("dot_table", b.dot().rows())]).collect(),
            structures: list
                .iter()
                .map(|b| serde_json::to_value(brace_json(b)).expect("serializable"))
                .collect(),
        });
    }

    match (&args.g, &args.h) {
        (None, None) => Err(input_error(
            "nothing to enumerate: pass --G (left bracoids), --H (right bracoids), \
             both (two-sided bracoids), or --braces",
        )),
        (Some(_), None) | (None, Some(_)) if args.two_sided => Err(input_error(
            "--two-sided requires both --G and --H",
        )),
        (Some(g_spec), None) => {
            let actor = parse_group(g_spec, caps.group_order)?;
            let space = parse_group(&args.n, caps.group_order)?;
            let raw = left_bracoids(&actor, &space, caps).map_err(enum_error)?;
            let raw_count = raw.len();
            let contains = if args.contains_example {
                let params = family_params_from_specs(Some(g_spec), None, &args.n)?;
                let fam = dihedral_family(&params).map_err(|e| input_error(e.to_string()))?;
                let target = fam.left().action().rows();
                Some(raw.iter().any(|b| b.action().rows() == target))
            } else {
                None
            };
            let (list, iso) = if args.up_to_iso {
                let deduped = dedupe_left_bracoids(&raw, caps).map_err(enum_error)?;
                let k = deduped.len();
                (deduped, Some(k))
            } else {
                (raw, None)
            };
            Ok(EnumerationView {
                header: format!(
                    "left bracoids: {} acting on {}",
                    group_blurb("G", &actor),
                    group_blurb("N", &space)
                ),
                raw_count,
                iso_class_count: iso,
                contains_example: contains,
                tables: list.iter().map(|b| vec![("left_action", b.action().rows())]).collect(),
                structures: list
                    .iter()
                    .map(|b| serde_json::to_value(left_json(b)).expect("serializable"))
                    .collect(),
            })
        }
        (None, Some(h_spec)) => {
            let actor = parse_group(h_spec, caps.group_order)?;
            let space = parse_group(&args.n, caps.group_order)?;
            let raw = right_bracoids(&actor, &space, caps).map_err(enum_error)?;
            let raw_count = raw.len();
            let contains = if args.contains_example {
                let params = family_params_from_specs(None, Some(h_spec), &args.n)?;
                let fam = dihedral_family(&params).map_err(|e| input_error(e.to_string()))?;
                let target = fam.right().action().rows();
                Some(raw.iter().any(|b| b.action().rows() == target))
            } else {
                None
            };
            let (list, iso) = if args.up_to_iso {
                let deduped = dedupe_right_bracoids(&raw, caps).map_err(enum_error)?;
                let k = deduped.len();
                (deduped, Some(k))
            } else {
                (raw, None)
            };
            Ok(EnumerationView {
                header: format!(
                    "right bracoids: {} acting on {}",
                    group_blurb("H", &actor),
                    group_blurb("N", &space)
                ),
                raw_count,
                iso_class_count: iso,
                contains_example: contains,
                tables: list.iter().map(|b| vec![("right_action", b.action().rows())]).collect(),
                structures: list
                    .iter()
                    .map(|b| serde_json::to_value(right_json(b)).expect("serializable"))
                    .collect(),
            })
        }
        (Some(g_spec), Some(h_spec)) => {
            let left_actor = parse_group(g_spec, caps.group_order)?;
            let right_actor = parse_group(h_spec, caps.group_order)?;
            let space = parse_group(&args.n, caps.group_order)?;
            let raw =
                two_sided_bracoids(&left_actor, &right_actor, &space, caps).map_err(enum_error)?;
            let raw_count = raw.len();
            let contains = if args.contains_example {
                let params = family_params_from_specs(Some(g_spec), Some(h_spec), &args.n)?;
                let fam = dihedral_family(&params).map_err(|e| input_error(e.to_string()))?;
                let target_left = fam.left().action().rows();
                let target_right = fam.right().action().rows();
                Some(raw.iter().any(|b| {
                    b.left().action().rows() == target_left
                        && b.right().action().rows() == target_right
                }))
            } else {
                None
            };
            let (list, iso) = if args.up_to_iso {
                let deduped = dedupe_two_sided_bracoids(&raw, caps).map_err(enum_error)?;
                let k = deduped.len();
                (deduped, Some(k))
            } else {
                (raw, None)
            };
            Ok(EnumerationView {
                header: format!(
                    "two-sided bracoids: {}, {}, {}",
                    group_blurb("G", &left_actor),
                    group_blurb("H", &right_actor),
                    group_blurb("N", &space)
                ),
                raw_count,
                iso_class_count: iso,
                contains_example: contains,
                tables: list
                    .iter()
                    .map(|b| {
                        vec![
                            ("left_action", b.left().action().rows()),
                            ("right_action", b.right().action().rows()),
                        ]
                    })
                    .collect(),
                structures: list
                    .iter()
                    .map(|b| serde_json::to_value(two_sided_json(b)).expect("serializable"))
                    .collect(),
            })
        }
    }
}

pub fn cmd_enumerate(args: &EnumerateArgs, caps: &Caps, json_out: bool) -> Result<u8, InputError> {
    let view = enumerate_view(args, caps)?;
    let code = match view.contains_example {
        Some(false) => 1,
        _ => 0,
    };
    if json_out {
        let output = EnumerationOut {
            raw_count: view.raw_count,
            iso_class_count: view.iso_class_count,
            contains_example: view.contains_example,
            structures: if args.count_only { None } else { Some(view.structures) },
        };
        print!("{}", canonical_json(&output));
    } else {
        println!("{}", view.header);
        println!("raw count: {}", view.raw_count);
        if let Some(k) = view.iso_class_count {
            println!("isomorphism classes: {k}");
        }
        if let Some(found) = view.contains_example {
            println!(
                "contains the dihedral family example: {}",
                if found { "yes" } else { "NO" }
            );
        }
        if !args.count_only {
            for (i, tables) in view.tables.iter().enumerate() {
                println!("structure {}:", i + 1);
                for (label, rows) in tables {
                    println!(
                        "  {label}: {}",
                        serde_json::to_string(rows).expect("serializable")
                    );
                }
            }
        }
    }
    Ok(code)
}

// ============================================================================
// check-theorems
// ============================================================================

pub fn cmd_check_theorems(path: &Path, json_out: bool) -> Result<u8, InputError> {
    let structure = load_structure(path)?;
    // A structure must validate before any theorem statement applies; a
    // failing structure is reported exactly as `verify` would report it.
    let verdicts: Vec<TheoremVerdict> = match &structure {
        StructureJson::Left(lj) => {
            let (report, b) = verify_left(lj)?;
            let Some(_) = b else { return report_invalid(path, &structure, report, json_out) };
            Vec::new()
        }
        StructureJson::Right(rj) => {
            let (report, b) = verify_right(rj)?;
            let Some(_) = b else { return report_invalid(path, &structure, report, json_out) };
            Vec::new()
        }
        StructureJson::TwoSided(tj) => {
            let (report, ts) = verify_two_sided(tj)?;
            let Some(ts) = ts else { return report_invalid(path, &structure, report, json_out) };
            vec![
                ts.check_structure_maps(),
                check_action_beta_expansion(ts.left(), ts.right().action()),
                check_abelian_beta_inverse(ts.left(), ts.right().action()),
                check_two_sided_from_commutation(ts.left(), ts.right().action()),
            ]
        }
        StructureJson::Brace(bj) => {
            let (report, brace) = verify_brace(bj)?;
            let Some(brace) = brace else {
                return report_invalid(path, &structure, report, json_out);
            };
            vec![brace.check_radical_ring(), brace.check_associative_implies_two_sided()]
        }
    };

    let counterexamples =
        verdicts.iter().filter(|v| v.flag == VerdictFlag::CounterexampleToTheorem).count();
    if json_out {
        print!("{}", canonical_json(&verdicts_json(&verdicts)));
    } else {
        println!("checking theorems for {} ({})", path.display(), structure.kind());
        if verdicts.is_empty() {
            println!("no applicable theorem statements for this structure kind");
        }
        for v in &verdicts {
            print_verdict_human(v);
        }
        if counterexamples == 0 {
            println!("result: PASS ({} theorem verdicts)", verdicts.len());
        } else {
            println!(
                "result: FAIL ({counterexamples} of {} verdicts are counterexamples)",
                verdicts.len()
            );
        }
    }
    Ok(if counterexamples == 0 { 0 } else { 1 })
}

/// `check-theorems` on a structure that fails validation: report the
/// failing checks (in `verify` format) and exit 1.
fn report_invalid(
    path: &Path,
    structure: &StructureJson,
    report: CheckReport,
    json_out: bool,
) -> Result<u8, InputError> {
    if json_out {
        print!("{}", canonical_json(&report_json(&report)));
    } else {
        println!(
            "checking theorems for {} ({}): structure fails validation",
            path.display(),
            structure.kind()
        );
        print_report_human(&report);
        let (outcome, _) = report_outcome(&report);
        println!("{outcome}");
    }
    Ok(1)
}
