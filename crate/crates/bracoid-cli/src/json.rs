//! Structure file formats and their mapping onto the core types.
//!
//! Four file shapes are accepted, discriminated by their exact key set:
//!
//! * left bracoid      — `{"G", "N", "left_action"}`
//! * right bracoid     — `{"H", "N", "right_action"}`
//! * two-sided bracoid — `{"G", "H", "N", "left_action", "right_action"}`
//! * skew brace        — `{"star", "dot"}`
//!
//! Groups are serialized as `{"name", "order", "elements", "table"}` with
//! `table[a][b] = a∘b`. All indices are 0-based positions in `elements`.
//!
//! Malformed input (bad JSON, wrong shape, out-of-range indices) is an
//! [`InputError`], which the binary maps to exit code 2. A structurally
//! well-formed file whose tables violate a mathematical law is *not* an
//! input error; those violations surface as failed checks (exit code 1)
//! so that deliberately corrupted structures can be diagnosed.

use std::fmt;
use std::fs;
use std::path::Path;
use std::sync::Arc;

use bracoid_core::report::PropertyCheck;
use bracoid_core::{
    CheckStatus, FiniteGroup, GroupError, SkewBrace, SkewLeftBracoid, SkewRightBracoid,
    TwoSidedSkewBracoid,
};
use serde::{Deserialize, Serialize};

/// A problem with the input itself (not with the mathematics it encodes).
#[derive(Debug)]
pub struct InputError(pub String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for InputError {}

fn input_error(msg: impl Into<String>) -> InputError {
    InputError(msg.into())
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupJson {
    pub name: String,
    pub order: usize,
    pub elements: Vec<String>,
    pub table: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LeftBracoidJson {
    #[serde(rename = "G")]
    pub g: GroupJson,
    #[serde(rename = "N")]
    pub n: GroupJson,
    pub left_action: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RightBracoidJson {
    #[serde(rename = "H")]
    pub h: GroupJson,
    #[serde(rename = "N")]
    pub n: GroupJson,
    pub right_action: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwoSidedJson {
    #[serde(rename = "G")]
    pub g: GroupJson,
    #[serde(rename = "H")]
    pub h: GroupJson,
    #[serde(rename = "N")]
    pub n: GroupJson,
    pub left_action: Vec<Vec<usize>>,
    pub right_action: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BraceJson {
    pub star: GroupJson,
    pub dot: GroupJson,
}

/// A parsed structure file of any of the four accepted shapes.
#[derive(Debug, Clone)]
pub enum StructureJson {
    Left(LeftBracoidJson),
    Right(RightBracoidJson),
    TwoSided(TwoSidedJson),
    Brace(BraceJson),
}

impl StructureJson {
    pub fn kind(&self) -> &'static str {
        match self {
            StructureJson::Left(_) => "left bracoid",
            StructureJson::Right(_) => "right bracoid",
            StructureJson::TwoSided(_) => "two-sided bracoid",
            StructureJson::Brace(_) => "skew brace",
        }
    }
}

/// Canonical serialization: pretty-printed JSON plus a trailing newline.
/// `load` of a `store`d file is the identity, and `store(load(p))` is
/// byte-identical for files already in this format.
pub fn canonical_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("JSON types always serialize");
    text.push('\n');
    text
}

pub fn load_structure(path: &Path) -> Result<StructureJson, InputError> {
    let text = fs::read_to_string(path)
        .map_err(|e| input_error(format!("cannot read {}: {e}", path.display())))?;
    parse_structure(&text).map_err(|e| input_error(format!("{}: {}", path.display(), e.0)))
}

pub fn store_structure<T: Serialize>(value: &T, path: &Path) -> Result<(), InputError> {
    fs::write(path, canonical_json(value))
        .map_err(|e| input_error(format!("cannot write {}: {e}", path.display())))
}

/// Discriminate a structure document by its exact key set, then decode.
pub fn parse_structure(text: &str) -> Result<StructureJson, InputError> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| input_error(format!("invalid JSON: {e}")))?;
    let keys: Vec<String> = value
        .as_object()
        .ok_or_else(|| input_error("structure file must be a JSON object"))?
        .keys()
        .cloned()
        .collect();
    let mut sorted: Vec<&str> = keys.iter().map(String::as_str).collect();
    sorted.sort_unstable();
    let decoded = match sorted.as_slice() {
        ["G", "N", "left_action"] => {
            StructureJson::Left(serde_json::from_value(value).map_err(decode_error)?)
        }
        ["H", "N", "right_action"] => {
            StructureJson::Right(serde_json::from_value(value).map_err(decode_error)?)
        }
        ["G", "H", "N", "left_action", "right_action"] => {
            StructureJson::TwoSided(serde_json::from_value(value).map_err(decode_error)?)
        }
        ["dot", "star"] => {
            StructureJson::Brace(serde_json::from_value(value).map_err(decode_error)?)
        }
        _ => {
            return Err(input_error(format!(
                "unrecognized structure shape with keys [{}]; expected one of \
                 [G, N, left_action], [H, N, right_action], \
                 [G, H, N, left_action, right_action], or [star, dot]",
                sorted.join(", ")
            )))
        }
    };
    Ok(decoded)
}

fn decode_error(e: serde_json::Error) -> InputError {
    input_error(format!("invalid structure document: {e}"))
}

// ============================================================================
// Shape validation (exit-2 territory) and group realization
// ============================================================================

/// Check the parts of a group document that make it well-formed as data:
/// consistent order, square in-range table, distinct element names.
pub fn shape_check_group(role: &str, gj: &GroupJson) -> Result<(), InputError> {
    if gj.order == 0 {
        return Err(input_error(format!("{role}: a group needs at least one element")));
    }
    if gj.elements.len() != gj.order {
        return Err(input_error(format!(
            "{role}: order is {} but {} element names are listed",
            gj.order,
            gj.elements.len()
        )));
    }
    for (i, a) in gj.elements.iter().enumerate() {
        if gj.elements[..i].contains(a) {
            return Err(input_error(format!("{role}: duplicate element name {a:?}")));
        }
    }
    check_table_shape(&format!("{role}.table"), &gj.table, gj.order, gj.order, gj.order)
}

/// Check an index table for the expected row/column counts and value range,
/// with positional messages.
pub fn check_table_shape(
    label: &str,
    rows: &[Vec<usize>],
    expected_rows: usize,
    expected_cols: usize,
    value_range: usize,
) -> Result<(), InputError> {
    if rows.len() != expected_rows {
        return Err(input_error(format!(
            "{label} has {} rows, expected {expected_rows}",
            rows.len()
        )));
    }
    for (i, row) in rows.iter().enumerate() {
        if row.len() != expected_cols {
            return Err(input_error(format!(
                "{label}[{i}] has {} entries, expected {expected_cols}",
                row.len()
            )));
        }
        for (j, &v) in row.iter().enumerate() {
            if v >= value_range {
                return Err(input_error(format!(
                    "{label}[{i}][{j}] = {v} is out of range 0..{value_range}"
                )));
            }
        }
    }
    Ok(())
}

/// A group document either realizes a group or fails a group axiom. Axiom
/// failures are mathematical findings, reported as a failing check.
pub enum GroupRealization {
    Group(Arc<FiniteGroup>),
    Failed(PropertyCheck),
}

/// Realize a shape-checked group document, mapping each group-axiom
/// violation to a named failing check with a concrete witness.
pub fn realize_group(role: &str, gj: &GroupJson) -> Result<GroupRealization, InputError> {
    shape_check_group(role, gj)?;
    match FiniteGroup::from_table(&gj.name, gj.elements.clone(), gj.table.clone()) {
        Ok(group) => Ok(GroupRealization::Group(Arc::new(group))),
        Err(e) => {
            let element = |i: usize| format!("{:?}", gj.elements[i]);
            let (property, witness) = match e {
                GroupError::NotLatinSquare { row, col, value } => (
                    "group_latin_square",
                    vec![
                        format!("group={role}"),
                        format!("row={}", element(row)),
                        format!("col={}", element(col)),
                        format!("repeated_value={}", element(value)),
                    ],
                ),
                GroupError::NoIdentity => {
                    ("group_identity", vec![format!("group={role}")])
                }
                GroupError::NoInverse { element: el } => (
                    "group_inverses",
                    vec![format!("group={role}"), format!("element={}", element(el))],
                ),
                GroupError::NotAssociative { a, b, c } => (
                    "group_associativity",
                    vec![
                        format!("group={role}"),
                        format!("a={}", element(a)),
                        format!("b={}", element(b)),
                        format!("c={}", element(c)),
                    ],
                ),
                // Shape-class errors cannot survive shape_check_group.
                other => return Err(input_error(format!("{role}: {other}"))),
            };
            Ok(GroupRealization::Failed(PropertyCheck {
                property: format!("{property}({role})"),
                status: CheckStatus::Fail,
                witness: Some(witness),
            }))
        }
    }
}

/// Realize a group document for use as an *input* parameter (descriptor
/// files, enumeration domains): any defect at all is an input error.
pub fn realize_input_group(role: &str, gj: &GroupJson) -> Result<Arc<FiniteGroup>, InputError> {
    match realize_group(role, gj)? {
        GroupRealization::Group(g) => Ok(g),
        GroupRealization::Failed(check) => Err(input_error(format!(
            "{role}: not a group ({}, witness {})",
            check.property,
            check.witness.unwrap_or_default().join(", ")
        ))),
    }
}

// ============================================================================
// Core → JSON
// ============================================================================

pub fn group_json(group: &FiniteGroup) -> GroupJson {
    GroupJson {
        name: group.name().to_string(),
        order: group.order(),
        elements: group.element_names().to_vec(),
        table: group.rows(),
    }
}

pub fn left_json(b: &SkewLeftBracoid) -> LeftBracoidJson {
    LeftBracoidJson {
        g: group_json(b.actor()),
        n: group_json(b.space()),
        left_action: b.action().rows(),
    }
}

pub fn right_json(b: &SkewRightBracoid) -> RightBracoidJson {
    RightBracoidJson {
        h: group_json(b.actor()),
        n: group_json(b.space()),
        right_action: b.action().rows(),
    }
}

pub fn two_sided_json(b: &TwoSidedSkewBracoid) -> TwoSidedJson {
    TwoSidedJson {
        g: group_json(b.left_actor()),
        h: group_json(b.right_actor()),
        n: group_json(b.space()),
        left_action: b.left().action().rows(),
        right_action: b.right().action().rows(),
    }
}

pub fn brace_json(b: &SkewBrace) -> BraceJson {
    BraceJson { star: group_json(b.star()), dot: group_json(b.dot()) }
}
