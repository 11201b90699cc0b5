//! The group descriptor mini-language used by `enumerate`:
//!
//! * `C<n>`  — cyclic group of order n
//! * `D<d>`  — dihedral group of order 2d
//! * `GT<t>` — order-4t group ⟨x, y | xᵗ = y⁴ = 1, yx = x⁻¹y⟩
//! * `HW<w>` — dicyclic group of order 4w ⟨a, b | a²ʷ = 1, b² = aʷ, ba = a⁻¹b⟩
//! * `A x B` — direct products (whitespace around the `x` is required)
//! * `@file.json` — a group document in the JSON format
//!
//! Every descriptor must resolve to a valid group whose order is within
//! the configured cap; anything else is an input error (exit code 2).

use std::fs;
use std::path::Path;
use std::sync::Arc;

use bracoid_core::{FamilyParams, FiniteGroup};

use crate::json::{realize_input_group, GroupJson, InputError};

fn input_error(msg: impl Into<String>) -> InputError {
    InputError(msg.into())
}

fn parse_positive(atom: &str, prefix: &str) -> Result<usize, InputError> {
    let digits = &atom[prefix.len()..];
    let value: usize = digits.parse().map_err(|_| {
        input_error(format!(
            "bad group descriptor {atom:?}: {prefix}<k> needs a positive integer, got {digits:?}"
        ))
    })?;
    if value == 0 {
        return Err(input_error(format!(
            "bad group descriptor {atom:?}: the parameter must be positive"
        )));
    }
    Ok(value)
}

fn parse_atom(atom: &str, cap: usize) -> Result<Arc<FiniteGroup>, InputError> {
    let group = if let Some(path) = atom.strip_prefix('@') {
        let text = fs::read_to_string(Path::new(path))
            .map_err(|e| input_error(format!("cannot read group file {path}: {e}")))?;
        let gj: GroupJson = serde_json::from_str(&text)
            .map_err(|e| input_error(format!("group file {path}: invalid JSON: {e}")))?;
        realize_input_group(&format!("group file {path}"), &gj)?
    } else if atom.starts_with("GT") {
        FiniteGroup::cyclic_semidirect_c4(parse_positive(atom, "GT")?)
            .map_err(|e| input_error(format!("{atom}: {e}")))?
    } else if atom.starts_with("HW") {
        FiniteGroup::dicyclic(parse_positive(atom, "HW")?)
            .map_err(|e| input_error(format!("{atom}: {e}")))?
    } else if atom.starts_with('C') {
        FiniteGroup::cyclic(parse_positive(atom, "C")?)
            .map_err(|e| input_error(format!("{atom}: {e}")))?
    } else if atom.starts_with('D') {
        FiniteGroup::dihedral(parse_positive(atom, "D")?)
            .map_err(|e| input_error(format!("{atom}: {e}")))?
    } else {
        return Err(input_error(format!(
            "unrecognized group descriptor {atom:?}: expected C<n>, D<d>, GT<t>, HW<w>, \
             @file.json, or a product like \"C2 x C4\""
        )));
    };
    check_cap(&group, cap)?;
    Ok(group)
}

fn check_cap(group: &FiniteGroup, cap: usize) -> Result<(), InputError> {
    if group.order() > cap {
        return Err(input_error(format!(
            "group {} has order {}, which exceeds the order cap {cap} \
             (set BRACOID_ORDER_CAP to raise it)",
            group.name(),
            group.order()
        )));
    }
    Ok(())
}

/// Parse a descriptor string into a group, enforcing the order cap.
pub fn parse_group(spec: &str, cap: usize) -> Result<Arc<FiniteGroup>, InputError> {
    let tokens: Vec<&str> = spec.split_whitespace().collect();
    if tokens.is_empty() {
        return Err(input_error("empty group descriptor"));
    }
    // Grammar: atom ("x" atom)*
    let mut group = parse_atom(tokens[0], cap)?;
    let mut rest = &tokens[1..];
    while !rest.is_empty() {
        if rest[0] != "x" {
            return Err(input_error(format!(
                "bad group descriptor {spec:?}: expected \"x\" between factors, got {:?}",
                rest[0]
            )));
        }
        let Some(atom) = rest.get(1) else {
            return Err(input_error(format!(
                "bad group descriptor {spec:?}: trailing \"x\" without a right factor"
            )));
        };
        let factor = parse_atom(atom, cap)?;
        group = FiniteGroup::direct_product(&group, &factor);
        check_cap(&group, cap)?;
        rest = &rest[2..];
    }
    Ok(group)
}

/// Extract dihedral-family parameters from literal descriptor strings, for
/// `--contains-example`. The space must be `D<d>`; a left actor must be
/// `GT<t>` and a right actor `HW<w>`. A missing side defaults its parameter
/// to `d`, which always satisfies the divisibility requirement.
pub fn family_params_from_specs(
    g_spec: Option<&str>,
    h_spec: Option<&str>,
    n_spec: &str,
) -> Result<FamilyParams, InputError> {
    let n_spec = n_spec.trim();
    if !n_spec.starts_with('D') || n_spec.contains(char::is_whitespace) {
        return Err(input_error(format!(
            "--contains-example needs a literal D<d> space descriptor, got {n_spec:?}"
        )));
    }
    let d = parse_positive(n_spec, "D")?;
    let t = match g_spec {
        None => d,
        Some(s) => {
            let s = s.trim();
            if !s.starts_with("GT") || s.contains(char::is_whitespace) {
                return Err(input_error(format!(
                    "--contains-example needs a literal GT<t> left-actor descriptor, got {s:?}"
                )));
            }
            parse_positive(s, "GT")?
        }
    };
    let w = match h_spec {
        None => d,
        Some(s) => {
            let s = s.trim();
            if !s.starts_with("HW") || s.contains(char::is_whitespace) {
                return Err(input_error(format!(
                    "--contains-example needs a literal HW<w> right-actor descriptor, got {s:?}"
                )));
            }
            parse_positive(s, "HW")?
        }
    };
    Ok(FamilyParams { t, w, d })
}
