//! Validated left and right group actions as lookup tables.
//!
//! A [`LeftActionTable`] stores `g ⊙ η` for every `(g, η)` in a `|G| × |N|`
//! table; a [`RightActionTable`] stores `η ⊡ h` the other way around, in a
//! `|N| × |H|` table. Both carry their actor group and the acted-on group
//! (the "space" — its multiplication is not used here, but the bracoid layer
//! twists against it, and sharing one value keeps indices meaningful).
//!
//! The checked constructors verify the action laws by exhaustive scan:
//!
//! ```text
//! left:   e ⊙ η = η          (g·h) ⊙ η = g ⊙ (h ⊙ η)
//! right:  η ⊡ e = η          η ⊡ (g·h) = (η ⊡ g) ⊡ h
//! ```
//!
//! The `*_unvalidated` constructors skip the laws (but not shape/range) so
//! that deliberately broken tables can be fed to checkers in negative tests.

use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::group::FiniteGroup;

/// A validation failure for a candidate action table, naming the first
/// violating cell or tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ActionError {
    /// The table is not `rows × cols` as required by the two groups.
    ShapeMismatch { rows: usize, cols: usize, expected_rows: usize, expected_cols: usize },
    /// `table[row][col]` is not an index into the acted-on group.
    EntryOutOfRange { row: usize, col: usize, value: usize },
    /// The group identity moves the point `point`.
    IdentityLawViolated { point: usize },
    /// Acting by `g` then `h` disagrees with acting by their product at
    /// `point`. For a left action the product is `g·h` acting as `h` first;
    /// for a right action it is `g·h` acting as `g` first.
    CompatibilityViolated { g: usize, h: usize, point: usize },
}

impl core::fmt::Display for ActionError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ActionError::ShapeMismatch { rows, cols, expected_rows, expected_cols } => write!(
                f,
                "action table is {rows}x{cols}, expected {expected_rows}x{expected_cols}"
            ),
            ActionError::EntryOutOfRange { row, col, value } => {
                write!(f, "action[{row}][{col}] = {value} is out of range")
            }
            ActionError::IdentityLawViolated { point } => {
                write!(f, "identity law violated at point {point}")
            }
            ActionError::CompatibilityViolated { g, h, point } => {
                write!(f, "compatibility violated at ({g}, {h}) on point {point}")
            }
        }
    }
}

impl core::error::Error for ActionError {}

fn check_shape(
    rows: &[Vec<usize>],
    expected_rows: usize,
    expected_cols: usize,
    value_range: usize,
) -> Result<(), ActionError> {
    if rows.len() != expected_rows {
        return Err(ActionError::ShapeMismatch {
            rows: rows.len(),
            cols: rows.first().map_or(0, Vec::len),
            expected_rows,
            expected_cols,
        });
    }
    for (i, row) in rows.iter().enumerate() {
        if row.len() != expected_cols {
            return Err(ActionError::ShapeMismatch {
                rows: rows.len(),
                cols: row.len(),
                expected_rows,
                expected_cols,
            });
        }
        for (j, &v) in row.iter().enumerate() {
            if v >= value_range {
                return Err(ActionError::EntryOutOfRange { row: i, col: j, value: v });
            }
        }
    }
    Ok(())
}

fn flatten(rows: Vec<Vec<usize>>) -> Vec<usize> {
    let mut flat = Vec::with_capacity(rows.len() * rows.first().map_or(0, Vec::len));
    for row in rows {
        flat.extend_from_slice(&row);
    }
    flat
}

/// A left action `⊙` of `actor` on the elements of `space`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeftActionTable {
    actor: Arc<FiniteGroup>,
    space: Arc<FiniteGroup>,
    /// Row-major `|G| × |N|`: `table[g·|N| + η] = g ⊙ η`.
    table: Vec<usize>,
}

impl LeftActionTable {
    /// Validate shape, range, identity law, and compatibility.
    pub fn new(
        actor: Arc<FiniteGroup>,
        space: Arc<FiniteGroup>,
        rows: Vec<Vec<usize>>,
    ) -> Result<Self, ActionError> {
        let a = Self::unvalidated(actor, space, rows)?;
        if let Some(point) = a.identity_law_witness() {
            return Err(ActionError::IdentityLawViolated { point });
        }
        if let Some((g, h, point)) = a.compatibility_witness() {
            return Err(ActionError::CompatibilityViolated { g, h, point });
        }
        Ok(a)
    }

    /// Build without checking the action laws (shape and range are still
    /// enforced so later lookups cannot go out of bounds). For feeding
    /// corrupted tables to checkers.
    pub fn unvalidated(
        actor: Arc<FiniteGroup>,
        space: Arc<FiniteGroup>,
        rows: Vec<Vec<usize>>,
    ) -> Result<Self, ActionError> {
        check_shape(&rows, actor.order(), space.order(), space.order())?;
        Ok(LeftActionTable { actor, space, table: flatten(rows) })
    }

    #[inline]
    pub fn act(&self, g: usize, eta: usize) -> usize {
        self.table[g * self.space.order() + eta]
    }

    pub fn actor(&self) -> &Arc<FiniteGroup> {
        &self.actor
    }

    pub fn space(&self) -> &Arc<FiniteGroup> {
        &self.space
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        let n = self.space.order();
        (0..self.actor.order()).map(|g| self.table[g * n..(g + 1) * n].to_vec()).collect()
    }

    /// The orbit `{g ⊙ η : g ∈ G}` in ascending order.
    pub fn orbit(&self, eta: usize) -> Vec<usize> {
        let mut member = alloc::vec![false; self.space.order()];
        for g in 0..self.actor.order() {
            member[self.act(g, eta)] = true;
        }
        (0..self.space.order()).filter(|&i| member[i]).collect()
    }

    /// True when every point's orbit is the whole space. (For a valid
    /// action one orbit check would do; scanning all points keeps the
    /// answer meaningful on unvalidated tables too.)
    pub fn is_transitive(&self) -> bool {
        let n = self.space.order();
        (0..n).all(|eta| self.orbit(eta).len() == n)
    }

    /// First point moved by the identity, if any.
    pub(crate) fn identity_law_witness(&self) -> Option<usize> {
        let e = self.actor.identity();
        (0..self.space.order()).find(|&eta| self.act(e, eta) != eta)
    }

    /// First `(g, h, η)` with `(g·h) ⊙ η ≠ g ⊙ (h ⊙ η)`, if any.
    pub(crate) fn compatibility_witness(&self) -> Option<(usize, usize, usize)> {
        let (ng, nn) = (self.actor.order(), self.space.order());
        for g in 0..ng {
            for h in 0..ng {
                let gh = self.actor.mul(g, h);
                for eta in 0..nn {
                    if self.act(gh, eta) != self.act(g, self.act(h, eta)) {
                        return Some((g, h, eta));
                    }
                }
            }
        }
        None
    }

    /// Whether both action laws hold (used when the laws are a theorem
    /// hypothesis rather than a construction precondition).
    pub fn satisfies_action_laws(&self) -> bool {
        self.identity_law_witness().is_none() && self.compatibility_witness().is_none()
    }
}

/// A right action `⊡` of `actor` on the elements of `space`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RightActionTable {
    actor: Arc<FiniteGroup>,
    space: Arc<FiniteGroup>,
    /// Row-major `|N| × |H|`: `table[η·|H| + h] = η ⊡ h`.
    table: Vec<usize>,
}

impl RightActionTable {
    /// Validate shape, range, identity law, and compatibility.
    pub fn new(
        actor: Arc<FiniteGroup>,
        space: Arc<FiniteGroup>,
        rows: Vec<Vec<usize>>,
    ) -> Result<Self, ActionError> {
        let a = Self::unvalidated(actor, space, rows)?;
        if let Some(point) = a.identity_law_witness() {
            return Err(ActionError::IdentityLawViolated { point });
        }
        if let Some((g, h, point)) = a.compatibility_witness() {
            return Err(ActionError::CompatibilityViolated { g, h, point });
        }
        Ok(a)
    }

    /// See [`LeftActionTable::unvalidated`].
    pub fn unvalidated(
        actor: Arc<FiniteGroup>,
        space: Arc<FiniteGroup>,
        rows: Vec<Vec<usize>>,
    ) -> Result<Self, ActionError> {
        check_shape(&rows, space.order(), actor.order(), space.order())?;
        Ok(RightActionTable { actor, space, table: flatten(rows) })
    }

    #[inline]
    pub fn act(&self, eta: usize, h: usize) -> usize {
        self.table[eta * self.actor.order() + h]
    }

    pub fn actor(&self) -> &Arc<FiniteGroup> {
        &self.actor
    }

    pub fn space(&self) -> &Arc<FiniteGroup> {
        &self.space
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        let nh = self.actor.order();
        (0..self.space.order()).map(|eta| self.table[eta * nh..(eta + 1) * nh].to_vec()).collect()
    }

    /// The orbit `{η ⊡ h : h ∈ H}` in ascending order.
    pub fn orbit(&self, eta: usize) -> Vec<usize> {
        let mut member = alloc::vec![false; self.space.order()];
        for h in 0..self.actor.order() {
            member[self.act(eta, h)] = true;
        }
        (0..self.space.order()).filter(|&i| member[i]).collect()
    }

    pub fn is_transitive(&self) -> bool {
        let n = self.space.order();
        (0..n).all(|eta| self.orbit(eta).len() == n)
    }

    pub(crate) fn identity_law_witness(&self) -> Option<usize> {
        let e = self.actor.identity();
        (0..self.space.order()).find(|&eta| self.act(eta, e) != eta)
    }

    /// First `(g, h, η)` with `η ⊡ (g·h) ≠ (η ⊡ g) ⊡ h`, if any.
    pub(crate) fn compatibility_witness(&self) -> Option<(usize, usize, usize)> {
        let (nh, nn) = (self.actor.order(), self.space.order());
        for g in 0..nh {
            for h in 0..nh {
                let gh = self.actor.mul(g, h);
                for eta in 0..nn {
                    if self.act(eta, gh) != self.act(self.act(eta, g), h) {
                        return Some((g, h, eta));
                    }
                }
            }
        }
        None
    }

    pub fn satisfies_action_laws(&self) -> bool {
        self.identity_law_witness().is_none() && self.compatibility_witness().is_none()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use alloc::vec;

    fn translation_left(n: usize) -> LeftActionTable {
        let g = FiniteGroup::cyclic(n).unwrap();
        let rows = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        LeftActionTable::new(Arc::clone(&g), g, rows).unwrap()
    }

    #[test]
    fn left_translation_is_a_transitive_action() {
        let a = translation_left(4);
        assert_eq!(a.act(1, 2), 3);
        assert!(a.is_transitive());
        assert_eq!(a.orbit(2), vec![0, 1, 2, 3]);
        assert!(a.satisfies_action_laws());
    }

    #[test]
    fn trivial_action_has_singleton_orbits() {
        let g = FiniteGroup::cyclic(3).unwrap();
        let n = FiniteGroup::cyclic(4).unwrap();
        let rows = vec![vec![0, 1, 2, 3]; 3];
        let a = LeftActionTable::new(g, n, rows).unwrap();
        assert!(!a.is_transitive());
        assert_eq!(a.orbit(2), vec![2]);
    }

    #[test]
    fn left_action_law_violations_are_reported() {
        let g = FiniteGroup::cyclic(2).unwrap();
        let n = FiniteGroup::cyclic(2).unwrap();
        // Identity row moves a point.
        let err = LeftActionTable::new(
            Arc::clone(&g),
            Arc::clone(&n),
            vec![vec![1, 0], vec![0, 1]],
        )
        .unwrap_err();
        assert_eq!(err, ActionError::IdentityLawViolated { point: 0 });
        // g has order 2 but acts by a map that is not an involution: the
        // non-bijective row [0, 0] sends g·g = e and g∘g to different maps.
        let err = LeftActionTable::new(
            Arc::clone(&g),
            Arc::clone(&n),
            vec![vec![0, 1], vec![0, 0]],
        )
        .unwrap_err();
        assert_eq!(err, ActionError::CompatibilityViolated { g: 1, h: 1, point: 1 });
        // Shape and range defects.
        let err =
            LeftActionTable::new(Arc::clone(&g), Arc::clone(&n), vec![vec![0, 1]]).unwrap_err();
        assert!(matches!(err, ActionError::ShapeMismatch { .. }));
        let err = LeftActionTable::new(g, n, vec![vec![0, 2], vec![1, 0]]).unwrap_err();
        assert_eq!(err, ActionError::EntryOutOfRange { row: 0, col: 1, value: 2 });
    }

    #[test]
    fn right_translation_is_a_transitive_action() {
        let h = FiniteGroup::cyclic(4).unwrap();
        let rows = (0..4).map(|eta| (0..4).map(|b| (eta + b) % 4).collect()).collect();
        let a = RightActionTable::new(Arc::clone(&h), Arc::clone(&h), rows).unwrap();
        assert_eq!(a.act(2, 3), 1);
        assert!(a.is_transitive());
        assert!(a.satisfies_action_laws());
    }

    #[test]
    fn right_compatibility_uses_left_to_right_composition() {
        // Acting on D3 by right multiplication: η ⊡ h = η ⋆ h. The
        // compatibility law (η ⊡ g) ⊡ h = η ⊡ (g·h) distinguishes right
        // from left actions on a nonabelian group.
        let d3 = FiniteGroup::dihedral(3).unwrap();
        let rows = (0..6).map(|eta| (0..6).map(|h| d3.mul(eta, h)).collect()).collect();
        let a = RightActionTable::new(Arc::clone(&d3), Arc::clone(&d3), rows).unwrap();
        assert!(a.is_transitive());

        // Acting by *left* multiplication is not a right action of D3
        // (it is one of the opposite group).
        let rows = (0..6).map(|eta| (0..6).map(|h| d3.mul(h, eta)).collect()).collect();
        let err = RightActionTable::new(Arc::clone(&d3), Arc::clone(&d3), rows).unwrap_err();
        assert!(matches!(err, ActionError::CompatibilityViolated { .. }));
    }

    #[test]
    fn unvalidated_tables_skip_laws_but_not_shape() {
        let g = FiniteGroup::cyclic(2).unwrap();
        let n = FiniteGroup::cyclic(2).unwrap();
        let a = LeftActionTable::unvalidated(
            Arc::clone(&g),
            Arc::clone(&n),
            vec![vec![1, 0], vec![0, 1]],
        )
        .unwrap();
        assert!(!a.satisfies_action_laws());
        assert!(LeftActionTable::unvalidated(g, n, vec![vec![5, 0], vec![0, 1]]).is_err());
    }
}
