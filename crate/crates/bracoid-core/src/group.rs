//! Finite groups as validated Cayley tables.
//!
//! A [`FiniteGroup`] is a multiplication table over indices `0..order`
//! together with element names used in diagnostics. Construction via
//! [`FiniteGroup::from_table`] checks the full group axioms — Latin square,
//! two-sided identity, two-sided inverses, associativity — by exhaustive
//! scan, so every value of the type is an actual group.
//!
//! Besides arbitrary tables, the module builds the families used throughout
//! the crate from closed-form product rules (every constructor still routes
//! through the validator):
//!
//! ```text
//! cyclic(n)               Z_n                                  order n
//! dihedral(d)             ⟨μ,η | μ^d = η² = 1, μ^η = μ⁻¹⟩      order 2d
//! cyclic_semidirect_c4(t) ⟨x,y | x^t = y⁴ = 1, x^y = x⁻¹⟩      order 4t
//! dicyclic(w)             ⟨a,b | a^{2w} = 1, b² = a^w, a^b = a⁻¹⟩  order 4w
//! direct_product(A, B)    A × B                                order |A|·|B|
//! ```
//!
//! Element names follow fixed normal forms (`g^i`, `μ^rη^s`, `x^iy^j`,
//! `a^kb^l`) so that counterexample witnesses and serialized structures are
//! stable across runs.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

/// Reduce `v` into `0..m` the mathematical way (result is non-negative even
/// when `v` is negative, unlike `%` on a signed integer).
pub(crate) fn modulus(v: i64, m: usize) -> usize {
    let m = m as i64;
    (((v % m) + m) % m) as usize
}

/// A validation failure for a candidate Cayley table. Each variant carries
/// the first violating tuple found in row-major scan order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupError {
    /// The table has no elements; groups here are non-empty.
    ZeroOrder,
    /// The table is not square, or the name list does not match the order.
    ShapeMismatch { rows: usize, expected: usize },
    /// `table[row][col]` is not an element index.
    EntryOutOfRange { row: usize, col: usize, value: usize },
    /// Two element names collide, which would make witnesses ambiguous.
    DuplicateName { name: String },
    /// `table[row][col]` repeats a value earlier in its row or column.
    NotLatinSquare { row: usize, col: usize, value: usize },
    /// No element acts as a two-sided identity.
    NoIdentity,
    /// `element` has no two-sided inverse.
    NoInverse { element: usize },
    /// `(a·b)·c ≠ a·(b·c)` for the given triple.
    NotAssociative { a: usize, b: usize, c: usize },
    /// The group order exceeds a configured search cap.
    OrderCapExceeded { order: usize, cap: usize },
}

impl core::fmt::Display for GroupError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            GroupError::ZeroOrder => write!(f, "group must have at least one element"),
            GroupError::ShapeMismatch { rows, expected } => {
                write!(f, "table shape mismatch: got {rows} entries, expected {expected}")
            }
            GroupError::EntryOutOfRange { row, col, value } => {
                write!(f, "table[{row}][{col}] = {value} is out of range")
            }
            GroupError::DuplicateName { name } => write!(f, "duplicate element name {name:?}"),
            GroupError::NotLatinSquare { row, col, value } => {
                write!(f, "not a Latin square: table[{row}][{col}] = {value} repeats in its row or column")
            }
            GroupError::NoIdentity => write!(f, "no two-sided identity element"),
            GroupError::NoInverse { element } => {
                write!(f, "element {element} has no two-sided inverse")
            }
            GroupError::NotAssociative { a, b, c } => {
                write!(f, "not associative at ({a}, {b}, {c})")
            }
            GroupError::OrderCapExceeded { order, cap } => {
                write!(f, "group order {order} exceeds cap {cap}")
            }
        }
    }
}

impl core::error::Error for GroupError {}

/// A finite group: names, a row-major Cayley table, and the identity and
/// inverse data recovered during validation. Immutable after construction;
/// shared via [`Arc`] wherever several structures reference one group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    element_names: Vec<String>,
    /// Row-major: `table[a * order + b]` is the index of `a·b`.
    table: Vec<usize>,
    identity: usize,
    inverses: Vec<usize>,
}

impl FiniteGroup {
    /// Validate a candidate Cayley table and build the group.
    ///
    /// Checks run in the order: shape, entry range, Latin square, identity,
    /// inverses, associativity. The first violation aborts with an error
    /// naming the offending tuple.
    pub fn from_table(
        name: &str,
        element_names: Vec<String>,
        rows: Vec<Vec<usize>>,
    ) -> Result<Self, GroupError> {
        let n = rows.len();
        if n == 0 {
            return Err(GroupError::ZeroOrder);
        }
        if element_names.len() != n {
            return Err(GroupError::ShapeMismatch { rows: element_names.len(), expected: n });
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::ShapeMismatch { rows: row.len(), expected: n });
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(GroupError::EntryOutOfRange { row: i, col: j, value: v });
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if element_names[i] == element_names[j] {
                    return Err(GroupError::DuplicateName { name: element_names[i].clone() });
                }
            }
        }

        // Latin square: every row and every column is a permutation. Scan
        // row-major and blame the second occurrence of a repeated value.
        for i in 0..n {
            let mut seen_row = vec![false; n];
            for j in 0..n {
                let v = rows[i][j];
                if seen_row[v] {
                    return Err(GroupError::NotLatinSquare { row: i, col: j, value: v });
                }
                seen_row[v] = true;
            }
        }
        for j in 0..n {
            let mut seen_col = vec![false; n];
            for i in 0..n {
                let v = rows[i][j];
                if seen_col[v] {
                    return Err(GroupError::NotLatinSquare { row: i, col: j, value: v });
                }
                seen_col[v] = true;
            }
        }

        let identity = (0..n)
            .find(|&e| (0..n).all(|a| rows[e][a] == a && rows[a][e] == a))
            .ok_or(GroupError::NoIdentity)?;

        let mut inverses = vec![0usize; n];
        for a in 0..n {
            let inv = (0..n)
                .find(|&b| rows[a][b] == identity && rows[b][a] == identity)
                .ok_or(GroupError::NoInverse { element: a })?;
            inverses[a] = inv;
        }

        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if rows[rows[a][b]][c] != rows[a][rows[b][c]] {
                        return Err(GroupError::NotAssociative { a, b, c });
                    }
                }
            }
        }

        let mut table = Vec::with_capacity(n * n);
        for row in &rows {
            table.extend_from_slice(row);
        }
        Ok(FiniteGroup { name: name.to_string(), element_names, table, identity, inverses })
    }

    /// The cyclic group Z_n with element `i` named `g^i`.
    pub fn cyclic(n: usize) -> Result<Arc<Self>, GroupError> {
        if n == 0 {
            return Err(GroupError::ZeroOrder);
        }
        let names = (0..n).map(|i| format!("g^{i}")).collect();
        let rows = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Ok(Arc::new(Self::from_table(&format!("C{n}"), names, rows)?))
    }

    /// The dihedral group of order 2d, elements `μ^r η^s` with `r` in `0..d`
    /// and `s` in `0..2`, indexed as `2r + s`. Product rule:
    ///
    /// ```text
    /// μ^{r₁}η^{s₁} ⋆ μ^{r₂}η^{s₂} = μ^{r₁ + (−1)^{s₁} r₂} η^{s₁+s₂}
    /// ```
    pub fn dihedral(d: usize) -> Result<Arc<Self>, GroupError> {
        if d == 0 {
            return Err(GroupError::ZeroOrder);
        }
        let idx = |r: usize, s: usize| 2 * r + s;
        let names = (0..2 * d).map(|i| format!("μ^{}η^{}", i / 2, i % 2)).collect();
        let rows = (0..2 * d)
            .map(|a| {
                let (r1, s1) = (a / 2, a % 2);
                (0..2 * d)
                    .map(|b| {
                        let (r2, s2) = (b / 2, b % 2);
                        let sign = if s1 == 0 { 1 } else { -1 };
                        idx(modulus(r1 as i64 + sign * r2 as i64, d), (s1 + s2) % 2)
                    })
                    .collect()
            })
            .collect();
        Ok(Arc::new(Self::from_table(&format!("D{d}"), names, rows)?))
    }

    /// The semidirect product C_t ⋊ C_4 in which the order-4 generator acts
    /// by inversion: ⟨x, y | x^t = y⁴ = 1, y⁻¹xy = x⁻¹⟩, order 4t. Elements
    /// `x^i y^j` with `i` in `0..t`, `j` in `0..4`, indexed as `4i + j`:
    ///
    /// ```text
    /// (x^{i₁}y^{j₁})(x^{i₂}y^{j₂}) = x^{i₁ + (−1)^{j₁} i₂} y^{j₁+j₂}
    /// ```
    pub fn cyclic_semidirect_c4(t: usize) -> Result<Arc<Self>, GroupError> {
        if t == 0 {
            return Err(GroupError::ZeroOrder);
        }
        let idx = |i: usize, j: usize| 4 * i + j;
        let names = (0..4 * t).map(|e| format!("x^{}y^{}", e / 4, e % 4)).collect();
        let rows = (0..4 * t)
            .map(|a| {
                let (i1, j1) = (a / 4, a % 4);
                (0..4 * t)
                    .map(|b| {
                        let (i2, j2) = (b / 4, b % 4);
                        let sign = if j1 % 2 == 0 { 1 } else { -1 };
                        idx(modulus(i1 as i64 + sign * i2 as i64, t), (j1 + j2) % 4)
                    })
                    .collect()
            })
            .collect();
        Ok(Arc::new(Self::from_table(&format!("GT{t}"), names, rows)?))
    }

    /// The dicyclic group ⟨a, b | a^{2w} = 1, b² = a^w, b⁻¹ab = a⁻¹⟩ of
    /// order 4w (the generalized quaternion group when w is a power of 2).
    /// Elements `a^k b^l` with `k` in `0..2w`, `l` in `0..2`, indexed as
    /// `2k + l`. The `w·l₁·l₂` term folds `b² = a^w` into the product:
    ///
    /// ```text
    /// (a^{k₁}b^{l₁})(a^{k₂}b^{l₂}) = a^{k₁ + (−1)^{l₁} k₂ + w·l₁·l₂} b^{(l₁+l₂) mod 2}
    /// ```
    pub fn dicyclic(w: usize) -> Result<Arc<Self>, GroupError> {
        if w == 0 {
            return Err(GroupError::ZeroOrder);
        }
        let idx = |k: usize, l: usize| 2 * k + l;
        let names = (0..4 * w).map(|e| format!("a^{}b^{}", e / 2, e % 2)).collect();
        let rows = (0..4 * w)
            .map(|a| {
                let (k1, l1) = (a / 2, a % 2);
                (0..4 * w)
                    .map(|b| {
                        let (k2, l2) = (b / 2, b % 2);
                        let sign = if l1 == 0 { 1 } else { -1 };
                        let k = k1 as i64 + sign * k2 as i64 + (w * l1 * l2) as i64;
                        idx(modulus(k, 2 * w), (l1 + l2) % 2)
                    })
                    .collect()
            })
            .collect();
        Ok(Arc::new(Self::from_table(&format!("HW{w}"), names, rows)?))
    }

    /// The direct product A × B with componentwise multiplication. Element
    /// `(a, b)` is indexed as `a·|B| + b` and named `"(name_a, name_b)"`.
    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Arc<Self> {
        let (na, nb) = (a.order(), b.order());
        let names = (0..na * nb)
            .map(|e| format!("({}, {})", a.element_name(e / nb), b.element_name(e % nb)))
            .collect();
        let rows: Vec<Vec<usize>> = (0..na * nb)
            .map(|p| {
                let (pa, pb) = (p / nb, p % nb);
                (0..na * nb)
                    .map(|q| {
                        let (qa, qb) = (q / nb, q % nb);
                        a.mul(pa, qa) * nb + b.mul(pb, qb)
                    })
                    .collect()
            })
            .collect();
        let name = format!("{} x {}", a.name(), b.name());
        Arc::new(
            Self::from_table(&name, names, rows)
                .expect("product of two groups is a group"),
        )
    }

    pub fn order(&self) -> usize {
        self.element_names.len()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    #[inline]
    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn element_name(&self, i: usize) -> &str {
        &self.element_names[i]
    }

    pub fn element_names(&self) -> &[String] {
        &self.element_names
    }

    /// The table as nested rows, `rows()[a][b] = a·b` (for serialization).
    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.order()).map(|a| (0..self.order()).map(|b| self.mul(a, b)).collect()).collect()
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// The order of `a` as a group element (smallest k ≥ 1 with a^k = e).
    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// The opposite group: same carrier, product reversed. Used to turn
    /// right-action searches into left-action searches.
    pub fn opposite(&self) -> Arc<Self> {
        let n = self.order();
        let rows = (0..n).map(|a| (0..n).map(|b| self.mul(b, a)).collect()).collect();
        Arc::new(
            Self::from_table(&format!("{}^op", self.name), self.element_names.clone(), rows)
                .expect("opposite of a group is a group"),
        )
    }

    /// All elements of the subgroup generated by `gens`, in ascending index
    /// order.
    pub fn subgroup_closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut member = vec![false; self.order()];
        member[self.identity] = true;
        let mut stack = vec![self.identity];
        while let Some(x) = stack.pop() {
            for &s in gens {
                let y = self.mul(x, s);
                if !member[y] {
                    member[y] = true;
                    stack.push(y);
                }
            }
        }
        (0..self.order()).filter(|&i| member[i]).collect()
    }

    /// A generating sequence built greedily: repeatedly adjoin the smallest
    /// element index outside the subgroup generated so far. Deterministic;
    /// empty for the trivial group.
    pub fn generating_sequence(&self) -> Vec<usize> {
        let mut gens: Vec<usize> = Vec::new();
        loop {
            let closure = self.subgroup_closure(&gens);
            if closure.len() == self.order() {
                return gens;
            }
            let mut inside = vec![false; self.order()];
            for &x in &closure {
                inside[x] = true;
            }
            let next = (0..self.order()).find(|&i| !inside[i]).expect("closure is proper");
            gens.push(next);
        }
    }

    /// All automorphisms, found by brute force over generator images (each
    /// generator can only map to an element of the same order) and closed
    /// against the full Cayley table. Sorted by image vector.
    ///
    /// Errors with [`GroupError::OrderCapExceeded`] when the order exceeds
    /// `cap`; the search is exponential in the generator count.
    pub fn automorphisms(self: &Arc<Self>, cap: usize) -> Result<Vec<GroupMap>, GroupError> {
        if self.order() > cap {
            return Err(GroupError::OrderCapExceeded { order: self.order(), cap });
        }
        let gens = self.generating_sequence();
        let candidates: Vec<Vec<usize>> = gens
            .iter()
            .map(|&s| {
                let target_order = self.element_order(s);
                (0..self.order()).filter(|&x| self.element_order(x) == target_order).collect()
            })
            .collect();
        let mut found: Vec<Vec<usize>> = Vec::new();
        for_each_homomorphism(
            self,
            &gens,
            &candidates,
            self.identity,
            &mut |&a, &b| self.mul(a, b),
            &mut |images| {
                let mut hit = vec![false; self.order()];
                for &v in images {
                    hit[v] = true;
                }
                if hit.iter().all(|&h| h) {
                    found.push(images.to_vec());
                }
            },
        );
        found.sort();
        Ok(found
            .into_iter()
            .map(|images| GroupMap { source: Arc::clone(self), target: Arc::clone(self), images })
            .collect())
    }
}

/// A total map between two groups, given by the image of every source
/// element. Plumbing for automorphism lists and isomorphism tests.
#[derive(Debug, Clone)]
pub struct GroupMap {
    pub source: Arc<FiniteGroup>,
    pub target: Arc<FiniteGroup>,
    /// `images[x]` is the target index of the image of source element `x`.
    pub images: Vec<usize>,
}

impl GroupMap {
    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// Exhaustive check of `φ(a·b) = φ(a)·φ(b)` over all pairs.
    pub fn is_homomorphism(&self) -> bool {
        let n = self.source.order();
        self.images.len() == n
            && (0..n).all(|a| {
                (0..n).all(|b| {
                    self.images[self.source.mul(a, b)]
                        == self.target.mul(self.images[a], self.images[b])
                })
            })
    }

    pub fn is_bijective(&self) -> bool {
        let n = self.target.order();
        let mut hit = vec![false; n];
        for &v in &self.images {
            if v >= n || hit[v] {
                return false;
            }
            hit[v] = true;
        }
        self.images.len() == n
    }
}

// ============================================================================
// Generic homomorphism search
// ============================================================================

/// Visit every homomorphism from `group` into a structure `T`, described by
/// `identity` and `compose`, by assigning images to `gens` from the given
/// per-generator `candidates` and closing over the Cayley table.
///
/// The closure walks right-multiplication by generators from the identity:
/// if `φ(x·s) = φ(x)∘φ(s)` holds wherever both sides are forced, the induced
/// total map is a homomorphism (every element is a positive word in the
/// generators). Conflicts prune the branch immediately, so relation
/// violations are caught at the shallowest possible depth.
///
/// `visit` receives the image of every group element, indexed by element.
/// Candidate vectors are scanned in order, making the visit order (and thus
/// every enumeration built on top of this) deterministic.
pub(crate) fn for_each_homomorphism<T: Clone + PartialEq>(
    group: &FiniteGroup,
    gens: &[usize],
    candidates: &[Vec<T>],
    identity: T,
    compose: &mut impl FnMut(&T, &T) -> T,
    visit: &mut impl FnMut(&[T]),
) {
    assert_eq!(gens.len(), candidates.len());
    let mut chosen: Vec<T> = Vec::with_capacity(gens.len());
    descend(group, gens, candidates, &identity, compose, visit, &mut chosen);
}

fn descend<T: Clone + PartialEq>(
    group: &FiniteGroup,
    gens: &[usize],
    candidates: &[Vec<T>],
    identity: &T,
    compose: &mut impl FnMut(&T, &T) -> T,
    visit: &mut impl FnMut(&[T]),
    chosen: &mut Vec<T>,
) {
    match close_images(group, &gens[..chosen.len()], chosen, identity, compose) {
        None => return,
        Some(images) => {
            if chosen.len() == gens.len() {
                let total: Vec<T> =
                    images.into_iter().map(|i| i.expect("generators span the group")).collect();
                visit(&total);
                return;
            }
        }
    }
    let depth = chosen.len();
    for c in &candidates[depth] {
        chosen.push(c.clone());
        descend(group, gens, candidates, identity, compose, visit, chosen);
        chosen.pop();
    }
}

/// Propagate generator images over the subgroup generated by `gens`.
/// Returns the partial image table, or `None` on the first conflict.
fn close_images<T: Clone + PartialEq>(
    group: &FiniteGroup,
    gens: &[usize],
    gen_images: &[T],
    identity: &T,
    compose: &mut impl FnMut(&T, &T) -> T,
) -> Option<Vec<Option<T>>> {
    let mut images: Vec<Option<T>> = vec![None; group.order()];
    images[group.identity()] = Some(identity.clone());
    let mut stack = vec![group.identity()];
    while let Some(x) = stack.pop() {
        for (k, &s) in gens.iter().enumerate() {
            let y = group.mul(x, s);
            let want = compose(images[x].as_ref().expect("stack holds defined elements"), &gen_images[k]);
            match &images[y] {
                None => {
                    images[y] = Some(want);
                    stack.push(y);
                }
                Some(have) => {
                    if *have != want {
                        return None;
                    }
                }
            }
        }
    }
    Some(images)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_groups_have_cyclic_structure() {
        for n in 1..=12 {
            let g = FiniteGroup::cyclic(n).unwrap();
            assert_eq!(g.order(), n);
            assert_eq!(g.identity(), 0);
            assert!(g.is_abelian());
            assert_eq!(g.element_name(0), "g^0");
            if n > 1 {
                assert_eq!(g.element_order(1), n);
            }
            for a in 0..n {
                assert_eq!(g.mul(a, g.inv(a)), 0);
            }
        }
        assert_eq!(FiniteGroup::cyclic(0).unwrap_err(), GroupError::ZeroOrder);
    }

    #[test]
    fn cyclic_four_self_inverse_element() {
        let g = FiniteGroup::cyclic(4).unwrap();
        assert_eq!(g.inv(2), 2);
        assert_eq!(g.element_name(3), "g^3");
    }

    // Index key for dihedral tests: μ^r η^s ↦ 2r + s.
    #[test]
    fn dihedral_three_products() {
        let d3 = FiniteGroup::dihedral(3).unwrap();
        assert_eq!(d3.order(), 6);
        let (e, eta, mu, mu_eta, mu2_eta) = (0, 1, 2, 3, 5);
        // μη ⋆ μη = e (reflections are involutions).
        assert_eq!(d3.mul(mu_eta, mu_eta), e);
        // μ ⋆ η = μη but η ⋆ μ = μ²η.
        assert_eq!(d3.mul(mu, eta), mu_eta);
        assert_eq!(d3.mul(eta, mu), mu2_eta);
        assert!(!d3.is_abelian());
        assert_eq!(d3.element_name(mu2_eta), "μ^2η^1");
    }

    #[test]
    fn dihedral_relations_hold() {
        for d in 1..=6 {
            let g = FiniteGroup::dihedral(d).unwrap();
            let (mu, eta) = (2 % (2 * d), 1);
            assert_eq!(g.element_order(eta), 2);
            if d > 1 {
                assert_eq!(g.element_order(mu), d);
                // η⁻¹ μ η = μ⁻¹.
                assert_eq!(g.mul(g.mul(g.inv(eta), mu), eta), g.inv(mu));
            }
        }
        // D1 ≅ C2 and D2 is the Klein four-group; both abelian.
        assert!(FiniteGroup::dihedral(1).unwrap().is_abelian());
        assert!(FiniteGroup::dihedral(2).unwrap().is_abelian());
    }

    #[test]
    fn semidirect_c4_products_and_relations() {
        // Index key: x^i y^j ↦ 4i + j.
        let g = FiniteGroup::cyclic_semidirect_c4(3).unwrap();
        assert_eq!(g.order(), 12);
        let (x, y) = (4, 1);
        // y·x = x²y: the order-4 generator inverts x.
        assert_eq!(g.mul(y, x), 4 * 2 + 1);
        assert_eq!(g.element_name(g.mul(y, x)), "x^2y^1");
        for t in 1..=6 {
            let g = FiniteGroup::cyclic_semidirect_c4(t).unwrap();
            assert_eq!(g.order(), 4 * t);
            let (x, y) = (4 % (4 * t), 1);
            assert_eq!(g.element_order(y), 4);
            if t > 1 {
                assert_eq!(g.element_order(x), t);
                assert_eq!(g.mul(g.mul(g.inv(y), x), y), g.inv(x));
            }
        }
        // t ≤ 2 collapses the inversion action, so those cases are abelian.
        assert!(FiniteGroup::cyclic_semidirect_c4(1).unwrap().is_abelian());
        assert!(FiniteGroup::cyclic_semidirect_c4(2).unwrap().is_abelian());
        assert!(!FiniteGroup::cyclic_semidirect_c4(3).unwrap().is_abelian());
    }

    #[test]
    fn dicyclic_products_and_relations() {
        // Index key: a^k b^l ↦ 2k + l. w = 2 gives the quaternion group.
        let q8 = FiniteGroup::dicyclic(2).unwrap();
        assert_eq!(q8.order(), 8);
        let (a, b) = (2, 1);
        // b·b = a² (that is, b² = a^w) and b·a = a³b.
        assert_eq!(q8.mul(b, b), 4);
        assert_eq!(q8.mul(b, a), 7);
        assert_eq!(q8.element_name(7), "a^3b^1");
        // The quaternion group has exactly one involution, a².
        let involutions: Vec<usize> =
            (0..8).filter(|&x| q8.element_order(x) == 2).collect();
        assert_eq!(involutions, vec![4]);

        for w in 1..=6 {
            let g = FiniteGroup::dicyclic(w).unwrap();
            assert_eq!(g.order(), 4 * w);
            let (a, b) = (2 % (4 * w), 1);
            assert_eq!(g.mul(b, b), g.mul(a, b_pow(&g, a, w - 1)));
            assert_eq!(g.mul(g.mul(g.inv(b), a), b), g.inv(a));
        }
        // Dic_1 ≅ C4.
        let dic1 = FiniteGroup::dicyclic(1).unwrap();
        assert!(dic1.is_abelian());
        assert_eq!(dic1.element_order(1), 4);
    }

    fn b_pow(g: &FiniteGroup, x: usize, k: usize) -> usize {
        let mut acc = g.identity();
        for _ in 0..k {
            acc = g.mul(acc, x);
        }
        acc
    }

    #[test]
    fn direct_product_of_coprime_cyclics_is_cyclic() {
        let c2 = FiniteGroup::cyclic(2).unwrap();
        let c3 = FiniteGroup::cyclic(3).unwrap();
        let p = FiniteGroup::direct_product(&c2, &c3);
        let c6 = FiniteGroup::cyclic(6).unwrap();
        assert_eq!(p.order(), 6);
        assert_eq!(p.element_name(1), "(g^0, g^1)");
        // Oracle: brute-force search over all 6! bijections for a group
        // isomorphism C2 × C3 → C6.
        let mut found = false;
        permute(&mut (0..6).collect::<Vec<_>>(), 0, &mut |f| {
            if (0..6).all(|a| (0..6).all(|b| f[p.mul(a, b)] == c6.mul(f[a], f[b]))) {
                found = true;
            }
        });
        assert!(found, "C2 x C3 must be isomorphic to C6");
    }

    fn permute(items: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
        if k == items.len() {
            visit(items);
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            permute(items, k + 1, visit);
            items.swap(k, i);
        }
    }

    #[test]
    fn rejects_non_latin_table() {
        let err = FiniteGroup::from_table(
            "bad",
            vec!["e".into(), "a".into()],
            vec![vec![0, 1], vec![1, 1]],
        )
        .unwrap_err();
        assert_eq!(err, GroupError::NotLatinSquare { row: 1, col: 1, value: 1 });
    }

    #[test]
    fn rejects_identity_free_quasigroup() {
        // The Steiner quasigroup on three points: idempotent and Latin, but
        // no row acts as an identity.
        let err = FiniteGroup::from_table(
            "steiner",
            vec!["0".into(), "1".into(), "2".into()],
            vec![vec![0, 2, 1], vec![2, 1, 0], vec![1, 0, 2]],
        )
        .unwrap_err();
        assert_eq!(err, GroupError::NoIdentity);
    }

    #[test]
    fn rejects_loop_without_two_sided_inverses() {
        // A loop of order 5 whose identity cells form a 4-cycle pattern:
        // 1∘2 = e but 2∘1 = 3, so element 1 has no two-sided inverse.
        let err = FiniteGroup::from_table(
            "loop5",
            (0..5).map(|i| i.to_string()).collect(),
            vec![
                vec![0, 1, 2, 3, 4],
                vec![1, 2, 0, 4, 3],
                vec![2, 3, 4, 0, 1],
                vec![3, 4, 1, 2, 0],
                vec![4, 0, 3, 1, 2],
            ],
        )
        .unwrap_err();
        assert_eq!(err, GroupError::NoInverse { element: 1 });
    }

    #[test]
    fn rejects_nonassociative_loop() {
        // An order-5 loop in which every element is its own two-sided
        // inverse. No group of order 5 has that shape (element orders must
        // divide 5), so associativity has to fail; first bad triple is (1,1,2).
        let err = FiniteGroup::from_table(
            "loop5inv",
            (0..5).map(|i| i.to_string()).collect(),
            vec![
                vec![0, 1, 2, 3, 4],
                vec![1, 0, 3, 4, 2],
                vec![2, 4, 0, 1, 3],
                vec![3, 2, 4, 0, 1],
                vec![4, 3, 1, 2, 0],
            ],
        )
        .unwrap_err();
        assert_eq!(err, GroupError::NotAssociative { a: 1, b: 1, c: 2 });
    }

    #[test]
    fn rejects_shape_and_range_defects() {
        assert_eq!(
            FiniteGroup::from_table("bad", vec!["e".into()], vec![vec![0, 0]]).unwrap_err(),
            GroupError::ShapeMismatch { rows: 2, expected: 1 },
        );
        assert_eq!(
            FiniteGroup::from_table("bad", vec!["e".into()], vec![vec![7]]).unwrap_err(),
            GroupError::EntryOutOfRange { row: 0, col: 0, value: 7 },
        );
        assert_eq!(
            FiniteGroup::from_table(
                "bad",
                vec!["e".into(), "e".into()],
                vec![vec![0, 1], vec![1, 0]],
            )
            .unwrap_err(),
            GroupError::DuplicateName { name: "e".into() },
        );
    }

    #[test]
    fn generating_sequences_are_greedy_and_minimal_looking() {
        assert_eq!(FiniteGroup::cyclic(1).unwrap().generating_sequence(), Vec::<usize>::new());
        assert_eq!(FiniteGroup::cyclic(6).unwrap().generating_sequence(), vec![1]);
        let klein = FiniteGroup::dihedral(2).unwrap();
        assert_eq!(klein.generating_sequence(), vec![1, 2]);
        let d3 = FiniteGroup::dihedral(3).unwrap();
        let gens = d3.generating_sequence();
        assert_eq!(d3.subgroup_closure(&gens).len(), 6);
    }

    #[test]
    fn opposite_group_reverses_products() {
        let d3 = FiniteGroup::dihedral(3).unwrap();
        let op = d3.opposite();
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(op.mul(a, b), d3.mul(b, a));
            }
        }
        let c4 = FiniteGroup::cyclic(4).unwrap();
        assert_eq!(c4.opposite().rows(), c4.rows());
    }

    #[test]
    fn automorphisms_of_small_cyclic_groups() {
        // Oracle: count bijective homomorphisms C3 → C3 by brute force over
        // all 27 self-maps.
        let c3 = FiniteGroup::cyclic(3).unwrap();
        let mut oracle: Vec<Vec<usize>> = Vec::new();
        for i0 in 0..3 {
            for i1 in 0..3 {
                for i2 in 0..3 {
                    let f = [i0, i1, i2];
                    let homo = (0..3)
                        .all(|a| (0..3).all(|b| f[c3.mul(a, b)] == c3.mul(f[a], f[b])));
                    let bij = { let mut s = [false; 3]; f.iter().all(|&v| { let r = !s[v]; s[v] = true; r }) };
                    if homo && bij {
                        oracle.push(f.to_vec());
                    }
                }
            }
        }
        oracle.sort();
        assert_eq!(oracle.len(), 2);

        let auts = c3.automorphisms(24).unwrap();
        let images: Vec<Vec<usize>> = auts.iter().map(|m| m.images.clone()).collect();
        assert_eq!(images, oracle);
        for m in &auts {
            assert!(m.is_homomorphism() && m.is_bijective());
        }
    }

    #[test]
    fn automorphism_groups_close_under_composition_and_inverse() {
        for g in [
            FiniteGroup::dihedral(3).unwrap(),
            FiniteGroup::dihedral(2).unwrap(),
            FiniteGroup::cyclic(6).unwrap(),
            FiniteGroup::dicyclic(2).unwrap(),
        ] {
            let auts = g.automorphisms(24).unwrap();
            let set: Vec<Vec<usize>> = auts.iter().map(|m| m.images.clone()).collect();
            for m in &auts {
                for m2 in &auts {
                    let composed: Vec<usize> =
                        (0..g.order()).map(|x| m.images[m2.images[x]]).collect();
                    assert!(set.contains(&composed));
                }
                let mut inverse = vec![0; g.order()];
                for x in 0..g.order() {
                    inverse[m.images[x]] = x;
                }
                assert!(set.contains(&inverse));
            }
        }
        // |Aut| spot values: Aut(D3) ≅ D3, Aut(V4) ≅ S3, Aut(C6) ≅ C2,
        // Aut(Q8) ≅ S4.
        assert_eq!(FiniteGroup::dihedral(3).unwrap().automorphisms(24).unwrap().len(), 6);
        assert_eq!(FiniteGroup::dihedral(2).unwrap().automorphisms(24).unwrap().len(), 6);
        assert_eq!(FiniteGroup::cyclic(6).unwrap().automorphisms(24).unwrap().len(), 2);
        assert_eq!(FiniteGroup::dicyclic(2).unwrap().automorphisms(24).unwrap().len(), 24);
    }

    #[test]
    fn automorphism_search_respects_order_cap() {
        let big = FiniteGroup::cyclic(25).unwrap();
        assert_eq!(
            big.automorphisms(24).unwrap_err(),
            GroupError::OrderCapExceeded { order: 25, cap: 24 },
        );
        assert_eq!(big.automorphisms(25).unwrap().len(), 20);
    }

    #[test]
    fn is_homomorphism_rejects_non_homomorphisms() {
        let c4 = FiniteGroup::cyclic(4).unwrap();
        let trivial =
            GroupMap { source: Arc::clone(&c4), target: Arc::clone(&c4), images: vec![0; 4] };
        assert!(trivial.is_homomorphism());
        assert!(!trivial.is_bijective());
        let shift =
            GroupMap { source: Arc::clone(&c4), target: Arc::clone(&c4), images: vec![1, 2, 3, 0] };
        assert!(!shift.is_homomorphism());
    }
}
